use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use thiserror::Error;

use super::exact_cover::{ExactCover, Outcome, Stats};
use super::{h_from_restrictions, Budget, DecomposeError, SearchOutcome, SearchReport};
use crate::complex::{Face, FaceSet, HVector};

/// The Boolean interval `[bottom, top]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub bottom: Face,
    pub top: Face,
}

impl Interval {
    pub fn new(bottom: Face, top: Face) -> Self {
        Interval { bottom, top }
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.bottom.is_subset(face) && face.is_subset(&self.top)
    }

    pub fn is_well_formed(&self) -> bool {
        self.bottom.is_subset(&self.top)
    }

    /// Faces of the interval in canonical order.
    pub fn faces(&self) -> Vec<Face> {
        let free = self.top.difference(&self.bottom);
        let mut out: Vec<Face> = free.subsets().map(|s| s.union(&self.bottom)).collect();
        out.sort();
        out
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.bottom, self.top)
    }
}

/// One interval per facet, listed in canonical facet order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partitioning {
    pub intervals: Vec<Interval>,
}

impl Partitioning {
    pub fn new(mut intervals: Vec<Interval>) -> Self {
        intervals.sort_by(|a, b| a.top.cmp(&b.top).then(a.bottom.cmp(&b.bottom)));
        Partitioning { intervals }
    }

    pub fn bottoms(&self) -> impl Iterator<Item = &Face> {
        self.intervals.iter().map(|i| &i.bottom)
    }
}

impl fmt::Display for Partitioning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.intervals.iter().map(Interval::to_string).collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionViolation {
    #[error("interval {0} has bottom not contained in top")]
    Malformed(Interval),
    #[error("interval {0} has a top that is not a facet")]
    TopNotFacet(Interval),
    #[error("facet {0} is the top of more than one interval")]
    DuplicateTop(Face),
    #[error("facet {0} is the top of no interval")]
    MissingFacet(Face),
    #[error("face {face} of interval {interval} is not in the complex")]
    OutsideComplex { interval: Interval, face: Face },
    /// The two intervals are named by their tops, which are distinct facets.
    #[error("face {face} lies in the intervals topped by {first_top} and {second_top}")]
    Overlap { face: Face, first_top: Face, second_top: Face },
    #[error("face {0} is covered by no interval")]
    Uncovered(Face),
}

/// Checks that `p` is a partition of the face set of `k` into intervals
/// whose tops are exactly the facets.
pub fn verify_partitioning<K: FaceSet + ?Sized>(k: &K, p: &Partitioning) -> Result<(), PartitionViolation> {
    if let Some(bad) = p.intervals.iter().find(|i| !i.is_well_formed()) {
        return Err(PartitionViolation::Malformed(*bad));
    }
    let facets = k.maximal_faces();
    let mut tops: HashMap<Face, usize> = HashMap::new();
    for interval in &p.intervals {
        if facets.binary_search(&interval.top).is_err() {
            return Err(PartitionViolation::TopNotFacet(*interval));
        }
        *tops.entry(interval.top).or_default() += 1;
    }
    for f in &facets {
        match tops.get(f) {
            None => return Err(PartitionViolation::MissingFacet(*f)),
            Some(&n) if n > 1 => return Err(PartitionViolation::DuplicateTop(*f)),
            _ => {}
        }
    }
    let mut owner: HashMap<Face, Face> = HashMap::new();
    for interval in &p.intervals {
        for face in interval.faces() {
            if !k.contains_face(&face) {
                return Err(PartitionViolation::OutsideComplex { interval: *interval, face });
            }
            if let Some(first_top) = owner.insert(face, interval.top) {
                return Err(PartitionViolation::Overlap { face, first_top, second_top: interval.top });
            }
        }
    }
    if let Some(missing) = k.faces().into_iter().find(|f| !owner.contains_key(f)) {
        return Err(PartitionViolation::Uncovered(missing));
    }
    Ok(())
}

/// Verifies `p` and reads the h-vector off its bottoms.
pub fn h_from_partitioning<K: FaceSet + ?Sized>(k: &K, p: &Partitioning) -> Result<HVector, PartitionViolation> {
    verify_partitioning(k, p)?;
    Ok(h_from_restrictions(p.bottoms(), k.dim().unwrap_or(-2)))
}

/// Decides partitionability by exact cover.
///
/// Items are the faces of the complex. Options are the intervals `[R, F]`
/// with `F` a maximal face and `R ⊆ F` a face of the complex; by convexity the
/// whole interval then lies in the complex. Options are generated facet by
/// facet in canonical order, bottoms in canonical order within a facet.
pub fn find_partitioning<K: FaceSet + ?Sized>(
    k: &K,
    budget: &Budget,
) -> Result<SearchOutcome<Partitioning>, DecomposeError> {
    if !k.is_pure() {
        return Err(DecomposeError::NotPure);
    }
    let started = Instant::now();
    let faces = k.faces();
    let index: HashMap<Face, usize> = faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut dlx = ExactCover::new(faces.len());
    let mut options = Vec::new();
    for facet in k.maximal_faces() {
        let mut bottoms: Vec<Face> = facet.subsets().filter(|r| k.contains_face(r)).collect();
        bottoms.sort();
        for bottom in bottoms {
            let interval = Interval::new(bottom, facet);
            let items: Vec<usize> = interval.faces().iter().map(|f| index[f]).collect();
            dlx.add_option(&items);
            options.push(interval);
        }
    }
    let mut stats = Stats { nodes: 0 };
    let outcome = dlx.solve(budget, started, &mut stats);
    let mut report = SearchReport {
        satisfiable: false,
        nodes_explored: stats.nodes,
        options_generated: dlx.n_options() as u64,
        wall_time: started.elapsed(),
    };
    match outcome {
        Outcome::Solved(ids) => {
            report.satisfiable = true;
            let p = Partitioning::new(ids.into_iter().map(|i| options[i]).collect());
            Ok(SearchOutcome::Found(p, report))
        }
        Outcome::Exhausted => Ok(SearchOutcome::Exhausted(report)),
        Outcome::OverBudget => Err(DecomposeError::BudgetExceeded(report)),
    }
}

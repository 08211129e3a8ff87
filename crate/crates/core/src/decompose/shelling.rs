use std::collections::HashSet;
use std::fmt;
use std::time::Instant;

use thiserror::Error;

use super::partition::{Interval, Partitioning};
use super::{h_from_restrictions, Budget, DecomposeError, SearchOutcome, SearchReport};
use crate::complex::{minimal_faces, Face, HVector, SimplicialComplex};

/// A facet order together with its restriction faces `R_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingOrder {
    pub order: Vec<Face>,
    pub restrictions: Vec<Face>,
}

impl ShellingOrder {
    /// `h_k = #{j : |R_j| = k}`.
    pub fn h_vector(&self) -> HVector {
        let dim = self.order.first().map_or(-2, Face::dim);
        h_from_restrictions(&self.restrictions, dim)
    }

    /// The intervals `[R_j, F_j]`.
    pub fn to_partitioning(&self) -> Partitioning {
        let intervals = self.restrictions.iter().zip(&self.order).map(|(r, f)| Interval::new(*r, *f)).collect();
        Partitioning::new(intervals)
    }
}

impl fmt::Display for ShellingOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.order.iter().map(Face::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShellingViolation {
    #[error("complex is not pure")]
    NotPure,
    #[error("{0} is not a facet")]
    NotAFacet(Face),
    #[error("facet {0} appears twice")]
    Repeated(Face),
    #[error("facet {0} is missing from the order")]
    Missing(Face),
    #[error("step {step} ({facet}): new faces have minimal elements {}", list(.minimal))]
    NoUniqueMinimum { step: usize, facet: Face, minimal: Vec<Face> },
}

fn list(faces: &[Face]) -> String {
    faces.iter().map(Face::to_string).collect::<Vec<_>>().join(", ")
}

/// Checks the order directly: at each step, enumerates the faces of `F_j`
/// not contained in an earlier facet and demands a unique minimal one.
pub fn verify_shelling(k: &SimplicialComplex, order: &[Face]) -> Result<ShellingOrder, ShellingViolation> {
    if !k.is_pure() {
        return Err(ShellingViolation::NotPure);
    }
    let mut seen = HashSet::new();
    for f in order {
        if !k.facets().contains(f) {
            return Err(ShellingViolation::NotAFacet(*f));
        }
        if !seen.insert(*f) {
            return Err(ShellingViolation::Repeated(*f));
        }
    }
    if let Some(missing) = k.facets().iter().find(|f| !seen.contains(f)) {
        return Err(ShellingViolation::Missing(*missing));
    }
    let mut restrictions = Vec::with_capacity(order.len());
    for (step, facet) in order.iter().enumerate() {
        let earlier = &order[..step];
        let new: Vec<Face> = facet.subsets().filter(|s| !earlier.iter().any(|g| s.is_subset(g))).collect();
        let minimal = minimal_faces(new);
        if minimal.len() != 1 {
            return Err(ShellingViolation::NoUniqueMinimum { step, facet: *facet, minimal });
        }
        restrictions.push(minimal[0]);
    }
    Ok(ShellingOrder { order: order.to_vec(), restrictions })
}

struct ShellSearch<'a> {
    facets: &'a [Face],
    budget: &'a Budget,
    started: Instant,
    nodes: u64,
    used: Vec<u64>,
    order: Vec<usize>,
    dead: HashSet<Vec<u64>>,
}

impl ShellSearch<'_> {
    /// Restriction face of `facets[f]` if it can be attached next.
    fn attach(&self, f: usize) -> Option<Face> {
        let facet = self.facets[f];
        if self.order.is_empty() {
            return Some(Face::EMPTY);
        }
        let meets: Vec<Face> = self.order.iter().map(|&g| facet.intersection(&self.facets[g])).collect();
        let mut r = Face::EMPTY;
        for m in &meets {
            if m.len() + 1 == facet.len() {
                r = r.union(&facet.difference(m));
            }
        }
        if meets.iter().any(|m| r.is_subset(m)) {
            None
        } else {
            Some(r)
        }
    }

    fn is_used(&self, f: usize) -> bool {
        self.used[f / 64] >> (f % 64) & 1 == 1
    }

    fn toggle(&mut self, f: usize) {
        self.used[f / 64] ^= 1 << (f % 64);
    }

    /// `Some(found)`, or `None` once the budget runs out.
    fn run(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.budget.exceeded(self.nodes, self.started) {
            return None;
        }
        if self.order.len() == self.facets.len() {
            return Some(true);
        }
        // whether a prefix extends depends only on which facets it uses
        if self.dead.contains(&self.used) {
            return Some(false);
        }
        for f in 0..self.facets.len() {
            if self.is_used(f) || self.attach(f).is_none() {
                continue;
            }
            self.toggle(f);
            self.order.push(f);
            match self.run() {
                Some(false) => {}
                other => return other,
            }
            self.order.pop();
            self.toggle(f);
        }
        self.dead.insert(self.used.clone());
        Some(false)
    }
}

/// Depth-first search over facet orders in canonical order, attaching a facet
/// only when its new faces have a unique minimal element. Exhausted prefixes
/// are remembered by their facet set.
pub fn find_shelling(k: &SimplicialComplex, budget: &Budget) -> Result<SearchOutcome<ShellingOrder>, DecomposeError> {
    if !k.is_pure() {
        return Err(DecomposeError::NotPure);
    }
    let started = Instant::now();
    let facets = k.facets();
    let mut search = ShellSearch {
        facets,
        budget,
        started,
        nodes: 0,
        used: vec![0; facets.len().div_ceil(64)],
        order: Vec::new(),
        dead: HashSet::new(),
    };
    let result = search.run();
    let mut report = SearchReport {
        satisfiable: false,
        nodes_explored: search.nodes,
        options_generated: facets.len() as u64,
        wall_time: started.elapsed(),
    };
    match result {
        None => Err(DecomposeError::BudgetExceeded(report)),
        Some(false) => Ok(SearchOutcome::Exhausted(report)),
        Some(true) => {
            report.satisfiable = true;
            let order: Vec<Face> = search.order.iter().map(|&i| facets[i]).collect();
            let shelling = verify_shelling(k, &order)?;
            Ok(SearchOutcome::Found(shelling, report))
        }
    }
}

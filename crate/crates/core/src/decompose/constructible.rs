use std::fmt;

use thiserror::Error;

use super::shelling::{verify_shelling, ShellingOrder};
use super::DecomposeError;
use crate::complex::{Face, SimplicialComplex};

/// A constructibility derivation: a simplex, or the union of two
/// constructible `d`-complexes meeting in a constructible `(d-1)`-complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructibilityCert {
    Simplex(Face),
    Join {
        dim: i32,
        left: Box<ConstructibilityCert>,
        right: Box<ConstructibilityCert>,
        intersection: Box<ConstructibilityCert>,
    },
}

impl ConstructibilityCert {
    pub fn join(dim: i32, left: Self, right: Self, intersection: Self) -> Self {
        ConstructibilityCert::Join {
            dim,
            left: Box::new(left),
            right: Box::new(right),
            intersection: Box::new(intersection),
        }
    }

    /// Applies a vertex map to every face in the tree.
    pub fn relabel<F: Fn(usize) -> usize>(&self, f: &F) -> Self {
        match self {
            ConstructibilityCert::Simplex(s) => ConstructibilityCert::Simplex(s.map(f)),
            ConstructibilityCert::Join { dim, left, right, intersection } => {
                ConstructibilityCert::join(*dim, left.relabel(f), right.relabel(f), intersection.relabel(f))
            }
        }
    }

    /// The complex the tree claims to build, without checking anything.
    pub fn complex(&self) -> SimplicialComplex {
        match self {
            ConstructibilityCert::Simplex(f) => SimplicialComplex::simplex(*f),
            ConstructibilityCert::Join { left, right, .. } => left.complex().union(&right.complex()),
        }
    }

    /// Join nodes along the left spine.
    pub fn spine_nodes(&self) -> usize {
        match self {
            ConstructibilityCert::Simplex(_) => 0,
            ConstructibilityCert::Join { left, .. } => 1 + left.spine_nodes(),
        }
    }

    /// All join nodes, intersection subtrees included.
    pub fn join_nodes(&self) -> usize {
        match self {
            ConstructibilityCert::Simplex(_) => 0,
            ConstructibilityCert::Join { left, right, intersection, .. } => {
                1 + left.join_nodes() + right.join_nodes() + intersection.join_nodes()
            }
        }
    }
}

impl fmt::Display for ConstructibilityCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructibilityCert::Simplex(s) => write!(f, "{s}"),
            ConstructibilityCert::Join { left, right, intersection, .. } => {
                write!(f, "({left} ∪ {right} | {intersection})")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructibilityViolation {
    #[error("node claims dimension {claimed} but its {part} has dimension {actual}")]
    Dimension { claimed: i32, part: &'static str, actual: i32 },
    #[error("the two parts of a dimension-{dim} node do not meet in the claimed intersection")]
    IntersectionMismatch { dim: i32 },
    #[error("certificate builds a complex with facets {built}, not the given one")]
    WrongComplex { built: String },
}

fn check(cert: &ConstructibilityCert) -> Result<(SimplicialComplex, i32), ConstructibilityViolation> {
    match cert {
        ConstructibilityCert::Simplex(f) => Ok((SimplicialComplex::simplex(*f), f.dim())),
        ConstructibilityCert::Join { dim, left, right, intersection } => {
            let (l, ld) = check(left)?;
            let (r, rd) = check(right)?;
            let (i, id) = check(intersection)?;
            for (part, actual, want) in [("left", ld, *dim), ("right", rd, *dim), ("intersection", id, *dim - 1)] {
                if actual != want {
                    return Err(ConstructibilityViolation::Dimension { claimed: *dim, part, actual });
                }
            }
            if l.intersection(&r) != i {
                return Err(ConstructibilityViolation::IntersectionMismatch { dim: *dim });
            }
            Ok((l.union(&r), *dim))
        }
    }
}

/// Re-derives every node bottom-up, comparing facet lists exactly, and
/// checks that the root builds `k`.
pub fn verify_constructibility(
    k: &SimplicialComplex,
    cert: &ConstructibilityCert,
) -> Result<(), ConstructibilityViolation> {
    let (built, _) = check(cert)?;
    if &built != k {
        let names: Vec<String> = built.facets().iter().map(Face::to_string).collect();
        return Err(ConstructibilityViolation::WrongComplex { built: names.join(",") });
    }
    Ok(())
}

/// `⟨F \ v : v ∈ r⟩`, built one facet at a time.
fn patch(facet: Face, r: &[usize]) -> ConstructibilityCert {
    let (&last, rest) = r.split_last().expect("nonempty restriction");
    let tip = ConstructibilityCert::Simplex(facet.without(last));
    if rest.is_empty() {
        return tip;
    }
    let dim = facet.dim() - 1;
    ConstructibilityCert::join(dim, patch(facet, rest), tip, patch(facet.without(last), rest))
}

/// Left-deep tree: step `j` joins `F_j` to the union of the earlier facets
/// along `⟨F_j \ v : v ∈ R_j⟩`.
pub fn shelling_to_constructibility(
    k: &SimplicialComplex,
    s: &ShellingOrder,
) -> Result<ConstructibilityCert, DecomposeError> {
    let s = verify_shelling(k, &s.order)?;
    let mut steps = s.order.iter().zip(&s.restrictions);
    let Some((first, _)) = steps.next() else {
        return Err(DecomposeError::NotPure);
    };
    let mut tree = ConstructibilityCert::Simplex(*first);
    for (facet, r) in steps {
        let r: Vec<usize> = r.vertices().collect();
        tree = ConstructibilityCert::join(facet.dim(), tree, ConstructibilityCert::Simplex(*facet), patch(*facet, &r));
    }
    Ok(tree)
}

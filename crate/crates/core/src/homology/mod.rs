//! Reduced simplicial homology over ℤ of absolute and relative complexes.
//!
//! The chain groups are spanned by the faces of `Φ = Δ ∖ Γ`, the empty face
//! included when it belongs to `Φ` (the augmented complex). For an absolute
//! complex this is reduced homology; for a pair it is relative homology.

mod snf;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::complex::{Face, FaceSet};

pub use snf::{smith_normal_form, IntMatrix, SmithForm};

/// Matrix of `∂_i : C_i → C_{i−1}`, rows indexed by `(i−1)`-faces and
/// columns by `i`-faces, both in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub degree: i32,
    pub rows: Vec<Face>,
    pub cols: Vec<Face>,
    pub matrix: IntMatrix,
}

/// Faces of a complex bucketed by dimension.
pub struct ChainComplex {
    by_dim: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, usize>>,
}

impl ChainComplex {
    pub fn new<K: FaceSet + ?Sized>(k: &K) -> Self {
        let faces = k.faces();
        let top = faces.last().map_or(-1, Face::dim);
        let mut by_dim = vec![Vec::new(); (top + 2) as usize];
        for f in faces {
            by_dim[f.len()].push(f);
        }
        let index = by_dim.iter().map(|fs| fs.iter().enumerate().map(|(i, f)| (*f, i)).collect()).collect();
        ChainComplex { by_dim, index }
    }

    /// Largest dimension with a (possibly empty) chain group tracked.
    pub fn top_dim(&self) -> i32 {
        self.by_dim.len() as i32 - 2
    }

    pub fn faces(&self, dim: i32) -> &[Face] {
        usize::try_from(dim + 1).ok().and_then(|i| self.by_dim.get(i)).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, dim: i32) -> usize {
        self.faces(dim).len()
    }

    fn position(&self, face: &Face) -> Option<usize> {
        self.index.get(face.len()).and_then(|m| m.get(face)).copied()
    }

    pub fn boundary(&self, degree: i32) -> BoundaryMatrix {
        let rows = self.faces(degree - 1).to_vec();
        let cols = self.faces(degree).to_vec();
        let mut matrix = IntMatrix::zeros(rows.len(), cols.len());
        if !rows.is_empty() {
            for (c, sigma) in cols.iter().enumerate() {
                for (k, tau) in sigma.boundary() {
                    if let Some(r) = self.position(&tau) {
                        matrix.set(r, c, if k % 2 == 0 { 1 } else { -1 });
                    }
                }
            }
        }
        BoundaryMatrix { degree, rows, cols, matrix }
    }
}

/// `∂_i` of `k`. Out-of-range degrees give matrices with an empty side.
pub fn boundary_matrix<K: FaceSet + ?Sized>(k: &K, degree: i32) -> BoundaryMatrix {
    ChainComplex::new(k).boundary(degree)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub dim: i32,
    pub betti: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Reduced homology in degrees `−1..=d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    pub fn group(&self, dim: i32) -> Option<&HomologyGroup> {
        self.groups.iter().find(|g| g.dim == dim)
    }

    pub fn betti(&self, dim: i32) -> usize {
        self.group(dim).map_or(0, |g| g.betti)
    }

    pub fn is_acyclic(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_zero)
    }

    /// First nonzero group of degree `< bound`.
    pub fn first_nonzero_below(&self, bound: i32) -> Option<&HomologyGroup> {
        self.groups.iter().find(|g| g.dim < bound && !g.is_zero())
    }

    /// `Σ (−1)^i betti_i`
    pub fn euler_characteristic(&self) -> i64 {
        self.groups.iter().map(|g| if g.dim.rem_euclid(2) == 0 { g.betti as i64 } else { -(g.betti as i64) }).sum()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.groups.iter().map(|g| format!("H{}={}", g.dim, g)).collect();
        write!(f, "{}", parts.join(", "))
    }
}

pub fn reduced_homology<K: FaceSet + ?Sized>(k: &K) -> HomologyProfile {
    let chains = ChainComplex::new(k);
    homology_of_chains(&chains)
}

pub fn homology_of_chains(chains: &ChainComplex) -> HomologyProfile {
    let top = chains.top_dim();
    if chains.by_dim.iter().all(Vec::is_empty) {
        return HomologyProfile { groups: Vec::new() };
    }
    // Smith forms of ∂_0 ..= ∂_top
    let forms: Vec<SmithForm> =
        (0..=top).into_par_iter().map(|i| smith_normal_form(&chains.boundary(i).matrix)).collect();
    let form = |i: i32| usize::try_from(i).ok().and_then(|i| forms.get(i));
    let groups = (-1..=top)
        .map(|i| {
            let rank_out = form(i).map_or(0, |s| s.rank);
            let (rank_in, torsion) = form(i + 1).map_or((0, Vec::new()), |s| (s.rank, s.torsion()));
            HomologyGroup { dim: i, betti: chains.rank(i) - rank_out - rank_in, torsion }
        })
        .collect();
    HomologyProfile { groups }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{RelativeComplex, SimplicialComplex};

    fn c(facets: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_digit_facets(facets).unwrap()
    }

    #[test]
    fn triangle_boundary_composes_to_zero() {
        let k = c(&["123"]);
        let d1 = boundary_matrix(&k, 1);
        assert_eq!((d1.matrix.nrows(), d1.matrix.ncols()), (3, 3));
        let d2 = boundary_matrix(&k, 2);
        assert!(d1.matrix.mul(&d2.matrix).unwrap().is_zero());
        for j in 0..3 {
            assert_eq!((0..3).map(|i| d1.matrix.get(i, j)).sum::<i64>(), 0);
        }
    }

    #[test]
    fn augmentation_row() {
        let k = c(&["12", "23"]);
        let d0 = boundary_matrix(&k, 0);
        assert_eq!(d0.rows, vec![Face::EMPTY]);
        assert_eq!(d0.matrix.rows(), vec![vec![1, 1, 1]]);
        let below = boundary_matrix(&k, -1);
        assert_eq!((below.matrix.nrows(), below.matrix.ncols()), (0, 1));
        let above = boundary_matrix(&k, 5);
        assert_eq!((above.matrix.nrows(), above.matrix.ncols()), (0, 0));
    }

    #[test]
    fn tetrahedron_boundary_is_a_sphere() {
        let k = c(&["123", "124", "134", "234"]);
        let h = reduced_homology(&k);
        assert_eq!(h.betti(2), 1);
        assert!(h.groups.iter().filter(|g| g.dim != 2).all(HomologyGroup::is_zero));
        let d2 = smith_normal_form(&boundary_matrix(&k, 2).matrix);
        assert_eq!(d2.rank, 3);
        assert!(d2.torsion().is_empty());
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        // six-vertex real projective plane
        let rp2 = c(&["124", "126", "135", "136", "145", "234", "235", "256", "346", "456"]);
        let h = reduced_homology(&rp2);
        assert_eq!(h.group(1).unwrap().torsion, vec![BigInt::from(2)]);
        assert_eq!(h.betti(1), 0);
        assert_eq!(h.betti(2), 0);
    }

    #[test]
    fn conventions_for_void_and_trivial() {
        assert!(reduced_homology(&SimplicialComplex::void()).is_acyclic());
        let h = reduced_homology(&SimplicialComplex::trivial());
        assert_eq!(h.betti(-1), 1);
    }

    #[test]
    fn two_points_have_reduced_h0() {
        let h = reduced_homology(&c(&["1", "2"]));
        assert_eq!(h.betti(0), 1);
        assert_eq!(h.betti(-1), 0);
    }

    #[test]
    fn relative_edge_mod_endpoints() {
        // (interval, its boundary) is a 1-sphere
        let r = RelativeComplex::new(c(&["12"]), c(&["1", "2"])).unwrap();
        let h = reduced_homology(&r);
        assert_eq!(h.betti(1), 1);
        assert_eq!(h.euler_characteristic(), -1);
    }

    #[test]
    fn cone_is_acyclic() {
        let base = c(&["12", "23", "31", "45"]);
        assert!(!reduced_homology(&base).is_acyclic());
        assert!(reduced_homology(&base.cone(9)).is_acyclic());
    }
}

//! Cohen–Macaulay verification by Reisner's criterion: every link must have
//! vanishing reduced homology below its dimension.

use rayon::prelude::*;

use crate::complex::{Complex, Face, FaceSet, RelativeComplex};
use crate::homology::{reduced_homology, HomologyGroup, HomologyProfile};

/// A face whose link has a nonvanishing group below the link's dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmWitness {
    pub face: Face,
    pub link_dim: i32,
    pub group: HomologyGroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmVerdict {
    pub holds: bool,
    /// First failing face in canonical order.
    pub witness: Option<CmWitness>,
    pub faces_checked: usize,
}

/// One row of [`cm_report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkRow {
    pub face: Face,
    /// `None` for a void link.
    pub link_dim: Option<i32>,
    pub homology: HomologyProfile,
    pub ok: bool,
}

fn presentation<K: FaceSet + ?Sized>(k: &K) -> Complex {
    match k.removed() {
        None => Complex::Absolute(k.ambient().clone()),
        Some(g) => Complex::Relative(
            RelativeComplex::new(k.ambient().clone(), g.clone()).expect("presentation is a valid pair"),
        ),
    }
}

fn examine(pair: &Complex, face: Face) -> LinkRow {
    let link = pair.link(&face);
    let link_dim = link.ambient().dim();
    let homology = reduced_homology(&link);
    let ok = link_dim.is_none_or(|d| homology.first_nonzero_below(d).is_none());
    LinkRow { face, link_dim, homology, ok }
}

/// Checks every face `σ` of the ambient complex `Δ` (the empty face
/// included). For a relative complex the link is the pair
/// `(link_Δ σ, link_Γ σ)`. A void input passes vacuously.
pub fn is_cohen_macaulay<K: FaceSet + ?Sized>(k: &K) -> CmVerdict {
    let pair = presentation(k);
    let faces = k.ambient().faces();
    let witness = faces.par_iter().find_map_first(|&face| {
        let row = examine(&pair, face);
        if row.ok {
            return None;
        }
        let link_dim = row.link_dim.expect("failing link is nonvoid");
        let group = row.homology.first_nonzero_below(link_dim).cloned().expect("failing group");
        Some(CmWitness { face, link_dim, group })
    });
    CmVerdict { holds: witness.is_none(), witness, faces_checked: faces.len() }
}

/// Per-face link dimension and homology for every face of the ambient complex.
pub fn cm_report<K: FaceSet + ?Sized>(k: &K) -> Vec<LinkRow> {
    let pair = presentation(k);
    k.ambient().faces().into_par_iter().map(|face| examine(&pair, face)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;

    fn c(facets: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_digit_facets(facets).unwrap()
    }

    #[test]
    fn bjorner_fails_at_vertex_one() {
        let v = is_cohen_macaulay(&c(&["123", "124", "134", "234", "156"]));
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.face, Face::d("1"));
        assert_eq!(w.link_dim, 1);
        assert_eq!(w.group.dim, 0);
        assert_eq!(w.group.betti, 1);
    }

    #[test]
    fn spheres_and_balls_pass() {
        assert!(is_cohen_macaulay(&c(&["123", "124", "134", "234"])).holds);
        assert!(is_cohen_macaulay(&c(&["123", "234", "345"])).holds);
        assert!(is_cohen_macaulay(&c(&["0123"])).holds);
    }

    #[test]
    fn two_triangles_at_a_vertex_fail() {
        let v = is_cohen_macaulay(&c(&["123", "345"]));
        assert_eq!(v.witness.unwrap().face, Face::d("3"));
    }

    #[test]
    fn disconnected_graph_fails_at_empty_face() {
        let v = is_cohen_macaulay(&c(&["12", "34"]));
        assert_eq!(v.witness.unwrap().face, Face::EMPTY);
    }

    #[test]
    fn facet_links_are_vacuous() {
        let k = c(&["123", "234"]);
        let rows = cm_report(&k);
        let facet_row = rows.iter().find(|r| r.face == Face::d("123")).unwrap();
        assert_eq!(facet_row.link_dim, Some(-1));
        assert!(facet_row.ok);
        assert_eq!(rows.len(), k.faces().len());
    }

    #[test]
    fn relative_ball_mod_boundary_patch() {
        // disk modulo an arc of its boundary is CM
        let r = RelativeComplex::new(c(&["123", "134"]), c(&["12"])).unwrap();
        assert!(is_cohen_macaulay(&r).holds);
        // disk modulo two disjoint boundary points is not
        let r = RelativeComplex::new(c(&["123", "134"]), c(&["2", "4"])).unwrap();
        assert!(!is_cohen_macaulay(&r).holds);
    }
}

//! Gluing `N` disjoint copies of a complex `X` along a common subcomplex `A`.

use thiserror::Error;

use crate::cm::{is_cohen_macaulay, CmVerdict};
use crate::complex::{is_induced, Face, Inducedness, SimplicialComplex, VertexMap, VertexPermutation, MAX_VERTICES};
use crate::decompose::ConstructibilityCert;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GlueError {
    #[error("facet {0} of A is not a face of X")]
    NotSubcomplex(Face),
    #[error("at least one copy is required")]
    NoCopies,
    #[error("glued complex needs {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
}

/// `N` copies of `x` identified along `a`. `labels` names the vertices of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueSpec {
    pub x: SimplicialComplex,
    pub a: SimplicialComplex,
    pub copies: usize,
    pub labels: VertexMap,
}

impl GlueSpec {
    /// Spec with numeric labels `0..n`.
    pub fn new(x: SimplicialComplex, a: SimplicialComplex, copies: usize) -> Self {
        let labels = VertexMap::numeric(x.n_vertices());
        GlueSpec { x, a, copies, labels }
    }

    pub fn with_labels(mut self, labels: VertexMap) -> Self {
        self.labels = labels;
        self
    }

    /// Total number of faces of `A`, the empty face included.
    pub fn k(&self) -> usize {
        self.a.faces().len()
    }

    fn label(&self, v: usize) -> String {
        self.labels.name(v).map_or_else(|| v.to_string(), str::to_string)
    }
}

/// Where a vertex of the glued complex came from. `copy` is `None` for the
/// shared vertices of `A` and `1..=N` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub original: usize,
    pub copy: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Glued {
    pub complex: SimplicialComplex,
    pub labels: VertexMap,
    /// Indexed by vertex of `complex`.
    pub provenance: Vec<Provenance>,
    shared: Vec<usize>,
    private: Vec<usize>,
    copies: usize,
}

impl Glued {
    /// Index of vertex `v` of `X` in copy `i` (1-based).
    pub fn vertex_in_copy(&self, v: usize, i: usize) -> Option<usize> {
        if let Ok(p) = self.shared.binary_search(&v) {
            return Some(p);
        }
        let p = self.private.binary_search(&v).ok()?;
        (1..=self.copies).contains(&i).then(|| self.shared.len() + (i - 1) * self.private.len() + p)
    }

    /// The embedding of copy `i` as a vertex map on `X`.
    pub fn embedding(&self, i: usize) -> impl Fn(usize) -> usize + '_ {
        move |v| self.vertex_in_copy(v, i).expect("vertex of X")
    }

    /// The vertex permutation exchanging copies `i` and `j`.
    pub fn swap_copies(&self, i: usize, j: usize) -> VertexPermutation {
        let image = self
            .provenance
            .iter()
            .enumerate()
            .map(|(w, p)| match p.copy {
                Some(c) if c == i => self.vertex_in_copy(p.original, j).unwrap(),
                Some(c) if c == j => self.vertex_in_copy(p.original, i).unwrap(),
                _ => w,
            })
            .collect();
        VertexPermutation::from_images(image).expect("copy swap is a permutation")
    }
}

/// Vertices of `A` keep their labels; vertex `v` of copy `i` becomes `v_i`.
/// Shared vertices are numbered first, then each copy's private vertices.
/// The hypotheses of the gluing theorem are not enforced here.
pub fn glue(spec: &GlueSpec) -> Result<Glued, GlueError> {
    if spec.copies == 0 {
        return Err(GlueError::NoCopies);
    }
    if let Some(bad) = spec.a.facets().iter().find(|f| !spec.x.contains(f)) {
        return Err(GlueError::NotSubcomplex(*bad));
    }
    let a_vertices = spec.a.vertex_set();
    let (shared, private): (Vec<usize>, Vec<usize>) =
        spec.x.vertex_set().vertices().partition(|&v| a_vertices.contains_vertex(v));
    let total = shared.len() + spec.copies * private.len();
    if total > MAX_VERTICES {
        return Err(GlueError::TooManyVertices(total));
    }
    let mut labels = VertexMap::new();
    let mut provenance = Vec::with_capacity(total);
    for &v in &shared {
        labels.intern(&spec.label(v));
        provenance.push(Provenance { original: v, copy: None });
    }
    for i in 1..=spec.copies {
        for &v in &private {
            labels.intern(&format!("{}_{i}", spec.label(v)));
            provenance.push(Provenance { original: v, copy: Some(i) });
        }
    }
    let mut glued = Glued {
        complex: SimplicialComplex::void(),
        labels,
        provenance,
        shared,
        private,
        copies: spec.copies,
    };
    let facets: Vec<Face> = (1..=spec.copies)
        .flat_map(|i| {
            let embed = glued.embedding(i);
            spec.x.facets().iter().map(move |f| f.map(&embed))
        })
        .collect();
    glued.complex = SimplicialComplex::from_facets(facets);
    Ok(glued)
}

/// The hypotheses of the gluing theorem for `spec`, each reported separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueHypotheses {
    pub x_cm: CmVerdict,
    pub a_cm: CmVerdict,
    pub induced: Inducedness,
    /// `dim X - dim A`, `None` if either is void.
    pub codimension: Option<i32>,
    pub k: usize,
    pub copies: usize,
}

impl GlueHypotheses {
    pub fn codimension_ok(&self) -> bool {
        self.codimension.is_some_and(|c| (0..=1).contains(&c))
    }

    pub fn pigeonhole(&self) -> bool {
        self.copies > self.k
    }

    /// CM, induced and codimension conditions on `(X, A)`.
    pub fn pair_conditions_hold(&self) -> bool {
        self.x_cm.holds && self.a_cm.holds && self.induced.induced && self.codimension_ok()
    }

    pub fn all_hold(&self) -> bool {
        self.pair_conditions_hold() && self.pigeonhole()
    }
}

pub fn check_glue_hypotheses(spec: &GlueSpec) -> Result<GlueHypotheses, GlueError> {
    let induced = is_induced(&spec.x, &spec.a).map_err(|e| match e {
        crate::ComplexError::NotSubcomplex(f) => GlueError::NotSubcomplex(f),
        other => unreachable!("is_induced only reports containment: {other}"),
    })?;
    let codimension = spec.x.dim().zip(spec.a.dim()).map(|(x, a)| x - a);
    Ok(GlueHypotheses {
        x_cm: is_cohen_macaulay(&spec.x),
        a_cm: is_cohen_macaulay(&spec.a),
        induced,
        codimension,
        k: spec.k(),
        copies: spec.copies,
    })
}

/// `((X_1 ∪ X_2) ∪ X_3) ∪ …`, each union along `A`, from certificates for
/// `X` and `A` in the vertex numbering of `X`. Valid when the copies pairwise
/// meet exactly in `A`, which holds when `A` is induced.
pub fn glued_constructibility(glued: &Glued, x_cert: &ConstructibilityCert, a_cert: &ConstructibilityCert) -> ConstructibilityCert {
    let a_glued = a_cert.relabel(&glued.embedding(1));
    let dim = x_cert.complex().dim().unwrap_or(-1);
    let mut tree = x_cert.relabel(&glued.embedding(1));
    for i in 2..=glued.copies {
        tree = ConstructibilityCert::join(dim, tree, x_cert.relabel(&glued.embedding(i)), a_glued.clone());
    }
    tree
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{FVector, FaceSet};
    use crate::decompose::{find_shelling, shelling_to_constructibility, verify_constructibility, Budget};

    fn c(facets: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_digit_facets(facets).unwrap()
    }

    fn disk() -> (SimplicialComplex, SimplicialComplex) {
        // a triangulated square glued along its diagonal edge 13
        (c(&["123", "134"]), c(&["13"]))
    }

    #[test]
    fn f_vector_identity() {
        let (x, a) = disk();
        for n in 1..5 {
            let g = glue(&GlueSpec::new(x.clone(), a.clone(), n)).unwrap();
            let expect = a.f_vector().combine(1, &x.f_vector().combine(1, &a.f_vector(), -1), n as i64);
            assert_eq!(g.complex.f_vector(), expect);
            assert_eq!(g.complex.facets().len(), n * x.facets().len());
        }
    }

    #[test]
    fn one_copy_is_a_relabeling() {
        let x = c(&["123", "234"]);
        let g = glue(&GlueSpec::new(x.clone(), c(&["23"]), 1)).unwrap();
        assert_eq!(g.complex.f_vector(), x.f_vector());
        assert_eq!(g.labels.names(), &["2", "3", "1_1", "4_1"]);
        let back = g.complex.relabel(|w| g.provenance[w].original);
        assert_eq!(back, x);
    }

    #[test]
    fn provenance_names() {
        let (x, a) = disk();
        let g = glue(&GlueSpec::new(x, a, 2)).unwrap();
        assert_eq!(g.labels.names(), &["1", "3", "2_1", "4_1", "2_2", "4_2"]);
        assert_eq!(g.provenance[4], Provenance { original: 2, copy: Some(2) });
        assert_eq!(g.complex.f_vector(), FVector(vec![1, 6, 9, 4]));
    }

    #[test]
    fn copy_swap_is_an_automorphism() {
        let (x, a) = disk();
        let g = glue(&GlueSpec::new(x, a, 3)).unwrap();
        assert!(g.swap_copies(1, 3).is_automorphism(&g.complex).unwrap());
    }

    #[test]
    fn rejects_non_subcomplex_and_zero_copies() {
        let x = c(&["123"]);
        assert_eq!(glue(&GlueSpec::new(x.clone(), c(&["14"]), 2)), Err(GlueError::NotSubcomplex(Face::d("14"))));
        assert_eq!(glue(&GlueSpec::new(x, c(&["12"]), 0)), Err(GlueError::NoCopies));
    }

    #[test]
    fn simplex_with_boundary_facet_satisfies_pair_conditions() {
        let h = check_glue_hypotheses(&GlueSpec::new(c(&["0123"]), c(&["012"]), 2)).unwrap();
        assert!(h.pair_conditions_hold());
        assert_eq!(h.k, 8);
        assert!(!h.pigeonhole());
    }

    #[test]
    fn hollow_triangle_is_not_induced() {
        let h = check_glue_hypotheses(&GlueSpec::new(c(&["012"]), c(&["01", "02", "12"]), 9)).unwrap();
        assert!(!h.induced.induced);
        assert_eq!(h.induced.witness, Some(Face::d("012")));
        assert!(h.pigeonhole());
        assert!(!h.all_hold());
    }

    #[test]
    fn glued_certificate_verifies() {
        let (x, a) = disk();
        let g = glue(&GlueSpec::new(x.clone(), a.clone(), 3)).unwrap();
        let xs = find_shelling(&x, &Budget::unlimited()).unwrap();
        let as_ = find_shelling(&a, &Budget::unlimited()).unwrap();
        let xc = shelling_to_constructibility(&x, xs.certificate().unwrap()).unwrap();
        let ac = shelling_to_constructibility(&a, as_.certificate().unwrap()).unwrap();
        verify_constructibility(&g.complex, &glued_constructibility(&g, &xc, &ac)).unwrap();
    }
}

use std::collections::HashSet;

use crate::complex::{maximal_faces, Face, FaceSet};
use crate::error::ComplexError;

/// A finite abstract simplicial complex, stored by its facets.
///
/// The void complex (no faces at all) and the trivial complex `{∅}` are
/// distinct values: the former has no facets, the latter has the empty face
/// as its only facet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
}

/// What [`build_complex`] dropped while normalizing a facet list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NormalizationReport {
    pub duplicates: Vec<Face>,
    pub dominated: Vec<Face>,
}

impl NormalizationReport {
    pub fn is_clean(&self) -> bool {
        self.duplicates.is_empty() && self.dominated.is_empty()
    }

    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        for f in &self.duplicates {
            out.push(format!("duplicate facet {f} merged"));
        }
        for f in &self.dominated {
            out.push(format!("face {f} is contained in another listed face and was dropped"));
        }
        out
    }
}

/// Normalizes a facet list into a complex: duplicates are merged and faces
/// contained in other listed faces are dropped, both noted in the report.
pub fn build_complex<I: IntoIterator<Item = Face>>(facets: I) -> (SimplicialComplex, NormalizationReport) {
    let input: Vec<Face> = facets.into_iter().collect();
    let mut report = NormalizationReport::default();
    let mut seen = HashSet::new();
    for f in &input {
        if !seen.insert(*f) && !report.duplicates.contains(f) {
            report.duplicates.push(*f);
        }
    }
    let kept = maximal_faces(input.iter().copied());
    let mut dominated: Vec<Face> = seen.into_iter().filter(|f| kept.binary_search(f).is_err()).collect();
    dominated.sort();
    report.dominated = dominated;
    (SimplicialComplex { facets: kept }, report)
}

impl SimplicialComplex {
    /// Builds a complex from a facet list, silently normalizing it.
    pub fn from_facets<I: IntoIterator<Item = Face>>(facets: I) -> Self {
        build_complex(facets).0
    }

    /// Convenience for digit-string facet lists such as `["123", "124"]`.
    pub fn from_digit_facets(facets: &[&str]) -> Result<Self, ComplexError> {
        let faces = facets.iter().map(|s| Face::from_digits(s)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_facets(faces))
    }

    /// The complex with no faces.
    pub fn void() -> Self {
        SimplicialComplex { facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn trivial() -> Self {
        SimplicialComplex { facets: vec![Face::EMPTY] }
    }

    pub fn simplex(face: Face) -> Self {
        Self::from_facets([face])
    }

    /// One past the largest vertex index in use.
    pub fn n_vertices(&self) -> usize {
        self.vertex_set().max_vertex().map_or(0, |m| m + 1)
    }

    /// Facets in canonical order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn dim(&self) -> Option<i32> {
        self.facets.last().map(Face::dim)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// Union of all facets.
    pub fn vertex_set(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(f))
    }

    /// Every face, sorted canonically.
    pub fn faces(&self) -> Vec<Face> {
        let mut set = HashSet::new();
        for f in &self.facets {
            set.extend(f.subsets());
        }
        let mut out: Vec<Face> = set.into_iter().collect();
        out.sort();
        out
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains(f))
    }

    /// `{τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`; void when `σ ∉ Δ`, `{∅}` when `σ` is a facet.
    pub fn link(&self, sigma: &Face) -> SimplicialComplex {
        let facets = self.facets.iter().filter(|f| sigma.is_subset(f)).map(|f| f.difference(sigma));
        SimplicialComplex::from_facets(facets)
    }

    /// Faces of `σ`'s closed star: all faces of facets containing `σ`.
    pub fn star(&self, sigma: &Face) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.facets.iter().filter(|f| sigma.is_subset(f)).copied())
    }

    /// The induced subcomplex `Δ|_W` of faces contained in `W`.
    pub fn induced(&self, w: &Face) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.facets.iter().map(|f| f.intersection(w)))
    }

    /// Face-set union.
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.facets.iter().chain(other.facets.iter()).copied())
    }

    /// Face-set intersection.
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let pairs = self.facets.iter().flat_map(|f| other.facets.iter().map(move |g| f.intersection(g)));
        SimplicialComplex::from_facets(pairs)
    }

    /// Relabels vertices through `f`. The caller guarantees `f` is injective on the vertex set.
    pub fn relabel<F: Fn(usize) -> usize>(&self, f: F) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.facets.iter().map(|face| face.map(&f)))
    }

    /// Cone over a fresh vertex `apex`.
    pub fn cone(&self, apex: usize) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.facets.iter().map(|f| f.with(apex)))
    }
}

impl FaceSet for SimplicialComplex {
    fn ambient(&self) -> &SimplicialComplex {
        self
    }

    fn removed(&self) -> Option<&SimplicialComplex> {
        None
    }

    fn contains_face(&self, face: &Face) -> bool {
        self.contains(face)
    }

    fn faces(&self) -> Vec<Face> {
        SimplicialComplex::faces(self)
    }

    fn maximal_faces(&self) -> Vec<Face> {
        self.facets.clone()
    }
}

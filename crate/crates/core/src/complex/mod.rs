//! Faces, absolute and relative complexes, and their elementary combinatorics.

mod balanced;
mod face;
mod induced;
mod labels;
mod permutation;
mod relative;
mod simplicial;
mod vectors;

pub use balanced::{is_balanced, verify_coloring, Balance};
pub use face::{maximal_faces, minimal_faces, Face, Subsets, Vertices, MAX_VERTICES};
pub use induced::{is_induced, Inducedness};
pub use labels::VertexMap;
pub use permutation::VertexPermutation;
pub use relative::{Complex, RelativeComplex};
pub use simplicial::{build_complex, NormalizationReport, SimplicialComplex};
pub use vectors::{binomial, FVector, HVector};

/// Common view of absolute and relative complexes as a convex family of faces
/// presented by a pair `(Δ, Γ)`; absolute complexes have no `Γ`.
pub trait FaceSet {
    /// The ambient complex `Δ` of the presentation.
    fn ambient(&self) -> &SimplicialComplex;

    /// The removed subcomplex `Γ`, if relative.
    fn removed(&self) -> Option<&SimplicialComplex>;

    fn contains_face(&self, face: &Face) -> bool;

    /// All faces in canonical order.
    fn faces(&self) -> Vec<Face>;

    /// Maximal faces in canonical order.
    fn maximal_faces(&self) -> Vec<Face>;

    fn is_relative(&self) -> bool {
        self.removed().is_some()
    }

    /// Dimension of the largest face, `None` if there are no faces.
    fn dim(&self) -> Option<i32> {
        self.maximal_faces().iter().map(Face::dim).max()
    }

    fn is_pure(&self) -> bool {
        let max = self.maximal_faces();
        max.windows(2).all(|w| w[0].len() == w[1].len())
    }

    fn f_vector(&self) -> FVector {
        FVector::of(self)
    }

    fn h_vector(&self) -> HVector {
        self.f_vector().to_h()
    }
}

use crate::complex::{maximal_faces, minimal_faces, Face, FaceSet, SimplicialComplex};
use crate::error::ComplexError;

/// A relative complex `Φ = (Δ, Γ)` whose faces are `Δ ∖ Γ`.
///
/// The pair is kept as given; [`RelativeComplex::canonical`] computes the
/// minimal presentation on demand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelativeComplex {
    ambient: SimplicialComplex,
    removed: SimplicialComplex,
}

impl RelativeComplex {
    pub fn new(ambient: SimplicialComplex, removed: SimplicialComplex) -> Result<Self, ComplexError> {
        if let Some(bad) = removed.facets().iter().find(|f| !ambient.contains(f)) {
            return Err(ComplexError::NotSubcomplex(*bad));
        }
        Ok(RelativeComplex { ambient, removed })
    }

    pub fn ambient(&self) -> &SimplicialComplex {
        &self.ambient
    }

    pub fn removed(&self) -> &SimplicialComplex {
        &self.removed
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.ambient.contains(face) && !self.removed.contains(face)
    }

    /// Maximal faces of `Φ`: the facets of `Δ` outside `Γ`.
    pub fn facets(&self) -> Vec<Face> {
        self.ambient.facets().iter().filter(|f| !self.removed.contains(f)).copied().collect()
    }

    /// Faces of `Φ` in canonical order.
    pub fn faces(&self) -> Vec<Face> {
        self.closure().faces().into_iter().filter(|f| !self.removed.contains(f)).collect()
    }

    /// Smallest simplicial complex containing `Φ`.
    pub fn closure(&self) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.facets())
    }

    /// The minimal presentation `(Φ̄, Φ̄ ∖ Φ)`.
    pub fn canonical(&self) -> RelativeComplex {
        let closure = self.closure();
        let removed = maximal_faces(closure.faces().into_iter().filter(|f| self.removed.contains(f)));
        let removed = if removed.is_empty() {
            SimplicialComplex::void()
        } else {
            SimplicialComplex::from_facets(removed)
        };
        RelativeComplex { removed, ambient: closure }
    }

    /// Minimal faces of `Φ`.
    pub fn minimal_faces(&self) -> Vec<Face> {
        minimal_faces(self.faces())
    }

    /// Relative link `(link_Δ σ, link_Γ σ)`.
    pub fn link(&self, sigma: &Face) -> RelativeComplex {
        RelativeComplex { ambient: self.ambient.link(sigma), removed: self.removed.link(sigma) }
    }

    pub fn relabel<F: Fn(usize) -> usize>(&self, f: F) -> RelativeComplex {
        RelativeComplex { ambient: self.ambient.relabel(&f), removed: self.removed.relabel(&f) }
    }
}

impl FaceSet for RelativeComplex {
    fn ambient(&self) -> &SimplicialComplex {
        &self.ambient
    }

    fn removed(&self) -> Option<&SimplicialComplex> {
        Some(&self.removed)
    }

    fn contains_face(&self, face: &Face) -> bool {
        self.contains(face)
    }

    fn faces(&self) -> Vec<Face> {
        RelativeComplex::faces(self)
    }

    fn maximal_faces(&self) -> Vec<Face> {
        self.facets()
    }
}

/// Either flavor of complex, for call sites that accept both.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Complex {
    Absolute(SimplicialComplex),
    Relative(RelativeComplex),
}

impl Complex {
    pub fn link(&self, sigma: &Face) -> Complex {
        match self {
            Complex::Absolute(k) => Complex::Absolute(k.link(sigma)),
            Complex::Relative(r) => Complex::Relative(r.link(sigma)),
        }
    }

    pub fn as_absolute(&self) -> Option<&SimplicialComplex> {
        match self {
            Complex::Absolute(k) => Some(k),
            Complex::Relative(_) => None,
        }
    }

    pub fn as_relative(&self) -> Option<&RelativeComplex> {
        match self {
            Complex::Absolute(_) => None,
            Complex::Relative(r) => Some(r),
        }
    }

    pub fn relabel<F: Fn(usize) -> usize>(&self, f: F) -> Complex {
        match self {
            Complex::Absolute(k) => Complex::Absolute(k.relabel(f)),
            Complex::Relative(r) => Complex::Relative(r.relabel(f)),
        }
    }
}

impl From<SimplicialComplex> for Complex {
    fn from(k: SimplicialComplex) -> Self {
        Complex::Absolute(k)
    }
}

impl From<RelativeComplex> for Complex {
    fn from(r: RelativeComplex) -> Self {
        Complex::Relative(r)
    }
}

impl FaceSet for Complex {
    fn ambient(&self) -> &SimplicialComplex {
        match self {
            Complex::Absolute(k) => k,
            Complex::Relative(r) => r.ambient(),
        }
    }

    fn removed(&self) -> Option<&SimplicialComplex> {
        match self {
            Complex::Absolute(_) => None,
            Complex::Relative(r) => Some(r.removed()),
        }
    }

    fn contains_face(&self, face: &Face) -> bool {
        match self {
            Complex::Absolute(k) => k.contains(face),
            Complex::Relative(r) => r.contains(face),
        }
    }

    fn faces(&self) -> Vec<Face> {
        match self {
            Complex::Absolute(k) => k.faces(),
            Complex::Relative(r) => r.faces(),
        }
    }

    fn maximal_faces(&self) -> Vec<Face> {
        match self {
            Complex::Absolute(k) => k.facets().to_vec(),
            Complex::Relative(r) => r.facets(),
        }
    }
}

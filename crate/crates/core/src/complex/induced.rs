use crate::complex::{minimal_faces, Face, SimplicialComplex};
use crate::error::ComplexError;

/// Outcome of [`is_induced`]. `witness` is a minimal face of `X ∖ A` that is
/// not a vertex, present exactly when `induced` is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inducedness {
    pub induced: bool,
    pub witness: Option<Face>,
}

/// Decides whether `a = x|_{V(a)}` by checking that every minimal face of
/// `x ∖ a` is a vertex.
pub fn is_induced(x: &SimplicialComplex, a: &SimplicialComplex) -> Result<Inducedness, ComplexError> {
    if let Some(bad) = a.facets().iter().find(|f| !x.contains(f)) {
        return Err(ComplexError::NotSubcomplex(*bad));
    }
    let outside = x.faces().into_iter().filter(|f| !a.contains(f));
    let witness = minimal_faces(outside).into_iter().find(|f| f.len() != 1);
    Ok(Inducedness { induced: witness.is_none(), witness })
}

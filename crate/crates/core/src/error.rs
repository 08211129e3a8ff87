use thiserror::Error;

use crate::complex::Face;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("negative vertex index {0}")]
    NegativeVertex(i64),
    #[error("vertex index {0} exceeds the supported range")]
    VertexOutOfRange(usize),
    #[error("`{0}` is not a digit-string face")]
    BadDigitFace(String),
    #[error("face {0} of the removed complex is not a face of the ambient complex")]
    NotSubcomplex(Face),
    #[error("complex is not pure")]
    NotPure,
    #[error("not a bijection on the vertex set: {0}")]
    NotAPermutation(String),
    #[error("unknown vertex label `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
}

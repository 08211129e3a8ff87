//! Exact verification of Cohen–Macaulayness, partitionability and
//! shellability for finite simplicial and relative simplicial complexes.

pub mod complex;
pub mod corpus;
pub mod cli;
pub mod cm;
pub mod decompose;
pub mod error;
pub mod glue;
pub mod homology;
pub mod io;

pub use complex::{Complex, Face, FaceSet, RelativeComplex, SimplicialComplex, VertexMap, VertexPermutation};
pub use error::ComplexError;

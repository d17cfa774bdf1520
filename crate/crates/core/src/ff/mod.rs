//! Finite fields, dense matrices and subspaces.

pub mod embed;
pub mod field;
pub mod gf2;
pub mod matrix;
pub mod poly;
pub mod subspace;
pub mod vector;

pub use embed::Embedding;
pub use field::{gf, prime_field, Fe, FieldCtx, FieldElem};
pub use matrix::{MatF, Rref, RrefDecomposition};
pub use poly::Poly;
pub use subspace::Subspace;

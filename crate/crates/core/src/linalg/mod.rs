//! Exact linear algebra over Q: scalars, sparse matrices, subspaces and
//! polynomials in one formal variable.

pub mod dense;
pub(crate) mod elim;
pub mod int;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod subspace;

pub use matrix::{Matrix, SparseVec};
pub use poly::Polynomial;
pub use scalar::Scalar;
pub use subspace::LinearSubspace;

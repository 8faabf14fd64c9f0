//! Exact dense and sparse linear algebra over any [`Scalar`] field.

mod dense;
pub mod fp;
mod scalar;
mod sparse;

pub use dense::Matrix;
pub use fp::{Fp, Reduction};
pub use scalar::Scalar;
pub use sparse::{sparse_rank, Echelon, SparseMatrix};

//! Exact integer linear algebra over arbitrary-precision integers.
//!
//! Smith normal form uses smallest-absolute-value pivoting with row/column
//! remainder reduction. Hermite form, kernels and solving go through a single
//! column-style echelon reduction, so they never depend on the Smith code path.

mod echelon;
mod matrix;
mod smith;

pub use echelon::{hnf, kernel_basis, rank, solve};
pub use matrix::IntMatrix;
pub use smith::{smith_diagonal, snf, SmithDecomposition};

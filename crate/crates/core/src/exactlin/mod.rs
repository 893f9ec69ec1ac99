//! Exact linear algebra over cyclotomic-rational scalars.

mod mat;
mod reduce;
pub mod scalar;

pub use mat::{add_scaled, is_zero_vec, kron, kron_vec, tensor_apply, unit_vector, Mat};
pub use reduce::{image, kernel, quotient, row_reduce, solve, solve_many, Quotient, Reduction, Subspace};
pub use scalar::Scalar;

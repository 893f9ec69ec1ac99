//! Exact decision procedures for Hopf-Galois extensions of finite-dimensional
//! comodule algebras over cyclotomic fields.
//!
//! All arithmetic is exact: scalars live in `Q(ζ_n)` and every verdict is a
//! rank computation or a matrix identity, never a tolerance.

pub mod algebra;
pub mod bundle;
pub mod cli;
pub mod corpus;
pub mod differential;
pub mod error;
pub mod exactlin;
pub mod hopf;

pub use error::{Error, Result};

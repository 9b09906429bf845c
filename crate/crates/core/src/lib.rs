//! Numerical verification of the L^p operator-norm bounds
//! `Γ²(2/p)Γ²(2/q) ≤ ‖P‖_p ≤ Γ²(1−2/p)Γ²(2/p)` for the Bergman projection of
//! the Hartogs triangle `H = {|z1| < |z2| < 1}`, `4/3 < p < 4`.

// `!(x > a)` is used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod config;
pub mod error;
pub mod kernel;
pub mod quadrature;
pub mod lowerbound;
pub mod report;
pub mod schur;
pub mod specfun;
pub mod suite;
pub mod sum;

pub use error::{Error, Result};
pub use num_complex::Complex64;

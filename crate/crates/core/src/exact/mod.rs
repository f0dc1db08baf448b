//! Exact arithmetic: integers, polynomials in `q, t, a`, rational functions
//! and q-series primitives.

pub mod factor;
pub mod int;
pub mod linalg;
pub mod poly;
pub mod qseries;
pub mod ratfunc;

pub use int::Int;
pub use linalg::determinant;
pub use poly::{Exp, MPoly, Var};
pub use qseries::{binomial, gaussian_binomial, q_binomial, q_integer, q_shifted_factorial, shifted_factorial};
pub use ratfunc::RatFunc;

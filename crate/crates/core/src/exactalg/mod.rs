//! Exact arithmetic substrate: rationals, sparse polynomials, truncated
//! power series, factored rational functions and linear algebra over Q.

mod echelon;
mod matrix;
mod poly;
mod ratfn;
mod rational;
mod series;

pub use echelon::{integer_row, SparseEchelon, SparseRow};
pub use matrix::{Matrix, QMatrix, Scalar};
pub use poly::{Monomial, SparsePoly};
pub use ratfn::{expand_sum, functional_eq_check, one_minus, rf_expand, RationalFn};
pub use rational::Rational;
pub use series::TruncSeries;

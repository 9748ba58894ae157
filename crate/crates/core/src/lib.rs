//! Exact computations with polynomial invariants: finite linear groups,
//! trace algebras of generic matrices, trace identities and nilpotency
//! degrees. All arithmetic is over the rationals.

pub mod error;
pub mod exactalg;
pub mod fingroup;
pub mod limits;
pub mod nilpotency;
pub mod symmfunc;
pub mod tracealg;
pub mod traceid;

pub use error::{Error, Result};

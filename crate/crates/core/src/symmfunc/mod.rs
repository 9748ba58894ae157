//! Symmetric polynomials, Schur expansion in two variables and
//! multiplicity series.

mod basis;
mod decomp;
mod partition;

pub(crate) use basis::perm_sign;
pub use basis::{elementary, newton_e_from_p, power_sum, schur_poly};
pub use decomp::{
    c32_multiplicity_series, mult_reconstruct, mult_series, schur_decompose2, MultSeries,
    SchurDecomp,
};
pub use partition::Partition;

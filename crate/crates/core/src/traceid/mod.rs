//! Permutations, the group algebra `QS_m`, trace functions and the ideals
//! `J(n, m)` describing trace identities.

mod algebra;
mod ideal;
mod perm;

pub use algebra::{fundamental, trace_monomial, trace_poly, GroupAlgElem};
pub use ideal::{ideal_membership, semantic_identity, IdealBasis};
pub use perm::Perm;

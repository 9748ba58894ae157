//! Finite groups of rational matrices and their polynomial invariants.

mod group;
mod invariants;

pub use group::{format_generators, parse_generators, permutation_matrix, MatGroup};
pub use invariants::{
    act, express_in_subalgebra, extract_generators, generator_degrees, molien, monomials_of_degree,
    reflection_check, reynolds, reynolds_rank, DegreeGenerators, ReflectionReport,
};

//! Trace algebras of generic matrices: trace expressions, their evaluation,
//! graded dimensions, generator profiles and relation checks.

mod dims;
mod expr;
mod generic;
mod relations;
mod series;

pub use dims::{
    graded_dim, graded_dim_with, hilbert_check, min_gen_profile, multidegrees, necklaces_within,
    t22_multiplicity_check, DimTable, HilbertReport, T22Report, TraceKind, WordCap,
};
pub use expr::{canonical_rotation, tr, TraceExpr, TraceMonomial, TraceWord};
pub use generic::{
    delta_poly, eval_at, eval_generic, free_entries, generic_matrices, verify_zero, Evaluated,
    Evaluator, GenericMatrix,
};
pub use relations::{
    ads_coefficients, ads_elements, ads_relation, ads_relation_check, ads_relation_check_with,
    check_at_samples, drensky_first, drensky_relations, drensky_relations_check,
    drensky_relations_symbolic, drensky_second, phi2, psi2, random_matrices, tr_s3, AdsElements,
    RelationReport, DEFAULT_SEED, SAMPLE_RANGE,
};
pub use series::{c22_hilbert, c32_hilbert, polynomial_ring_hilbert};

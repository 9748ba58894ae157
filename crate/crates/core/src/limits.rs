//! Feasibility caps for factorial-size computations, overridable from the
//! environment.

use crate::error::{Error, Result};

/// Largest permutation degree `m` for ideal computations in `QS_m`.
pub const MAX_PERM_DEGREE_ENV: &str = "MATINV_MAX_PERM_DEGREE";
pub const DEFAULT_MAX_PERM_DEGREE: usize = 7;

/// Largest degree `N` for nilpotency membership.
pub const MAX_NH_DEGREE_ENV: &str = "MATINV_MAX_NH_DEGREE";
pub const DEFAULT_MAX_NH_DEGREE: usize = 7;

fn cap(env: &str, default: usize) -> usize {
    std::env::var(env)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(default)
}

pub(crate) fn check_cap(what: &'static str, value: usize, env: &'static str, default: usize) -> Result<()> {
    let cap = cap(env, default);
    if value > cap {
        return Err(Error::ResourceCap { what, value, cap, env });
    }
    Ok(())
}

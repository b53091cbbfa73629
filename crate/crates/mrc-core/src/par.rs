//! Deterministic map-reduce over enumeration partitions.
//!
//! Every brute-force scan in this crate splits its search space into
//! disjoint partitions whose partial results are summed, so the outcome is
//! independent of scheduling. With the `parallel` feature the partitions
//! run on rayon; the sequential path is always compiled and is what the
//! benchmarks compare against.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn reduce_parts<R, F, M>(nparts: usize, map: F, merge: M, parallel: bool) -> Option<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync,
    M: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return (0..nparts).into_par_iter().map(&map).reduce_with(&merge);
    }
    let _ = parallel;
    (0..nparts).map(map).reduce(merge)
}

/// Enumeration guard: errors unless `size <= cap`, where `cap` is the
/// built-in default or the `MRC_MAX_ENUM` override.
pub(crate) fn check_guard(size: u128, default_cap: u128) -> crate::error::Result<()> {
    let cap = env_override().unwrap_or(default_cap);
    if size > cap {
        Err(crate::error::Error::EnumerationTooLarge(size, cap))
    } else {
        Ok(())
    }
}

fn env_override() -> Option<u128> {
    std::env::var("MRC_MAX_ENUM").ok()?.parse().ok()
}

//! Parallel/sequential execution switch.
//!
//! With the `parallel` feature (the default) indexed maps run on the rayon
//! pool of the calling context; without it the same helper degrades to a
//! serial loop. Results are collected in index order either way, so callers
//! observe identical output regardless of scheduling or thread count.

#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Always-sequential counterpart; the baseline the bench suite compares
/// against and the body `map_indexed` reduces to without the feature.
pub(crate) fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

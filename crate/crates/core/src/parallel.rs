//! Thin layer over rayon so the rest of the crate compiles unchanged when
//! the `parallel` feature is disabled.

/// Runs both closures, concurrently when `parallel` is set and the feature
/// is enabled.
#[cfg(feature = "parallel")]
pub(crate) fn join<A, B, RA, RB>(parallel: bool, a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    if parallel {
        rayon::join(a, b)
    } else {
        (a(), b())
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn join<A, B, RA, RB>(_parallel: bool, a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    (a(), b())
}

/// Runs `f` on a pool of `threads` workers (0 = rayon's default). With one
/// thread, or without the `parallel` feature, `f` runs on the caller.
#[cfg(feature = "parallel")]
pub(crate) fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    if threads == 1 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn with_threads<R: Send>(_threads: usize, f: impl FnOnce() -> R + Send) -> R {
    f()
}

/// Sums `f` over `0..len`, splitting the range across workers.
#[cfg(feature = "parallel")]
pub(crate) fn sum_range<F>(parallel: bool, len: u64, f: F) -> u64
where
    F: Fn(u64) -> u64 + Sync + Send,
{
    use rayon::prelude::*;
    if parallel {
        (0..len).into_par_iter().map(f).sum()
    } else {
        (0..len).map(f).sum()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn sum_range<F>(_parallel: bool, len: u64, f: F) -> u64
where
    F: Fn(u64) -> u64 + Sync + Send,
{
    (0..len).map(f).sum()
}

/// Collects `f` over `0..len` in index order, dropping `None`s.
#[cfg(feature = "parallel")]
pub(crate) fn filter_map_range<T, F>(parallel: bool, len: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    use rayon::prelude::*;
    if parallel {
        (0..len).into_par_iter().filter_map(f).collect()
    } else {
        (0..len).filter_map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn filter_map_range<T, F>(_parallel: bool, len: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    (0..len).filter_map(f).collect()
}

pub(crate) fn available() -> bool {
    cfg!(feature = "parallel")
}

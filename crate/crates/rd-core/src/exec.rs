//! Execution-mode switch for the data-parallel inner loops.
//!
//! With the `parallel` feature (the default) the hot loops run on rayon;
//! without it the same code paths degrade to plain iterators. The runtime
//! switch exists so a single binary can compare both modes (the bench suite
//! does) and so `RD_LAB_THREADS=1` can force sequential execution without a
//! rebuild. Every parallel loop in the crate is order-preserving: outputs are
//! identical bit-for-bit in both modes.

use std::sync::atomic::{AtomicBool, Ordering};

static PARALLEL_ENABLED: AtomicBool = AtomicBool::new(true);

/// Execution mode for the data-parallel loops.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RunMode {
    Sequential,
    Parallel,
}

/// Select the run mode for subsequent operations (process-wide).
///
/// Has no effect when the crate is built without the `parallel` feature:
/// everything is sequential then.
pub fn set_run_mode(mode: RunMode) {
    PARALLEL_ENABLED.store(mode == RunMode::Parallel, Ordering::Relaxed);
}

pub fn run_mode() -> RunMode {
    if cfg!(feature = "parallel") && PARALLEL_ENABLED.load(Ordering::Relaxed) {
        RunMode::Parallel
    } else {
        RunMode::Sequential
    }
}

/// Order-preserving map over a slice; parallel when enabled.
pub(crate) fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if run_mode() == RunMode::Parallel {
            return items.par_iter().map(f).collect();
        }
    }
    items.iter().map(f).collect()
}

/// Order-preserving fallible map over a slice; parallel when enabled.
pub(crate) fn try_map_collect<T, U, F>(items: &[T], f: F) -> crate::Result<Vec<U>>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> crate::Result<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if run_mode() == RunMode::Parallel {
            return items.par_iter().map(f).collect();
        }
    }
    items.iter().map(f).collect()
}

/// Map over indices 0..n, order preserved; parallel when enabled.
pub(crate) fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if run_mode() == RunMode::Parallel {
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    (0..n).map(f).collect()
}

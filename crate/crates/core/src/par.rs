//! Data-parallel mapping with a sequential fallback.
//!
//! With the `parallel` feature, work fans out over rayon's pool unless the process-wide
//! mode is set to [`Mode::Sequential`]. Without the feature everything runs in order.
//! Results are always returned in input order, so outputs do not depend on the mode.

use std::sync::atomic::{AtomicU8, Ordering};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

static MODE: AtomicU8 = AtomicU8::new(1);

pub fn set_mode(mode: Mode) {
    MODE.store(matches!(mode, Mode::Parallel) as u8, Ordering::Relaxed);
}

pub fn mode() -> Mode {
    if cfg!(feature = "parallel") && MODE.load(Ordering::Relaxed) == 1 {
        Mode::Parallel
    } else {
        Mode::Sequential
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode() == Mode::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
    }
    items.iter().map(f).collect()
}

/// Maps `f` over `0..n`, preserving order.
pub fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    let idx: Vec<usize> = (0..n).collect();
    map(&idx, |&i| f(i))
}

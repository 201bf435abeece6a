//! Worker pool shared by the certifier's restart and sampling loops.
//!
//! `RICPERP_THREADS` caps the number of worker threads; unset, zero, or
//! unparsable values fall back to rayon's default. Batch results are always
//! collected in index order, so nothing downstream depends on scheduling.

use once_cell::sync::Lazy;
use rayon::{ThreadPool, ThreadPoolBuilder};

static POOL: Lazy<ThreadPool> = Lazy::new(|| {
    let mut builder = ThreadPoolBuilder::new();
    if let Some(k) = std::env::var("RICPERP_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&k| k >= 1)
    {
        builder = builder.num_threads(k);
    }
    builder.build().expect("failed to build worker pool")
});

/// Runs `f` inside the shared pool.
pub(crate) fn install<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    POOL.install(f)
}

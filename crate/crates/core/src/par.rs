//! Data-parallel helpers. With the `parallel` feature (default) these run on
//! rayon; without it they fall back to plain sequential iteration.

/// Whether this build carries the rayon backend.
pub const PARALLEL: bool = cfg!(feature = "parallel");

/// Maps `f` over `items`, preserving order.
pub fn sweep<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Runs `job` on a pool of `threads` workers (or inline when `threads <= 1`
/// or the build is sequential-only). `job` receives whether it may use
/// parallel iterators.
pub(crate) fn with_threads<R: Send>(threads: usize, job: impl FnOnce(bool) -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        if threads > 1 {
            if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
                return pool.install(|| job(true));
            }
        }
    }
    let _ = threads;
    job(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_preserves_order() {
        let v: Vec<u32> = (0..100).collect();
        assert_eq!(sweep(&v, |x| x * 2), (0..100).map(|x| x * 2).collect::<Vec<_>>());
    }
}

//! Sequential or data-parallel execution of independent checks.
//!
//! The brute-force verifiers loop over all basis pairs or triples. Those
//! loops go through the helpers here, which use rayon when the `parallel`
//! feature is enabled and fall back to plain iterators otherwise. Output
//! order is the index order in both modes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Rayon thread pool. Same as `Sequential` without the `parallel` feature.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// `(0..len).filter_map(f)` with results in index order.
pub fn filter_map_range<R, F>(exec: Execution, len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len).into_par_iter().filter_map(f).collect();
    }
    let _ = exec;
    (0..len).filter_map(f).collect()
}

/// `items.iter().map(f)` with results in input order.
pub fn map_slice<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Splits a flat index over `n^3` into a basis triple `(i, j, k)`.
pub(crate) fn triple(index: usize, n: usize) -> (usize, usize, usize) {
    (index / (n * n), (index / n) % n, index % n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_keep_order() {
        let f = |i: usize| (!i.is_multiple_of(3)).then_some(i * i);
        let a = filter_map_range(Execution::Sequential, 100, f);
        let b = filter_map_range(Execution::Parallel, 100, f);
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn triple_roundtrip() {
        let n = 4;
        for idx in 0..n * n * n {
            let (i, j, k) = triple(idx, n);
            assert_eq!(idx, (i * n + j) * n + k);
        }
    }
}

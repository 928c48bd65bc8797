//! Data-parallel helpers with a sequential fallback.
//!
//! Every helper preserves input order in its output, so a parallel run
//! produces exactly the same result as a sequential one. With the
//! `parallel` feature disabled, [`Exec::Parallel`] silently runs
//! sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution strategy for the data-parallel inner loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Below this many items the rayon overhead dominates.
#[cfg(feature = "parallel")]
const MIN_PARALLEL_LEN: usize = 32;

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Order-preserving map over a slice.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() && items.len() >= MIN_PARALLEL_LEN {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Order-preserving map over `0..len`.
    pub fn map_range<R, F>(self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() && len >= MIN_PARALLEL_LEN {
            return (0..len).into_par_iter().map(f).collect();
        }
        (0..len).map(f).collect()
    }

    /// Order-preserving filter over a slice, returning the kept indices.
    pub fn filter_indices<T, F>(self, items: &[T], keep: F) -> Vec<usize>
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        self.map(items, |x| keep(x))
            .into_iter()
            .enumerate()
            .filter_map(|(i, k)| k.then_some(i))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let seq = Exec::Sequential.map(&xs, |x| x * x);
        let par = Exec::Parallel.map(&xs, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(
            Exec::Sequential.filter_indices(&xs, |x| x % 7 == 0),
            Exec::Parallel.filter_indices(&xs, |x| x % 7 == 0)
        );
        assert_eq!(
            Exec::Sequential.map_range(100, |i| i + 1),
            Exec::Parallel.map_range(100, |i| i + 1)
        );
    }
}

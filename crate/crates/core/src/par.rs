//! Data-parallel helpers over index ranges.
//!
//! With the `parallel` feature these run on the rayon pool; without it, or
//! with [`Execution::Sequential`], they are plain loops. Results are always
//! returned in index order so the choice never changes output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    #[default]
    Parallel,
    Sequential,
}

impl Execution {
    /// Whether work actually runs on the rayon pool in this build.
    pub fn parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// `f(i)` for each `i` in `0..n` that yields `Some`, in increasing `i`.
pub fn filter_map_range<R, F>(exec: Execution, n: u64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.parallel() {
        return (0..n).into_par_iter().filter_map(f).collect();
    }
    let _ = exec;
    (0..n).filter_map(f).collect()
}

/// The first `f(i)` that yields `Some`, by index, regardless of scheduling.
pub fn find_first_range<R, F>(exec: Execution, n: u64, f: F) -> Option<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.parallel() {
        return (0..n).into_par_iter().find_map_first(f);
    }
    let _ = exec;
    (0..n).find_map(f)
}

/// Maps a slice, preserving order.
pub fn map_slice<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_agree() {
        let f = |i: u64| (i % 7 == 3).then_some(i * i);
        let a = filter_map_range(Execution::Parallel, 10_000, f);
        let b = filter_map_range(Execution::Sequential, 10_000, f);
        assert_eq!(a, b);
        assert_eq!(
            find_first_range(Execution::Parallel, 10_000, f),
            find_first_range(Execution::Sequential, 10_000, f)
        );
        assert_eq!(find_first_range(Execution::Parallel, 3, f), None);
        let xs: Vec<u64> = (0..100).collect();
        assert_eq!(
            map_slice(Execution::Parallel, &xs, |x| x + 1),
            map_slice(Execution::Sequential, &xs, |x| x + 1)
        );
    }
}

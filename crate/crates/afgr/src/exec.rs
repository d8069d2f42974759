//! Execution strategy for the enumeration-heavy operations.
//!
//! With the `parallel` feature (default) the work fans out over rayon;
//! without it, or with [`Mode::Sequential`], everything runs on the calling
//! thread. Both paths aggregate in input order, so results are identical.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

impl Default for Mode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

/// Maps `f` over the items, preserving order.
pub fn map_collect<T, U, F>(mode: Mode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode == Mode::Parallel {
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// Maps `f` over indices `0..n`, preserving order.
pub fn map_indices<U, F>(mode: Mode, n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode == Mode::Parallel {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = mode;
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (0..100).collect();
        let seq = map_collect(Mode::Sequential, &items, |x| x * x);
        let par = map_collect(Mode::Parallel, &items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(
            map_indices(Mode::Sequential, 10, |i| i + 1),
            map_indices(Mode::Parallel, 10, |i| i + 1)
        );
    }
}

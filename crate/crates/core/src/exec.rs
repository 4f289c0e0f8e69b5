//! Sequential or data-parallel execution of independent work items.
//!
//! With the `parallel` feature the [`Exec::Parallel`] mode runs on the rayon
//! pool; without it both modes run sequentially. Every helper here returns
//! results in input order, so output never depends on the thread schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
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

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Maps `f` over `0..n`, preserving order.
    pub fn map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }

    /// The leftmost `f(item)` for which `accept` holds, together with its
    /// index. In parallel mode later items may be skipped once an earlier
    /// accepted result is known; the returned element is the same in both
    /// modes.
    pub fn find_first_map<T, R, F, P>(self, items: &[T], f: F, accept: P) -> Option<(usize, R)>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
        P: Fn(&R) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return items
                .par_iter()
                .enumerate()
                .map(|(i, t)| (i, f(t)))
                .find_first(|(_, r)| accept(r));
        }
        items
            .iter()
            .enumerate()
            .map(|(i, t)| (i, f(t)))
            .find(|(_, r)| accept(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let a = Exec::Sequential.map(&items, |x| x * x);
        let b = Exec::Parallel.map(&items, |x| x * x);
        assert_eq!(a, b);
        let fa = Exec::Sequential.find_first_map(&items, |x| x % 97, |r| *r == 3);
        let fb = Exec::Parallel.find_first_map(&items, |x| x % 97, |r| *r == 3);
        assert_eq!(fa, Some((3, 3)));
        assert_eq!(fa, fb);
        assert_eq!(Exec::Parallel.map_range(5, |i| i + 1), vec![1, 2, 3, 4, 5]);
    }
}

//! Data-parallel map used by the verification sweeps.
//!
//! With the `parallel` feature (on by default) [`Executor::Parallel`] runs on
//! the rayon global pool; without it every executor runs sequentially.
//! Results always come back in input order, so reports are deterministic.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Executor {
    Sequential,
    #[default]
    Parallel,
}

impl Executor {
    /// Whether this executor actually runs in parallel in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Executor::Parallel
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Executor::Parallel {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Maps every item to a list of failures and concatenates them in input
    /// order.
    pub fn collect_failures<T, F>(self, items: &[T], f: F) -> Vec<String>
    where
        T: Sync,
        F: Fn(&T) -> Vec<String> + Sync + Send,
    {
        self.map(items, f).into_iter().flatten().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_executors_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Executor::Sequential.map(&items, |x| x * x);
        let par = Executor::Parallel.map(&items, |x| x * x);
        assert_eq!(seq, par);
    }
}

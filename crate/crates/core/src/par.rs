//! Switch between sequential and data-parallel evaluation.
//!
//! Without the `parallel` feature both variants run on the calling thread.

/// How embarrassingly parallel work (path blocks, sweeps over `n`) is run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when work will actually be spread over a thread pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Maps every item and folds the results with `reduce`. `reduce` must be
    /// associative and `identity` its neutral element; the result is then
    /// independent of how the items are split.
    pub fn map_reduce<T, R, M, F, I>(self, items: Vec<T>, map: M, identity: I, reduce: F) -> R
    where
        T: Send,
        R: Send,
        M: Fn(T) -> R + Sync + Send,
        F: Fn(R, R) -> R + Sync + Send,
        I: Fn() -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(map).reduce(identity, reduce);
        }
        items.into_iter().map(map).fold(identity(), reduce)
    }

    /// Maps every item, keeping input order.
    pub fn map<T, R, M>(self, items: Vec<T>, map: M) -> Vec<R>
    where
        T: Send,
        R: Send,
        M: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(map).collect();
        }
        items.into_iter().map(map).collect()
    }
}

/// Whether instance loops run on the rayon pool.
///
/// Without the `parallel` feature both variants run sequentially.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// `f(0), f(1), ..., f(count - 1)` in index order.
    pub(crate) fn map<T, F>(self, count: u64, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..count).into_par_iter().map(f).collect()
            }
            _ => (0..count).map(f).collect(),
        }
    }

    /// Folds `f(i)` into accumulators with a commutative, associative `merge`;
    /// the result is independent of how the range is split.
    pub(crate) fn fold<A, F, I, M>(self, count: u64, init: I, f: F, merge: M) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(&mut A, u64) + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..count)
                    .into_par_iter()
                    .fold(&init, |mut acc, i| {
                        f(&mut acc, i);
                        acc
                    })
                    .reduce(&init, &merge)
            }
            _ => {
                let _ = &merge; // one accumulator: nothing to merge
                let mut acc = init();
                for i in 0..count {
                    f(&mut acc, i);
                }
                acc
            }
        }
    }
}

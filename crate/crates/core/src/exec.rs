//! Batch evaluation with an optional rayon backend.
//!
//! Without the `parallel` feature, [`Execution::Parallel`] runs sequentially.
//! Output order always matches input order.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can actually run in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

pub fn map_indices<R, F>(count: u64, exec: Execution, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..count).into_par_iter().map(f).collect()
        }
        _ => (0..count).map(f).collect(),
    }
}

pub fn map_slice<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let seq = map_indices(1000, Execution::Sequential, |i| i * i);
        let par = map_indices(1000, Execution::Parallel, |i| i * i);
        assert_eq!(seq, par);
        let items: Vec<u32> = (0..500).collect();
        assert_eq!(
            map_slice(&items, Execution::Parallel, |x| x + 1),
            map_slice(&items, Execution::Sequential, |x| x + 1)
        );
    }
}

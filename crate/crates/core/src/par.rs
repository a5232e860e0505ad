//! Data-parallel helpers. With the `parallel` feature the heavy loops run on
//! rayon; without it, or with [`Exec::Sequential`], they run on the calling
//! thread. Both paths return identical results in identical order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution strategy for the data-parallel inner loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Smallest index in `0..n` for which `f` returns `Some`, with its value.
pub fn find_first_index<T, F>(exec: Exec, n: u64, f: F) -> Option<(u64, T)>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && n > 1 {
        return (0..n)
            .into_par_iter()
            .filter_map(|i| f(i).map(|t| (i, t)))
            .find_first(|_| true);
    }
    let _ = exec;
    (0..n).find_map(|i| f(i).map(|t| (i, t)))
}

/// Order-preserving map over a slice.
pub fn map<S, T, F>(exec: Exec, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && items.len() > 1 {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Order-preserving map over an index range.
pub fn map_range<T, F>(exec: Exec, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && n > 1 {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// First item (in slice order) mapped to `Some`.
pub fn find_map_first<S, T, F>(exec: Exec, items: &[S], f: F) -> Option<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && items.len() > 1 {
        return items.par_iter().filter_map(f).find_first(|_| true);
    }
    let _ = exec;
    items.iter().find_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_agree() {
        let f = |i: u64| if i % 7 == 3 && i > 20 { Some(i * 2) } else { None };
        let a = find_first_index(Exec::Sequential, 1000, f);
        let b = find_first_index(Exec::Parallel, 1000, f);
        assert_eq!(a, Some((24, 48)));
        assert_eq!(a, b);
        let xs: Vec<u32> = (0..100).collect();
        assert_eq!(
            map(Exec::Sequential, &xs, |x| x * x),
            map(Exec::Parallel, &xs, |x| x * x)
        );
    }
}

//! Order-preserving map over work items, run on a rayon pool when the
//! `parallel` feature is enabled and sequentially otherwise.

/// How many workers a data-parallel stage may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exec {
    jobs: usize,
}

impl Default for Exec {
    fn default() -> Self {
        Exec::sequential()
    }
}

impl Exec {
    pub fn sequential() -> Self {
        Exec { jobs: 1 }
    }

    /// `jobs == 0` means one worker per available core.
    pub fn with_jobs(jobs: usize) -> Self {
        Exec { jobs }
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }

    pub fn is_parallel(&self) -> bool {
        cfg!(feature = "parallel") && self.jobs != 1
    }

    /// Maps `f` over `items`; the output order matches the input order
    /// regardless of the worker count.
    pub fn map<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.jobs != 1 {
            use rayon::prelude::*;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.jobs)
                .build()
                .expect("thread pool");
            return pool.install(|| items.into_par_iter().map(f).collect());
        }
        items.into_iter().map(f).collect()
    }

    /// Like [`map`](Self::map) but concatenates the per-item outputs.
    pub fn flat_map<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> Vec<R> + Sync + Send,
    {
        self.map(items, f).into_iter().flatten().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Exec::sequential().map(items.clone(), |x| x * x);
        let par = Exec::with_jobs(4).map(items, |x| x * x);
        assert_eq!(seq, par);
    }

    #[test]
    fn flat_map_concatenates_in_order() {
        let out = Exec::with_jobs(3).flat_map(vec![1, 2, 3], |n| vec![n; n]);
        assert_eq!(out, vec![1, 2, 2, 3, 3, 3]);
    }
}

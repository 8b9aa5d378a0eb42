//! Worker-count aware mapping. With one worker (or without the `parallel`
//! feature) everything runs on the calling thread; otherwise work goes to a
//! rayon pool of the requested size. Output order always matches input order.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Workers(usize);

impl Default for Workers {
    fn default() -> Self {
        Workers::available()
    }
}

impl Workers {
    pub fn new(n: usize) -> Self {
        Workers(n.max(1))
    }

    pub fn sequential() -> Self {
        Workers(1)
    }

    pub fn available() -> Self {
        Workers(std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
    }

    pub fn count(self) -> usize {
        self.0
    }

    pub fn is_sequential(self) -> bool {
        self.0 <= 1 || !cfg!(feature = "parallel")
    }

    pub fn map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        if self.is_sequential() || n <= 1 {
            return (0..n).map(f).collect();
        }
        imp::map_range(self.0, n, f)
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        self.map_range(items.len(), |i| f(&items[i]))
    }
}

#[cfg(feature = "parallel")]
mod imp {
    use rayon::prelude::*;
    use rayon::{ThreadPool, ThreadPoolBuilder};
    use std::collections::HashMap;
    use std::sync::{Arc, Mutex, OnceLock};

    fn pool(n: usize) -> Arc<ThreadPool> {
        static POOLS: OnceLock<Mutex<HashMap<usize, Arc<ThreadPool>>>> = OnceLock::new();
        let mut pools = POOLS.get_or_init(Default::default).lock().unwrap();
        pools
            .entry(n)
            .or_insert_with(|| Arc::new(ThreadPoolBuilder::new().num_threads(n).build().expect("thread pool")))
            .clone()
    }

    pub(super) fn map_range<R, F>(workers: usize, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        pool(workers).install(|| (0..n).into_par_iter().map(f).collect())
    }
}

#[cfg(not(feature = "parallel"))]
mod imp {
    pub(super) fn map_range<R, F>(_workers: usize, n: usize, f: F) -> Vec<R>
    where
        F: Fn(usize) -> R,
    {
        (0..n).map(f).collect()
    }
}

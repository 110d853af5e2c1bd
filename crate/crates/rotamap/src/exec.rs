//! Data-parallel execution of independent suite items.
//!
//! Every check in this crate is a pure call, so batches can fan out across
//! threads. With the `parallel` feature (default) the parallel mode goes
//! through rayon; without it both modes run sequentially.

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Sequential,
    Parallel,
}

#[cfg(feature = "parallel")]
pub fn map_items<T, U, F>(mode: Mode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    match mode {
        Mode::Sequential => items.into_iter().map(f).collect(),
        Mode::Parallel => items.into_par_iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_items<T, U, F>(_mode: Mode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_iter().map(f).collect()
}

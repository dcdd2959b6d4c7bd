//! Parallel folds over long streaming enumerations, one chunk at a time.
//! Chunks are processed with `par_iter`, which nests safely inside other
//! rayon jobs.

use rayon::prelude::*;

const CHUNK: usize = 1 << 14;

pub(crate) fn fold_chunks<I, T, A, Init, F, R>(iter: I, init: Init, fold: F, reduce: R) -> A
where
    I: Iterator<Item = T>,
    T: Send + Sync,
    A: Send,
    Init: Fn() -> A + Sync + Send,
    F: Fn(A, &T) -> A + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    let mut iter = iter;
    let mut acc = init();
    loop {
        let chunk: Vec<T> = iter.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return acc;
        }
        let part = chunk.par_iter().fold(&init, &fold).reduce(&init, &reduce);
        acc = reduce(acc, part);
    }
}

/// Some element satisfying `pred`, if any.
pub(crate) fn find_any_chunks<I, T, P>(iter: I, pred: P) -> Option<T>
where
    I: Iterator<Item = T>,
    T: Send + Sync + Clone,
    P: Fn(&T) -> bool + Sync + Send,
{
    let mut iter = iter;
    loop {
        let chunk: Vec<T> = iter.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return None;
        }
        if let Some(x) = chunk.par_iter().find_any(|x| pred(x)) {
            return Some(x.clone());
        }
    }
}

//! Lazy enumeration of `M_n` and `N_n` by backtracking over step choices.

use super::{LabeledMotzkinPath, MotzkinSuffix, PathStep, SuffixStep};
use crate::error::Result;
use crate::signedperm::{check_limit, DEFAULT_LIMIT};

/// Step choices at height `h` as `(step, next height)`.
trait Model {
    type Step: Copy;
    fn options(h: u32) -> Vec<(Self::Step, u32)>;
}

struct Mn;

impl Model for Mn {
    type Step = PathStep;

    fn options(h: u32) -> Vec<(PathStep, u32)> {
        let mut out = Vec::new();
        for kind in 1..=8u8 {
            let Some(m) = PathStep::max_index(kind, h) else {
                continue;
            };
            let s = PathStep::new(kind, 0);
            let next = match s.direction() {
                super::Direction::Up => h + 1,
                super::Direction::Level => h,
                super::Direction::Down => match h.checked_sub(1) {
                    Some(x) => x,
                    None => continue,
                },
            };
            // a down step is indexed by its lower endpoint
            let m = if next < h { next.min(m) } else { m };
            out.extend((0..=m).map(|i| (PathStep::new(kind, i), next)));
        }
        out
    }
}

struct Nn;

impl Model for Nn {
    type Step = SuffixStep;

    fn options(h: u32) -> Vec<(SuffixStep, u32)> {
        let mut out: Vec<(SuffixStep, u32)> = (0..=h).map(|i| (SuffixStep::Up(i), h + 1)).collect();
        out.extend((0..=h).map(|i| (SuffixStep::LevelY(i), h)));
        out.extend((0..h).map(|i| (SuffixStep::Level(i), h)));
        if h > 0 {
            out.extend((0..h).map(|i| (SuffixStep::Down(i), h - 1)));
        }
        out
    }
}

/// Depth-first walk over all step sequences of length `n` from height
/// `start` back to 0.
struct Backtrack<M: Model> {
    n: usize,
    start: u32,
    stack: Vec<(Vec<(M::Step, u32)>, usize)>,
    started: bool,
    done: bool,
}

impl<M: Model> Backtrack<M> {
    fn new(n: usize, start: u32) -> Self {
        Backtrack {
            n,
            start,
            stack: Vec::new(),
            started: false,
            done: start as usize > n,
        }
    }

    fn height(&self) -> u32 {
        self.stack
            .last()
            .map(|(opts, k)| opts[*k].1)
            .unwrap_or(self.start)
    }

    fn frame(&self) -> Vec<(M::Step, u32)> {
        let remaining = (self.n - self.stack.len() - 1) as u32;
        M::options(self.height())
            .into_iter()
            .filter(|&(_, h)| h <= remaining)
            .collect()
    }

    /// Extends the stack to full length, backtracking on dead ends.
    fn descend(&mut self) -> bool {
        while self.stack.len() < self.n {
            let opts = self.frame();
            if opts.is_empty() {
                if !self.advance() {
                    return false;
                }
            } else {
                self.stack.push((opts, 0));
            }
        }
        true
    }

    fn advance(&mut self) -> bool {
        while let Some((opts, k)) = self.stack.last_mut() {
            *k += 1;
            if *k < opts.len() {
                return true;
            }
            self.stack.pop();
        }
        false
    }

    fn next_steps(&mut self) -> Option<Vec<M::Step>> {
        if self.done {
            return None;
        }
        let ok = if self.started {
            self.n > 0 && self.advance() && self.descend()
        } else {
            self.started = true;
            self.descend()
        };
        if !ok {
            self.done = true;
            return None;
        }
        if self.n == 0 && self.start != 0 {
            self.done = true;
            return None;
        }
        if self.n == 0 {
            // the empty path is produced once
            self.done = true;
        }
        Some(self.stack.iter().map(|(o, k)| o[*k].0).collect())
    }
}

/// Streaming enumerator of `M_n`.
pub struct MnIter(Backtrack<Mn>);

impl Iterator for MnIter {
    type Item = LabeledMotzkinPath;

    fn next(&mut self) -> Option<LabeledMotzkinPath> {
        self.0.next_steps().map(LabeledMotzkinPath::new)
    }
}

/// Streaming enumerator of `N_n`, grouped by start height.
pub struct NnIter {
    n: usize,
    inner: Backtrack<Nn>,
}

impl Iterator for NnIter {
    type Item = MotzkinSuffix;

    fn next(&mut self) -> Option<MotzkinSuffix> {
        loop {
            if let Some(steps) = self.inner.next_steps() {
                return Some(MotzkinSuffix::new(self.inner.start, steps));
            }
            let sh = self.inner.start + 1;
            if sh as usize > self.n {
                return None;
            }
            self.inner = Backtrack::new(self.n, sh);
        }
    }
}

pub fn enumerate_mn(n: usize) -> Result<MnIter> {
    enumerate_mn_with_limit(n, DEFAULT_LIMIT)
}

pub fn enumerate_mn_with_limit(n: usize, limit: usize) -> Result<MnIter> {
    check_limit(n, limit)?;
    Ok(MnIter(Backtrack::new(n, 0)))
}

pub fn enumerate_nn(n: usize) -> Result<NnIter> {
    enumerate_nn_with_limit(n, DEFAULT_LIMIT)
}

pub fn enumerate_nn_with_limit(n: usize, limit: usize) -> Result<NnIter> {
    check_limit(n, limit)?;
    Ok(NnIter {
        n,
        inner: Backtrack::new(n, 0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn sizes_match_signed_permutations() {
        for (n, size) in [(0, 1), (1, 2), (2, 8), (3, 48), (4, 384), (5, 3840)] {
            let mn: Vec<_> = enumerate_mn(n).unwrap().collect();
            assert_eq!(mn.len(), size, "M_{n}");
            assert!(mn.iter().all(|p| p.validate().is_ok()));
            assert_eq!(mn.iter().collect::<HashSet<_>>().len(), size);
            let nn: Vec<_> = enumerate_nn(n).unwrap().collect();
            assert_eq!(nn.len(), size, "N_{n}");
            assert!(nn.iter().all(|p| p.validate().is_ok()));
            assert_eq!(nn.iter().collect::<HashSet<_>>().len(), size);
        }
        assert!(enumerate_mn(9).is_err());
    }
}

//! Signed permutations of `[n]` and their statistics.
//!
//! - classical and flag statistics ([`stats`]),
//! - crossings, checked two ways, and alignments ([`crossings`], [`alignments`]),
//! - pignose and full pignose diagrams ([`diagram`]),
//! - the pattern statistics behind the Motzkin path encodings ([`patterns`]).

mod crossings;
pub mod diagram;
pub mod patterns;
mod stats;

use std::fmt;
use std::str::FromStr;

pub use crossings::{crossings, crossings_via_configurations};
pub use diagram::{alignments, alignments_unsigned, line_counts, pignose_line_counts, Side};
pub use patterns::{mot, mott, pattern_stats, unsigned_mot, PatternStats};
pub use stats::{stats, StatRecord};

use crate::error::{parse_err, Error, Result};

/// Largest `n` accepted by the exhaustive enumerators unless a caller asks
/// for more.
pub const DEFAULT_LIMIT: usize = 8;

/// A signed permutation `π_1 … π_n`; `|π|` is a permutation of `[n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a > n {
                return Err(Error::InvalidPermutation(format!("entry {x} out of range")));
            }
            if seen[a] {
                return Err(Error::InvalidPermutation(format!("|{x}| repeated")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `π_i` for `1 ≤ i ≤ n`.
    pub fn at(&self, i: usize) -> i32 {
        self.images[i - 1]
    }

    /// `π(x)` for `x ∈ [±n]`, using `π(−i) = −π(i)`.
    pub fn apply(&self, x: i32) -> i32 {
        if x > 0 {
            self.images[x as usize - 1]
        } else {
            -self.images[(-x) as usize - 1]
        }
    }

    /// `|π_1| … |π_n|`.
    pub fn abs_images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x.unsigned_abs() as usize).collect()
    }

    pub fn is_unsigned(&self) -> bool {
        self.images.iter().all(|&x| x > 0)
    }

    pub fn neg_count(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    /// `−π`: every image negated.
    pub fn negate(&self) -> Self {
        SignedPermutation {
            images: self.images.iter().map(|x| -x).collect(),
        }
    }

    /// `π^tr`, the signed inverse: `π^tr_i = ε·j` iff `π_j = ε·i`.
    pub fn transpose(&self) -> Self {
        let mut images = vec![0; self.len()];
        for (j, &x) in self.images.iter().enumerate() {
            images[x.unsigned_abs() as usize - 1] = x.signum() * (j as i32 + 1);
        }
        SignedPermutation { images }
    }

    /// `π^−`: the sign of the first image flipped.
    pub fn negate_first(&self) -> Self {
        let mut images = self.images.clone();
        if let Some(x) = images.first_mut() {
            *x = -*x;
        }
        SignedPermutation { images }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(SignedPermutation { images: Vec::new() });
        }
        let mut images = Vec::new();
        let mut pos = 0;
        for tok in s.split(',') {
            match tok.trim().parse::<i32>() {
                Ok(v) => images.push(v),
                Err(_) => return parse_err(pos, format!("bad entry {:?}", tok.trim())),
            }
            pos += tok.len() + 1;
        }
        SignedPermutation::new(images)
    }
}

pub(crate) fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::LimitExceeded { n, limit })
    } else {
        Ok(())
    }
}

/// All `2^n n!` signed permutations of `[n]` in lexicographic order of the
/// image sequence under the integer order (so `−k < k`); the first element is
/// `−n, …, −1` and the last `n, …, 1`.
pub fn enumerate_bn(n: usize) -> Result<BnIter> {
    enumerate_bn_with_limit(n, DEFAULT_LIMIT)
}

pub fn enumerate_bn_with_limit(n: usize, limit: usize) -> Result<BnIter> {
    check_limit(n, limit)?;
    Ok(BnIter {
        current: Some((1..=n as i32).rev().map(|a| -a).collect()),
    })
}

/// Streaming enumerator of `B_n`, see [`enumerate_bn`].
pub struct BnIter {
    current: Option<Vec<i32>>,
}

impl Iterator for BnIter {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        if lex_successor(&mut next) {
            self.current = Some(next);
        }
        Some(SignedPermutation { images: cur })
    }
}

fn lex_successor(v: &mut [i32]) -> bool {
    let n = v.len();
    for i in (0..n).rev() {
        let mut avail: Vec<i32> = v[i..].iter().map(|x| x.abs()).collect();
        let best = avail
            .iter()
            .flat_map(|&a| [-a, a])
            .filter(|&c| c > v[i])
            .min();
        if let Some(c) = best {
            v[i] = c;
            avail.retain(|&a| a != c.abs());
            avail.sort_unstable_by(|a, b| b.cmp(a));
            for (slot, a) in v[i + 1..].iter_mut().zip(avail) {
                *slot = -a;
            }
            return true;
        }
    }
    false
}

/// All `n!` unsigned permutations of `[n]` in lexicographic order.
pub fn enumerate_sn(n: usize) -> Result<SnIter> {
    enumerate_sn_with_limit(n, DEFAULT_LIMIT + 2)
}

pub fn enumerate_sn_with_limit(n: usize, limit: usize) -> Result<SnIter> {
    check_limit(n, limit)?;
    Ok(SnIter {
        current: Some((1..=n as i32).collect()),
    })
}

pub struct SnIter {
    current: Option<Vec<i32>>,
}

impl Iterator for SnIter {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        if next_permutation(&mut next) {
            self.current = Some(next);
        }
        Some(SignedPermutation { images: cur })
    }
}

fn next_permutation(v: &mut [i32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_sizes_and_order() {
        assert_eq!(enumerate_bn(0).unwrap().count(), 1);
        let b1: Vec<_> = enumerate_bn(1).unwrap().collect();
        assert_eq!(b1, vec![sp("-1"), sp("1")]);
        let b3: Vec<_> = enumerate_bn(3).unwrap().collect();
        assert_eq!(b3.len(), 48);
        assert!(b3.windows(2).all(|w| w[0].images() < w[1].images()));
        assert_eq!(b3.iter().collect::<HashSet<_>>().len(), 48);
        assert_eq!(enumerate_sn(5).unwrap().count(), 120);
        assert!(matches!(
            enumerate_bn(9),
            Err(Error::LimitExceeded { n: 9, limit: 8 })
        ));
    }

    #[test]
    fn transforms() {
        assert_eq!(SignedPermutation::identity(4).transpose(), SignedPermutation::identity(4));
        assert_eq!(sp("2,-3,1").transpose(), sp("3,1,-2"));
        for p in enumerate_bn(3).unwrap() {
            assert_eq!(p.negate().negate(), p);
            assert_eq!(p.transpose().transpose(), p);
            assert_eq!(p.negate_first().negate_first(), p);
        }
    }

    #[test]
    fn text_form() {
        let p = sp("4,-6,1,-5,-3,7,2");
        assert_eq!(p.to_string(), "4,-6,1,-5,-3,7,2");
        assert_eq!(p.apply(-2), 6);
        assert!("1,1".parse::<SignedPermutation>().is_err());
        assert!("1,0".parse::<SignedPermutation>().is_err());
        assert!("1,x".parse::<SignedPermutation>().is_err());
        assert_eq!(sp("").len(), 0);
    }
}

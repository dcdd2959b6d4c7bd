//! Ordered matchings: sets of ordered pairs covering a set of `2m` integers.
//!
//! A pair `(i, j)` is drawn as an upper arc when `i < j` and as a lower arc
//! when `i > j`; two arcs cross when they are on the same side and their
//! endpoints interleave.

mod phi;

use std::fmt;
use std::str::FromStr;

use crate::ascii;
use crate::error::{parse_err, Error, Result};
use crate::signedperm::SignedPermutation;

pub use phi::{phi, phi_trace, split_spirals, PhiTrace};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedMatching {
    /// Sorted by first coordinate.
    pairs: Vec<(i64, i64)>,
}

impl OrderedMatching {
    pub fn new(mut pairs: Vec<(i64, i64)>) -> Result<Self> {
        let mut seen: Vec<i64> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidMatching(format!("{} appears twice", w[0])));
        }
        pairs.sort_unstable();
        Ok(OrderedMatching { pairs })
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn ground(&self) -> Vec<i64> {
        let mut g: Vec<i64> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        g.sort_unstable();
        g
    }

    /// Whether the ground set is `{1, …, 2m}`.
    pub fn on_interval(&self) -> bool {
        self.ground().iter().enumerate().all(|(k, &x)| x == k as i64 + 1)
    }

    fn require_interval(&self) -> Result<()> {
        if self.on_interval() {
            Ok(())
        } else {
            Err(Error::BadGround)
        }
    }

    fn relabel(&self, f: impl Fn(i64) -> i64) -> OrderedMatching {
        let mut pairs: Vec<(i64, i64)> = self.pairs.iter().map(|&(a, b)| (f(a), f(b))).collect();
        pairs.sort_unstable();
        OrderedMatching { pairs }
    }

    /// Order-preserving relabeling onto `[2m]`.
    pub fn standardize(&self) -> OrderedMatching {
        let g = self.ground();
        self.relabel(|x| g.binary_search(&x).unwrap() as i64 + 1)
    }

    /// Moves the first vertex to the end: `1` becomes `2n+1`, then the
    /// result is standardized.
    pub fn rho(&self) -> Result<OrderedMatching> {
        self.require_interval()?;
        let two_n = 2 * self.len() as i64;
        Ok(self.relabel(|x| if x == 1 { two_n } else { x - 1 }))
    }

    /// `ρ` applied `k` times.
    pub fn rho_pow(&self, k: usize) -> Result<OrderedMatching> {
        self.require_interval()?;
        let two_n = 2 * self.len() as i64;
        if two_n == 0 {
            return Ok(self.clone());
        }
        let k = (k as i64) % two_n;
        Ok(self.relabel(|x| (x - 1 - k).rem_euclid(two_n) + 1))
    }

    /// `i ↦ 2n+1−i`, a half turn of the drawing.
    pub fn reverse(&self) -> Result<OrderedMatching> {
        self.require_interval()?;
        let top = 2 * self.len() as i64 + 1;
        Ok(self.relabel(|x| top - x))
    }

    /// Pairs of arcs on the same side whose endpoints interleave.
    pub fn crossings(&self) -> usize {
        let arcs: Vec<(i64, i64, bool)> = self
            .pairs
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b), a < b))
            .collect();
        let mut c = 0;
        for (k, x) in arcs.iter().enumerate() {
            for y in &arcs[k + 1..] {
                if x.2 == y.2
                    && ((x.0 < y.0 && y.0 < x.1 && x.1 < y.1)
                        || (y.0 < x.0 && x.0 < y.1 && y.1 < x.1))
                {
                    c += 1;
                }
            }
        }
        c
    }

    /// Whether this comes from the pignose diagram of a permutation: on
    /// `[2n]`, every odd vertex starts an arc and every even vertex ends one.
    pub fn is_pignose(&self) -> bool {
        self.on_interval() && self.pairs.iter().all(|&(a, b)| a % 2 == 1 && b % 2 == 0)
    }

    /// ASCII drawing, upper arcs above the axis and lower arcs below.
    pub fn render(&self) -> String {
        let g = self.ground();
        let col = |x: i64| 4 * g.binary_search(&x).unwrap() + 1;
        let mut axis = Vec::new();
        let mut labels = Vec::new();
        for &x in &g {
            ascii::put_at(&mut axis, col(x), "o");
            ascii::put_centered(&mut labels, col(x), &x.to_string());
        }
        let arcs: Vec<ascii::Arc> = self
            .pairs
            .iter()
            .map(|&(a, b)| ascii::Arc {
                left: col(a.min(b)),
                right: col(a.max(b)),
                upper: a < b,
            })
            .collect();
        let upper = self.pairs.iter().filter(|&&(a, b)| a < b).count();
        let mut out = ascii::draw(
            &axis.iter().collect::<String>(),
            &labels.iter().collect::<String>(),
            &arcs,
        );
        out.push_str(&format!(
            "{} upper arcs, {} lower arcs, {} crossings\n",
            upper,
            self.len() - upper,
            self.crossings()
        ));
        out
    }
}

/// Pignose diagram of an unsigned permutation read as a matching on `[2n]`:
/// pairs `(2i−1, 2π_i)`.
pub fn pignose_matching(p: &SignedPermutation) -> Result<OrderedMatching> {
    if !p.is_unsigned() {
        return Err(Error::InvalidPermutation(format!("{p} has negative entries")));
    }
    OrderedMatching::new(
        (1..=p.len())
            .map(|i| (2 * i as i64 - 1, 2 * p.at(i) as i64))
            .collect(),
    )
}

pub fn matching_crossings(m: &OrderedMatching) -> usize {
    m.crossings()
}

impl fmt::Display for OrderedMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for OrderedMatching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut pos = 0;
        for tok in s.split(';') {
            let t = tok.trim();
            if t.is_empty() {
                pos += tok.len() + 1;
                continue;
            }
            let inner = match t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
                Some(inner) => inner,
                None => return parse_err(pos, format!("expected (a,b), got {t:?}")),
            };
            let nums: Vec<&str> = inner.split(',').collect();
            if nums.len() != 2 {
                return parse_err(pos, format!("expected two entries in {t:?}"));
            }
            match (nums[0].trim().parse(), nums[1].trim().parse()) {
                (Ok(a), Ok(b)) => pairs.push((a, b)),
                _ => return parse_err(pos, format!("bad integer in {t:?}")),
            }
            pos += tok.len() + 1;
        }
        OrderedMatching::new(pairs)
    }
}

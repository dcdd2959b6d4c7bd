//! Matrix Ansatz: the two explicit tridiagonal solutions, the q-derivative
//! recurrence, the J-fraction of `Σ B_n z^n`, and the closed formulas at
//! `t = 1` and `t = 0` ([`formulas`]).

mod formulas;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::exactalg::{q_integer, q_pow, series_jfraction, Monomial, MultiPoly, Series};

pub use formulas::{
    binomial_q_minus_one, closed_form_y0q, closed_form_y1q, closed_forms_check, lagrange_check,
    narayana_b, narayana_b_check, narayana_b_check_against, q_minus_one_check,
    schroeder_lemma_check, CheckOutcome, ClosedForm, Mismatch,
};

/// A truncated `N × N` operator with nonzero entries only on the diagonals
/// `j − i ∈ {−1, 0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandedOperator {
    size: usize,
    bands: BTreeMap<i32, Vec<MultiPoly>>,
}

impl BandedOperator {
    pub fn new(size: usize) -> Self {
        BandedOperator {
            size,
            bands: (-1..=1).map(|d| (d, vec![MultiPoly::zero(); size])).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Band `d`, indexed by row.
    pub fn band(&self, d: i32) -> &[MultiPoly] {
        &self.bands[&d]
    }

    pub fn get(&self, i: usize, j: usize) -> MultiPoly {
        let d = j as i64 - i as i64;
        if i >= self.size || j >= self.size || d.abs() > 1 {
            return MultiPoly::zero();
        }
        self.bands[&(d as i32)][i].clone()
    }

    /// Panics if `(i, j)` lies outside the truncation or the bands.
    pub fn set(&mut self, i: usize, j: usize, v: MultiPoly) {
        let d = j as i64 - i as i64;
        assert!(i < self.size && j < self.size && d.abs() <= 1, "({i},{j}) is off the bands");
        self.bands.get_mut(&(d as i32)).unwrap()[i] = v;
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: &MultiPoly, other: &BandedOperator, b: &MultiPoly) -> BandedOperator {
        assert_eq!(self.size, other.size);
        let mut out = BandedOperator::new(self.size);
        for (d, band) in out.bands.iter_mut() {
            for (i, slot) in band.iter_mut().enumerate() {
                *slot = a * &self.bands[d][i] + b * &other.bands[d][i];
            }
        }
        out
    }

    pub fn apply(&self, v: &[MultiPoly]) -> Vec<MultiPoly> {
        (0..self.size)
            .map(|i| {
                (i.saturating_sub(1)..(i + 2).min(self.size))
                    .map(|j| &self.get(i, j) * &v[j])
                    .sum()
            })
            .collect()
    }

    /// Row vector times operator.
    pub fn apply_left(&self, w: &[MultiPoly]) -> Vec<MultiPoly> {
        (0..self.size)
            .map(|j| {
                (j.saturating_sub(1)..(j + 2).min(self.size))
                    .map(|i| &w[i] * &self.get(i, j))
                    .sum()
            })
            .collect()
    }

    /// Entry `(i, j)` of `self · other`.
    pub fn product_entry(&self, other: &BandedOperator, i: usize, j: usize) -> MultiPoly {
        (i.saturating_sub(1)..(i + 2).min(self.size))
            .map(|k| &self.get(i, k) * &other.get(k, j))
            .sum()
    }
}

impl fmt::Display for BandedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Truncated operators `D`, `E` with boundary vectors `⟨W|` and `|V⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnsatzSystem {
    pub d: BandedOperator,
    pub e: BandedOperator,
    pub w: Vec<MultiPoly>,
    pub v: Vec<MultiPoly>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Solution {
    First,
    Second,
}

impl Solution {
    pub fn system(self, size: usize) -> AnsatzSystem {
        match self {
            Solution::First => solution1(size),
            Solution::Second => solution2(size),
        }
    }
}

impl FromStr for Solution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(Solution::First),
            "2" => Ok(Solution::Second),
            other => parse_err(0, format!("unknown solution {other:?}, expected 1 or 2")),
        }
    }
}

fn yt_q(e: u32) -> MultiPoly {
    MultiPoly::term(1, Monomial::new(1, 1, e))
}

fn unit_vector(size: usize) -> Vec<MultiPoly> {
    let mut v = vec![MultiPoly::zero(); size];
    if size > 0 {
        v[0] = MultiPoly::one();
    }
    v
}

/// First solution; `⟨W| = |V⟩ = (1, 0, 0, …)`.
pub fn solution1(size: usize) -> AnsatzSystem {
    let mut d = BandedOperator::new(size);
    let mut e = BandedOperator::new(size);
    let one = MultiPoly::one();
    for i in 0..size {
        let k = i as u32;
        d.set(i, i, q_integer(k + 1));
        e.set(i, i, (&one + &yt_q(k)) * q_integer(k) + yt_q(k) * q_integer(k + 1));
        if i + 1 < size {
            d.set(i, i + 1, (&one + &yt_q(k + 1)) * q_integer(k + 1));
            e.set(i, i + 1, yt_q(k) * (&one + &yt_q(k + 1)) * q_integer(k + 1));
            e.set(i + 1, i, q_integer(k + 1));
        }
    }
    AnsatzSystem {
        d,
        e,
        w: unit_vector(size),
        v: unit_vector(size),
    }
}

/// Second solution; `⟨W| = (1, yt, (yt)², …)`, `|V⟩ = (1, 0, 0, …)`.
pub fn solution2(size: usize) -> AnsatzSystem {
    let mut d = BandedOperator::new(size);
    let mut e = BandedOperator::new(size);
    for i in 0..size {
        let k = i as u32;
        d.set(i, i, q_integer(k + 1));
        e.set(i, i, q_integer(k));
        if i + 1 < size {
            d.set(i, i + 1, q_integer(k + 1));
            e.set(i + 1, i, q_integer(k + 1));
        }
    }
    AnsatzSystem {
        d,
        e,
        w: (0..size as u32)
            .map(|k| MultiPoly::term(1, Monomial::new(k, k, 0)))
            .collect(),
        v: unit_vector(size),
    }
}

/// Checks `DE − qED = D + E`, `D|V⟩ = |V⟩` and `⟨W|E = yt⟨W|D` on the
/// window `0..N−1`; the last row and column of a truncation are skipped.
pub fn verify_relations(sys: &AnsatzSystem) -> Result<()> {
    let n = sys.d.size();
    let window = n.saturating_sub(1);
    let q = q_pow(1);
    for i in 0..window {
        for j in 0..window {
            let lhs = sys.d.product_entry(&sys.e, i, j) - &q * &sys.e.product_entry(&sys.d, i, j);
            let rhs = sys.d.get(i, j) + sys.e.get(i, j);
            if lhs != rhs {
                return Err(Error::RelationViolated(format!(
                    "(DE - qED)[{i},{j}] = {lhs}, (D + E)[{i},{j}] = {rhs}"
                )));
            }
        }
    }
    let dv = sys.d.apply(&sys.v);
    let we = sys.e.apply_left(&sys.w);
    let wd = sys.d.apply_left(&sys.w);
    let yt = yt_q(0);
    for i in 0..window {
        if dv[i] != sys.v[i] {
            return Err(Error::RelationViolated(format!(
                "(DV)[{i}] = {}, V[{i}] = {}",
                dv[i], sys.v[i]
            )));
        }
        let rhs = &yt * &wd[i];
        if we[i] != rhs {
            return Err(Error::RelationViolated(format!(
                "(WE)[{i}] = {}, yt(WD)[{i}] = {rhs}",
                we[i]
            )));
        }
    }
    Ok(())
}

/// `⟨W|(y²D + E)^n|V⟩` with truncation `n + 1`.
pub fn ansatz_bn(n: usize, which: Solution) -> Result<MultiPoly> {
    ansatz_bn_truncated(n, which, n + 1)
}

pub fn ansatz_bn_truncated(n: usize, which: Solution, size: usize) -> Result<MultiPoly> {
    if size < n + 1 {
        return Err(Error::TruncationTooSmall { n, size });
    }
    let sys = which.system(size);
    let m = sys.d.combine(&MultiPoly::mono(1, 2, 0, 0), &sys.e, &MultiPoly::one());
    let mut v = sys.v.clone();
    for _ in 0..n {
        v = m.apply(&v);
    }
    Ok(sys.w.iter().zip(&v).map(|(a, b)| a * b).sum())
}

/// `B_0, …, B_n` from `B_{k+1} = (y + t)·D_q[(1 + yt)·B_k]`, the q-derivative
/// taken in `t`.
pub fn recurrence_all(n: usize) -> Vec<MultiPoly> {
    let y_plus_t: MultiPoly = MultiPoly::y() + MultiPoly::t();
    let one_plus_yt = MultiPoly::one() + yt_q(0);
    let mut out = vec![MultiPoly::one()];
    for k in 0..n {
        let next = &y_plus_t * &(&one_plus_yt * &out[k]).q_derivative_t();
        out.push(next);
    }
    out
}

pub fn recurrence_bn(n: usize) -> MultiPoly {
    recurrence_all(n).pop().expect("nonempty")
}

/// `(γ_h, λ_h)` of the J-fraction; `λ_0` is returned as zero.
pub fn cf_coeffs(h: usize) -> (MultiPoly, MultiPoly) {
    let k = h as u32;
    let y2 = MultiPoly::mono(1, 2, 0, 0);
    let gamma = &y2 * &q_integer(k + 1)
        + q_integer(k)
        + yt_q(k) * (q_integer(k) + q_integer(k + 1));
    let lambda = if h == 0 {
        MultiPoly::zero()
    } else {
        MultiPoly::y()
            * q_integer(k).pow(2)
            * (MultiPoly::y() + MultiPoly::mono(1, 0, 1, k - 1))
            * (MultiPoly::one() + yt_q(k))
    };
    (gamma, lambda)
}

/// `Σ_{n ≤ order} B_n z^n` from the J-fraction.
pub fn cf_series(order: usize) -> Series {
    series_jfraction(|h| cf_coeffs(h).0, |h| cf_coeffs(h).1, order)
}

/// Checks `γ_h = y²D_{h,h} + E_{h,h}` and
/// `λ_h = (y²D_{h−1,h} + E_{h−1,h})·E_{h,h−1}` against the first solution.
pub fn cf_matches_solution1(h_max: usize) -> Result<()> {
    let sys = solution1(h_max + 2);
    let m = sys
        .d
        .combine(&MultiPoly::mono(1, 2, 0, 0), &sys.e, &MultiPoly::one());
    for h in 0..=h_max {
        let (g, l) = cf_coeffs(h);
        if m.get(h, h) != g {
            return Err(Error::RelationViolated(format!("gamma_{h} = {g}, M[{h},{h}] = {}", m.get(h, h))));
        }
        if h > 0 {
            let prod = &m.get(h - 1, h) * &m.get(h, h - 1);
            if prod != l {
                return Err(Error::RelationViolated(format!("lambda_{h} = {l}, M[{0},{h}]M[{h},{0}] = {prod}", h - 1)));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn b2() -> MultiPoly {
        p("y^4 + 2*y^3*t + y^3*t*q + y^2*t^2*q + y^2*t^2 + y^2 + y*t")
    }

    #[test]
    fn small_solutions() {
        let s1 = solution1(2);
        assert_eq!(s1.d.get(0, 0), p("1"));
        assert_eq!(s1.d.get(0, 1), p("1 + y*t*q"));
        assert_eq!(s1.d.get(1, 0), p("0"));
        assert_eq!(s1.d.get(1, 1), p("1 + q"));
        let s2 = solution2(2);
        assert_eq!(s2.d.get(0, 0), p("1"));
        assert_eq!(s2.d.get(0, 1), p("1"));
        assert_eq!(s2.e.get(1, 0), p("1"));
        assert_eq!(s2.e.get(1, 1), p("1"));
        assert_eq!(s1.v, unit_vector(2));
        assert_eq!(s2.v, unit_vector(2));
    }

    #[test]
    fn relations() {
        for n in 1..=6 {
            verify_relations(&solution1(n)).unwrap();
            verify_relations(&solution2(n)).unwrap();
        }
        let mut bad = solution1(6);
        let x = bad.d.get(2, 3) + MultiPoly::one();
        bad.d.set(2, 3, x);
        assert!(matches!(verify_relations(&bad), Err(Error::RelationViolated(_))));
    }

    #[test]
    fn small_b() {
        for which in [Solution::First, Solution::Second] {
            assert_eq!(ansatz_bn(1, which).unwrap(), p("y^2 + y*t"));
            assert_eq!(ansatz_bn(2, which).unwrap(), b2());
            for n in 0..=5 {
                let base = ansatz_bn(n, which).unwrap();
                for extra in [1, 3] {
                    assert_eq!(ansatz_bn_truncated(n, which, n + 1 + extra).unwrap(), base);
                }
            }
        }
        assert_eq!(
            ansatz_bn_truncated(3, Solution::First, 3),
            Err(Error::TruncationTooSmall { n: 3, size: 3 })
        );
        assert_eq!(recurrence_bn(1), p("y^2 + y*t"));
        assert_eq!(recurrence_bn(2), b2());
        let r = recurrence_all(6);
        for n in 0..=6 {
            assert_eq!(ansatz_bn(n, Solution::First).unwrap(), r[n]);
            assert_eq!(ansatz_bn(n, Solution::Second).unwrap(), r[n]);
        }
    }

    #[test]
    fn jfraction() {
        assert_eq!(cf_coeffs(0).0, p("y^2 + y*t"));
        assert_eq!(cf_coeffs(1).1, p("y^2 + y*t") * p("1 + y*t*q"));
        cf_matches_solution1(6).unwrap();
        let s = cf_series(6);
        let r = recurrence_all(6);
        assert_eq!(s.coeffs(), &r[..]);
    }
}

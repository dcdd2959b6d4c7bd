//! Closed formulas for `B_n(y,1,q)` and `B_n(y,0,q)`, and the checks of the
//! continued-fraction lemmas behind them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::{cf_coeffs, recurrence_bn};
use crate::error::{parse_err, Error, Result};
use crate::exactalg::{
    binom, jfraction_depth, jfraction_over, q_pow, sfraction_over, Monomial, MultiPoly, Series, Var,
};

/// First differing item of a failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub what: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, got {}", self.what, self.expected, self.actual)
    }
}

/// Number of items compared, or the first mismatch.
pub type CheckOutcome = std::result::Result<usize, Mismatch>;

fn compare(what: impl Into<String>, expected: &MultiPoly, actual: &MultiPoly) -> std::result::Result<(), Mismatch> {
    if expected == actual {
        Ok(())
    } else {
        Err(Mismatch {
            what: what.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        })
    }
}

fn ym(a: u32, e: u32) -> MultiPoly {
    MultiPoly::term(1, Monomial::new(a, 0, e))
}

fn c(n: usize, k: i64) -> BigInt {
    binom(n as i64, k)
}

fn one_minus_q_pow(n: usize) -> MultiPoly {
    (MultiPoly::one() - q_pow(1)).pow(n as u32)
}

/// `C(n,j)C(n,j+k) − C(n,j−1)C(n,j+k+1)`.
fn ballot(n: usize, j: i64, k: i64) -> BigInt {
    c(n, j) * c(n, j + k) - c(n, j - 1) * c(n, j + k + 1)
}

/// `P_j = Σ_{ℓ=0}^{2j} y^ℓ q^{ℓ(2j−ℓ+1)/2}`.
fn p_j(j: u32) -> MultiPoly {
    (0..=2 * j).map(|l| ym(l, l * (2 * j - l + 1) / 2)).sum()
}

/// `Σ_{j=0}^{k} y^{k−j} (−1)^j P_j`.
fn c_k(k: u32) -> MultiPoly {
    (0..=k)
        .map(|j| {
            let s = if j % 2 == 0 { 1 } else { -1 };
            ym(k - j, 0) * p_j(j) * MultiPoly::constant(s)
        })
        .sum()
}

/// Which of the two equivalent formulas for `B_n(y,1,q)` to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// Single sum over `j` after telescoping.
    Telescoped,
    /// Double sum over `k` and `j`, the form given by the lemmas.
    Lemma,
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(ClosedForm::Telescoped),
            "2" => Ok(ClosedForm::Lemma),
            other => parse_err(0, format!("unknown form {other:?}, expected 1 or 2")),
        }
    }
}

/// `B_n(y,1,q)`: the numerator is built as a polynomial and divided exactly
/// by `(1−q)^n`.
pub fn closed_form_y1q(n: usize, form: ClosedForm) -> Result<MultiPoly> {
    let num: MultiPoly = match form {
        ClosedForm::Telescoped => (0..=n)
            .map(|j| {
                let inner: MultiPoly = (0..=2 * (n - j))
                    .map(|i| {
                        let coef = c(n, (j + i.div_ceil(2)) as i64) * c(n, (i / 2) as i64);
                        MultiPoly::term(coef, Monomial::new(i as u32, 0, 0))
                    })
                    .sum();
                let s = if j % 2 == 0 { 1 } else { -1 };
                inner * p_j(j as u32) * MultiPoly::constant(s)
            })
            .sum(),
        ClosedForm::Lemma => (0..=n)
            .map(|k| {
                let inner: MultiPoly = (0..=n - k)
                    .map(|i| {
                        MultiPoly::term(ballot(n, i as i64, k as i64), Monomial::new(2 * i as u32, 0, 0))
                    })
                    .sum();
                inner * c_k(k as u32)
            })
            .sum(),
    };
    num.divide_exact(&one_minus_q_pow(n))
}

/// `B_n(y,0,q)`. The formula is written in a variable standing for `y²`
/// (only even powers of `y` occur at `t = 0`), so the result is stretched.
pub fn closed_form_y0q(n: usize) -> Result<MultiPoly> {
    let num: MultiPoly = (0..=n)
        .map(|k| {
            let inner: MultiPoly = (0..=n - k)
                .map(|j| MultiPoly::term(ballot(n, j as i64, k as i64), Monomial::new(j as u32, 0, 0)))
                .sum();
            let s = if k % 2 == 0 { 1 } else { -1 };
            let outer: MultiPoly = (0..=k as u32).map(|i| ym(i, i * (k as u32 + 1 - i))).sum();
            inner * outer * MultiPoly::constant(s)
        })
        .sum();
    Ok(num.divide_exact(&one_minus_q_pow(n))?.stretch(Var::Y, 2))
}

/// `Σ_{k=1}^{2n} y^k C(n−1, ⌈k/2⌉−1)`, the value of `B_n(y,1,−1)` for `n ≥ 1`.
pub fn binomial_q_minus_one(n: usize) -> MultiPoly {
    (1..=2 * n)
        .map(|k| {
            let coef = binom(n as i64 - 1, k.div_ceil(2) as i64 - 1);
            MultiPoly::term(coef, Monomial::new(k as u32, 0, 0))
        })
        .sum()
}

/// Checks `B_n(y,1,−1)` against [`binomial_q_minus_one`] and
/// `E^B_{n,k}(−1) = C(n,k)` for the given `B_n`.
pub fn q_minus_one_check(n: usize, b_n: &MultiPoly) -> CheckOutcome {
    let at = b_n.subst(&[(Var::T, 1), (Var::Q, -1)]);
    compare(format!("B_{n}(y,1,-1)"), &binomial_q_minus_one(n), &at)?;
    for k in 0..=n {
        let e = crate::genfun::eulerian_b_poly_from_b(b_n, k).subst(&[(Var::Q, -1)]);
        compare(format!("E^B_{{{n},{k}}}(-1)"), &MultiPoly::term(c(n, k as i64), Monomial::ONE), &e)?;
    }
    Ok(n + 2)
}

/// `Σ_{i=1}^{2n} y^i C(n,⌊i/2⌋) C(n−1,⌈i/2⌉−1)`, the value of `B_n(y,1,0)`.
pub fn narayana_b(n: usize) -> MultiPoly {
    (1..=2 * n)
        .map(|i| {
            let coef = c(n, (i / 2) as i64) * binom(n as i64 - 1, i.div_ceil(2) as i64 - 1);
            MultiPoly::term(coef, Monomial::new(i as u32, 0, 0))
        })
        .sum()
}

/// Checks `B_n(y,1,0)` and `E^B_{n,k}(0) = C(n,k)²` against the
/// enumerated `B_n`.
pub fn narayana_b_check(n: usize) -> Result<CheckOutcome> {
    let b = crate::genfun::b_poly_perms(n)?;
    Ok(narayana_b_check_against(n, &b))
}

pub fn narayana_b_check_against(n: usize, b_n: &MultiPoly) -> CheckOutcome {
    let at = b_n.subst(&[(Var::T, 1), (Var::Q, 0)]);
    compare(format!("B_{n}(y,1,0)"), &narayana_b(n), &at)?;
    for k in 0..=n {
        let e = crate::genfun::eulerian_b_poly_from_b(b_n, k).subst(&[(Var::Q, 0)]);
        let sq = c(n, k as i64).pow(2);
        compare(format!("E^B_{{{n},{k}}}(0)"), &MultiPoly::term(sq, Monomial::ONE), &e)?;
    }
    Ok(n + 2)
}

/// `d_0 = 0`, `d_{2h} = y(1−q^h)²`, `d_{2h+1} = (1+yq^{h+1})(y+q^h)`.
fn d_coeff(k: usize) -> MultiPoly {
    let h = (k / 2) as u32;
    if k == 0 {
        MultiPoly::zero()
    } else if k % 2 == 0 {
        MultiPoly::y() * (MultiPoly::one() - q_pow(h)).pow(2)
    } else {
        (MultiPoly::one() + ym(1, h + 1)) * (MultiPoly::y() + q_pow(h))
    }
}

/// `(1−q)γ_h` and `(1−q)²λ_h` at `t = 1`, written out directly.
fn scaled_coeffs(h: usize) -> (MultiPoly, MultiPoly) {
    let k = h as u32;
    let one = MultiPoly::one();
    let gamma = ym(2, 0) * (&one - &q_pow(k + 1))
        + (&one - &q_pow(k))
        + ym(1, k) * (MultiPoly::constant(2) - q_pow(k + 1) - q_pow(k));
    let lambda = if h == 0 {
        MultiPoly::zero()
    } else {
        MultiPoly::y()
            * (&one - &q_pow(k)).pow(2)
            * (MultiPoly::y() + q_pow(k - 1))
            * (&one + &ym(1, k))
    };
    (gamma, lambda)
}

fn compare_series(what: &str, a: &Series, b: &Series, order: usize) -> std::result::Result<(), Mismatch> {
    for n in 0..=order {
        compare(format!("{what}, coefficient of z^{n}"), a.coeff(n), b.coeff(n))?;
    }
    Ok(())
}

/// The continued-fraction lemmas at `t = 1`, to the given series order:
/// the scaled coefficients against the J-fraction coefficients, the
/// relations `λ_h = d_{2h−1}d_{2h}` and `γ_h = (1+y)² − d_{2h} − d_{2h+1}`,
/// the J-fraction over `(1+z)(1+y²z)` against the S-fraction, the S-fraction
/// against `Σ (−z)^j P_j`, and the resulting coefficients `c_k`.
pub fn schroeder_lemma_check(order: usize) -> CheckOutcome {
    let mut checked = 0;
    let one_minus_q = MultiPoly::one() - q_pow(1);
    let y_plus_one_sq = (MultiPoly::one() + MultiPoly::y()).pow(2);
    let depth = jfraction_depth(order) + 1;
    for h in 0..=depth {
        let (g, l) = scaled_coeffs(h);
        let (g1, l1) = cf_coeffs(h);
        let (g1, l1) = (g1.subst(&[(Var::T, 1)]), l1.subst(&[(Var::T, 1)]));
        compare(format!("scaled gamma_{h}"), &(&one_minus_q * &g1), &g)?;
        compare(format!("scaled lambda_{h}"), &(one_minus_q.pow(2) * l1), &l)?;
        compare(
            format!("gamma_{h} from d"),
            &(&y_plus_one_sq - &d_coeff(2 * h) - d_coeff(2 * h + 1)),
            &g,
        )?;
        if h > 0 {
            compare(format!("lambda_{h} from d"), &(d_coeff(2 * h - 1) * d_coeff(2 * h)), &l)?;
        }
        checked += 1;
    }

    let base = Series::from_poly(
        &[MultiPoly::one(), MultiPoly::one() + ym(2, 0), ym(2, 0)],
        order,
    );
    let one_minus_yz = Series::from_poly(&[MultiPoly::one(), -MultiPoly::y()], order);
    let jfrac = jfraction_over(&base, |h| scaled_coeffs(h).0, |h| scaled_coeffs(h).1, order, depth);
    let sfrac = sfraction_over(&one_minus_yz, d_coeff, order, order + 2);
    let lhs = &one_minus_yz * &jfrac;
    compare_series("J-fraction times (1 - yz) vs S-fraction", &sfrac, &lhs, order)?;

    let alternating: Vec<MultiPoly> = (0..=order as u32)
        .map(|j| p_j(j) * MultiPoly::constant(if j % 2 == 0 { 1 } else { -1 }))
        .collect();
    let alternating = Series::new(alternating, order);
    compare_series("S-fraction vs sum of (-z)^j P_j", &alternating, &sfrac, order)?;

    let cs = Series::new((0..=order as u32).map(c_k).collect(), order);
    compare_series("J-fraction vs c_k", &cs, &jfrac, order)?;
    Ok(checked + 3 * (order + 1))
}

/// Coefficients of `C(z)^{k+1}`, `C` the compositional inverse of
/// `z/((1+z)(1+y²z))`, against the closed ballot-type sums.
pub fn lagrange_check(k: usize, order: usize) -> Result<CheckOutcome> {
    let den = Series::from_poly(
        &[MultiPoly::one(), MultiPoly::one() + ym(2, 0), ym(2, 0)],
        order,
    );
    let f = &Series::z(order) * &den.inverse()?;
    let cz = f.reversion()?;
    let power = cz.pow(k as u32 + 1);
    let mut checked = 0;
    for m in 1..=order {
        let n = m - 1;
        let expected: MultiPoly = (0..=n.saturating_sub(k))
            .filter(|_| n >= k)
            .map(|j| MultiPoly::term(ballot(n, j as i64, k as i64), Monomial::new(2 * j as u32, 0, 0)))
            .sum();
        if let Err(e) = compare(format!("[z^{m}] C(z)^{}", k + 1), &expected, power.coeff(m)) {
            return Ok(Err(e));
        }
        checked += 1;
    }
    Ok(Ok(checked))
}

/// Both closed forms against the recurrence at `t = 1`, and the `t = 0`
/// formula, for `n ≤ max_n`.
pub fn closed_forms_check(max_n: usize) -> Result<CheckOutcome> {
    for n in 0..=max_n {
        let b = recurrence_bn(n);
        let b1 = b.subst(&[(Var::T, 1)]);
        let b0 = b.subst(&[(Var::T, 0)]);
        for form in [ClosedForm::Telescoped, ClosedForm::Lemma] {
            if let Err(e) = compare(format!("B_{n}(y,1,q) by {form:?}"), &b1, &closed_form_y1q(n, form)?) {
                return Ok(Err(e));
            }
        }
        if let Err(e) = compare(format!("B_{n}(y,0,q)"), &b0, &closed_form_y0q(n)?) {
            return Ok(Err(e));
        }
    }
    Ok(Ok(3 * (max_n + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ansatz::recurrence_all;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn closed_forms_small() {
        assert_eq!(closed_form_y1q(1, ClosedForm::Telescoped).unwrap(), p("y^2 + y"));
        assert_eq!(closed_form_y1q(1, ClosedForm::Lemma).unwrap(), p("y^2 + y"));
        assert_eq!(
            closed_form_y1q(2, ClosedForm::Telescoped).unwrap(),
            p("y^4 + 2*y^3 + y^3*q + y^2*q + 2*y^2 + y")
        );
        assert_eq!(closed_form_y0q(1).unwrap(), p("y^2"));
        assert_eq!(closed_form_y0q(0).unwrap(), p("1"));
        assert_eq!(closed_forms_check(7).unwrap(), Ok(24));
    }

    #[test]
    fn q_specialisations() {
        let r = recurrence_all(7);
        for n in 1..=7 {
            assert!(q_minus_one_check(n, &r[n]).is_ok(), "n = {n}");
            assert!(narayana_b_check_against(n, &r[n]).is_ok(), "n = {n}");
        }
        assert_eq!(narayana_b(2), p("y^4 + 2*y^3 + 2*y^2 + y"));
    }

    #[test]
    fn lemmas() {
        assert!(schroeder_lemma_check(0).is_ok());
        assert!(schroeder_lemma_check(8).is_ok(), "{:?}", schroeder_lemma_check(8));
        for k in 0..=4 {
            assert!(lagrange_check(k, 10).unwrap().is_ok(), "k = {k}");
        }
        let den = Series::from_poly(&[p("1"), p("1 + y^2"), p("y^2")], 3);
        let c = (&Series::z(3) * &den.inverse().unwrap()).reversion().unwrap();
        assert_eq!(c.coeff(1), &p("1"));
        assert_eq!(c.coeff(2), &p("1 + y^2"));
    }
}

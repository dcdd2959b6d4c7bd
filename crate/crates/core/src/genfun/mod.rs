//! Generating polynomials over `B_n` by statistics.
//!
//! Sums are accumulated in parallel as monomial counts and reduced exactly,
//! so the result does not depend on scheduling.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::json;

use crate::error::Result;
use crate::exactalg::{Monomial, MultiPoly, Var};
use crate::signedperm::{
    crossings, enumerate_bn_with_limit, pattern_stats, stats, SignedPermutation, DEFAULT_LIMIT,
};

type Counts = BTreeMap<Monomial, u64>;

fn merge(mut a: Counts, b: Counts) -> Counts {
    for (m, c) in b {
        *a.entry(m).or_insert(0) += c;
    }
    a
}

/// `Σ_{π ∈ B_n} f(π)` for a monomial-valued `f`.
pub fn sum_over_bn<F>(n: usize, limit: usize, f: F) -> Result<MultiPoly>
where
    F: Fn(&SignedPermutation) -> Monomial + Sync + Send,
{
    sum_over_bn_where(n, limit, |p| Some(f(p)))
}

/// Like [`sum_over_bn`], skipping the permutations where `f` gives `None`.
pub fn sum_over_bn_where<F>(n: usize, limit: usize, f: F) -> Result<MultiPoly>
where
    F: Fn(&SignedPermutation) -> Option<Monomial> + Sync + Send,
{
    let counts = crate::par::fold_chunks(
        enumerate_bn_with_limit(n, limit)?,
        Counts::new,
        |mut acc, p| {
            if let Some(m) = f(p) {
                *acc.entry(m).or_insert(0) += 1;
            }
            acc
        },
        merge,
    );
    Ok(MultiPoly::from_counts(counts))
}

fn mono(y: usize, t: usize, q: usize) -> Monomial {
    Monomial::new(y as u32, t as u32, q as u32)
}

/// `Σ_{π ∈ B_n} y^{fwex} t^{neg} q^{cro}`.
pub fn b_poly_perms(n: usize) -> Result<MultiPoly> {
    b_poly_perms_with_limit(n, DEFAULT_LIMIT)
}

pub fn b_poly_perms_with_limit(n: usize, limit: usize) -> Result<MultiPoly> {
    sum_over_bn(n, limit, |p| {
        let s = stats(p);
        mono(s.fwex, s.neg, crossings(p))
    })
}

/// `Σ_{π ∈ B_n} y^{hasc} t^{neg} q^{pat}`.
pub fn b_poly_by_hasc(n: usize) -> Result<MultiPoly> {
    sum_over_bn(n, DEFAULT_LIMIT, |p| {
        let s = pattern_stats(p);
        mono(s.hasc, p.neg_count(), s.pat)
    })
}

/// `Σ_{π ∈ B_n} y^{2n−fdes} t^{fneg} q^{mot⁺}`.
///
/// `2n − fdes(π) = fdes(−π) + 1`. With `y^{fdes(π)+1}` in place of this
/// exponent the sum is already wrong at `n = 1` (see
/// [`b_poly_by_fdes_plus_one`]); the exponent used here is the one carried by
/// the path of the second Françon–Viennot variant, whose worked example
/// `3,−5,−2,4,1` has weight `y^6 t^2 q^4`.
pub fn b_poly_by_fdes(n: usize) -> Result<MultiPoly> {
    sum_over_bn(n, DEFAULT_LIMIT, |p| {
        let s = pattern_stats(p);
        mono(2 * n - stats(p).fdes, s.fneg, s.mot_plus)
    })
}

/// `Σ_{π ∈ B_n} y^{fdes+1} t^{fneg} q^{mot⁺}`, kept to document that it
/// differs from `B_n`.
pub fn b_poly_by_fdes_plus_one(n: usize) -> Result<MultiPoly> {
    sum_over_bn(n, DEFAULT_LIMIT, |p| {
        let s = pattern_stats(p);
        mono(stats(p).fdes + 1, s.fneg, s.mot_plus)
    })
}

/// `B_{n,k}(t,q) = [y^k] B_n(y,t,q)`.
pub fn b_nk(n: usize, k: usize) -> Result<MultiPoly> {
    Ok(b_poly_perms(n)?.coeff_extract(Var::Y, k as u32))
}

fn chi_first_positive(p: &SignedPermutation) -> usize {
    usize::from(!p.is_empty() && p.at(1) > 0)
}

/// `Σ_{fwex(π)=k} t^{neg+χ(π_1>0)} q^{cro}`; zero outside `1 ≤ k ≤ 2n`.
pub fn b_star(n: usize, k: usize) -> Result<MultiPoly> {
    if k < 1 || k > 2 * n {
        crate::signedperm::check_limit(n, DEFAULT_LIMIT)?;
        return Ok(MultiPoly::zero());
    }
    let all = sum_over_bn(n, DEFAULT_LIMIT, |p| {
        let s = stats(p);
        mono(s.fwex, s.neg + chi_first_positive(p), crossings(p))
    })?;
    Ok(all.coeff_extract(Var::Y, k as u32))
}

fn b_signed_part(n: usize, k: usize, positive: bool) -> Result<MultiPoly> {
    let all = sum_over_bn_where(n, DEFAULT_LIMIT, |p| {
        if p.is_empty() || (p.at(1) > 0) != positive {
            return None;
        }
        let s = stats(p);
        Some(mono(s.fwex, s.neg, crossings(p)))
    })?;
    Ok(all.coeff_extract(Var::Y, k as u32))
}

/// `Σ_{π_1>0, fwex(π)=k} t^{neg} q^{cro}`.
pub fn b_plus(n: usize, k: usize) -> Result<MultiPoly> {
    b_signed_part(n, k, true)
}

/// `Σ_{π_1<0, fwex(π)=k} t^{neg} q^{cro}`.
pub fn b_minus(n: usize, k: usize) -> Result<MultiPoly> {
    b_signed_part(n, k, false)
}

/// `E^B_{n,k}(q) = Σ_{⌊fwex/2⌋=k} q^{cro}`, by direct enumeration.
pub fn eulerian_b_poly(n: usize, k: usize) -> Result<MultiPoly> {
    let all = sum_over_bn(n, DEFAULT_LIMIT, |p| mono(stats(p).fwex / 2, 0, crossings(p)))?;
    Ok(all.coeff_extract(Var::Y, k as u32))
}

/// `E^B_{n,k}(q) = B_{n,2k}(1,q) + B_{n,2k+1}(1,q)`.
pub fn eulerian_b_poly_from_b(b_n: &MultiPoly, k: usize) -> MultiPoly {
    let at_t1 = b_n.subst(&[(Var::T, 1)]);
    at_t1.coeff_extract(Var::Y, 2 * k as u32) + at_t1.coeff_extract(Var::Y, 2 * k as u32 + 1)
}

/// `E^B_{n,k}(q)` from type B tableaux with `row + ⌊diag/2⌋ = k`.
pub fn eulerian_b_poly_tableaux(n: usize, k: usize) -> Result<MultiPoly> {
    let mut counts = Counts::new();
    for t in crate::tableaux::enumerate_ptb(n)? {
        let s = t.stats()?;
        if s.row + s.diag / 2 == k {
            *counts.entry(mono(0, 0, s.so)).or_insert(0) += 1;
        }
    }
    Ok(MultiPoly::from_counts(counts))
}

/// `#{π ∈ B_n : des_B(π) = k}`.
pub fn eulerian_b_count(n: usize, k: usize) -> Result<BigInt> {
    let all = sum_over_bn(n, DEFAULT_LIMIT, |p| mono(stats(p).des_b, 0, 0))?;
    Ok(all.coeff(&mono(k, 0, 0)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// `B_{n,k}(t,q)`
    Plain,
    /// `B*_{n,k}(t,q)`
    Star,
    /// `E^B_{n,k}(q)`
    EulerianB,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Plain => "plain",
            Variant::Star => "star",
            Variant::EulerianB => "eulerian-b",
        }
    }
}

/// All coefficient polynomials of one `n`, computed in a single pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenTable {
    pub n: usize,
    pub entries: BTreeMap<(Variant, usize), MultiPoly>,
}

impl GenTable {
    pub fn build(n: usize) -> Result<GenTable> {
        GenTable::build_with_limit(n, DEFAULT_LIMIT)
    }

    pub fn build_with_limit(n: usize, limit: usize) -> Result<GenTable> {
        let (plain, star, eul) = crate::par::fold_chunks(
            enumerate_bn_with_limit(n, limit)?,
            || (Counts::new(), Counts::new(), Counts::new()),
            |mut acc, p| {
                let s = stats(p);
                let c = crossings(p);
                *acc.0.entry(mono(s.fwex, s.neg, c)).or_insert(0) += 1;
                let star = mono(s.fwex, s.neg + chi_first_positive(p), c);
                *acc.1.entry(star).or_insert(0) += 1;
                *acc.2.entry(mono(s.fwex / 2, 0, c)).or_insert(0) += 1;
                acc
            },
            |a, b| (merge(a.0, b.0), merge(a.1, b.1), merge(a.2, b.2)),
        );
        let (plain, star, eul) = (
            MultiPoly::from_counts(plain),
            MultiPoly::from_counts(star),
            MultiPoly::from_counts(eul),
        );
        let mut entries = BTreeMap::new();
        for k in 0..=2 * n {
            let p = plain.coeff_extract(Var::Y, k as u32);
            if !p.is_zero() {
                entries.insert((Variant::Plain, k), p);
            }
            if k >= 1 {
                entries.insert((Variant::Star, k), star.coeff_extract(Var::Y, k as u32));
            }
        }
        for k in 0..=n {
            entries.insert((Variant::EulerianB, k), eul.coeff_extract(Var::Y, k as u32));
        }
        Ok(GenTable { n, entries })
    }

    pub fn get(&self, v: Variant, k: usize) -> MultiPoly {
        self.entries.get(&(v, k)).cloned().unwrap_or_else(MultiPoly::zero)
    }

    /// `Σ_k y^k B_{n,k}(t,q)`.
    pub fn b_poly(&self) -> MultiPoly {
        self.entries
            .iter()
            .filter(|((v, _), _)| *v == Variant::Plain)
            .map(|(&(_, k), p)| p.mul_monomial(mono(k, 0, 0)))
            .sum()
    }

    /// Rows `(k, polynomial)` of one variant in increasing `k`.
    pub fn rows(&self, v: Variant) -> Vec<(usize, &MultiPoly)> {
        self.entries
            .iter()
            .filter(|((w, _), _)| *w == v)
            .map(|(&(_, k), p)| (k, p))
            .collect()
    }

    /// CSV lines `n,k,polynomial` without a header.
    pub fn to_csv(&self, v: Variant) -> String {
        rows_to_csv(self.n, &self.rows(v))
    }

    pub fn to_json(&self, v: Variant) -> serde_json::Value {
        rows_to_json(self.n, &self.rows(v))
    }
}

/// Rows `(k, E_{n,k}(q))` of the type A q-Eulerian polynomials, from
/// permutation tableaux with `k` rows; the single row `k = 0` when `n = 0`.
pub fn eulerian_a_rows(n: usize) -> Result<Vec<(usize, MultiPoly)>> {
    if n == 0 {
        return Ok(vec![(0, MultiPoly::one())]);
    }
    (1..=n)
        .map(|k| Ok((k, crate::tableaux::e_poly_type_a(n, k)?)))
        .collect()
}

pub fn rows_to_csv<P: std::borrow::Borrow<MultiPoly>>(n: usize, rows: &[(usize, P)]) -> String {
    rows.iter()
        .map(|(k, p)| format!("{n},{k},{}\n", p.borrow().to_compact_string()))
        .collect()
}

pub fn rows_to_json<P: std::borrow::Borrow<MultiPoly>>(n: usize, rows: &[(usize, P)]) -> serde_json::Value {
    serde_json::Value::Array(
        rows.iter()
            .map(|(k, p)| {
                let p = p.borrow();
                json!({
                    "n": n,
                    "k": k,
                    "polynomial": p.to_string(),
                    "terms": p.to_json(),
                })
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(b_poly_perms(0).unwrap(), MultiPoly::one());
        assert_eq!(b_poly_perms(1).unwrap(), poly("y^2 + y*t"));
        assert_eq!(
            b_poly_perms(2).unwrap(),
            poly("y^4 + 2*y^3*t + y^3*t*q + y^2*t^2*q + y^2*t^2 + y^2 + y*t")
        );
        assert_eq!(b_nk(1, 1).unwrap(), poly("t"));
        assert_eq!(b_nk(1, 2).unwrap(), MultiPoly::one());
        assert_eq!(b_star(1, 1).unwrap(), poly("t"));
        assert_eq!(b_star(1, 2).unwrap(), poly("t"));
        assert_eq!(b_star(1, 3).unwrap(), MultiPoly::zero());
        assert_eq!(b_plus(1, 2).unwrap(), MultiPoly::one());
        assert_eq!(b_minus(1, 1).unwrap(), poly("t"));
    }

    #[test]
    fn eulerian_b() {
        let e = eulerian_b_poly(2, 1).unwrap();
        assert_eq!(e, poly("4 + 2*q"));
        assert_eq!(e.to_compact_string(), "4+2*q");
        assert_eq!(eulerian_b_poly_from_b(&b_poly_perms(2).unwrap(), 1), e);
        assert_eq!(eulerian_b_poly_tableaux(2, 1).unwrap(), e);
        let counts: Vec<BigInt> = (0..=2).map(|k| eulerian_b_count(2, k).unwrap()).collect();
        assert_eq!(counts, vec![1.into(), 6.into(), 1.into()]);
    }

    #[test]
    fn pattern_interpretations() {
        for n in 1..=4 {
            let b = b_poly_perms(n).unwrap();
            assert_eq!(b_poly_by_hasc(n).unwrap(), b, "n = {n}");
            assert_eq!(b_poly_by_fdes(n).unwrap(), b, "n = {n}");
        }
        assert_eq!(b_poly_by_fdes_plus_one(1).unwrap(), poly("y + y^2*t"));
        let p: SignedPermutation = "3,-5,-2,4,1".parse().unwrap();
        let s = pattern_stats(&p);
        assert_eq!((10 - stats(&p).fdes, s.fneg, s.mot_plus), (6, 2, 4));
    }

    #[test]
    fn table() {
        let t = GenTable::build(2).unwrap();
        assert_eq!(t.b_poly(), b_poly_perms(2).unwrap());
        assert_eq!(t.get(Variant::EulerianB, 1), poly("4 + 2*q"));
        assert!(t.to_csv(Variant::EulerianB).contains("2,1,4+2*q\n"));
        for k in 1..=4 {
            assert_eq!(t.get(Variant::Star, k), t.get(Variant::Star, 5 - k));
        }
        let js = t.to_json(Variant::Plain);
        assert_eq!(js[0]["n"], 2);
    }
}

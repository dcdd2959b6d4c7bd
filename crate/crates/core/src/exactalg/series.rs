use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use super::poly::MultiPoly;
use crate::error::{Error, Result};

/// Power series in z over ℤ[y,t,q], truncated after `z^order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<MultiPoly>,
}

impl Series {
    pub fn new(mut coeffs: Vec<MultiPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, MultiPoly::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::constant(MultiPoly::one(), order)
    }

    pub fn constant(c: MultiPoly, order: usize) -> Self {
        Series::new(vec![c], order)
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Series::monomial(MultiPoly::one(), 1, order)
    }

    /// `c * z^k`
    pub fn monomial(c: MultiPoly, k: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Polynomial in z given by its coefficient list.
    pub fn from_poly(coeffs: &[MultiPoly], order: usize) -> Self {
        Series::new(coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &MultiPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series::new(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &MultiPoly) -> Series {
        self.map(|a| a * c)
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Series {
        let order = self.order();
        let mut coeffs = vec![MultiPoly::zero(); k.min(order + 1)];
        coeffs.extend(self.coeffs.iter().take(order + 1 - coeffs.len()).cloned());
        Series::new(coeffs, order)
    }

    /// Multiplicative inverse; the constant term must be 1 or -1.
    pub fn inverse(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        let sign = if *c0 == MultiPoly::one() {
            BigInt::one()
        } else if *c0 == MultiPoly::constant(-1) {
            -BigInt::one()
        } else {
            return Err(Error::NonUnitConstant);
        };
        let order = self.order();
        let mut b: Vec<MultiPoly> = Vec::with_capacity(order + 1);
        b.push(c0.clone());
        for k in 1..=order {
            let mut acc = MultiPoly::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() && !b[k - i].is_zero() {
                    acc += &self.coeffs[i] * &b[k - i];
                }
            }
            b.push(acc.scale(&-&sign));
        }
        Ok(Series { coeffs: b })
    }

    pub fn pow(&self, e: u32) -> Series {
        let mut r = Series::one(self.order());
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// `self(inner(z))`; `inner` must have zero constant term. The result
    /// has order `min(self.order, inner.order)`.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::BadLowestTerms);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Series::zero(order);
        for c in self.coeffs.iter().take(order + 1).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse `C` with `self(C(z)) = z`.
    pub fn reversion(&self) -> Result<Series> {
        let order = self.order();
        if order < 1 || !self.coeffs[0].is_zero() || self.coeffs[1] != MultiPoly::one() {
            return Err(Error::BadLowestTerms);
        }
        // C = z * g(C) with g = z / f(z)
        let f_over_z = Series::new(self.coeffs[1..].to_vec(), order - 1);
        let g = f_over_z.inverse()?;
        let mut c = Series::z(order);
        for _ in 0..order {
            let gc = g.compose(&c)?;
            c = Series::new(gc.coeffs, order).shift(1);
        }
        Ok(c)
    }
}

fn combine(a: &Series, b: &Series, f: impl Fn(&MultiPoly, &MultiPoly) -> MultiPoly) -> Series {
    let order = a.order().min(b.order());
    Series {
        coeffs: (0..=order).map(|k| f(&a.coeffs[k], &b.coeffs[k])).collect(),
    }
}

impl Add<&Series> for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        combine(self, rhs, |a, b| a + b)
    }
}

impl Sub<&Series> for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        combine(self, rhs, |a, b| a - b)
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        self.map(|a| -a)
    }
}

impl Mul<&Series> for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![MultiPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series { coeffs }
    }
}

/// Default number of continued-fraction levels for a J-fraction of the given order.
pub fn jfraction_depth(order: usize) -> usize {
    order.div_ceil(2) + 1
}

/// Expands `1/(1 - γ_0 z - λ_1 z²/(1 - γ_1 z - λ_2 z²/(...)))` to `z^order`.
pub fn series_jfraction(
    gammas: impl Fn(usize) -> MultiPoly,
    lambdas: impl Fn(usize) -> MultiPoly,
    order: usize,
) -> Series {
    jfraction_over(&Series::one(order), gammas, lambdas, order, jfraction_depth(order))
}

/// J-fraction with an arbitrary base denominator `b(z)` at every level:
/// `F_h = 1/(b - γ_h z - λ_{h+1} z² F_{h+1})`, truncated after `depth` levels.
/// Returns `F_0`.
pub fn jfraction_over(
    base: &Series,
    gammas: impl Fn(usize) -> MultiPoly,
    lambdas: impl Fn(usize) -> MultiPoly,
    order: usize,
    depth: usize,
) -> Series {
    let base = base.truncate(order);
    let z = Series::z(order);
    let mut tail: Option<Series> = None;
    for h in (0..depth.max(1)).rev() {
        let mut den = &base - &z.scale(&gammas(h));
        if let Some(f) = &tail {
            den = &den - &f.shift(2).scale(&lambdas(h + 1));
        }
        tail = Some(den.inverse().expect("level denominators have constant term 1"));
    }
    tail.expect("at least one level")
}

/// S-fraction `T_0` with `T_h = 1/(b + d_{h+1} z T_{h+1})`, truncated after
/// `depth` levels.
pub fn sfraction_over(
    base: &Series,
    ds: impl Fn(usize) -> MultiPoly,
    order: usize,
    depth: usize,
) -> Series {
    let base = base.truncate(order);
    let mut tail: Option<Series> = None;
    for h in (0..depth.max(1)).rev() {
        let mut den = base.clone();
        if let Some(f) = &tail {
            den = &den + &f.shift(1).scale(&ds(h + 1));
        }
        tail = Some(den.inverse().expect("level denominators have constant term 1"));
    }
    tail.expect("at least one level")
}

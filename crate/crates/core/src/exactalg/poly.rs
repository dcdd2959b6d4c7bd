use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};

/// One of the three polynomial variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Y,
    T,
    Q,
}

impl Var {
    pub fn name(self) -> char {
        match self {
            Var::Y => 'y',
            Var::T => 't',
            Var::Q => 'q',
        }
    }
}

/// Exponent triple `y^y t^t q^q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    pub y: u32,
    pub t: u32,
    pub q: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { y: 0, t: 0, q: 0 };

    pub const fn new(y: u32, t: u32, q: u32) -> Self {
        Monomial { y, t, q }
    }

    pub fn exp(&self, v: Var) -> u32 {
        match v {
            Var::Y => self.y,
            Var::T => self.t,
            Var::Q => self.q,
        }
    }

    fn set(mut self, v: Var, e: u32) -> Self {
        match v {
            Var::Y => self.y = e,
            Var::T => self.t = e,
            Var::Q => self.q = e,
        }
        self
    }

    pub fn mul(self, o: Monomial) -> Monomial {
        Monomial::new(self.y + o.y, self.t + o.t, self.q + o.q)
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.y <= o.y && self.t <= o.t && self.q <= o.q
    }

    pub fn degree(&self) -> u32 {
        self.y + self.t + self.q
    }

    /// Printing order: y descending, then t descending, then q ascending.
    pub fn display_cmp(&self, o: &Monomial) -> Ordering {
        o.y.cmp(&self.y)
            .then(o.t.cmp(&self.t))
            .then(self.q.cmp(&o.q))
    }
}

/// Sparse polynomial in ℤ[y, t, q] with arbitrary-precision coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        Self::term(1, Monomial::ONE.set(v, 1))
    }

    pub fn y() -> Self {
        Self::var(Var::Y)
    }

    pub fn t() -> Self {
        Self::var(Var::T)
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(m, c.into());
        p
    }

    /// `c * y^a t^b q^e`
    pub fn mono(c: i64, a: u32, b: u32, e: u32) -> Self {
        Self::term(c, Monomial::new(a, b, e))
    }

    /// Builds a polynomial from monomial multiplicities, the common output of
    /// brute-force enumeration.
    pub fn from_counts<I: IntoIterator<Item = (Monomial, u64)>>(counts: I) -> Self {
        let mut acc: HashMap<Monomial, u64> = HashMap::new();
        for (m, c) in counts {
            *acc.entry(m).or_insert(0) += c;
        }
        let mut p = MultiPoly::zero();
        for (m, c) in acc {
            p.add_term(m, BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in storage order (lexicographic on (y, t, q) ascending).
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in canonical printing order.
    pub fn canonical_terms(&self) -> Vec<(Monomial, BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| a.0.display_cmp(&b.0));
        v
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> MultiPoly {
        self.scale(&BigInt::from(c))
    }

    pub fn mul_monomial(&self, m: Monomial) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_extract(&self, v: Var, k: u32) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(v) == k {
                p.add_term(m.set(v, 0), c.clone());
            }
        }
        p
    }

    /// Substitutes exact integers for some of the variables.
    pub fn subst(&self, assignments: &[(Var, i64)]) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut m2 = *m;
            let mut c2 = c.clone();
            for &(v, val) in assignments {
                let e = m2.exp(v);
                if e > 0 {
                    c2 *= num_traits::pow(BigInt::from(val), e as usize);
                    m2 = m2.set(v, 0);
                }
            }
            p.add_term(m2, c2);
        }
        p
    }

    /// Replaces `v` by `v^k` (e.g. y ↦ y²).
    pub fn stretch(&self, v: Var, k: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.set(v, m.exp(v) * k), c.clone()))
                .collect(),
        }
    }

    /// The q-derivative in t: `t^b ↦ [b]_q t^(b-1)`.
    pub fn q_derivative_t(&self) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (m, c) in &self.terms {
            for i in 0..m.t {
                p.add_term(Monomial::new(m.y, m.t - 1, m.q + i), c.clone());
            }
        }
        p
    }

    /// Exact quotient `self / d` in ℤ[y,t,q].
    pub fn divide_exact(&self, d: &MultiPoly) -> Result<MultiPoly> {
        let (dm, dc) = match d.terms.iter().next_back() {
            Some((m, c)) => (*m, c.clone()),
            None => return Err(Error::NotDivisible),
        };
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((m, c)) = rem.terms.iter().next_back() {
            if !dm.divides(m) {
                return Err(Error::NotDivisible);
            }
            let qc = c / &dc;
            if !(c % &dc).is_zero() {
                return Err(Error::NotDivisible);
            }
            let qm = Monomial::new(m.y - dm.y, m.t - dm.t, m.q - dm.q);
            let step = d.mul_monomial(qm).scale(&qc);
            quot.add_term(qm, qc);
            rem -= &step;
        }
        Ok(quot)
    }

    /// Compact text form without spaces, e.g. `4+2*q`.
    pub fn to_compact_string(&self) -> String {
        self.render(false)
    }

    fn render(&self, spaced: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.canonical_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(match (spaced, neg) {
                    (true, true) => " - ",
                    (true, false) => " + ",
                    (false, true) => "-",
                    (false, false) => "+",
                });
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m == Monomial::ONE {
                factors.push(a.to_string());
            }
            for v in [Var::Y, Var::T, Var::Q] {
                match m.exp(v) {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    e => factors.push(format!("{}^{}", v.name(), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<JsonTerm> = self
            .canonical_terms()
            .into_iter()
            .map(|(m, c)| JsonTerm {
                y: m.y,
                t: m.t,
                q: m.q,
                c: c.to_string(),
            })
            .collect();
        serde_json::to_value(terms).expect("term list serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<MultiPoly> {
        let terms: Vec<JsonTerm> = serde_json::from_value(v.clone()).map_err(|e| Error::Parse {
            pos: 0,
            msg: e.to_string(),
        })?;
        let mut p = MultiPoly::zero();
        for t in terms {
            let c: BigInt = t.c.parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad coefficient {:?}", t.c),
            })?;
            p.add_term(Monomial::new(t.y, t.t, t.q), c);
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    y: u32,
    t: u32,
    q: u32,
    c: String,
}

/// `[n]_q = 1 + q + ... + q^(n-1)`
pub fn q_integer(n: u32) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for i in 0..n {
        p.add_term(Monomial::new(0, 0, i), BigInt::one());
    }
    p
}

/// `q^e` shorthand.
pub fn q_pow(e: u32) -> MultiPoly {
    MultiPoly::mono(1, 0, 0, e)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self)
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PolyParser { s: s.as_bytes(), pos: 0 }.parse()
    }
}

struct PolyParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl PolyParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn parse(mut self) -> Result<MultiPoly> {
        let mut p = MultiPoly::zero();
        self.skip_ws();
        if self.pos == self.s.len() {
            return parse_err(0, "empty polynomial");
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let mut sign = 1;
            match self.peek() {
                Some(b'+') if !first => self.pos += 1,
                Some(b'-') => {
                    sign = -1;
                    self.pos += 1;
                }
                None => break,
                _ if !first => return parse_err(self.pos, "expected '+' or '-'"),
                _ => {}
            }
            first = false;
            self.skip_ws();
            let (m, c) = self.term()?;
            p.add_term(m, c * sign);
        }
        Ok(p)
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut coeff = BigInt::one();
        let mut m = Monomial::ONE;
        let mut expect_factor = true;
        while expect_factor {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let digits = self.number().expect("digit present");
                    coeff *= digits.parse::<BigInt>().expect("decimal digits");
                }
                Some(c @ (b'y' | b't' | b'q')) => {
                    self.pos += 1;
                    let v = match c {
                        b'y' => Var::Y,
                        b't' => Var::T,
                        _ => Var::Q,
                    };
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let at = self.pos;
                        e = match self.number().and_then(|d| d.parse().ok()) {
                            Some(e) => e,
                            None => return parse_err(at, "expected exponent"),
                        };
                    }
                    m = m.set(v, m.exp(v) + e);
                }
                _ => return parse_err(self.pos, "expected coefficient or variable"),
            }
            self.skip_ws();
            expect_factor = self.peek() == Some(b'*');
            if expect_factor {
                self.pos += 1;
            }
        }
        Ok((m, coeff))
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(*mb)).or_default() += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly { terms: acc }
    }
}

impl MulAssign<&MultiPoly> for MultiPoly {
    fn mul_assign(&mut self, rhs: &MultiPoly) {
        *self = &*self * rhs;
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut r = self.clone();
        r += rhs;
        r
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut r = self.clone();
        r -= rhs;
        r
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: MultiPoly) {
        *self += &rhs;
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(c)
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        let mut acc = MultiPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

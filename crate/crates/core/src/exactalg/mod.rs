//! Exact arithmetic: sparse polynomials in ℤ[y,t,q], truncated power series
//! in z over that ring, q-integers and continued fractions.

mod poly;
mod series;

pub use poly::{q_integer, q_pow, Monomial, MultiPoly, Var};
pub use series::{
    jfraction_depth, jfraction_over, series_jfraction, sfraction_over, Series,
};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient, zero when `k < 0`, `n < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(3, 4), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
    }
}

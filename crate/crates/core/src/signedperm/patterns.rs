//! Pattern statistics used by the Motzkin path encodings.

use super::SignedPermutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PatternStats {
    pub hasc: usize,
    pub pat: usize,
    pub fneg: usize,
    pub mot_plus: usize,
}

/// `#{j : 1 ≤ j ≤ i−2, σ_j > σ_i > σ_{j+1}}` (1-based `i`).
pub fn mot(sigma: &[usize], i: usize) -> usize {
    let si = sigma[i - 1];
    (1..i.saturating_sub(1))
        .filter(|&j| sigma[j - 1] > si && si > sigma[j])
        .count()
}

/// `#{j : i < j < m, σ_j > σ_i > σ_{j+1}}` (1-based `i`).
pub fn mott(sigma: &[usize], i: usize) -> usize {
    let m = sigma.len();
    let si = sigma[i - 1];
    (i + 1..m)
        .filter(|&j| sigma[j - 1] > si && si > sigma[j])
        .count()
}

/// `Σ_i mot(σ, i)`.
pub fn unsigned_mot(sigma: &[usize]) -> usize {
    (1..=sigma.len()).map(|i| mot(sigma, i)).sum()
}

/// Number of ascents `σ_i < σ_{i+1}`, `1 ≤ i < m`.
pub fn asc(sigma: &[usize]) -> usize {
    sigma.windows(2).filter(|w| w[0] < w[1]).count()
}

pub fn pattern_stats(p: &SignedPermutation) -> PatternStats {
    let n = p.len();
    let v = p.images();
    let abs = p.abs_images();
    let absx = |i: usize| -> usize {
        // |π_i| with π_0 = 0 and π_{n+1} = n+1
        if i == 0 {
            0
        } else if i == n + 1 {
            n + 1
        } else {
            abs[i - 1]
        }
    };

    let mut hasc = 0;
    for i in 0..n {
        if (absx(i) as i64) < v[i] as i64 {
            hasc += 2;
        }
    }
    hasc += p.neg_count();

    let mut pat = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if absx(i) > absx(j) && absx(j) > absx(i + 1) {
                pat += 1;
            }
        }
        for j in 1..=n {
            let m = -(v[j - 1] as i64);
            if absx(i) as i64 > m && m >= absx(i + 1) as i64 {
                pat += 1;
            }
        }
    }

    let word: Vec<i32> = (1..=n as i32)
        .rev()
        .map(|i| p.apply(-i))
        .chain(v.iter().copied())
        .collect();
    let fneg = word.windows(2).filter(|w| w[0] > 0 && w[1] < 0).count();

    let n32 = n as i32;
    let idx = |x: i32| -> usize {
        if x < 0 {
            (x + n32 + 1) as usize
        } else {
            (x + n32) as usize
        }
    };
    let mut tilde = vec![0usize; 2 * n];
    for x in (1..=n32).rev().map(|i| -i).chain(1..=n32) {
        tilde[idx(x) - 1] = idx(p.apply(x));
    }
    let mot_plus = (1..=2 * n)
        .filter(|&i| tilde[i - 1] > n)
        .map(|i| mot(&tilde, i))
        .sum();

    PatternStats {
        hasc,
        pat,
        fneg,
        mot_plus,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Monomial, MultiPoly};
    use crate::signedperm::enumerate_bn;

    #[test]
    fn examples() {
        let p: SignedPermutation = "3,-5,-2,4,1".parse().unwrap();
        let s = pattern_stats(&p);
        assert_eq!((s.hasc, s.pat), (6, 3));
        let id = pattern_stats(&SignedPermutation::identity(4));
        assert_eq!((id.hasc, id.pat, id.fneg, id.mot_plus), (8, 0, 0, 0));
        assert_eq!(unsigned_mot(&[1, 2, 3, 4]), 0);
        assert_eq!(mot(&[3, 1, 2], 3), 1);
        assert_eq!(unsigned_mot(&[3, 1, 2]), 1);
    }

    #[test]
    fn b2_by_hasc_pat() {
        let b2: MultiPoly = "y^4 + 2*y^3*t + y^3*t*q + y^2*t^2*q + y^2*t^2 + y^2 + y*t"
            .parse()
            .unwrap();
        let sum = MultiPoly::from_counts(enumerate_bn(2).unwrap().map(|p| {
            let s = pattern_stats(&p);
            (Monomial::new(s.hasc as u32, p.neg_count() as u32, s.pat as u32), 1)
        }));
        assert_eq!(sum, b2);
    }
}

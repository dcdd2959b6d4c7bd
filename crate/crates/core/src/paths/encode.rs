//! Encodings of signed permutations as labeled paths.

use super::{LabeledMotzkinPath, MotzkinSuffix, PathStep, SuffixStep};
use crate::signedperm::{mot, mott, SignedPermutation};

/// Reads the graph of `π` bottom to top: the step for value `j = |π_i|` is
/// chosen by comparing `|π_{i−1}|, |π_i|, |π_{i+1}|` (with `π_0 = 0`,
/// `π_{n+1} = n+1`) and the sign of `π_i`; its index is `mot(|π|, i)`.
pub fn fv1(p: &SignedPermutation) -> LabeledMotzkinPath {
    let n = p.len();
    let abs = p.abs_images();
    let ext = |i: usize| match i {
        0 => 0,
        i if i == n + 1 => n + 1,
        i => abs[i - 1],
    };
    let mut by_value = vec![(0u8, 0u32, 0usize); n];
    for i in 1..=n {
        let (a, b, c) = (ext(i - 1), ext(i), ext(i + 1));
        let base = match (a > b, b < c) {
            (true, true) => 1,
            (false, true) => 3,
            (true, false) => 5,
            (false, false) => 7,
        };
        let kind = if p.at(i) > 0 { base } else { base + 1 };
        by_value[b - 1] = (kind, mot(&abs, i) as u32, i);
    }

    let mut steps = Vec::with_capacity(n);
    let mut h: u32 = 0;
    for &(kind, index, i) in &by_value {
        let step = PathStep::new(kind, index);
        let lower = if kind >= 7 { h - 1 } else { h };
        let mut expected = (mot(&abs, i) + mott(&abs, i)) as u32;
        if kind == 5 || kind == 6 {
            expected += 1;
        }
        assert_eq!(lower, expected, "height of step {} in fv1({p})", abs[i - 1]);
        match kind {
            1 | 2 => h += 1,
            7 | 8 => h -= 1,
            _ => {}
        }
        steps.push(step);
    }
    LabeledMotzkinPath::new(steps)
}

/// Scans the arrow diagram of `π` on `[±n]` at nodes `j = 1, …, n`. The
/// arrow out of `j` goes right iff `j ≤ π(j)`; the arrow into `j` comes from
/// the left iff `π^{-1}(j) ≤ j`. The index counts the arrows `a` crossing the
/// one out of `j` from the left (`a < j ≤ π(a) < π(j)`) or from the right
/// (`a > j > π(a) > π(j)`). The start height is `neg(π)`.
pub fn fz1(p: &SignedPermutation) -> MotzkinSuffix {
    let n = p.len() as i32;
    let inv = p.transpose();
    let steps = (1..=n)
        .map(|j| {
            let out = p.apply(j);
            let from = inv.apply(j);
            let out_right = j <= out;
            let in_left = from <= j;
            let index = (-n..=n)
                .filter(|&a| a != 0)
                .filter(|&a| {
                    let pa = p.apply(a);
                    (a < j && j <= pa && pa < out) || (a > j && j > pa && pa > out)
                })
                .count() as u32;
            match (in_left, out_right) {
                (true, false) => SuffixStep::Down(index),
                (false, true) => SuffixStep::Up(index),
                (_, true) => SuffixStep::LevelY(index),
                (_, false) => SuffixStep::Level(index),
            }
        })
        .collect();
    MotzkinSuffix::new(p.neg_count() as u32, steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Monomial;
    use crate::signedperm::{crossings, enumerate_bn, enumerate_sn, pattern_stats, stats};
    use std::collections::HashSet;

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn figure_examples() {
        let p = fv1(&sp("3,-5,-2,4,1"));
        assert_eq!(p.to_string(), "U1:0 U2:0 L3:0 D7:1 D8:0");
        assert_eq!(p.weight().unwrap(), Monomial::new(6, 2, 3));
        let s = fz1(&sp("-5,4,2,-3,1"));
        assert_eq!(s.to_string(), "@2 L:1 Uy:1 D:0 D:1 D:0");
        let w: Vec<Monomial> = s.step_weights();
        assert_eq!(
            w,
            [(0, 1), (2, 1), (0, 0), (0, 1), (0, 0)].map(|(y, q)| Monomial::new(y, 0, q))
        );
    }

    #[test]
    fn identity() {
        let id = SignedPermutation::identity(4);
        assert_eq!(fv1(&id).to_string(), "L3:0 L3:0 L3:0 L3:0");
        assert_eq!(fz1(&id).weight().unwrap(), Monomial::new(8, 0, 0));
    }

    #[test]
    fn injective_and_weight_preserving() {
        for n in 1..=4 {
            let mut seen_a = HashSet::new();
            let mut seen_b = HashSet::new();
            for p in enumerate_bn(n).unwrap() {
                let a = fv1(&p);
                let ps = pattern_stats(&p);
                let neg = p.neg_count() as u32;
                assert_eq!(
                    a.weight().unwrap(),
                    Monomial::new(ps.hasc as u32, neg, ps.pat as u32),
                    "fv1({p})"
                );
                assert!(seen_a.insert(a));
                let b = fz1(&p);
                let st = stats(&p);
                assert_eq!(
                    b.weight().unwrap(),
                    Monomial::new(st.fwex as u32, neg, crossings(&p) as u32),
                    "fz1({p})"
                );
                assert!(seen_b.insert(b));
            }
        }
    }

    #[test]
    fn unsigned_uses_odd_types() {
        for p in enumerate_sn(5).unwrap() {
            assert!(fv1(&p).steps.iter().all(|s| s.kind % 2 == 1));
        }
    }
}

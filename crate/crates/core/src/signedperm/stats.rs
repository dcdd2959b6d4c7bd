use super::SignedPermutation;

/// Classical and flag statistics of a signed permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct StatRecord {
    pub wex: usize,
    pub exc: usize,
    pub des: usize,
    pub des_b: usize,
    pub neg: usize,
    pub fwex: usize,
    pub fexc: usize,
    pub fdes: usize,
}

pub fn stats(p: &SignedPermutation) -> StatRecord {
    let v = p.images();
    let n = v.len();
    let mut s = StatRecord::default();
    for (idx, &x) in v.iter().enumerate() {
        let i = idx as i32 + 1;
        if x >= i {
            s.wex += 1;
        }
        if x > i {
            s.exc += 1;
        }
        if x < 0 {
            s.neg += 1;
        }
    }
    for i in 0..n {
        let prev = if i == 0 { 0 } else { v[i - 1] };
        if prev > v[i] {
            s.des_b += 1;
            if i > 0 {
                s.des += 1;
            }
        }
    }
    s.fwex = 2 * s.wex + s.neg;
    s.fexc = 2 * s.exc + s.neg;
    s.fdes = s.des + s.des_b;
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signedperm::enumerate_bn;

    #[test]
    fn worked_values() {
        let s = stats(&"4,-6,1,-5,-3,7,2".parse().unwrap());
        assert_eq!((s.neg, s.wex, s.fwex), (3, 2, 7));
        let id = stats(&SignedPermutation::identity(5));
        assert_eq!((id.wex, id.exc, id.neg, id.fwex, id.des, id.des_b), (5, 0, 0, 10, 0, 0));
        let all_neg = stats(&"-1,-2,-3,-4".parse().unwrap());
        assert_eq!((all_neg.neg, all_neg.wex, all_neg.fwex), (4, 0, 4));
    }

    #[test]
    fn flag_complements() {
        for n in 1..=5 {
            for p in enumerate_bn(n).unwrap() {
                assert_eq!(stats(&p).fdes + stats(&p.negate()).fdes, 2 * n - 1, "{p}");
                assert_eq!(stats(&p).fwex + stats(&p.transpose()).fexc, 2 * n, "{p}");
            }
        }
    }
}

use super::OrderedMatching;
use crate::error::{Error, Result};
use crate::signedperm::{stats, SignedPermutation};

/// Pignose diagram of `π` (with `π_1 > 0`) as a matching on `[2m+2n]`,
/// `m = neg(π)`: `m` new pignoses are put in front, and the spiral of the
/// `k`-th negative position uses the `k`-th new pignose counted from the
/// right, split into an upper arc leaving its first vertex and a lower arc
/// entering its second vertex.
pub fn split_spirals(p: &SignedPermutation) -> Result<OrderedMatching> {
    if p.is_empty() || p.at(1) < 0 {
        return Err(Error::PrecondFirstNegative);
    }
    let m = p.neg_count() as i64;
    let mut pairs = Vec::with_capacity(p.len() + m as usize);
    let mut k = 0;
    for i in 1..=p.len() {
        let x = p.at(i) as i64;
        let source = 2 * m + 2 * i as i64 - 1;
        if x > 0 {
            pairs.push((source, 2 * m + 2 * x));
        } else {
            k += 1;
            let j = m + 1 - k;
            pairs.push((2 * j - 1, 2 * m - 2 * x));
            pairs.push((source, 2 * j));
        }
    }
    OrderedMatching::new(pairs)
}

/// Intermediate objects of [`phi`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiTrace {
    pub m: usize,
    pub split: OrderedMatching,
    pub rotated: OrderedMatching,
    pub reversed: OrderedMatching,
    pub sigma: SignedPermutation,
    pub image: SignedPermutation,
}

fn violation(msg: String) -> Error {
    Error::StructureViolation(msg)
}

/// The bijection `B_n⁺ → B_n⁻` with `cro` kept, `neg` raised by one and
/// `fwex` sent to `2n+1−fwex`.
pub fn phi(p: &SignedPermutation) -> Result<SignedPermutation> {
    Ok(phi_trace(p)?.image)
}

pub fn phi_trace(p: &SignedPermutation) -> Result<PhiTrace> {
    let split = split_spirals(p)?;
    let n = p.len();
    let m = p.neg_count();
    let rotated = split.rho_pow(2 * m + 1)?;
    let reversed = rotated.reverse()?;
    let total = 2 * (m + n);
    let front = 2 * m as i64;

    if !reversed.is_pignose() {
        return Err(violation(format!("{reversed} is not a pignose matching")));
    }
    let mut partner = vec![0i64; total + 1];
    for &(a, b) in reversed.pairs() {
        partner[a as usize] = b;
        partner[b as usize] = a;
    }
    for v in 1..=front {
        if partner[v as usize] <= front {
            return Err(violation(format!("vertex {v} is matched inside the first {front}")));
        }
    }
    let lowers: Vec<(i64, i64)> = reversed
        .pairs()
        .iter()
        .filter(|&&(a, b)| a > b && b <= front)
        .map(|&(a, b)| (b, a))
        .collect();
    for (k, x) in lowers.iter().enumerate() {
        for y in &lowers[k + 1..] {
            if (x.0 < y.0 && y.0 < x.1 && x.1 < y.1) || (y.0 < x.0 && x.0 < y.1 && y.1 < x.1) {
                return Err(violation(format!("lower arcs {x:?} and {y:?} cross")));
            }
        }
    }
    if n > 0 && partner[front as usize + 1] < front + 1 {
        return Err(violation(format!("vertex {} has no upper half arc", front + 1)));
    }
    let upper_halves = (front + 1..=total as i64)
        .filter(|&v| {
            let w = partner[v as usize];
            if v % 2 == 1 {
                w > v
            } else {
                w < v
            }
        })
        .count();
    let k = stats(p).fwex;
    if upper_halves + k != 2 * n + 2 {
        return Err(violation(format!(
            "{upper_halves} upper half arcs on the last {} vertices, expected {}",
            2 * n,
            2 * n + 2 - k
        )));
    }

    let mut images = Vec::with_capacity(n);
    for i in 1..=n as i64 {
        let t = partner[(front + 2 * i - 1) as usize];
        if t > front {
            images.push(((t - front) / 2) as i32);
        } else {
            let u = partner[(t - 1) as usize];
            images.push(-((u - front) / 2) as i32);
        }
    }
    let sigma = SignedPermutation::new(images)
        .map_err(|e| violation(format!("contraction failed: {e}")))?;
    let image = sigma.negate_first();
    Ok(PhiTrace {
        m,
        split,
        rotated,
        reversed,
        sigma,
        image,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signedperm::{crossings, enumerate_bn};
    use std::collections::HashSet;

    #[test]
    fn worked_example() {
        let p: SignedPermutation = "3,-4,-2,1".parse().unwrap();
        let t = phi_trace(&p).unwrap();
        assert_eq!(t.split.to_string(), "(1,8);(3,12);(5,10);(7,4);(9,2);(11,6)");
        assert_eq!(t.rotated.to_string(), "(2,11);(4,9);(6,1);(8,3);(10,7);(12,5)");
        assert_eq!(t.reversed.to_string(), "(1,8);(3,6);(5,10);(7,12);(9,4);(11,2)");
        assert_eq!(t.sigma.to_string(), "3,4,-1,-2");
        assert_eq!(t.image.to_string(), "-3,4,-1,-2");
        assert_eq!(phi(&"1".parse().unwrap()).unwrap().to_string(), "-1");
        assert_eq!(phi(&"-1,2".parse().unwrap()), Err(Error::PrecondFirstNegative));
    }

    #[test]
    fn bijection_with_transports() {
        for n in 1..=5 {
            let mut seen = HashSet::new();
            for p in enumerate_bn(n).unwrap().filter(|p| p.at(1) > 0) {
                let split = split_spirals(&p).unwrap();
                assert!(split.is_pignose());
                assert_eq!(split.len(), n + p.neg_count());
                let q = phi(&p).unwrap();
                assert!(q.at(1) < 0);
                assert_eq!(crossings(&q), crossings(&p), "{p}");
                assert_eq!(q.neg_count(), p.neg_count() + 1);
                assert_eq!(stats(&q).fwex + stats(&p).fwex, 2 * n + 1);
                assert!(seen.insert(q));
            }
            assert_eq!(seen.len(), (1..=n).product::<usize>() << (n - 1));
        }
    }
}

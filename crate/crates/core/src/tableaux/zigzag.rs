use super::{invalid, Layout, PermTableau, PermTableauB, Step};
use crate::error::Result;
use crate::signedperm::SignedPermutation;

/// Ones of the filling indexed by row and by column, in increasing order.
struct Ones {
    in_row: Vec<Vec<usize>>,
    in_col: Vec<Vec<usize>>,
}

impl Ones {
    fn new(layout: &Layout, bits: &[bool], cols: usize) -> Ones {
        let mut in_row = vec![Vec::new(); layout.num_rows()];
        let mut in_col = vec![Vec::new(); cols];
        for r in 0..layout.num_rows() {
            for c in 0..layout.row_len[r] {
                if bits[layout.index(r, c)] {
                    in_row[r].push(c);
                    in_col[c].push(r);
                }
            }
        }
        Ones { in_row, in_col }
    }

    /// Leaves `(r, c)` heading south (or east), turning at every 1, and
    /// returns the label of the border step reached.
    fn travel(&self, layout: &Layout, mut r: usize, mut c: usize, mut south: bool) -> usize {
        loop {
            if south {
                match self.in_col[c].iter().find(|&&s| s > r) {
                    Some(&s) => {
                        r = s;
                        south = false;
                    }
                    None => return layout.col_label[c],
                }
            } else {
                match self.in_row[r].iter().find(|&&d| d > c) {
                    Some(&d) => {
                        c = d;
                        south = true;
                    }
                    None => {
                        return layout.row_label[r]
                            .expect("a path never leaves through an added row")
                    }
                }
            }
        }
    }
}

fn zigzag(layout: &Layout, steps: &[Step], bits: &[bool], cols: usize) -> Vec<i32> {
    let ones = Ones::new(layout, bits, cols);
    (1..=steps.len())
        .map(|i| match steps[i - 1] {
            Step::Vertical => {
                let r = layout.row_of_step[i];
                match ones.in_row[r].first() {
                    Some(&c) => ones.travel(layout, r, c, true) as i32,
                    None => i as i32,
                }
            }
            Step::Horizontal => {
                let c = layout.col_of_step[i];
                let diagonal_one = c < layout.added && bits[layout.index(c, c)];
                if diagonal_one {
                    let first = ones.in_row[c][0];
                    -(ones.travel(layout, c, first, true) as i32)
                } else {
                    let top = ones.in_col[c][0];
                    ones.travel(layout, top, c, false) as i32
                }
            }
        })
        .collect()
}

/// The zigzag bijection `PT(n) → S_n`.
pub fn zigzag_a(t: &PermTableau) -> Result<SignedPermutation> {
    t.validate().map_err(invalid)?;
    let layout = Layout::new(t.shape(), false);
    let images = zigzag(&layout, t.shape().steps(), t.bits(), t.shape().cols());
    SignedPermutation::new(images)
}

/// The zigzag bijection `PT_B(n) → B_n`; a column with a diagonal 1 gives a
/// negative image.
pub fn zigzag_b(t: &PermTableauB) -> Result<SignedPermutation> {
    t.validate().map_err(invalid)?;
    let layout = Layout::new(t.shape(), true);
    let images = zigzag(&layout, t.shape().steps(), t.bits(), t.shape().cols());
    SignedPermutation::new(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signedperm::{crossings, stats};
    use crate::tableaux::{enumerate_pt, enumerate_ptb, BorderShape};
    use std::collections::HashSet;

    #[test]
    fn worked_examples() {
        let a: PermTableau = "vhvvhhhv\n1001\n011\n001\n-\n".parse().unwrap();
        assert_eq!(zigzag_a(&a).unwrap().to_string(), "7,1,6,5,3,4,2,8");
        let b: PermTableauB = "hvhvhhv\n0*\n11*\n000*\n0101*\n111\n01\n-\n".parse().unwrap();
        assert_eq!(zigzag_b(&b).unwrap().to_string(), "-3,6,2,5,-4,1,7");
        let bare = PermTableau::new("vvv".parse::<BorderShape>().unwrap(), &[vec![], vec![], vec![]])
            .unwrap();
        assert_eq!(zigzag_a(&bare).unwrap(), SignedPermutation::identity(3));
        let bad: PermTableau = "vh\n0\n".parse().unwrap();
        assert!(zigzag_a(&bad).is_err());
    }

    #[test]
    fn bijective_with_statistics() {
        for n in 0..=5 {
            let mut seen = HashSet::new();
            for t in enumerate_ptb(n).unwrap() {
                let p = zigzag_b(&t).unwrap();
                let s = t.stats().unwrap();
                let ps = stats(&p);
                assert_eq!((ps.wex, ps.neg, crossings(&p)), (s.row, s.diag, s.so), "{t}");
                if let Some(a) = t.to_type_a() {
                    assert_eq!(zigzag_a(&a).unwrap(), p);
                }
                assert!(seen.insert(p));
            }
            assert_eq!(seen.len(), (1..=n).product::<usize>() << n);
            let sn: HashSet<_> = enumerate_pt(n).unwrap().map(|t| zigzag_a(&t).unwrap()).collect();
            assert_eq!(sn.len(), (1..=n).product::<usize>());
        }
    }
}

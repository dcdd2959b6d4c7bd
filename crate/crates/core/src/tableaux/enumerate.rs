use super::{BorderShape, Layout, PermTableau, PermTableauB};
use crate::error::Result;
use crate::signedperm::{check_limit, DEFAULT_LIMIT};

/// All `n!` permutation tableaux of length `n`, shape by shape.
pub fn enumerate_pt(n: usize) -> Result<impl Iterator<Item = PermTableau>> {
    enumerate_pt_with_limit(n, DEFAULT_LIMIT)
}

pub fn enumerate_pt_with_limit(
    n: usize,
    limit: usize,
) -> Result<impl Iterator<Item = PermTableau>> {
    check_limit(n, limit)?;
    Ok(BorderShape::all(n).flat_map(|shape| {
        fillings(&shape, false)
            .into_iter()
            .map(move |bits| PermTableau::from_bits(shape.clone(), bits))
    }))
}

/// All `2^n n!` type B permutation tableaux of length `n`.
pub fn enumerate_ptb(n: usize) -> Result<impl Iterator<Item = PermTableauB>> {
    enumerate_ptb_with_limit(n, DEFAULT_LIMIT)
}

pub fn enumerate_ptb_with_limit(
    n: usize,
    limit: usize,
) -> Result<impl Iterator<Item = PermTableauB>> {
    check_limit(n, limit)?;
    Ok(BorderShape::all(n).flat_map(|shape| {
        fillings(&shape, true)
            .into_iter()
            .map(move |bits| PermTableauB::from_bits(shape.clone(), bits))
    }))
}

struct Search<'a> {
    layout: &'a Layout,
    /// Bottom row of every column.
    last_row: Vec<usize>,
    cells: Vec<(usize, usize)>,
    bits: Vec<bool>,
    col_one: Vec<bool>,
    out: Vec<Vec<bool>>,
}

impl Search<'_> {
    fn go(&mut self, idx: usize, row_one: bool) {
        if idx == self.cells.len() {
            self.out.push(self.bits.clone());
            return;
        }
        let (r, c) = self.cells[idx];
        let next_row_one = |placed: bool, cells: &[(usize, usize)]| {
            let new_row = idx + 1 < cells.len() && cells[idx + 1].0 != r;
            !new_row && (row_one || placed)
        };
        let diagonal = self.layout.is_diagonal(r, c);
        let zero_ok = !(row_one && (self.col_one[c] || diagonal));
        let closes_col = self.last_row[c] == r;
        if zero_ok && !(closes_col && !self.col_one[c]) {
            self.bits[idx] = false;
            let nro = next_row_one(false, &self.cells);
            self.go(idx + 1, nro);
        }
        let had = self.col_one[c];
        self.bits[idx] = true;
        self.col_one[c] = true;
        let nro = next_row_one(true, &self.cells);
        self.go(idx + 1, nro);
        self.col_one[c] = had;
        self.bits[idx] = false;
    }
}

/// Row-major bit vectors of every valid filling of `shape`, pruned by the
/// tableau conditions as cells are placed.
pub(crate) fn fillings(shape: &BorderShape, shifted: bool) -> Vec<Vec<bool>> {
    let layout = Layout::new(shape, shifted);
    let cols = shape.cols();
    let mut last_row = vec![usize::MAX; cols];
    let mut cells = Vec::with_capacity(layout.num_cells());
    for r in 0..layout.num_rows() {
        for c in 0..layout.row_len[r] {
            cells.push((r, c));
            last_row[c] = r;
        }
    }
    if last_row.contains(&usize::MAX) {
        // a column without cells can never hold a 1
        return Vec::new();
    }
    let mut s = Search {
        layout: &layout,
        last_row,
        bits: vec![false; cells.len()],
        cells,
        col_one: vec![false; cols],
        out: Vec::new(),
    };
    s.go(0, false);
    s.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::factorial;
    use num_bigint::BigInt;

    #[test]
    fn counts() {
        for n in 0..=6usize {
            let a: Vec<PermTableau> = enumerate_pt(n).unwrap().collect();
            assert_eq!(BigInt::from(a.len()), factorial(n as u64), "n = {n}");
            assert!(a.iter().all(|t| t.validate().is_ok()));
            let b: Vec<PermTableauB> = enumerate_ptb(n).unwrap().collect();
            assert_eq!(BigInt::from(b.len()), factorial(n as u64) << n, "n = {n}");
            assert!(b.iter().all(|t| t.validate().is_ok()));
        }
        assert_eq!(enumerate_ptb(0).unwrap().count(), 1);
        assert!(enumerate_pt(9).is_err());
    }

    #[test]
    fn pruning_matches_filter() {
        for n in 0..=4 {
            for shape in BorderShape::all(n) {
                for shifted in [false, true] {
                    let layout = Layout::new(&shape, shifted);
                    let m = layout.num_cells();
                    let brute = (0..1u64 << m)
                        .map(|mask| (0..m).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
                        .filter(|bits| {
                            if shifted {
                                PermTableauB::from_bits(shape.clone(), bits.clone())
                                    .validate()
                                    .is_ok()
                            } else {
                                PermTableau::from_bits(shape.clone(), bits.clone())
                                    .validate()
                                    .is_ok()
                            }
                        })
                        .count();
                    assert_eq!(fillings(&shape, shifted).len(), brute, "{shape}");
                }
            }
        }
    }
}

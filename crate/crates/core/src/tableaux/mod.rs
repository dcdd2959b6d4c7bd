//! Ferrers diagrams, permutation tableaux of type A and B, and the zigzag
//! bijections onto `S_n` and `B_n`.
//!
//! A shape is its south-east border read from north-east to south-west: a
//! vertical step closes a row, a horizontal step closes a column. Rows are
//! numbered top to bottom, columns left to right, both from 0; in a type B
//! tableau the `k` added rows come first, so the diagonal cell of added row
//! `r` is `(r, r)`.

mod enumerate;
mod zigzag;

use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::exactalg::{Monomial, MultiPoly, Var};

pub use enumerate::{
    enumerate_pt, enumerate_pt_with_limit, enumerate_ptb, enumerate_ptb_with_limit,
};
pub use zigzag::{zigzag_a, zigzag_b};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Horizontal,
    Vertical,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BorderShape {
    steps: Vec<Step>,
}

impl BorderShape {
    pub fn new(steps: Vec<Step>) -> Self {
        BorderShape { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn rows(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::Vertical).count()
    }

    pub fn cols(&self) -> usize {
        self.len() - self.rows()
    }

    /// Lengths of the rows, top to bottom.
    pub fn row_lengths(&self) -> Vec<usize> {
        let mut left = self.cols();
        let mut out = Vec::new();
        for s in &self.steps {
            match s {
                Step::Horizontal => left -= 1,
                Step::Vertical => out.push(left),
            }
        }
        out
    }

    /// All `2^n` shapes of length `n`.
    pub fn all(n: usize) -> impl Iterator<Item = BorderShape> {
        (0..1u64 << n).map(move |mask| {
            BorderShape::new(
                (0..n)
                    .map(|i| {
                        if mask >> (n - 1 - i) & 1 == 1 {
                            Step::Vertical
                        } else {
                            Step::Horizontal
                        }
                    })
                    .collect(),
            )
        })
    }
}

impl fmt::Display for BorderShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Horizontal => "h",
                Step::Vertical => "v",
            })?;
        }
        Ok(())
    }
}

impl FromStr for BorderShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for (pos, ch) in s.trim().char_indices() {
            match ch.to_ascii_lowercase() {
                'h' => steps.push(Step::Horizontal),
                'v' => steps.push(Step::Vertical),
                _ => return parse_err(pos, format!("border step {ch:?} is not h or v")),
            }
        }
        Ok(BorderShape { steps })
    }
}

/// Cell geometry of a (possibly shifted) diagram.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub(crate) added: usize,
    pub(crate) row_len: Vec<usize>,
    start: Vec<usize>,
    /// Label of the vertical step closing each row; `None` for added rows.
    pub(crate) row_label: Vec<Option<usize>>,
    /// Label of the horizontal step closing each column.
    pub(crate) col_label: Vec<usize>,
    pub(crate) row_of_step: Vec<usize>,
    pub(crate) col_of_step: Vec<usize>,
}

impl Layout {
    pub(crate) fn new(shape: &BorderShape, shifted: bool) -> Layout {
        let k = shape.cols();
        let added = if shifted { k } else { 0 };
        let mut row_len: Vec<usize> = (1..=added).collect();
        let mut row_label = vec![None; added];
        let mut col_label = vec![0; k];
        let mut row_of_step = vec![usize::MAX; shape.len() + 1];
        let mut col_of_step = vec![usize::MAX; shape.len() + 1];
        let mut left = k;
        for (idx, s) in shape.steps.iter().enumerate() {
            let label = idx + 1;
            match s {
                Step::Horizontal => {
                    left -= 1;
                    col_label[left] = label;
                    col_of_step[label] = left;
                }
                Step::Vertical => {
                    row_of_step[label] = row_len.len();
                    row_len.push(left);
                    row_label.push(Some(label));
                }
            }
        }
        let mut start = Vec::with_capacity(row_len.len() + 1);
        let mut acc = 0;
        for &l in &row_len {
            start.push(acc);
            acc += l;
        }
        start.push(acc);
        Layout {
            added,
            row_len,
            start,
            row_label,
            col_label,
            row_of_step,
            col_of_step,
        }
    }

    pub(crate) fn num_cells(&self) -> usize {
        *self.start.last().unwrap()
    }

    pub(crate) fn num_rows(&self) -> usize {
        self.row_len.len()
    }

    pub(crate) fn index(&self, r: usize, c: usize) -> usize {
        debug_assert!(c < self.row_len[r]);
        self.start[r] + c
    }

    pub(crate) fn has_cell(&self, r: usize, c: usize) -> bool {
        r < self.row_len.len() && c < self.row_len[r]
    }

    pub(crate) fn is_diagonal(&self, r: usize, c: usize) -> bool {
        r < self.added && c == r
    }
}

/// A 0/1 filling stored row-major over the cells of the diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Grid {
    shape: BorderShape,
    shifted: bool,
    bits: Vec<bool>,
}

impl Grid {
    fn from_rows(shape: BorderShape, shifted: bool, rows: &[Vec<bool>]) -> Result<Grid> {
        let layout = Layout::new(&shape, shifted);
        if rows.len() != layout.num_rows() {
            return Err(Error::InvalidTableau(format!(
                "expected {} rows, got {}",
                layout.num_rows(),
                rows.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != layout.row_len[r] {
                return Err(Error::InvalidTableau(format!(
                    "row {} has {} cells, the shape needs {}",
                    r + 1,
                    row.len(),
                    layout.row_len[r]
                )));
            }
        }
        Ok(Grid {
            shape,
            shifted,
            bits: rows.iter().flatten().copied().collect(),
        })
    }

    fn rows(&self) -> Vec<Vec<bool>> {
        let layout = Layout::new(&self.shape, self.shifted);
        (0..layout.num_rows())
            .map(|r| (0..layout.row_len[r]).map(|c| self.bits[layout.index(r, c)]).collect())
            .collect()
    }

    fn validate(&self) -> std::result::Result<(), Violation> {
        let layout = Layout::new(&self.shape, self.shifted);
        let get = |r: usize, c: usize| self.bits[layout.index(r, c)];
        let rows = layout.num_rows();
        for c in 0..self.shape.cols() {
            if !(0..rows).any(|r| layout.has_cell(r, c) && get(r, c)) {
                return Err(Violation::EmptyColumn { col: c + 1 });
            }
        }
        for r in 0..rows {
            for c in 0..layout.row_len[r] {
                let one_left = (0..c).any(|d| get(r, d));
                let one_above = (0..r).any(|s| layout.has_cell(s, c) && get(s, c));
                if !get(r, c) && one_left && one_above {
                    return Err(Violation::HiddenZero { row: r + 1, col: c + 1 });
                }
            }
        }
        for r in 0..layout.added {
            if !get(r, r) && (0..r).any(|d| get(r, d)) {
                return Err(Violation::DiagonalZero { row: r + 1, col: r + 1 });
            }
        }
        Ok(())
    }

    fn stats(&self) -> TableauStats {
        let layout = Layout::new(&self.shape, self.shifted);
        let get = |r: usize, c: usize| self.bits[layout.index(r, c)];
        let mut so = 0;
        for c in 0..self.shape.cols() {
            let mut seen = false;
            for r in 0..layout.num_rows() {
                if layout.has_cell(r, c) && get(r, c) {
                    if seen {
                        so += 1;
                    }
                    seen = true;
                }
            }
        }
        TableauStats {
            so,
            row: self.shape.rows(),
            diag: (0..layout.added).filter(|&r| get(r, r)).count(),
        }
    }

    fn to_text(&self) -> String {
        let layout = Layout::new(&self.shape, self.shifted);
        let mut out = format!("{}\n", self.shape);
        for r in 0..layout.num_rows() {
            if layout.row_len[r] == 0 {
                out.push('-');
            }
            for c in 0..layout.row_len[r] {
                out.push(if self.bits[layout.index(r, c)] { '1' } else { '0' });
                if layout.is_diagonal(r, c) {
                    out.push('*');
                }
            }
            out.push('\n');
        }
        out
    }

    fn parse(s: &str, shifted: bool) -> Result<Grid> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let shape: BorderShape = match lines.next() {
            Some(l) => l.parse()?,
            None if s.contains('\n') => BorderShape::new(Vec::new()),
            None => return parse_err(0, "missing border word"),
        };
        let layout = Layout::new(&shape, shifted);
        let mut rows = Vec::new();
        for (r, line) in lines.enumerate() {
            let line = line.trim();
            let mut row = Vec::new();
            let mut stars = Vec::new();
            if line != "-" {
                for (pos, ch) in line.char_indices() {
                    match ch {
                        '0' => row.push(false),
                        '1' => row.push(true),
                        '*' if !row.is_empty() => stars.push(row.len() - 1),
                        ' ' => {}
                        _ => return parse_err(pos, format!("unexpected {ch:?} in row {}", r + 1)),
                    }
                }
            }
            let expected: Vec<usize> = if r < layout.added { vec![r] } else { vec![] };
            if stars != expected {
                return Err(Error::InvalidTableau(format!(
                    "row {} has diagonal marks at the wrong place",
                    r + 1
                )));
            }
            rows.push(row);
        }
        Grid::from_rows(shape, shifted, &rows)
    }

    fn render(&self) -> String {
        let layout = Layout::new(&self.shape, self.shifted);
        let cols = self.shape.cols();
        let width = 3 * cols;
        let mut out = String::new();
        for r in 0..layout.num_rows() {
            let mut line = String::new();
            for c in 0..layout.row_len[r] {
                let bit = if self.bits[layout.index(r, c)] { '1' } else { '0' };
                if layout.is_diagonal(r, c) {
                    line.push_str(&format!("[{bit}]"));
                } else {
                    line.push_str(&format!(" {bit} "));
                }
            }
            match layout.row_label[r] {
                Some(l) => out.push_str(&format!("{line:<width$} | {l}\n")),
                None => out.push_str(&format!("{}\n", line.trim_end())),
            }
        }
        let mut foot = String::new();
        for &l in &layout.col_label {
            foot.push_str(&format!("{l:^3}"));
        }
        out.push_str(&format!("{:-<width$}-+\n", ""));
        out.push_str(foot.trim_end());
        out.push('\n');
        out
    }
}

/// First failed tableau condition, with 1-based cell coordinates (rows of a
/// shifted diagram counted from the top added row).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Condition (1): a column without a 1.
    EmptyColumn { col: usize },
    /// Condition (2): a 0 with a 1 above it and a 1 to its left.
    HiddenZero { row: usize, col: usize },
    /// Condition (3): a diagonal 0 with a 1 to its left.
    DiagonalZero { row: usize, col: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyColumn { col } => {
                write!(f, "condition (1): column {col} has no 1")
            }
            Violation::HiddenZero { row, col } => write!(
                f,
                "condition (2): the 0 at ({row},{col}) has a 1 above and a 1 to the left"
            ),
            Violation::DiagonalZero { row, col } => write!(
                f,
                "condition (3): the diagonal 0 at ({row},{col}) has a 1 to the left"
            ),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct TableauStats {
    pub so: usize,
    pub row: usize,
    pub diag: usize,
}

/// A 0/1 filling of a Ferrers diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermTableau {
    grid: Grid,
}

impl PermTableau {
    /// Checks that `rows` fits `shape`; the tableau conditions are checked by
    /// [`PermTableau::validate`].
    pub fn new(shape: BorderShape, rows: &[Vec<bool>]) -> Result<Self> {
        Ok(PermTableau {
            grid: Grid::from_rows(shape, false, rows)?,
        })
    }

    pub(crate) fn from_bits(shape: BorderShape, bits: Vec<bool>) -> Self {
        PermTableau {
            grid: Grid {
                shape,
                shifted: false,
                bits,
            },
        }
    }

    pub fn shape(&self) -> &BorderShape {
        &self.grid.shape
    }

    pub fn len(&self) -> usize {
        self.grid.shape.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.shape.is_empty()
    }

    pub fn rows(&self) -> Vec<Vec<bool>> {
        self.grid.rows()
    }

    pub(crate) fn bits(&self) -> &[bool] {
        &self.grid.bits
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        self.grid.validate()
    }

    pub fn stats(&self) -> Result<TableauStats> {
        self.grid.validate().map_err(invalid)?;
        Ok(self.grid.stats())
    }

    /// The same tableau with all-zero added rows.
    pub fn to_type_b(&self) -> PermTableauB {
        let k = self.grid.shape.cols();
        let mut bits = vec![false; k * (k + 1) / 2];
        bits.extend_from_slice(&self.grid.bits);
        PermTableauB::from_bits(self.grid.shape.clone(), bits)
    }

    pub fn to_text(&self) -> String {
        self.grid.to_text()
    }

    pub fn render(&self) -> String {
        self.grid.render()
    }
}

impl FromStr for PermTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(PermTableau {
            grid: Grid::parse(s, false)?,
        })
    }
}

impl fmt::Display for PermTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A 0/1 filling of a shifted Ferrers diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermTableauB {
    grid: Grid,
}

impl PermTableauB {
    /// `rows` lists the added rows first (sizes `1, …, k`), then the rows of
    /// `shape`.
    pub fn new(shape: BorderShape, rows: &[Vec<bool>]) -> Result<Self> {
        Ok(PermTableauB {
            grid: Grid::from_rows(shape, true, rows)?,
        })
    }

    pub(crate) fn from_bits(shape: BorderShape, bits: Vec<bool>) -> Self {
        PermTableauB {
            grid: Grid {
                shape,
                shifted: true,
                bits,
            },
        }
    }

    pub fn shape(&self) -> &BorderShape {
        &self.grid.shape
    }

    pub fn len(&self) -> usize {
        self.grid.shape.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.shape.is_empty()
    }

    pub fn rows(&self) -> Vec<Vec<bool>> {
        self.grid.rows()
    }

    pub(crate) fn bits(&self) -> &[bool] {
        &self.grid.bits
    }

    /// Diagonal flags of the added rows, top to bottom.
    pub fn diagonal(&self) -> Vec<bool> {
        let layout = Layout::new(&self.grid.shape, true);
        (0..layout.added).map(|r| self.grid.bits[layout.index(r, r)]).collect()
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        self.grid.validate()
    }

    pub fn stats(&self) -> Result<TableauStats> {
        self.grid.validate().map_err(invalid)?;
        Ok(self.grid.stats())
    }

    /// The underlying type A tableau when every added row is zero.
    pub fn to_type_a(&self) -> Option<PermTableau> {
        let k = self.grid.shape.cols();
        let cut = k * (k + 1) / 2;
        if self.grid.bits[..cut].iter().any(|&b| b) {
            return None;
        }
        Some(PermTableau::from_bits(
            self.grid.shape.clone(),
            self.grid.bits[cut..].to_vec(),
        ))
    }

    pub fn to_text(&self) -> String {
        self.grid.to_text()
    }

    pub fn render(&self) -> String {
        self.grid.render()
    }
}

impl FromStr for PermTableauB {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(PermTableauB {
            grid: Grid::parse(s, true)?,
        })
    }
}

impl fmt::Display for PermTableauB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn invalid(v: Violation) -> Error {
    Error::InvalidTableau(v.to_string())
}

pub fn tableau_stats(t: &PermTableauB) -> Result<TableauStats> {
    t.stats()
}

/// `Σ_{T ∈ PT_B(n)} y^{2·row+diag} t^{diag} q^{so}`.
pub fn b_poly_tableaux(n: usize) -> Result<MultiPoly> {
    use rayon::prelude::*;
    crate::signedperm::check_limit(n, crate::signedperm::DEFAULT_LIMIT)?;
    let shapes: Vec<BorderShape> = BorderShape::all(n).collect();
    let parts: Vec<MultiPoly> = shapes
        .par_iter()
        .map(|shape| {
            MultiPoly::from_counts(enumerate::fillings(shape, true).into_iter().map(|bits| {
                let s = PermTableauB::from_bits(shape.clone(), bits).grid.stats();
                (
                    Monomial::new((2 * s.row + s.diag) as u32, s.diag as u32, s.so as u32),
                    1,
                )
            }))
        })
        .collect();
    Ok(parts.into_iter().sum())
}

/// `E_{n,k}(q) = Σ q^{so(T)}` over `T ∈ PT(n)` with `k` rows; zero when `k`
/// is out of range.
pub fn e_poly_type_a(n: usize, k: usize) -> Result<MultiPoly> {
    crate::signedperm::check_limit(n, crate::signedperm::DEFAULT_LIMIT)?;
    if k < 1 || k > n {
        return Ok(MultiPoly::zero());
    }
    let mut acc = MultiPoly::zero();
    for shape in BorderShape::all(n).filter(|s| s.rows() == k) {
        acc += MultiPoly::from_counts(enumerate::fillings(&shape, false).into_iter().map(|bits| {
            let s = PermTableau::from_bits(shape.clone(), bits).grid.stats();
            (Monomial::new(0, 0, s.so as u32), 1)
        }));
    }
    debug_assert!(acc.degree_in(Var::Y).unwrap_or(0) == 0);
    Ok(acc)
}

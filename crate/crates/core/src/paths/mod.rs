//! Labeled Motzkin paths (`M_n`, eight step types) and weighted Motzkin
//! suffixes (`N_n`), with the encodings of signed permutations into them.
//!
//! Heights: an up or down step is indexed by its lower endpoint `h`, a level
//! step by the height it runs at.

mod encode;
mod enumerate;

use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::exactalg::{Monomial, MultiPoly};

pub use encode::{fv1, fz1};
pub use enumerate::{
    enumerate_mn, enumerate_mn_with_limit, enumerate_nn, enumerate_nn_with_limit, MnIter, NnIter,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Up,
    Level,
    Down,
}

impl Direction {
    fn letter(self) -> char {
        match self {
            Direction::Up => 'U',
            Direction::Level => 'L',
            Direction::Down => 'D',
        }
    }
}

/// One step of a path in `M_n`: its type `1..=8` and index `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathStep {
    pub kind: u8,
    pub index: u32,
}

impl PathStep {
    pub fn new(kind: u8, index: u32) -> Self {
        assert!((1..=8).contains(&kind), "step type {kind} is not in 1..=8");
        PathStep { kind, index }
    }

    pub fn direction(&self) -> Direction {
        match self.kind {
            1 | 2 => Direction::Up,
            3..=6 => Direction::Level,
            _ => Direction::Down,
        }
    }

    /// Largest index allowed at height `h`, `None` when the type cannot occur.
    pub fn max_index(kind: u8, h: u32) -> Option<u32> {
        match kind {
            5 | 6 => h.checked_sub(1),
            _ => Some(h),
        }
    }

    /// Weight of the step at height `h`.
    pub fn weight(&self, h: u32) -> Monomial {
        let i = self.index;
        match self.kind {
            1 | 5 => Monomial::new(0, 0, i),
            2 => Monomial::new(1, 1, h + 1 + i),
            3 | 7 => Monomial::new(2, 0, i),
            _ => Monomial::new(1, 1, h + i),
        }
    }
}

impl fmt::Display for PathStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}:{}", self.direction().letter(), self.kind, self.index)
    }
}

/// Heights `h` attached to the steps (lower endpoint for up and down steps)
/// for a sequence of directions starting at `start`; `None` if the path
/// goes below zero.
fn step_heights(start: u32, dirs: impl Iterator<Item = Direction>) -> Option<(Vec<u32>, u32)> {
    let mut h = start as i64;
    let mut out = Vec::new();
    for d in dirs {
        match d {
            Direction::Up => {
                out.push(h as u32);
                h += 1;
            }
            Direction::Level => out.push(h as u32),
            Direction::Down => {
                h -= 1;
                if h < 0 {
                    return None;
                }
                out.push(h as u32);
            }
        }
    }
    Some((out, h as u32))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LabeledMotzkinPath {
    pub steps: Vec<PathStep>,
}

impl LabeledMotzkinPath {
    pub fn new(steps: Vec<PathStep>) -> Self {
        LabeledMotzkinPath { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Height attached to each step.
    pub fn heights(&self) -> Vec<u32> {
        step_heights(0, self.steps.iter().map(|s| s.direction()))
            .map(|(h, _)| h)
            .unwrap_or_default()
    }

    pub fn validate(&self) -> Result<()> {
        let (hs, end) = step_heights(0, self.steps.iter().map(|s| s.direction()))
            .ok_or_else(|| Error::InvalidPath("path goes below height 0".into()))?;
        if end != 0 {
            return Err(Error::InvalidPath(format!("path ends at height {end}")));
        }
        for (k, (s, &h)) in self.steps.iter().zip(&hs).enumerate() {
            match PathStep::max_index(s.kind, h) {
                Some(m) if s.index <= m => {}
                _ => {
                    return Err(Error::InvalidPath(format!(
                        "step {} ({s}) at height {h} has index out of range",
                        k + 1
                    )))
                }
            }
        }
        Ok(())
    }

    /// Weight of each step.
    pub fn step_weights(&self) -> Vec<Monomial> {
        self.steps
            .iter()
            .zip(self.heights())
            .map(|(s, h)| s.weight(h))
            .collect()
    }

    pub fn weight(&self) -> Result<Monomial> {
        self.validate()?;
        Ok(self.step_weights().into_iter().fold(Monomial::ONE, Monomial::mul))
    }

    pub fn render(&self) -> String {
        let dirs: Vec<Direction> = self.steps.iter().map(|s| s.direction()).collect();
        let tokens: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        let mut out = render_profile(0, &dirs, &tokens, &self.step_weights());
        if let Ok(w) = self.weight() {
            out.push_str(&format!("weight {}\n", MultiPoly::term(1, w)));
        }
        out
    }
}

impl fmt::Display for LabeledMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

fn parse_index(tok: &str, pos: usize) -> Result<u32> {
    tok.parse()
        .or_else(|_| parse_err(pos, format!("bad step index {tok:?}")))
}

impl FromStr for LabeledMotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for (pos, tok) in tokens(s) {
            let (head, idx) = match tok.split_once(':') {
                Some(x) => x,
                None => return parse_err(pos, format!("step {tok:?} lacks ':'")),
            };
            let mut chars = head.chars();
            let letter = chars.next();
            let kind: u8 = match chars.as_str().parse() {
                Ok(k) if (1..=8).contains(&k) => k,
                _ => return parse_err(pos, format!("bad step type in {tok:?}")),
            };
            let step = PathStep::new(kind, parse_index(idx, pos)?);
            if letter != Some(step.direction().letter()) {
                return parse_err(pos, format!("direction of {tok:?} does not match its type"));
            }
            steps.push(step);
        }
        Ok(LabeledMotzkinPath { steps })
    }
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - s.as_ptr() as usize, t))
}

/// One step of a Motzkin suffix in `N_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuffixStep {
    /// Up step, weight `y²q^i`.
    Up(u32),
    /// Level step, weight `y²q^i`.
    LevelY(u32),
    /// Level step, weight `q^i`.
    Level(u32),
    /// Down step, weight `q^i`.
    Down(u32),
}

impl SuffixStep {
    pub fn direction(&self) -> Direction {
        match self {
            SuffixStep::Up(_) => Direction::Up,
            SuffixStep::LevelY(_) | SuffixStep::Level(_) => Direction::Level,
            SuffixStep::Down(_) => Direction::Down,
        }
    }

    pub fn index(&self) -> u32 {
        match *self {
            SuffixStep::Up(i) | SuffixStep::LevelY(i) | SuffixStep::Level(i) | SuffixStep::Down(i) => i,
        }
    }

    fn max_index(&self, h: u32) -> Option<u32> {
        match self {
            SuffixStep::Level(_) => h.checked_sub(1),
            _ => Some(h),
        }
    }

    pub fn weight(&self) -> Monomial {
        match *self {
            SuffixStep::Up(i) | SuffixStep::LevelY(i) => Monomial::new(2, 0, i),
            SuffixStep::Level(i) | SuffixStep::Down(i) => Monomial::new(0, 0, i),
        }
    }
}

impl fmt::Display for SuffixStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuffixStep::Up(i) => write!(f, "Uy:{i}"),
            SuffixStep::LevelY(i) => write!(f, "Ly:{i}"),
            SuffixStep::Level(i) => write!(f, "L:{i}"),
            SuffixStep::Down(i) => write!(f, "D:{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MotzkinSuffix {
    pub start_height: u32,
    pub steps: Vec<SuffixStep>,
}

impl MotzkinSuffix {
    pub fn new(start_height: u32, steps: Vec<SuffixStep>) -> Self {
        MotzkinSuffix {
            start_height,
            steps,
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn heights(&self) -> Vec<u32> {
        step_heights(self.start_height, self.steps.iter().map(|s| s.direction()))
            .map(|(h, _)| h)
            .unwrap_or_default()
    }

    pub fn validate(&self) -> Result<()> {
        let (hs, end) = step_heights(self.start_height, self.steps.iter().map(|s| s.direction()))
            .ok_or_else(|| Error::InvalidPath("suffix goes below height 0".into()))?;
        if end != 0 {
            return Err(Error::InvalidPath(format!("suffix ends at height {end}")));
        }
        for (k, (s, &h)) in self.steps.iter().zip(&hs).enumerate() {
            match s.max_index(h) {
                Some(m) if s.index() <= m => {}
                _ => {
                    return Err(Error::InvalidPath(format!(
                        "step {} ({s}) at height {h} has index out of range",
                        k + 1
                    )))
                }
            }
        }
        Ok(())
    }

    pub fn step_weights(&self) -> Vec<Monomial> {
        self.steps.iter().map(|s| s.weight()).collect()
    }

    /// `(yt)^{start height}` times the product of the step weights.
    pub fn weight(&self) -> Result<Monomial> {
        self.validate()?;
        let sh = self.start_height;
        Ok(self
            .step_weights()
            .into_iter()
            .fold(Monomial::new(sh, sh, 0), Monomial::mul))
    }

    pub fn render(&self) -> String {
        let dirs: Vec<Direction> = self.steps.iter().map(|s| s.direction()).collect();
        let tokens: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        let mut out = render_profile(self.start_height, &dirs, &tokens, &self.step_weights());
        out.push_str(&format!(
            "start height {}, prefactor {}\n",
            self.start_height,
            MultiPoly::term(1, Monomial::new(self.start_height, self.start_height, 0))
        ));
        if let Ok(w) = self.weight() {
            out.push_str(&format!("weight {}\n", MultiPoly::term(1, w)));
        }
        out
    }
}

impl fmt::Display for MotzkinSuffix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}", self.start_height)?;
        for s in &self.steps {
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinSuffix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut it = tokens(s);
        let start_height = match it.next() {
            Some((pos, t)) => match t.strip_prefix('@') {
                Some(h) => parse_index(h, pos)?,
                None => return parse_err(pos, "suffix must start with @height"),
            },
            None => return parse_err(0, "empty suffix text"),
        };
        let mut steps = Vec::new();
        for (pos, tok) in it {
            let (head, idx) = match tok.split_once(':') {
                Some(x) => x,
                None => return parse_err(pos, format!("step {tok:?} lacks ':'")),
            };
            let i = parse_index(idx, pos)?;
            steps.push(match head {
                "Uy" => SuffixStep::Up(i),
                "Ly" => SuffixStep::LevelY(i),
                "L" => SuffixStep::Level(i),
                "D" => SuffixStep::Down(i),
                _ => return parse_err(pos, format!("unknown step {head:?}")),
            });
        }
        Ok(MotzkinSuffix {
            start_height,
            steps,
        })
    }
}

/// Profile drawing (`/`, `_`, `\`) above one line per step.
fn render_profile(start: u32, dirs: &[Direction], tokens: &[String], weights: &[Monomial]) -> String {
    let (hs, _) = step_heights(start, dirs.iter().copied()).unwrap_or((vec![0; dirs.len()], 0));
    let top = hs.iter().map(|&h| h as usize + 1).max().unwrap_or(1);
    let mut grid = vec![vec![' '; dirs.len()]; top];
    for (x, (&h, d)) in hs.iter().zip(dirs).enumerate() {
        let (row, ch) = match d {
            Direction::Up => (h, '/'),
            Direction::Down => (h, '\\'),
            Direction::Level => (h, '_'),
        };
        grid[row as usize][x] = ch;
    }
    let mut out = String::new();
    for (r, row) in grid.iter().enumerate().rev() {
        out.push_str(&format!("{r:>2} |{}\n", row.iter().collect::<String>().trim_end()));
    }
    out.push_str(&format!("   +{}\n", "-".repeat(dirs.len())));
    for (k, ((tok, w), h)) in tokens.iter().zip(weights).zip(&hs).enumerate() {
        out.push_str(&format!(
            "{:>2}  {tok:<7} h={h}  {}\n",
            k + 1,
            MultiPoly::term(1, *w)
        ));
    }
    out
}

/// Anything with a monomial weight: [`LabeledMotzkinPath`] or [`MotzkinSuffix`].
pub trait Weighted {
    fn weight(&self) -> Result<Monomial>;
}

impl Weighted for LabeledMotzkinPath {
    fn weight(&self) -> Result<Monomial> {
        LabeledMotzkinPath::weight(self)
    }
}

impl Weighted for MotzkinSuffix {
    fn weight(&self) -> Result<Monomial> {
        MotzkinSuffix::weight(self)
    }
}

pub fn path_weight<P: Weighted>(p: &P) -> Result<MultiPoly> {
    Ok(MultiPoly::term(1, p.weight()?))
}

/// `Σ_{p ∈ M_n} w(p)`.
pub fn mn_sum(n: usize) -> Result<MultiPoly> {
    let counts = enumerate_mn(n)?.fold(std::collections::BTreeMap::new(), |mut acc, p| {
        let w = p.step_weights().into_iter().fold(Monomial::ONE, Monomial::mul);
        *acc.entry(w).or_insert(0u64) += 1;
        acc
    });
    Ok(MultiPoly::from_counts(counts))
}

/// `Σ_{p ∈ N_n} (yt)^{sh(p)} w(p)`.
pub fn nn_sum(n: usize) -> Result<MultiPoly> {
    let counts = enumerate_nn(n)?.fold(std::collections::BTreeMap::new(), |mut acc, p| {
        let sh = p.start_height;
        let w = p
            .step_weights()
            .into_iter()
            .fold(Monomial::new(sh, sh, 0), Monomial::mul);
        *acc.entry(w).or_insert(0u64) += 1;
        acc
    });
    Ok(MultiPoly::from_counts(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_and_text() {
        assert_eq!(LabeledMotzkinPath::default().weight().unwrap(), Monomial::ONE);
        let p: LabeledMotzkinPath = "U1:0 U2:0 L3:0 D7:1 D8:0".parse().unwrap();
        assert_eq!(p.to_string(), "U1:0 U2:0 L3:0 D7:1 D8:0");
        assert_eq!(p.weight().unwrap(), Monomial::new(6, 2, 3));
        assert!("L1:0".parse::<LabeledMotzkinPath>().is_err());
        assert!("L5:0".parse::<LabeledMotzkinPath>().unwrap().validate().is_err());
        assert!("U1:1 D7:0".parse::<LabeledMotzkinPath>().unwrap().validate().is_err());
        let s: MotzkinSuffix = "@1 D:0".parse().unwrap();
        assert_eq!(s.weight().unwrap(), Monomial::new(1, 1, 0));
        assert_eq!(s.to_string(), "@1 D:0");
        let s: MotzkinSuffix = "@0 Ly:0".parse().unwrap();
        assert_eq!(s.weight().unwrap(), Monomial::new(2, 0, 0));
        assert!("@0 L:0".parse::<MotzkinSuffix>().unwrap().validate().is_err());
        assert!("@2 D:0".parse::<MotzkinSuffix>().unwrap().validate().is_err());
    }

    #[test]
    fn model_totals() {
        let b1: MultiPoly = "y^2 + y*t".parse().unwrap();
        assert_eq!(mn_sum(1).unwrap(), b1);
        assert_eq!(nn_sum(1).unwrap(), b1);
        assert_eq!(mn_sum(0).unwrap(), MultiPoly::one());
        for n in 2..=4 {
            let b = crate::genfun::b_poly_perms(n).unwrap();
            assert_eq!(mn_sum(n).unwrap(), b, "n = {n}");
            assert_eq!(nn_sum(n).unwrap(), b, "n = {n}");
        }
    }

    #[test]
    fn render_profile_shape() {
        let p: LabeledMotzkinPath = "U1:0 U2:0 L3:0 D7:1 D8:0".parse().unwrap();
        let r = p.render();
        assert!(r.starts_with(" 2 |  _\n 1 | / \\\n 0 |/   \\\n"), "{r}");
        assert!(r.contains("y*t*q^2"));
        assert!(r.ends_with("weight y^6*t^2*q^3\n"), "{r}");
    }
}

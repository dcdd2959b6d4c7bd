//! Pignose diagrams.
//!
//! In the pignose diagram of `π ∈ B_n` pignose `i` has vertices `2i−1`
//! (first) and `2i` (second); arc `i` runs from the first vertex of `i` to
//! the second vertex of `|π_i|`, above the axis if `π_i ≥ i`, below if
//! `0 < π_i < i`, and as a spiral (below, around the left end, then above)
//! if `π_i < 0`.
//!
//! The full diagram has pignoses `−n … −1, 1 … n` on positions `1 … 4n`;
//! inside a negative pignose the first vertex is the right one. For every
//! `i ∈ [±n]` an arc joins the first vertex of `i` to the second vertex of
//! `π(i)`, above the axis exactly when it runs left to right.

use super::SignedPermutation;
use crate::ascii;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Upper,
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArcKind {
    Upper,
    Lower,
    Spiral,
}

/// Arc of the single-sided pignose diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PignoseArc {
    pub source: usize,
    pub target: usize,
    pub kind: ArcKind,
}

pub fn pignose_arcs(p: &SignedPermutation) -> Vec<PignoseArc> {
    (1..=p.len())
        .map(|i| {
            let x = p.at(i);
            let kind = if x < 0 {
                ArcKind::Spiral
            } else if x as usize >= i {
                ArcKind::Upper
            } else {
                ArcKind::Lower
            };
            PignoseArc {
                source: 2 * i - 1,
                target: 2 * x.unsigned_abs() as usize,
                kind,
            }
        })
        .collect()
}

/// Arc of the full pignose diagram, endpoints as positions in `1..=4n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FullArc {
    pub label: i32,
    pub from: usize,
    pub to: usize,
    pub side: Side,
}

impl FullArc {
    pub fn lo(&self) -> usize {
        self.from.min(self.to)
    }

    pub fn hi(&self) -> usize {
        self.from.max(self.to)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullPignoseDiagram {
    pub n: usize,
    pub arcs: Vec<FullArc>,
}

/// Left and right positions of the pignose labeled `label` in the full layout.
pub fn full_positions(n: usize, label: i32) -> (usize, usize) {
    let n = n as i32;
    let ord = if label < 0 { label + n } else { label + n - 1 };
    let left = (2 * ord + 1) as usize;
    (left, left + 1)
}

fn first_vertex(n: usize, label: i32) -> usize {
    let (l, r) = full_positions(n, label);
    if label > 0 {
        l
    } else {
        r
    }
}

fn second_vertex(n: usize, label: i32) -> usize {
    let (l, r) = full_positions(n, label);
    if label > 0 {
        r
    } else {
        l
    }
}

impl FullPignoseDiagram {
    pub fn new(p: &SignedPermutation) -> Self {
        let n = p.len();
        let labels = (1..=n as i32).rev().map(|i| -i).chain(1..=n as i32);
        let arcs = labels
            .map(|i| {
                let from = first_vertex(n, i);
                let to = second_vertex(n, p.apply(i));
                FullArc {
                    label: i,
                    from,
                    to,
                    side: if from < to { Side::Upper } else { Side::Lower },
                }
            })
            .collect();
        FullPignoseDiagram { n, arcs }
    }

    /// Pairs of arcs on the same side whose endpoints interleave.
    pub fn crossing_pairs(&self) -> usize {
        count_pairs(&self.arcs, |a, b| {
            a.side == b.side && interleaved((a.lo(), a.hi()), (b.lo(), b.hi()))
        })
    }

    pub fn alignment_pairs(&self) -> usize {
        count_pairs(&self.arcs, |a, b| {
            is_alignment((a.lo(), a.hi(), a.side), (b.lo(), b.hi(), b.side))
        })
    }

    pub fn render(&self) -> String {
        let n = self.n;
        let width = 4 * 2 * n + 1;
        let col = |pos: usize| 4 * ((pos - 1) / 2) + 2 * ((pos - 1) % 2);
        let mut axis = vec![' '; width];
        let mut labels = vec![' '; width];
        for label in (1..=n as i32).rev().map(|i| -i).chain(1..=n as i32) {
            let (l, _) = full_positions(n, label);
            let x = col(l);
            ascii::put_at(&mut axis, x, "o=o");
            ascii::put_centered(&mut labels, x + 1, &label.to_string());
        }
        let arcs: Vec<ascii::Arc> = self
            .arcs
            .iter()
            .map(|a| ascii::Arc {
                left: col(a.lo()),
                right: col(a.hi()),
                upper: a.side == Side::Upper,
            })
            .collect();
        let upper = self.arcs.iter().filter(|a| a.side == Side::Upper).count();
        let mut out = ascii::draw(
            &axis.iter().collect::<String>(),
            &labels.iter().collect::<String>(),
            &arcs,
        );
        out.push_str(&format!(
            "{} pignoses, {} upper arcs, {} lower arcs\n",
            2 * n,
            upper,
            self.arcs.len() - upper
        ));
        out
    }
}

fn interleaved(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
}

fn nested(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 < b.0 && b.1 < a.1) || (b.0 < a.0 && a.1 < b.1)
}

fn disjoint(a: (usize, usize), b: (usize, usize)) -> bool {
    a.1 < b.0 || b.1 < a.0
}

/// Nested arcs on one side, or disjoint arcs on opposite sides.
fn is_alignment(a: (usize, usize, Side), b: (usize, usize, Side)) -> bool {
    let (ia, ib) = ((a.0, a.1), (b.0, b.1));
    (a.2 == b.2 && nested(ia, ib)) || (a.2 != b.2 && disjoint(ia, ib))
}

fn count_pairs<T>(items: &[T], pred: impl Fn(&T, &T) -> bool) -> usize {
    let mut c = 0;
    for (k, a) in items.iter().enumerate() {
        for b in &items[k + 1..] {
            if pred(a, b) {
                c += 1;
            }
        }
    }
    c
}

/// Alignments of `π ∈ B_n`, counted on the full pignose diagram.
pub fn alignments(p: &SignedPermutation) -> usize {
    FullPignoseDiagram::new(p).alignment_pairs()
}

/// Alignments of an unsigned permutation, counted on its pignose diagram.
pub fn alignments_unsigned(p: &SignedPermutation) -> usize {
    assert!(p.is_unsigned(), "alignments_unsigned needs a permutation without signs");
    let arcs: Vec<(usize, usize, Side)> = pignose_arcs(p)
        .into_iter()
        .map(|a| {
            let side = if a.kind == ArcKind::Upper { Side::Upper } else { Side::Lower };
            (a.source.min(a.target), a.source.max(a.target), side)
        })
        .collect();
    count_pairs(&arcs, |a, b| is_alignment(*a, *b))
}

/// Upper and lower arcs of the full diagram straddling the vertical line
/// through the pignose labeled `sign·k`.
pub fn line_counts(p: &SignedPermutation, k: usize, side: Side) -> (usize, usize) {
    let label = match side {
        Side::Upper => k as i32,
        Side::Lower => -(k as i32),
    };
    let (l, r) = full_positions(p.len(), label);
    let d = FullPignoseDiagram::new(p);
    straddle_counts(d.arcs.iter().map(|a| (a.lo(), a.hi(), a.side)), l, r)
}

/// Same as [`line_counts`] on the pignose diagram of an unsigned permutation.
pub fn pignose_line_counts(p: &SignedPermutation, k: usize) -> (usize, usize) {
    assert!(p.is_unsigned(), "pignose_line_counts needs a permutation without signs");
    let arcs = pignose_arcs(p).into_iter().map(|a| {
        let side = if a.kind == ArcKind::Upper { Side::Upper } else { Side::Lower };
        (a.source.min(a.target), a.source.max(a.target), side)
    });
    straddle_counts(arcs, 2 * k - 1, 2 * k)
}

fn straddle_counts(
    arcs: impl Iterator<Item = (usize, usize, Side)>,
    l: usize,
    r: usize,
) -> (usize, usize) {
    let mut up = 0;
    let mut down = 0;
    for (lo, hi, side) in arcs {
        if lo <= l && hi >= r {
            match side {
                Side::Upper => up += 1,
                Side::Lower => down += 1,
            }
        }
    }
    (up, down)
}

/// ASCII drawing of the single-sided pignose diagram; each spiral turns
/// around its own column left of pignose 1.
pub fn render_pignose(p: &SignedPermutation) -> String {
    let n = p.len();
    let arcs = pignose_arcs(p);
    let spirals = arcs.iter().filter(|a| a.kind == ArcKind::Spiral).count();
    let margin = 2 * spirals;
    let col = |pos: usize| margin + 4 * ((pos - 1) / 2) + 2 * ((pos - 1) % 2);
    let width = margin + 4 * n + 1;
    let mut axis = vec![' '; width];
    let mut labels = vec![' '; width];
    for i in 1..=n {
        let x = col(2 * i - 1);
        ascii::put_at(&mut axis, x, "o=o");
        ascii::put_centered(&mut labels, x + 1, &i.to_string());
    }
    let mut drawn = Vec::new();
    let mut turn = margin;
    for a in &arcs {
        match a.kind {
            ArcKind::Spiral => {
                turn -= 2;
                axis[turn] = ':';
                drawn.push(ascii::Arc { left: turn, right: col(a.source), upper: false });
                drawn.push(ascii::Arc { left: turn, right: col(a.target), upper: true });
            }
            kind => drawn.push(ascii::Arc {
                left: col(a.source.min(a.target)),
                right: col(a.source.max(a.target)),
                upper: kind == ArcKind::Upper,
            }),
        }
    }
    let mut out = ascii::draw(
        &axis.iter().collect::<String>(),
        &labels.iter().collect::<String>(),
        &drawn,
    );
    out.push_str(&format!("{n} pignoses, {spirals} spiral arcs\n"));
    out
}

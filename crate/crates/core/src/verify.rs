//! Named exhaustive checks behind `btableaux verify`.
//!
//! Polynomial-valued suites run up to `max_n`, integer-valued suites up to
//! `max_n_int`. A failing check carries the first counterexample, written in
//! the same text formats the parsers accept.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::ansatz::{self, Solution};
use crate::error::{Error, Result};
use crate::exactalg::{binom, factorial, Monomial, MultiPoly, Var};
use crate::genfun::{self, GenTable, Variant};
use crate::matchings::phi;
use crate::paths;
use crate::signedperm::{
    alignments, alignments_unsigned, check_limit, crossings, crossings_via_configurations,
    enumerate_bn, enumerate_sn, pattern_stats, stats, SignedPermutation, DEFAULT_LIMIT,
};
use crate::tableaux::{self, enumerate_pt, enumerate_ptb, zigzag_a, zigzag_b};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: usize,
    pub max_n_int: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_n: 5,
            max_n_int: 7,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub name: &'static str,
    pub range: String,
    pub status: Status,
    pub counterexample: Option<String>,
    pub note: Option<String>,
    #[serde(serialize_with = "ser_secs")]
    pub elapsed: Duration,
}

fn ser_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64((d.as_secs_f64() * 1000.0).round() / 1000.0)
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn line(&self) -> String {
        let mut s = format!(
            "{:<5} {:<13} {:<28} {:>8.3}s",
            match self.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            },
            self.name,
            self.range,
            self.elapsed.as_secs_f64()
        );
        if let Some(c) = &self.counterexample {
            s.push_str(&format!("\n      counterexample: {c}"));
        }
        if let Some(n) = &self.note {
            s.push_str(&format!("\n      note: {n}"));
        }
        s
    }
}

type Verdict = std::result::Result<(), String>;

struct Outcome {
    range: String,
    verdict: Verdict,
    note: Option<String>,
}

fn outcome(range: String, verdict: Verdict) -> Result<Outcome> {
    Ok(Outcome {
        range,
        verdict,
        note: None,
    })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same_poly(what: impl std::fmt::Display, expected: &MultiPoly, actual: &MultiPoly) -> Verdict {
    ensure(expected == actual, || {
        format!("{what}: expected {expected}, got {actual}")
    })
}

type CheckFn = fn(&Bounds) -> Result<Outcome>;

const CHECKS: &[(&str, CheckFn)] = &[
    ("ansatz", check_ansatz),
    ("binomial", check_binomial),
    ("bndes", check_bndes),
    ("cfrac", check_cfrac),
    ("cro-al", check_cro_al),
    ("distribution", check_distribution),
    ("formula", check_formula),
    ("fv1", check_fv1),
    ("fz1", check_fz1),
    ("lagrange", check_lagrange),
    ("narayana", check_narayana),
    ("paths", check_paths),
    ("recurrence", check_recurrence),
    ("schroeder", check_schroeder),
    ("symmetry", check_symmetry),
    ("zigzag", check_zigzag),
];

/// Names of all checks, sorted.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Runs one check by name.
pub fn run_check(name: &str, bounds: &Bounds) -> Result<VerifyReport> {
    let (name, f) = CHECKS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("unknown check {name:?}"),
        })?;
    check_limit(bounds.max_n, DEFAULT_LIMIT)?;
    check_limit(bounds.max_n_int, DEFAULT_LIMIT)?;
    let start = Instant::now();
    let o = f(bounds)?;
    Ok(VerifyReport {
        name,
        range: o.range,
        status: if o.verdict.is_ok() { Status::Pass } else { Status::Fail },
        counterexample: o.verdict.err(),
        note: o.note,
        elapsed: start.elapsed(),
    })
}

/// Runs the named checks (`"all"` expands to every check) concurrently,
/// calling `sink` as each completes; returns the reports sorted by name.
pub fn run(
    names: &[String],
    bounds: &Bounds,
    sink: impl Fn(&VerifyReport) + Sync,
) -> Result<Vec<VerifyReport>> {
    let mut selected: Vec<&str> = Vec::new();
    for n in names {
        if n == "all" {
            selected.extend(check_names());
        } else {
            selected.push(n.as_str());
        }
    }
    selected.sort_unstable();
    selected.dedup();
    let mut reports = selected
        .par_iter()
        .map(|n| {
            let r = run_check(n, bounds)?;
            sink(&r);
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(|r| r.name);
    Ok(reports)
}

fn upto(n: usize) -> String {
    format!("n <= {n}")
}

fn check_zigzag(b: &Bounds) -> Result<Outcome> {
    let verdict = (|| -> Result<Verdict> {
        let a: tableaux::PermTableau = "vhvvhhhv\n1001\n011\n001\n-\n".parse()?;
        let v = ensure(zigzag_a(&a)?.to_string() == "7,1,6,5,3,4,2,8", || {
            format!("tableau {:?} maps to {}", a.to_text(), zigzag_a(&a).unwrap())
        });
        if v.is_err() {
            return Ok(v);
        }
        let t: tableaux::PermTableauB = "hvhvhhv\n0*\n11*\n000*\n0101*\n111\n01\n-\n".parse()?;
        let v = ensure(zigzag_b(&t)?.to_string() == "-3,6,2,5,-4,1,7", || {
            format!("tableau {:?} maps to {}", t.to_text(), zigzag_b(&t).unwrap())
        });
        if v.is_err() {
            return Ok(v);
        }
        for n in 0..=b.max_n {
            let mut seen = HashSet::new();
            for t in enumerate_ptb(n)? {
                let p = zigzag_b(&t)?;
                let s = t.stats()?;
                let ps = stats(&p);
                if (ps.wex, ps.neg, crossings(&p)) != (s.row, s.diag, s.so) {
                    return Ok(Err(format!(
                        "tableau {:?} -> {p}: (wex,neg,cro) = ({},{},{}), (row,diag,so) = ({},{},{})",
                        t.to_text(),
                        ps.wex,
                        ps.neg,
                        crossings(&p),
                        s.row,
                        s.diag,
                        s.so
                    )));
                }
                if !seen.insert(p.clone()) {
                    return Ok(Err(format!("image {p} reached twice (tableau {:?})", t.to_text())));
                }
            }
            let total = factorial(n as u64) << n;
            if BigInt::from(seen.len()) != total {
                return Ok(Err(format!("n = {n}: {} images, expected {total}", seen.len())));
            }
            let sn: HashSet<_> = enumerate_pt(n)?.map(|t| zigzag_a(&t)).collect::<Result<_>>()?;
            if BigInt::from(sn.len()) != factorial(n as u64) {
                return Ok(Err(format!("n = {n}: type A images {}", sn.len())));
            }
            let v = same_poly(
                format!("n = {n}, tableaux vs permutations"),
                &genfun::b_poly_perms(n)?,
                &tableaux::b_poly_tableaux(n)?,
            );
            if v.is_err() {
                return Ok(v);
            }
        }
        Ok(Ok(()))
    })()?;
    outcome(upto(b.max_n), verdict)
}

fn check_symmetry(b: &Bounds) -> Result<Outcome> {
    let mut verdict = Ok(());
    'outer: for n in 1..=b.max_n {
        let table = GenTable::build(n)?;
        for k in 1..=2 * n {
            let (l, r) = (table.get(Variant::Star, k), table.get(Variant::Star, 2 * n + 1 - k));
            if l != r {
                verdict = Err(format!("n = {n}: B*_{{{n},{k}}} = {l} but B*_{{{n},{}}} = {r}", 2 * n + 1 - k));
                break 'outer;
            }
        }
        let mut seen = HashSet::new();
        for p in enumerate_bn(n)?.filter(|p| p.at(1) > 0) {
            let q = phi(&p)?;
            let (sp, sq) = (stats(&p), stats(&q));
            let ok = q.at(1) < 0
                && crossings(&q) == crossings(&p)
                && sq.neg == sp.neg + 1
                && sq.fwex + sp.fwex == 2 * n + 1;
            if !ok {
                verdict = Err(format!("phi({p}) = {q} does not transport (cro, neg, fwex)"));
                break 'outer;
            }
            if !seen.insert(q.clone()) {
                verdict = Err(format!("phi({p}) = {q} reached twice"));
                break 'outer;
            }
        }
    }
    outcome(upto(b.max_n), verdict)
}

fn check_cro_al(b: &Bounds) -> Result<Outcome> {
    let nb = b.max_n_int.min(b.max_n + 1);
    let mut verdict = Ok(());
    for n in 0..=nb {
        let bad = crate::par::find_any_chunks(enumerate_bn(n)?, |p| {
            let c = crossings(p);
            c != crossings_via_configurations(p)
                || 2 * c + alignments(p) + 2 * n != n * n + stats(p).fwex
        });
        if let Some(p) = bad {
            verdict = Err(format!(
                "{p}: cro = {}, cro by configurations = {}, al = {}, fwex = {}",
                crossings(&p),
                crossings_via_configurations(&p),
                alignments(&p),
                stats(&p).fwex
            ));
            break;
        }
    }
    if verdict.is_ok() {
        for n in 1..=b.max_n_int {
            let bad = crate::par::find_any_chunks(enumerate_sn(n)?, |s| {
                let k = stats(s).wex;
                crossings(s) + alignments_unsigned(s) != (k - 1) * (n - k)
            });
            if let Some(s) = bad {
                verdict = Err(format!("{s}: cro + al != (wex-1)(n-wex)"));
                break;
            }
        }
    }
    outcome(format!("B_n n <= {nb}, S_n n <= {}", b.max_n_int), verdict)
}

fn check_ansatz(b: &Bounds) -> Result<Outcome> {
    let size = (b.max_n + 2).max(8);
    let mut verdict = Ok(());
    for which in [Solution::First, Solution::Second] {
        if let Err(e) = ansatz::verify_relations(&which.system(size)) {
            verdict = Err(format!("solution {which:?}, N = {size}: {e}"));
            break;
        }
    }
    'outer: for n in 0..=b.max_n {
        if verdict.is_err() {
            break;
        }
        let expected = genfun::b_poly_perms(n)?;
        for which in [Solution::First, Solution::Second] {
            for size in [n + 1, n + 2, n + 4] {
                let got = ansatz::ansatz_bn_truncated(n, which, size)?;
                if got != expected {
                    verdict = Err(format!("n = {n}, solution {which:?}, N = {size}: expected {expected}, got {got}"));
                    break 'outer;
                }
            }
        }
    }
    outcome(format!("{}, relations at N = {size}", upto(b.max_n)), verdict)
}

fn check_recurrence(b: &Bounds) -> Result<Outcome> {
    let r = ansatz::recurrence_all(b.max_n);
    let mut verdict = Ok(());
    for (n, rn) in r.iter().enumerate() {
        verdict = same_poly(format!("B_{n}"), &genfun::b_poly_perms(n)?, rn);
        if verdict.is_err() {
            break;
        }
    }
    outcome(upto(b.max_n), verdict)
}

fn check_cfrac(b: &Bounds) -> Result<Outcome> {
    let mut verdict = ansatz::cf_matches_solution1(b.max_n.max(6)).map_err(|e| e.to_string());
    if verdict.is_ok() {
        let s = ansatz::cf_series(b.max_n);
        for n in 0..=b.max_n {
            verdict = same_poly(format!("[z^{n}] J-fraction"), &genfun::b_poly_perms(n)?, s.coeff(n));
            if verdict.is_err() {
                break;
            }
        }
    }
    outcome(upto(b.max_n), verdict)
}

fn check_paths(b: &Bounds) -> Result<Outcome> {
    let mut verdict = Ok(());
    for n in 0..=b.max_n {
        let expected = genfun::b_poly_perms(n)?;
        let (mn, nn) = (paths::mn_sum(n)?, paths::nn_sum(n)?);
        verdict = same_poly(format!("sum over M_{n}"), &expected, &mn)
            .and_then(|_| same_poly(format!("sum over N_{n}"), &expected, &nn));
        if verdict.is_err() {
            break;
        }
    }
    outcome(upto(b.max_n), verdict)
}

fn sp(s: &str) -> SignedPermutation {
    s.parse().expect("fixed example")
}

fn check_fv1(b: &Bounds) -> Result<Outcome> {
    let example = paths::fv1(&sp("3,-5,-2,4,1"));
    let mut verdict = ensure(
        example.weight()? == Monomial::new(6, 2, 3),
        || format!("fv1(3,-5,-2,4,1) = {example} has weight {}", MultiPoly::term(1, example.weight().unwrap())),
    );
    'outer: for n in 1..=b.max_n {
        if verdict.is_err() {
            break;
        }
        let mut seen = HashSet::new();
        for p in enumerate_bn(n)? {
            let path = paths::fv1(&p);
            let s = pattern_stats(&p);
            let want = Monomial::new(s.hasc as u32, p.neg_count() as u32, s.pat as u32);
            match path.weight() {
                Ok(w) if w == want => {}
                Ok(w) => {
                    verdict = Err(format!("fv1({p}) = {path}: weight {}, expected {}", MultiPoly::term(1, w), MultiPoly::term(1, want)));
                    break 'outer;
                }
                Err(e) => {
                    verdict = Err(format!("fv1({p}) = {path}: {e}"));
                    break 'outer;
                }
            }
            if p.is_unsigned() && path.steps.iter().any(|s| s.kind % 2 == 0) {
                verdict = Err(format!("fv1({p}) = {path} uses an even step type"));
                break 'outer;
            }
            if !seen.insert(path.clone()) {
                verdict = Err(format!("fv1({p}) = {path} reached twice"));
                break 'outer;
            }
        }
    }
    outcome(upto(b.max_n), verdict)
}

fn check_fz1(b: &Bounds) -> Result<Outcome> {
    let example = paths::fz1(&sp("-5,4,2,-3,1"));
    let mut verdict = ensure(example.to_string() == "@2 L:1 Uy:1 D:0 D:1 D:0", || {
        format!("fz1(-5,4,2,-3,1) = {example}")
    });
    'outer: for n in 1..=b.max_n {
        if verdict.is_err() {
            break;
        }
        let mut seen = HashSet::new();
        for p in enumerate_bn(n)? {
            let suffix = paths::fz1(&p);
            let want = Monomial::new(stats(&p).fwex as u32, p.neg_count() as u32, crossings(&p) as u32);
            match suffix.weight() {
                Ok(w) if w == want => {}
                Ok(w) => {
                    verdict = Err(format!("fz1({p}) = {suffix}: weight {}, expected {}", MultiPoly::term(1, w), MultiPoly::term(1, want)));
                    break 'outer;
                }
                Err(e) => {
                    verdict = Err(format!("fz1({p}) = {suffix}: {e}"));
                    break 'outer;
                }
            }
            if !seen.insert(suffix.clone()) {
                verdict = Err(format!("fz1({p}) = {suffix} reached twice"));
                break 'outer;
            }
        }
    }
    outcome(upto(b.max_n), verdict)
}

fn check_bndes(b: &Bounds) -> Result<Outcome> {
    let mut verdict = Ok(());
    let mut literal_fails = None;
    for n in 0..=b.max_n {
        let expected = genfun::b_poly_perms(n)?;
        let (by_hasc, by_fdes) = (genfun::b_poly_by_hasc(n)?, genfun::b_poly_by_fdes(n)?);
        verdict = same_poly(format!("n = {n}, (hasc, neg, pat)"), &expected, &by_hasc)
            .and_then(|_| same_poly(format!("n = {n}, (2n - fdes, fneg, mot+)"), &expected, &by_fdes));
        if verdict.is_err() {
            break;
        }
        if n >= 1 && literal_fails.is_none() && genfun::b_poly_by_fdes_plus_one(n)? != expected {
            literal_fails = Some(n);
        }
    }
    let mut o = outcome(upto(b.max_n), verdict)?;
    o.note = literal_fails.map(|n| format!("the exponent fdes + 1 in place of 2n - fdes already differs at n = {n}"));
    Ok(o)
}

fn check_formula(b: &Bounds) -> Result<Outcome> {
    let mut verdict = ansatz::closed_forms_check(b.max_n_int)?.map(|_| ()).map_err(|m| m.to_string());
    if verdict.is_ok() {
        for n in 0..=b.max_n {
            let brute = genfun::b_poly_perms(n)?;
            let form = ansatz::closed_form_y1q(n, ansatz::ClosedForm::Telescoped)?;
            verdict = same_poly(format!("B_{n}(y,1,q)"), &brute.subst(&[(Var::T, 1)]), &form);
            if verdict.is_err() {
                break;
            }
        }
    }
    outcome(
        format!("closed forms n <= {}, brute force n <= {}", b.max_n_int, b.max_n),
        verdict,
    )
}

fn check_lagrange(_: &Bounds) -> Result<Outcome> {
    let mut verdict = Ok(());
    for k in 0..=4 {
        if let Err(m) = ansatz::lagrange_check(k, 10)? {
            verdict = Err(format!("k = {k}: {m}"));
            break;
        }
    }
    outcome("k <= 4, order 10".into(), verdict)
}

fn check_schroeder(_: &Bounds) -> Result<Outcome> {
    let verdict = ansatz::schroeder_lemma_check(8).map(|_| ()).map_err(|m| m.to_string());
    outcome("order 8".into(), verdict)
}

fn check_narayana(b: &Bounds) -> Result<Outcome> {
    let mut verdict = Ok(());
    for n in 1..=b.max_n_int {
        if let Err(m) = ansatz::narayana_b_check(n)? {
            verdict = Err(m.to_string());
            break;
        }
    }
    outcome(upto(b.max_n_int), verdict)
}

fn check_binomial(b: &Bounds) -> Result<Outcome> {
    let top = b.max_n_int + 1;
    let r = ansatz::recurrence_all(top);
    let mut verdict = Ok(());
    for (n, rn) in r.iter().enumerate().skip(1) {
        if let Err(m) = ansatz::q_minus_one_check(n, rn) {
            verdict = Err(m.to_string());
            break;
        }
    }
    outcome(format!("{} (recurrence values)", upto(top)), verdict)
}

fn check_distribution(b: &Bounds) -> Result<Outcome> {
    let mut verdict = Ok(());
    'outer: for n in 0..=b.max_n_int {
        let table = GenTable::build(n)?;
        let mut total = BigInt::from(0);
        for k in 0..=n {
            let e = table.get(Variant::EulerianB, k);
            let at1 = e.subst(&[(Var::Q, 1)]);
            let count = at1.coeff(&Monomial::ONE);
            total += &count;
            let des = genfun::eulerian_b_count(n, k)?;
            let nc = e.coeff(&Monomial::ONE);
            let checks = [
                (count == des, format!("E^B_{{{n},{k}}}(1) = {count}, #des_B = {des}")),
                (e == table.get(Variant::EulerianB, n - k), format!("E^B_{{{n},{k}}} = {e} is not symmetric")),
                (nc == binom(n as i64, k as i64).pow(2), format!("#noncrossing with floor(fwex/2) = {k} at n = {n} is {nc}")),
            ];
            if let Some((_, msg)) = checks.into_iter().find(|(ok, _)| !ok) {
                verdict = Err(msg);
                break 'outer;
            }
            if n <= b.max_n {
                let tab = genfun::eulerian_b_poly_tableaux(n, k)?;
                if tab != e {
                    verdict = Err(format!("E^B_{{{n},{k}}}: tableaux {tab}, permutations {e}"));
                    break 'outer;
                }
            }
        }
        let want = factorial(n as u64) << n;
        if total != want {
            verdict = Err(format!("n = {n}: sum of E^B_{{n,k}}(1) = {total}, expected {want}"));
            break;
        }
    }
    outcome(
        format!("n <= {}, tableaux n <= {}", b.max_n_int, b.max_n),
        verdict,
    )
}

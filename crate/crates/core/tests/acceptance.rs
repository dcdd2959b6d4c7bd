//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Brute-force enumeration is the reference throughout.

use std::process::ExitCode;
use std::time::Instant;

use btableaux::ansatz::{self, ClosedForm, Solution};
use btableaux::exactalg::{binom, factorial, Monomial, MultiPoly, Var};
use btableaux::genfun::{self, GenTable, Variant};
use btableaux::matchings::phi;
use btableaux::paths;
use btableaux::signedperm::{
    alignments, alignments_unsigned, crossings, enumerate_bn, enumerate_sn, pattern_stats, stats,
    SignedPermutation,
};
use btableaux::tableaux::{self, enumerate_ptb, zigzag_a, zigzag_b, PermTableau, PermTableauB};
use num_bigint::BigInt;

type Verdict = Result<String, String>;

fn poly(s: &str) -> MultiPoly {
    s.parse().expect("literal polynomial")
}

fn sp(s: &str) -> SignedPermutation {
    s.parse().expect("literal permutation")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq_poly(what: impl std::fmt::Display, expected: &MultiPoly, actual: &MultiPoly) -> Result<(), String> {
    ensure(expected == actual, || format!("{what}: expected {expected}, got {actual}"))
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// `B_n` by brute force over `B_n`, `n ≤ 7`.
struct Reference {
    b: Vec<MultiPoly>,
}

impl Reference {
    fn new() -> Self {
        Reference {
            b: (0..=7).map(|n| genfun::b_poly_perms(n).expect("n within limit")).collect(),
        }
    }
}

fn c1_base(_: &Reference) -> Verdict {
    let printed = [
        poly("1"),
        poly("y^2 + y*t"),
        poly("y^4 + 2*y^3*t + y^3*t*q + y^2*t^2*q + y^2*t^2 + y^2 + y*t"),
    ];
    for (n, p) in printed.iter().enumerate() {
        eq_poly(format!("B_{n} by permutations"), p, &genfun::b_poly_perms(n).map_err(err)?)?;
        eq_poly(format!("B_{n} by tableaux"), p, &tableaux::b_poly_tableaux(n).map_err(err)?)?;
    }
    Ok("B_0, B_1, B_2 equal the printed polynomials".into())
}

fn c2_tableaux(r: &Reference) -> Verdict {
    for n in 0..=6 {
        eq_poly(format!("n = {n}"), &r.b[n], &tableaux::b_poly_tableaux(n).map_err(err)?)?;
    }
    let count = enumerate_ptb(6).map_err(err)?.count();
    ensure(count == 46080, || format!("|PT_B(6)| = {count}"))?;
    Ok("tableaux = permutations for n <= 6; 46080 tableaux at n = 6".into())
}

fn c3_zigzag(_: &Reference) -> Verdict {
    let a: PermTableau = "vhvvhhhv\n1001\n011\n001\n-\n".parse().map_err(err)?;
    let img = zigzag_a(&a).map_err(err)?.to_string();
    ensure(img == "7,1,6,5,3,4,2,8", || format!("type A example gives {img}"))?;
    let b: PermTableauB = "hvhvhhv\n0*\n11*\n000*\n0101*\n111\n01\n-\n".parse().map_err(err)?;
    let img = zigzag_b(&b).map_err(err)?.to_string();
    ensure(img == "-3,6,2,5,-4,1,7", || format!("type B example gives {img}"))?;
    let mut total = 0;
    for n in 0..=5 {
        let mut seen = std::collections::HashSet::new();
        for t in enumerate_ptb(n).map_err(err)? {
            let p = zigzag_b(&t).map_err(err)?;
            let s = t.stats().map_err(err)?;
            let ps = stats(&p);
            ensure((ps.wex, ps.neg, crossings(&p)) == (s.row, s.diag, s.so), || {
                format!("{:?} -> {p}", t.to_text())
            })?;
            ensure(seen.insert(p.clone()), || format!("{p} reached twice"))?;
        }
        total += seen.len();
    }
    Ok(format!("both examples exact; {total} tableaux, n <= 5, transport (wex,neg,cro) = (row,diag,so)"))
}

fn c4_symmetry(_: &Reference) -> Verdict {
    for n in 1..=5 {
        let t = GenTable::build(n).map_err(err)?;
        for k in 1..=2 * n {
            let (l, r) = (t.get(Variant::Star, k), t.get(Variant::Star, 2 * n + 1 - k));
            eq_poly(format!("B*_{{{n},{k}}} vs B*_{{{n},{}}}", 2 * n + 1 - k), &l, &r)?;
        }
    }
    for n in 1..=4 {
        let mut seen = std::collections::HashSet::new();
        for p in enumerate_bn(n).map_err(err)?.filter(|p| p.at(1) > 0) {
            let q = phi(&p).map_err(err)?;
            let ok = crossings(&q) == crossings(&p)
                && q.neg_count() == p.neg_count() + 1
                && stats(&q).fwex + stats(&p).fwex == 2 * n + 1
                && q.at(1) < 0;
            ensure(ok, || format!("phi({p}) = {q}"))?;
            ensure(seen.insert(q.clone()), || format!("phi({p}) = {q} reached twice"))?;
        }
        let half = (factorial(n as u64) << (n - 1)).to_string();
        ensure(seen.len().to_string() == half, || format!("n = {n}: {} images", seen.len()))?;
    }
    Ok("B*_{n,k} = B*_{n,2n+1-k} for n <= 5; phi bijective with (cro, neg+1, 2n+1-fwex) for n <= 4".into())
}

fn c5_eulerian(_: &Reference) -> Verdict {
    for n in 0..=7 {
        let t = GenTable::build(n).map_err(err)?;
        let mut sum = BigInt::from(0);
        for k in 0..=n {
            let e = t.get(Variant::EulerianB, k);
            let at = |q: i64| e.subst(&[(Var::Q, q)]).coeff(&Monomial::ONE);
            let c = binom(n as i64, k as i64);
            ensure(at(-1) == c, || format!("E^B_{{{n},{k}}}(-1) = {}", at(-1)))?;
            ensure(at(0) == &c * &c, || format!("E^B_{{{n},{k}}}(0) = {}", at(0)))?;
            sum += at(1);
            if n <= 6 {
                eq_poly(format!("E^B_{{{n},{k}}} symmetry"), &e, &t.get(Variant::EulerianB, n - k))?;
            }
        }
        let want = factorial(n as u64) << n;
        ensure(sum == want, || format!("n = {n}: sum E^B(1) = {sum}"))?;
    }
    Ok("E(-1) = C(n,k), E(0) = C(n,k)^2, sum E(1) = 2^n n! for n <= 7; symmetry for n <= 6".into())
}

fn c6_corteel(_: &Reference) -> Verdict {
    let mut count = 0usize;
    for n in 0..=6 {
        for p in enumerate_bn(n).map_err(err)? {
            let lhs = 2 * crossings(&p) + alignments(&p) + 2 * n;
            ensure(lhs == n * n + stats(&p).fwex, || format!("{p}"))?;
            count += 1;
        }
    }
    for n in 1..=7 {
        for s in enumerate_sn(n).map_err(err)? {
            let k = stats(&s).wex;
            ensure(crossings(&s) + alignments_unsigned(&s) == (k - 1) * (n - k), || format!("{s}"))?;
            count += 1;
        }
    }
    Ok(format!("2cro + al = n^2 - 2n + fwex on B_n, n <= 6; type A on S_n, n <= 7 ({count} permutations)"))
}

fn c7_ansatz(r: &Reference) -> Verdict {
    for which in [Solution::First, Solution::Second] {
        ansatz::verify_relations(&which.system(8)).map_err(|e| format!("{which:?}: {e}"))?;
        for n in 0..=6 {
            for size in [n + 1, n + 2, n + 4] {
                let got = ansatz::ansatz_bn_truncated(n, which, size).map_err(err)?;
                eq_poly(format!("{which:?}, n = {n}, N = {size}"), &r.b[n], &got)?;
            }
        }
    }
    Ok("relations hold at N = 8; both solutions give B_n for n <= 6 at N = n+1, n+2, n+4".into())
}

fn c8_recurrence(r: &Reference) -> Verdict {
    let rec = ansatz::recurrence_all(8);
    for n in 0..=7 {
        eq_poly(format!("recurrence, n = {n}"), &r.b[n], &rec[n])?;
    }
    let s = ansatz::cf_series(6);
    for n in 0..=6 {
        eq_poly(format!("J-fraction, n = {n}"), &r.b[n], s.coeff(n))?;
    }
    for n in 1..=8 {
        ansatz::q_minus_one_check(n, &rec[n]).map_err(err)?;
    }
    Ok("recurrence n <= 7, J-fraction n <= 6, q = -1 closed form n <= 8 (n = 8 on the recurrence value)".into())
}

fn c9_paths(r: &Reference) -> Verdict {
    for n in 0..=5 {
        eq_poly(format!("sum over M_{n}"), &r.b[n], &paths::mn_sum(n).map_err(err)?)?;
        eq_poly(format!("sum over N_{n}"), &r.b[n], &paths::nn_sum(n).map_err(err)?)?;
    }
    for n in 1..=4 {
        let mut seen_v = std::collections::HashSet::new();
        let mut seen_z = std::collections::HashSet::new();
        for p in enumerate_bn(n).map_err(err)? {
            let ps = pattern_stats(&p);
            let neg = p.neg_count() as u32;
            let v = paths::fv1(&p);
            let w = v.weight().map_err(err)?;
            ensure(w == Monomial::new(ps.hasc as u32, neg, ps.pat as u32), || format!("fv1({p}) = {v}"))?;
            let z = paths::fz1(&p);
            let w = z.weight().map_err(err)?;
            let s = stats(&p);
            ensure(w == Monomial::new(s.fwex as u32, neg, crossings(&p) as u32), || format!("fz1({p}) = {z}"))?;
            ensure(seen_v.insert(v), || format!("fv1 not injective at {p}"))?;
            ensure(seen_z.insert(z), || format!("fz1 not injective at {p}"))?;
        }
    }

    let z = paths::fz1(&sp("-5,4,2,-3,1"));
    let printed_z: Vec<MultiPoly> = ["q", "y^2*q", "1", "q", "1"].iter().map(|s| poly(s)).collect();
    let got_z: Vec<MultiPoly> = z.step_weights().into_iter().map(|m| MultiPoly::term(1, m)).collect();
    ensure(z.start_height == 2 && got_z == printed_z, || format!("fz1 figure: got {z}"))?;

    let v = paths::fv1(&sp("3,-5,-2,4,1"));
    let total = MultiPoly::term(1, v.weight().map_err(err)?);
    eq_poly("fv1 figure total", &poly("y^6*t^2*q^3"), &total)?;
    let printed_v = ["1", "y*t*q", "y^2", "y^2*q", "y*t*q"];
    let got_v: Vec<String> = v.step_weights().into_iter().map(|m| MultiPoly::term(1, m).to_string()).collect();
    ensure(got_v == printed_v, || {
        format!(
            "fv1 figure step weights: printed [{}], step rules give [{}] for {v}; \
             totals agree (y^6*t^2*q^3), the printed ytq on step 2 is below its index range",
            printed_v.join(", "),
            got_v.join(", ")
        )
    })?;
    Ok("model sums n <= 5; fv1, fz1 injective and weight-preserving n <= 4; both figures".into())
}

fn c10_bndes(r: &Reference) -> Verdict {
    let mut literal = None;
    for n in 0..=6 {
        eq_poly(format!("(hasc, neg, pat), n = {n}"), &r.b[n], &genfun::b_poly_by_hasc(n).map_err(err)?)?;
        eq_poly(format!("(2n - fdes, fneg, mot+), n = {n}"), &r.b[n], &genfun::b_poly_by_fdes(n).map_err(err)?)?;
        if n >= 1 && literal.is_none() && genfun::b_poly_by_fdes_plus_one(n).map_err(err)? != r.b[n] {
            literal = Some(n);
        }
    }
    let note = literal
        .map(|n| format!("; with y^(fdes+1) the second sum differs from B_n already at n = {n}"))
        .unwrap_or_default();
    Ok(format!("(hasc, neg, pat) and (2n - fdes, fneg, mot+) give B_n for n <= 6{note}"))
}

fn c11_formula(r: &Reference) -> Verdict {
    for n in 0..=7 {
        let brute = r.b[n].subst(&[(Var::T, 1)]);
        let f1 = ansatz::closed_form_y1q(n, ClosedForm::Telescoped).map_err(err)?;
        let f2 = ansatz::closed_form_y1q(n, ClosedForm::Lemma).map_err(err)?;
        eq_poly(format!("form 1, n = {n}"), &brute, &f1)?;
        eq_poly(format!("form 2, n = {n}"), &brute, &f2)?;
    }
    for n in 0..=6 {
        let at0 = r.b[n].subst(&[(Var::T, 0)]);
        eq_poly(format!("t = 0, n = {n}"), &at0, &ansatz::closed_form_y0q(n).map_err(err)?)?;
    }
    Ok("both forms = B_n(y,1,q) for n <= 7 with exact division by (1-q)^n; t = 0 form for n <= 6".into())
}

fn c12_lemmas(_: &Reference) -> Verdict {
    let items = ansatz::schroeder_lemma_check(8).map_err(err)?;
    for k in 0..=4 {
        ansatz::lagrange_check(k, 10).map_err(err)?.map_err(|m| format!("k = {k}: {m}"))?;
    }
    Ok(format!("relations and series identities to order 8 ({items} items); inversion coefficients k <= 4 to order 10"))
}

fn c13_noncrossing(_: &Reference) -> Verdict {
    for n in 0..=7 {
        let mut counts = vec![0u64; n + 1];
        for p in enumerate_bn(n).map_err(err)? {
            if crossings(&p) == 0 {
                counts[stats(&p).fwex / 2] += 1;
            }
        }
        for (k, &c) in counts.iter().enumerate() {
            let want = binom(n as i64, k as i64).pow(2);
            ensure(BigInt::from(c) == want, || format!("n = {n}, k = {k}: {c} noncrossing, expected {want}"))?;
        }
    }
    Ok("noncrossing counts by floor(fwex/2) are C(n,k)^2 for n <= 7".into())
}

type Criterion = (&'static str, fn(&Reference) -> Verdict);

const CRITERIA: [Criterion; 13] = [
    ("base polynomials", c1_base),
    ("tableaux = permutations", c2_tableaux),
    ("zigzag transport", c3_zigzag),
    ("star symmetry and phi", c4_symmetry),
    ("type B q-Eulerian values", c5_eulerian),
    ("crossings and alignments", c6_corteel),
    ("matrix ansatz", c7_ansatz),
    ("recurrence, J-fraction, q = -1", c8_recurrence),
    ("path models", c9_paths),
    ("descent interpretations", c10_bndes),
    ("closed formulas", c11_formula),
    ("continued-fraction lemmas", c12_lemmas),
    ("noncrossing counts", c13_noncrossing),
];

fn main() -> ExitCode {
    let start = Instant::now();
    let reference = Reference::new();
    println!("reference polynomials B_0..B_7 in {:.2}s", start.elapsed().as_secs_f64());
    let mut failed = 0;
    for (i, (name, f)) in CRITERIA.iter().enumerate() {
        let t = Instant::now();
        let verdict = f(&reference);
        let secs = t.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} criteria, {} passed, {} failed", CRITERIA.len(), CRITERIA.len() - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

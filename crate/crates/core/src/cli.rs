//! Command-line front end: `table`, `verify`, `render` and `series`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 enumeration limit or truncation too small.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::ansatz;
use crate::error::{Error, Result};
use crate::exactalg::Var;
use crate::genfun::{self, GenTable, Variant};
use crate::matchings::OrderedMatching;
use crate::paths::{LabeledMotzkinPath, MotzkinSuffix};
use crate::signedperm::{diagram, SignedPermutation, DEFAULT_LIMIT};
use crate::tableaux::{PermTableau, PermTableauB};
use crate::verify::{self, Bounds};

pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "btableaux", version, about = "Type B permutation tableaux: tables, checks and drawings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a table of coefficient polynomials for one n.
    Table(TableArgs),
    /// Run named exhaustive checks.
    Verify(VerifyArgs),
    /// Draw an object given in its text form.
    Render(RenderArgs),
    /// Print the coefficients of the continued fraction for Σ B_n z^n.
    Series(SeriesArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableKind {
    /// B_{n,k}(t,q) = [y^k] B_n
    Bnk,
    /// B*_{n,k}(t,q)
    Bstar,
    /// E^B_{n,k}(q)
    EulerianB,
    /// E_{n,k}(q), type A
    EulerianA,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(clap::Args, Debug)]
struct TableArgs {
    kind: TableKind,
    #[arg(long, env = "BTABLEAUX_N")]
    n: usize,
    #[arg(long, value_enum, default_value = "csv", env = "BTABLEAUX_FORMAT")]
    format: TableFormat,
    /// Largest n accepted by the enumerator.
    #[arg(long, default_value_t = DEFAULT_LIMIT, env = "BTABLEAUX_LIMIT")]
    limit: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    /// Check names, or `all`.
    #[arg(required = true, value_parser = check_name)]
    names: Vec<String>,
    /// Bound for polynomial-valued suites.
    #[arg(long, default_value_t = 5, env = "BTABLEAUX_MAX_N")]
    max_n: usize,
    /// Bound for integer-valued suites.
    #[arg(long, default_value_t = 7, env = "BTABLEAUX_MAX_N_INT")]
    max_n_int: usize,
    /// Worker threads (default: all cores).
    #[arg(long, env = "BTABLEAUX_JOBS")]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "text", env = "BTABLEAUX_FORMAT")]
    format: ReportFormat,
}

fn check_name(s: &str) -> std::result::Result<String, String> {
    if s == "all" || verify::check_names().contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("expected all or one of: {}", verify::check_names().join(", ")))
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RenderKind {
    /// Permutation tableau, type A or B (B when a `*` marks diagonal cells).
    Tableau,
    /// Pignose diagram of a signed permutation.
    Pignose,
    /// Full pignose diagram of a signed permutation.
    FullPignose,
    /// Ordered matching, `(a,b);(c,d);…`.
    Matching,
    /// Labeled Motzkin path (`U1:0 L3:0 …`) or suffix (`@h Uy:0 …`).
    Path,
}

#[derive(clap::Args, Debug)]
struct RenderArgs {
    kind: RenderKind,
    /// Inline text; `\n` stands for a line break. Read from --file or stdin when absent.
    input: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct SeriesArgs {
    #[arg(long, default_value_t = 6, env = "BTABLEAUX_ORDER")]
    order: usize,
    /// Substitute an integer for t.
    #[arg(long, allow_hyphen_values = true)]
    t: Option<i64>,
    /// Substitute an integer for q.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<i64>,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::LimitExceeded { .. } | Error::TruncationTooSmall { .. } => EXIT_LIMIT,
        Error::Parse { .. }
        | Error::InvalidTableau(_)
        | Error::InvalidPath(_)
        | Error::InvalidPermutation(_)
        | Error::InvalidMatching(_)
        | Error::BadGround
        | Error::PrecondFirstNegative => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

/// Parses `args` (program name first) and runs the command, writing to the
/// given streams. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let res = match cli.command {
        Command::Table(a) => cmd_table(&a, out),
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Render(a) => cmd_render(&a, out),
        Command::Series(a) => cmd_series(&a, out),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::StructureViolation(format!("i/o: {e}"))
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> Result<i32> {
    let text = if let TableKind::EulerianA = a.kind {
        crate::signedperm::check_limit(a.n, a.limit.min(DEFAULT_LIMIT))?;
        let rows = genfun::eulerian_a_rows(a.n)?;
        match a.format {
            TableFormat::Csv => genfun::rows_to_csv(a.n, &rows),
            TableFormat::Json => pretty(&genfun::rows_to_json(a.n, &rows)),
        }
    } else {
        let v = match a.kind {
            TableKind::Bnk => Variant::Plain,
            TableKind::Bstar => Variant::Star,
            _ => Variant::EulerianB,
        };
        let table = GenTable::build_with_limit(a.n, a.limit)?;
        match a.format {
            TableFormat::Csv => table.to_csv(v),
            TableFormat::Json => pretty(&table.to_json(v)),
        }
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(0)
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn size_warning(b: &Bounds, err: &mut dyn Write) {
    let d = Bounds::default();
    if b.max_n <= d.max_n && b.max_n_int <= d.max_n_int {
        return;
    }
    let _ = writeln!(err, "warning: bounds above the defaults ({}, {}); exhaustive set sizes:", d.max_n, d.max_n_int);
    let _ = writeln!(err, "   n       |B_n|     |S_n|");
    let top = b.max_n.max(b.max_n_int);
    for n in d.max_n + 1..=top.min(DEFAULT_LIMIT) {
        let sn: u64 = (1..=n as u64).product();
        let _ = writeln!(err, "  {n:>2}  {:>10}  {sn:>8}", sn << n);
    }
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let bounds = Bounds {
        max_n: a.max_n,
        max_n_int: a.max_n_int,
    };
    size_warning(&bounds, err);
    // reports are written by this thread as they arrive from the workers
    let (tx, rx) = std::sync::mpsc::channel::<String>();
    let reports = std::thread::scope(|scope| {
        let worker = scope.spawn(move || {
            let sink = |r: &verify::VerifyReport| {
                let _ = tx.send(r.line());
            };
            match a.jobs {
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j.max(1))
                    .build()
                    .map_err(|e| Error::StructureViolation(e.to_string()))?
                    .install(|| verify::run(&a.names, &bounds, sink)),
                None => verify::run(&a.names, &bounds, sink),
            }
        });
        for line in rx {
            let _ = writeln!(err, "{line}");
        }
        worker.join().expect("verify worker panicked")
    })?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    match a.format {
        ReportFormat::Text => {
            for r in &reports {
                writeln!(out, "{}", r.line()).map_err(io)?;
            }
            writeln!(out, "{} checks, {} failed", reports.len(), failed).map_err(io)?;
        }
        ReportFormat::Json => {
            let v = serde_json::to_value(&reports).expect("reports serialize");
            out.write_all(pretty(&v).as_bytes()).map_err(io)?;
        }
    }
    Ok(if failed == 0 { 0 } else { EXIT_FAIL })
}

fn read_input(a: &RenderArgs) -> Result<String> {
    match (&a.input, &a.file) {
        (Some(s), _) => Ok(s.replace("\\n", "\n")),
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("cannot read {}: {e}", path.display()),
        }),
        (None, None) => {
            let mut s = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(io)?;
            Ok(s)
        }
    }
}

/// Drawing of `text` read as `kind`.
fn render_text(kind: RenderKind, text: &str) -> Result<String> {
    Ok(match kind {
        RenderKind::Tableau => {
            if text.contains('*') {
                text.parse::<PermTableauB>()?.render()
            } else {
                text.parse::<PermTableau>()?.render()
            }
        }
        RenderKind::Pignose => diagram::render_pignose(&text.parse::<SignedPermutation>()?),
        RenderKind::FullPignose => {
            diagram::FullPignoseDiagram::new(&text.parse::<SignedPermutation>()?).render()
        }
        RenderKind::Matching => text.trim().parse::<OrderedMatching>()?.render(),
        RenderKind::Path => {
            if text.trim_start().starts_with('@') {
                let s: MotzkinSuffix = text.parse()?;
                s.validate()?;
                s.render()
            } else {
                let p: LabeledMotzkinPath = text.parse()?;
                p.validate()?;
                p.render()
            }
        }
    })
}

fn cmd_render(a: &RenderArgs, out: &mut dyn Write) -> Result<i32> {
    let text = read_input(a)?;
    out.write_all(render_text(a.kind, &text)?.as_bytes()).map_err(io)?;
    Ok(0)
}

fn cmd_series(a: &SeriesArgs, out: &mut dyn Write) -> Result<i32> {
    let s = ansatz::cf_series(a.order);
    let mut subs = Vec::new();
    if let Some(t) = a.t {
        subs.push((Var::T, t));
    }
    if let Some(q) = a.q {
        subs.push((Var::Q, q));
    }
    for (n, c) in s.coeffs().iter().enumerate() {
        writeln!(out, "{n}: {}", c.subst(&subs)).map_err(io)?;
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("btableaux").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn tables() {
        let (code, out, _) = call(&["table", "eulerian-b", "--n", "2", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "2,0,1\n2,1,4+2*q\n2,2,1\n");
        let (_, out, _) = call(&["table", "bnk", "--n", "0"]);
        assert_eq!(out, "0,0,1\n");
        let (_, out, _) = call(&["table", "bnk", "--n", "2"]);
        assert_eq!(out.lines().count(), 4);
        assert!(out.starts_with("2,1,t\n"));
        let (_, out, _) = call(&["table", "eulerian-a", "--n", "3"]);
        assert_eq!(out, "3,1,1\n3,2,3+q\n3,3,1\n");
        let (code, out, _) = call(&["table", "bnk", "--n", "1", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v[0]["k"], 1);
        assert_eq!(v[1]["polynomial"], "1");
        assert_eq!(call(&["table", "bnk", "--n", "9"]).0, EXIT_LIMIT);
        assert_eq!(call(&["table", "nope", "--n", "2"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = call(&["verify", "zigzag", "--max-n", "1"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("PASS  zigzag"));
        assert_eq!(call(&["verify", "bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "paths", "--max-n", "12"]).0, EXIT_LIMIT);
    }

    #[test]
    fn renders() {
        let (code, out, _) = call(&["render", "path", "U2:0 L3:0 D7:0"]);
        assert_eq!(code, 0);
        assert!(out.starts_with(" 1 | _\n 0 |/ \\\n"), "{out}");
        let (code, out, _) = call(&["render", "pignose", "4,-6,1,-5,-3,7,2"]);
        assert_eq!(code, 0);
        assert!(out.contains("7 pignoses, 3 spiral arcs"), "{out}");
        let (code, _, err) = call(&["render", "path", "U2:0 X"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("byte 5"), "{err}");
        let (code, _, _) = call(&["render", "tableau", "hvhvhhv\\n0*\\n11*\\n000*\\n0101*\\n111\\n01\\n-\\n"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn series_lines() {
        let (code, out, _) = call(&["series", "--order", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "0: 1\n1: y^2 + y*t\n");
        let (_, out, _) = call(&["series", "--order", "2", "--t", "1", "--q", "-1"]);
        assert_eq!(out.lines().nth(2).unwrap(), "2: y^4 + y^3 + y^2 + y");
    }
}

//! Command-line front end.
//!
//! Exit codes: 0 pass, 1 a check failed, 2 usage or domain error, 3 internal
//! assertion. JSON output carries `"schema": "v1"`; rationals are `"p/q"`.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::bgg::BggComplex;
use crate::error::Error;
use crate::hilb::{self, HilbRow};
use crate::rca_oracle::{verify_relations, Params};
use crate::scalar::{fmt_q, parse_q, Q};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cherednik", version, about = "Exact computations for type A rational Cherednik algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every algebra relation on all monomials up to a degree.
    VerifyRelations(VerifyArgs),
    /// Ranks and homology of the BGG complex at c = m/n.
    Bgg(BggArgs),
    /// Torus fixed points of Hilbert schemes of x^m = y^n.
    #[command(subcommand)]
    Hilb(HilbCommand),
    /// Fixed-point count vs. invariant dimension, graded by codimension.
    Gieseker(GiesekerArgs),
}

fn rational(s: &str) -> std::result::Result<Q, String> {
    parse_q(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub t: Q,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub c: Q,
    #[arg(long)]
    pub max_degree: i64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BggArgs {
    #[arg(long)]
    pub m: i64,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub max_degree: i64,
    /// Print rank data for every (ℓ, degree), not just the summary.
    #[arg(long)]
    pub emit_ranks: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum HilbCommand {
    /// List fixed points of codimension k.
    Enum(HilbEnumArgs),
}

#[derive(Debug, Args)]
pub struct HilbEnumArgs {
    #[arg(long)]
    pub m: i64,
    #[arg(long)]
    pub n: i64,
    #[arg(long)]
    pub k: i64,
    /// Flag (parabolic) fixed points instead of ideals.
    #[arg(long, conflicts_with = "compositional")]
    pub parabolic: bool,
    /// Labeled y-staircases with labels in 1..=r.
    #[arg(long, requires = "r")]
    pub compositional: bool,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Args)]
pub struct GiesekerArgs {
    #[arg(long)]
    pub m: i64,
    #[arg(long)]
    pub n: i64,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub max_k: i64,
    #[arg(long)]
    pub json: bool,
}

/// Parses `args` (including the program name), runs, writes to `out`, and
/// returns the exit code.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_PASS { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match run(&cli.command, out) {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_CHECK_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Domain(_) | Error::Unsupported(_) => EXIT_USAGE,
                Error::Internal(_) => EXIT_INTERNAL,
            }
        }
    }
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Internal(format!("write failed: {e}"))
}

fn emit_json(out: &mut dyn Write, value: &serde_json::Value) -> crate::Result<()> {
    let s = serde_json::to_string_pretty(value).map_err(io_err)?;
    writeln!(out, "{s}").map_err(io_err)
}

/// Runs a parsed command; `Ok(false)` means a check failed.
pub fn run(cmd: &Command, out: &mut dyn Write) -> crate::Result<bool> {
    match cmd {
        Command::VerifyRelations(a) => verify(a, out),
        Command::Bgg(a) => bgg(a, out),
        Command::Hilb(HilbCommand::Enum(a)) => hilb_enum(a, out),
        Command::Gieseker(a) => gieseker(a, out),
    }
}

fn check_degree(d: i64) -> crate::Result<()> {
    if d < 0 {
        return Err(Error::Domain(format!("degree must be nonnegative, got {d}")));
    }
    Ok(())
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> crate::Result<bool> {
    check_degree(a.max_degree)?;
    let p = Params::new(a.n, a.t.clone(), a.c.clone())?;
    let report = verify_relations(&p, a.max_degree)?;
    if a.json {
        emit_json(
            out,
            &json!({
                "schema": "v1",
                "command": "verify-relations",
                "n": a.n,
                "t": fmt_q(&a.t),
                "c": fmt_q(&a.c),
                "max_degree": a.max_degree,
                "report": report,
                "passed": report.passed(),
            }),
        )?;
    } else {
        writeln!(
            out,
            "n={} t={} c={} max_degree={}: {} relations x {} monomials = {} checks, {} violations",
            a.n,
            fmt_q(&a.t),
            fmt_q(&a.c),
            a.max_degree,
            report.relations,
            report.basis_elements,
            report.checks,
            report.violations.len()
        )
        .map_err(io_err)?;
        for v in &report.violations {
            writeln!(out, "  {} on {}: residual {}", v.relation, v.witness, v.residual).map_err(io_err)?;
        }
        writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" }).map_err(io_err)?;
    }
    Ok(report.passed())
}

fn bgg(a: &BggArgs, out: &mut dyn Write) -> crate::Result<bool> {
    check_degree(a.max_degree)?;
    let report = BggComplex::new(a.m, a.n)?.exactness_report(a.max_degree)?;
    if a.json {
        let mut v = json!({
            "schema": "v1",
            "command": "bgg",
            "m": a.m,
            "n": a.n,
            "max_degree": a.max_degree,
            "simple_dims": report.simple_dims,
            "euler": report.euler,
            "composite_zero": report.composite_zero,
            "passed": report.passed(),
        });
        if a.emit_ranks {
            v["rows"] = serde_json::to_value(&report.rows).map_err(io_err)?;
        }
        emit_json(out, &v)?;
    } else {
        writeln!(out, "BGG complex m={} n={} degrees 0..={}", a.m, a.n, a.max_degree).map_err(io_err)?;
        if a.emit_ranks {
            writeln!(out, "{:>3} {:>6} {:>6} {:>8} {:>7} {:>8}", "l", "degree", "dim", "rank_out", "rank_in", "homology")
                .map_err(io_err)?;
            for r in &report.rows {
                writeln!(
                    out,
                    "{:>3} {:>6} {:>6} {:>8} {:>7} {:>8}",
                    r.l, r.degree, r.dim, r.rank_out, r.rank_in, r.homology
                )
                .map_err(io_err)?;
            }
        }
        writeln!(out, "{:>6} {:>6} {:>8}", "degree", "|T_d|", "H_0").map_err(io_err)?;
        for r in report.rows.iter().filter(|r| r.l == 0) {
            writeln!(out, "{:>6} {:>6} {:>8}", r.degree, report.simple_dims[r.degree as usize], r.homology)
                .map_err(io_err)?;
        }
        writeln!(out, "composite zero: {}", report.composite_zero).map_err(io_err)?;
        writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" }).map_err(io_err)?;
    }
    Ok(report.passed())
}

#[derive(Serialize)]
struct CsvRow {
    c: String,
    alpha: String,
    lambda: String,
    weights: String,
    labels: String,
    gamma: String,
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn hilb_enum(a: &HilbEnumArgs, out: &mut dyn Write) -> crate::Result<bool> {
    if a.k < 0 {
        return Err(Error::Domain(format!("k must be nonnegative, got {}", a.k)));
    }
    let (kind, rows): (&str, Vec<HilbRow>) = if a.parabolic {
        ("parabolic", hilb::enum_phillb(a.m, a.n, a.k)?.iter().map(|p| HilbRow::from_flag(p, a.m)).collect())
    } else if a.compositional {
        let r = a.r.ok_or_else(|| Error::Domain("--compositional needs --r".into()))?;
        (
            "compositional",
            hilb::enum_fhilb(a.m, a.n, r, a.k)?.iter().map(|l| HilbRow::from_labeled(l, a.m, a.n)).collect(),
        )
    } else {
        ("ideal", hilb::enum_hilb(a.m, a.n, a.k)?.iter().map(|s| HilbRow::from_staircase(s, a.m, a.n)).collect())
    };
    if a.json {
        emit_json(
            out,
            &json!({
                "schema": "v1",
                "command": "hilb enum",
                "kind": kind,
                "m": a.m,
                "n": a.n,
                "k": a.k,
                "r": a.r,
                "count": rows.len(),
                "rows": rows,
            }),
        )?;
    } else if a.csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &rows {
            w.serialize(CsvRow {
                c: join(&r.c),
                alpha: join(&r.alpha),
                lambda: join(&r.lambda),
                weights: join(&r.weights),
                labels: r.labels.as_deref().map(join).unwrap_or_default(),
                gamma: r.gamma.as_deref().map(join).unwrap_or_default(),
            })
            .map_err(io_err)?;
        }
        if rows.is_empty() {
            w.write_record(["c", "alpha", "lambda", "weights", "labels", "gamma"]).map_err(io_err)?;
        }
        out.write_all(&w.into_inner().map_err(io_err)?).map_err(io_err)?;
    } else {
        writeln!(out, "{kind} fixed points, m={} n={} k={}: {}", a.m, a.n, a.k, rows.len()).map_err(io_err)?;
        for r in &rows {
            write!(out, "c=({}) alpha=({}) lambda=({}) weights=({})", join(&r.c), join(&r.alpha), join(&r.lambda), join(&r.weights))
                .map_err(io_err)?;
            if let (Some(l), Some(g)) = (&r.labels, &r.gamma) {
                write!(out, " labels=({}) gamma=({})", join(l), join(g)).map_err(io_err)?;
            }
            writeln!(out).map_err(io_err)?;
        }
    }
    Ok(true)
}

fn gieseker(a: &GiesekerArgs, out: &mut dyn Write) -> crate::Result<bool> {
    if a.max_k < 0 || a.r == 0 {
        return Err(Error::Domain("need max-k ≥ 0 and r ≥ 1".into()));
    }
    let rows = (0..=a.max_k).map(|k| hilb::gieseker_graded_dim(a.m, a.n, a.r, k)).collect::<crate::Result<Vec<_>>>()?;
    let passed = rows.iter().all(|r| r.agrees());
    if a.json {
        emit_json(
            out,
            &json!({
                "schema": "v1",
                "command": "gieseker",
                "m": a.m,
                "n": a.n,
                "r": a.r,
                "rows": rows,
                "passed": passed,
            }),
        )?;
    } else {
        writeln!(out, "{:>3} {:>15} {:>13}", "k", "fixed_point_dim", "invariant_dim").map_err(io_err)?;
        for r in &rows {
            writeln!(out, "{:>3} {:>15} {:>13}", r.k, r.fixed_point_dim, fmt_q(&r.invariant_dim)).map_err(io_err)?;
        }
        writeln!(out, "{}", if passed { "PASS" } else { "FAIL" }).map_err(io_err)?;
    }
    Ok(passed)
}

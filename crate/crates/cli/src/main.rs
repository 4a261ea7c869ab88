//! `terncode`: command-line front end for the ternary cyclic code toolkit.
//!
//! Five subcommands cover the workflow end to end: `check` decides
//! optimality of a single `C_(1,e)`, `sweep` tabulates verdicts over an
//! exponent range, `factor` factors polynomials over GF(3) (including
//! formula input such as `(x+1)^122 + x^122 + 1`), `reproduce` replays the
//! recorded result suites, and `bound` prints the sphere-packing ceiling.
//!
//! Exit codes follow one convention everywhere: 0 for success (and for
//! "yes, optimal" / "all fixtures pass"), 1 for a definite negative answer,
//! 2 for unusable input.  Output defaults to a human table on a terminal
//! and JSON when piped; `--format` overrides the guess.

mod expr;
mod reproduce;

use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;
use terncode::checker::{classify, sweep, Verdict, CSV_HEADER};
use terncode::codes::{build_code, certify_optimal, sphere_packing_max_d, CertifyReport, CodeSpec};
use terncode::poly::{distinct_roots_in_ext, factor_seeded, parse_poly, TritPoly};
use terncode::Error;

use reproduce::Target;

/// Exact computations for ternary cyclic codes C_(1,e) over GF(3^m).
#[derive(Parser)]
#[command(name = "terncode", version, about)]
struct Cli {
    /// Output format; defaults to `table` on a terminal and `json` when
    /// piped (`csv` is available for check and sweep).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Seed for the randomized factorization steps; echoed into outputs.
    /// The factor ordering is canonical, so results never depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether C_(1,e) over GF(3^m) is optimal.
    Check {
        /// Field degree m (at most 13: verdicts need discrete-log tables).
        #[arg(long)]
        m: u32,
        /// Exponent e, with 0 <= e < 3^m - 1.
        #[arg(long)]
        e: u64,
    },
    /// Classify every even exponent in a range, one verdict row each.
    Sweep {
        /// Field degree m (at most 13).
        #[arg(long)]
        m: u32,
        /// Lowest exponent to include (default 2).
        #[arg(long)]
        e_min: Option<u64>,
        /// Highest exponent to include (default 3^m - 3, the top even value).
        #[arg(long)]
        e_max: Option<u64>,
        /// Worker threads; the output is identical for any worker count.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Append CSV rows to this file, writing the header only when the
        /// file is new or empty.  Relative paths land in $TERNCODE_OUT_DIR
        /// when that variable is set.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Factor a polynomial over GF(3) into monic irreducibles.
    #[command(group = ArgGroup::new("input").required(true).args(["poly", "expr"]))]
    Factor {
        /// Polynomial literal such as "x^2-1" (trit form "t:..." also works).
        poly: Option<String>,
        /// Formula to expand first: sums, differences, products, powers, and
        /// parentheses over `x` and integers, e.g. "(x+1)^122 + x^122 + 1".
        #[arg(long)]
        expr: Option<String>,
    },
    /// Replay a recorded reproduction suite, one pass/fail line per fixture.
    Reproduce {
        /// Which bundle to replay.
        #[arg(long, value_enum)]
        target: Target,
    },
    /// Sphere-packing ceiling on the minimum distance of a ternary [n, k] code.
    Bound {
        /// Block length n.
        #[arg(long)]
        n: u64,
        /// Dimension k, with 0 <= k <= n.
        #[arg(long)]
        k: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format.unwrap_or_else(|| {
        if std::io::stdout().is_terminal() {
            Format::Table
        } else {
            Format::Json
        }
    });
    let seed = cli.seed;
    let mut w = std::io::BufWriter::new(std::io::stdout().lock());
    let result = match cli.command {
        Command::Check { m, e } => cmd_check(m, e, format, seed, &mut w),
        Command::Sweep {
            m,
            e_min,
            e_max,
            workers,
            out,
        } => cmd_sweep(m, e_min, e_max, workers, out, format, seed, &mut w),
        Command::Factor { poly, expr } => cmd_factor(poly, expr, format, seed, &mut w),
        Command::Reproduce { target } => cmd_reproduce(target, format, seed, &mut w),
        Command::Bound { n, k } => cmd_bound(n, k, format, seed, &mut w),
    };
    match result.and_then(|code| {
        w.flush()?;
        Ok(code)
    }) {
        Ok(code) => code,
        // A consumer such as `head` closing the pipe early is not a failure.
        Err(err) if is_broken_pipe(err.as_ref()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

type CmdResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn is_broken_pipe(err: &(dyn std::error::Error + 'static)) -> bool {
    err.downcast_ref::<std::io::Error>()
        .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn unsupported_csv(command: &str) -> CmdResult {
    Err(format!("csv output is not defined for `{command}`; use table or json").into())
}

/// Largest exponent for which `check` factors the defining polynomial of the
/// second condition to also report its root count with multiplicity; beyond
/// this the polynomial degree makes the extra detail too expensive.
const ROOT_DETAIL_MAX_E: u64 = 4096;

fn cmd_check(m: u32, e: u64, format: Format, seed: u64, w: &mut impl Write) -> CmdResult {
    let verdict = classify(m, e)?;
    // The code view is absent exactly when e lies in the coset of 1, where
    // the generator would collapse to a single minimal polynomial.
    let code: Option<(CodeSpec, CertifyReport)> = match build_code(m, e) {
        Ok(spec) => Some((spec, certify_optimal(m, e)?)),
        Err(Error::ExponentInCosetOfOne(_)) => None,
        Err(other) => return Err(other.into()),
    };
    let with_multiplicity = if e <= ROOT_DETAIL_MAX_E {
        let q2 = parse_poly("x+1")?
            .pow(e)
            .add(&TritPoly::monomial(1, e as usize))
            .add(&TritPoly::one());
        Some(distinct_roots_in_ext(&q2, m)?.with_multiplicity)
    } else {
        None
    };

    match format {
        Format::Table => {
            writeln!(w, "seed         {seed}")?;
            writeln!(w, "m            {}", verdict.m)?;
            writeln!(w, "e            {}", verdict.e)?;
            writeln!(w, "applicable   {}", verdict.applicable)?;
            writeln!(w, "condition 1  {}  (e is even)", verdict.q1)?;
            let multiplicity_note = with_multiplicity
                .map(|wm| format!(" ({wm} with multiplicity)"))
                .unwrap_or_default();
            writeln!(
                w,
                "condition 2  {} distinct solution(s) of (x+1)^e + x^e + 1 = 0{multiplicity_note}",
                verdict.q2_solutions.len()
            )?;
            writeln!(
                w,
                "condition 3  {} solution(s) of (x+1)^e - x^e - 1 = 0",
                verdict.q3_solutions.len()
            )?;
            writeln!(w, "optimal      {}", verdict.optimal)?;
            if let Some((spec, cert)) = &code {
                let d = if cert.optimal {
                    cert.d_upper_bound.to_string()
                } else {
                    format!("{}..{}", cert.d_lower, cert.d_upper_bound)
                };
                writeln!(w, "code         [{}, {}, {}]", spec.n, spec.k, d)?;
                writeln!(w, "generator    {}", spec.generator)?;
                writeln!(w, "degenerate   {}", spec.degenerate)?;
                if let Some(witness) = &cert.witness {
                    writeln!(
                        w,
                        "witness      weight {} at positions {:?} with coefficients {:?}",
                        witness.weight(),
                        witness.positions,
                        witness.coeffs
                    )?;
                }
            }
        }
        Format::Json => {
            let payload = json!({
                "seed": seed,
                "verdict": verdict,
                "q2_roots_with_multiplicity": with_multiplicity,
                "code": code.as_ref().map(|(spec, _)| json!({
                    "generator": spec.generator.to_string(),
                    "degenerate": spec.degenerate,
                })),
                "certification": code.as_ref().map(|(_, cert)| cert),
            });
            writeln!(w, "{}", serde_json::to_string_pretty(&payload)?)?;
        }
        Format::Csv => {
            writeln!(w, "{CSV_HEADER}")?;
            writeln!(w, "{}", verdict.csv_row())?;
        }
    }
    Ok(if verdict.optimal {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    m: u32,
    e_min: Option<u64>,
    e_max: Option<u64>,
    workers: usize,
    out: Option<PathBuf>,
    format: Format,
    seed: u64,
    w: &mut impl Write,
) -> CmdResult {
    if !(1..=13).contains(&m) {
        return Err(Error::ExhaustiveCutoff(m).into());
    }
    let n = 3u64.pow(m) - 1;
    let lo = e_min.unwrap_or(2);
    // The largest valid even exponent: n is even, so that is n - 2.
    let hi = e_max.unwrap_or(n.saturating_sub(2).max(2));
    let verdicts = sweep(m, lo..=hi, workers)?;

    if let Some(path) = out {
        let path = resolve_out_path(path);
        let mut file = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&path)?;
        if file.metadata()?.len() == 0 {
            writeln!(file, "{CSV_HEADER}")?;
        }
        for v in &verdicts {
            writeln!(file, "{}", v.csv_row())?;
        }
        match format {
            Format::Json => writeln!(
                w,
                "{}",
                serde_json::to_string_pretty(&json!({
                    "seed": seed,
                    "m": m,
                    "rows_appended": verdicts.len(),
                    "path": path.display().to_string(),
                }))?
            )?,
            _ => writeln!(w, "appended {} row(s) to {}", verdicts.len(), path.display())?,
        }
        return Ok(ExitCode::SUCCESS);
    }

    match format {
        Format::Csv => {
            writeln!(w, "{CSV_HEADER}")?;
            for v in &verdicts {
                writeln!(w, "{}", v.csv_row())?;
            }
        }
        Format::Table => {
            writeln!(w, "seed {seed}")?;
            writeln!(
                w,
                "{:<3} {:>9} {:<10} {:<5} {:>5} {:>5} {:<7}",
                "m", "e", "applicable", "q1", "|q2|", "|q3|", "optimal"
            )?;
            for v in &verdicts {
                writeln!(
                    w,
                    "{:<3} {:>9} {:<10} {:<5} {:>5} {:>5} {:<7}",
                    v.m,
                    v.e,
                    v.applicable,
                    v.q1,
                    v.q2_solutions.len(),
                    v.q3_solutions.len(),
                    v.optimal
                )?;
            }
        }
        Format::Json => {
            let rows: Vec<_> = verdicts.iter().map(row_json).collect();
            writeln!(
                w,
                "{}",
                serde_json::to_string_pretty(&json!({
                    "seed": seed,
                    "m": m,
                    "rows": rows,
                }))?
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Compact sweep row: solution sets reduced to their sizes, like the CSV.
fn row_json(v: &Verdict) -> serde_json::Value {
    json!({
        "m": v.m,
        "e": v.e,
        "applicable": v.applicable,
        "q1": v.q1,
        "q2": v.q2_solutions.len(),
        "q3": v.q3_solutions.len(),
        "optimal": v.optimal,
    })
}

/// Relative `--out` paths land in `$TERNCODE_OUT_DIR` when it is set.
fn resolve_out_path(path: PathBuf) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var("TERNCODE_OUT_DIR") {
            if !dir.is_empty() {
                return PathBuf::from(dir).join(path);
            }
        }
    }
    path
}

fn cmd_factor(
    poly: Option<String>,
    expr: Option<String>,
    format: Format,
    seed: u64,
    w: &mut impl Write,
) -> CmdResult {
    let input: TritPoly = match (&poly, &expr) {
        (Some(text), None) => parse_poly(text)?,
        (None, Some(text)) => expr::eval_expr(text)?,
        // clap's argument group guarantees exactly one source.
        _ => unreachable!("argument group enforces one input"),
    };
    let factorization = factor_seeded(&input, seed)?;

    match format {
        Format::Table => {
            writeln!(w, "seed    {seed}")?;
            writeln!(w, "degree  {}", input.degree().unwrap_or(0))?;
            writeln!(w, "unit    {}", factorization.unit())?;
            writeln!(w, "factors {} distinct", factorization.factors().len())?;
            writeln!(w, "{factorization}")?;
        }
        Format::Json => {
            let factors: Vec<_> = factorization
                .factors()
                .iter()
                .map(|(p, k)| {
                    json!({
                        "factor": p.to_string(),
                        "trits": p.trit_string(),
                        "multiplicity": k,
                    })
                })
                .collect();
            writeln!(
                w,
                "{}",
                serde_json::to_string_pretty(&json!({
                    "seed": seed,
                    "degree": input.degree(),
                    "unit": factorization.unit(),
                    "factors": factors,
                    "rendered": factorization.to_string(),
                }))?
            )?;
        }
        Format::Csv => return unsupported_csv("factor"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reproduce(target: Target, format: Format, seed: u64, w: &mut impl Write) -> CmdResult {
    let fixtures = reproduce::run_target(target);
    let failed = fixtures.iter().filter(|f| !f.pass).count();

    match format {
        Format::Table => {
            writeln!(w, "seed {seed}")?;
            for f in &fixtures {
                if f.pass {
                    writeln!(w, "PASS  {}  ({})", f.label, f.detail)?;
                } else {
                    writeln!(w, "FAIL  {}: {}", f.label, f.detail)?;
                }
            }
            writeln!(w, "{} fixture(s), {} failed", fixtures.len(), failed)?;
        }
        Format::Json => {
            let rows: Vec<_> = fixtures
                .iter()
                .map(|f| json!({ "label": f.label, "pass": f.pass, "detail": f.detail }))
                .collect();
            let name = target
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
                .to_string();
            writeln!(
                w,
                "{}",
                serde_json::to_string_pretty(&json!({
                    "seed": seed,
                    "target": name,
                    "fixtures": rows,
                    "pass": failed == 0,
                }))?
            )?;
        }
        Format::Csv => return unsupported_csv("reproduce"),
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_bound(n: u64, k: u64, format: Format, seed: u64, w: &mut impl Write) -> CmdResult {
    let (max_d, degenerate) = sphere_packing_max_d(n, k)?;
    match format {
        Format::Table => {
            writeln!(w, "seed        {seed}")?;
            writeln!(w, "n           {n}")?;
            writeln!(w, "k           {k}")?;
            writeln!(w, "max d       {max_d}")?;
            writeln!(w, "degenerate  {degenerate}")?;
        }
        Format::Json => writeln!(
            w,
            "{}",
            serde_json::to_string_pretty(&json!({
                "seed": seed,
                "n": n,
                "k": k,
                "max_d": max_d,
                "degenerate": degenerate,
            }))?
        )?,
        Format::Csv => return unsupported_csv("bound"),
    }
    Ok(ExitCode::SUCCESS)
}

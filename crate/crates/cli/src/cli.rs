//! The `rootbound` command line.
//!
//! Exit codes: 0 success, 1 a bound failed the soundness check, 2 usage or
//! input error.

use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use rootbound::bounds::all_bounds;
use rootbound::parse::{format_poly, parse_poly, parse_poly_descending};
use rootbound::poly::{normalize, Polynomial};
use rootbound::DEFAULT_REL_TOL;

use crate::gen::{gen_random, CoefficientDistribution, GeneratorSpec};
use crate::report::{
    fmt_sig, report_json, report_table, tightness_csv, tightness_table, SAME_SIGN_REMARK,
    TABLE_DIGITS,
};
use crate::tightness::{largest_root, tightness_study, SOUNDNESS_REL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNSOUND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Oracle refinement tolerance used when none is given.
pub const DEFAULT_ORACLE_TOL: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "rootbound", version, about = "Bounds on the real roots of real polynomials")]
struct Cli {
    /// Read list syntax `[a_n, ..., a_0]` highest degree first.
    #[arg(long, global = true)]
    descending: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Echo the normalized polynomial and the multiplicity of the root at 0.
    Parse {
        /// Expression such as "x^3 - x - 1", a list such as "[-1, -1, 0, 1]", or "-" for stdin.
        poly: String,
    },
    /// Print every bound for a polynomial.
    Bounds {
        poly: String,
        /// Emit the flat JSON report.
        #[arg(long)]
        json: bool,
        /// Bound the roots of p(-x) and negate, giving lower bounds on the real roots.
        #[arg(long)]
        negative: bool,
        /// Relative tolerance of the root solves.
        #[arg(long, default_value_t = DEFAULT_REL_TOL)]
        tol: f64,
    },
    /// Print every bound next to the oracle's largest real root.
    Verify {
        poly: String,
        /// Refinement tolerance of the oracle.
        #[arg(long, default_value_t = DEFAULT_ORACLE_TOL)]
        tol: f64,
    },
    /// Tightness study over a seeded random corpus.
    Bench {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        /// Degree range LO:HI.
        #[arg(long, value_parser = parse_range::<usize>)]
        degrees: (usize, usize),
        /// Integer coefficient range LO:HI.
        #[arg(long, value_parser = parse_range::<i64>, default_value = "-10:10", allow_hyphen_values = true)]
        coeffs: (i64, i64),
        /// Write the CSV to PATH, or to stdout when PATH is omitted or "-".
        #[arg(long, num_args = 0..=1, default_missing_value = "-")]
        csv: Option<String>,
        /// Refinement tolerance of the oracle.
        #[arg(long, default_value_t = DEFAULT_ORACLE_TOL)]
        tol: f64,
    },
}

fn parse_range<T: std::str::FromStr>(s: &str) -> Result<(T, T), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected LO:HI, got '{s}'"))?;
    let parse = |t: &str| t.trim().parse::<T>().map_err(|_| format!("bad bound '{t}' in '{s}'"));
    Ok((parse(lo)?, parse(hi)?))
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the command line with `args` (including the program name).
pub fn run<I, S>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, stdin, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_poly(text: &str, descending: bool, stdin: &mut dyn Read) -> Result<Vec<f64>, Failure> {
    let owned;
    let text = if text == "-" {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf).map_err(Failure::usage)?;
        owned = buf;
        owned.as_str()
    } else {
        text
    };
    let parsed = if descending {
        parse_poly_descending(text)
    } else {
        parse_poly(text)
    };
    parsed.map_err(Failure::usage)
}

fn check_tol(tol: f64) -> Result<(), Failure> {
    if tol > 0.0 && tol <= 1e-6 {
        Ok(())
    } else {
        Err(Failure::usage(format!("--tol must lie in (0, 1e-6], got {tol}")))
    }
}

fn dispatch(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    let io = |e: std::io::Error| Failure::usage(format!("write failed: {e}"));
    match cli.command {
        Command::Parse { poly } => {
            let raw = read_poly(&poly, cli.descending, stdin)?;
            let (p, zeros) = normalize(&raw).map_err(Failure::usage)?;
            writeln!(out, "input:      {}", format_poly(&raw)).map_err(io)?;
            writeln!(out, "normalized: {}", format_poly(p.coeffs())).map_err(io)?;
            writeln!(out, "degree:     {}", p.degree()).map_err(io)?;
            writeln!(out, "zero_root_multiplicity: {zeros}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Bounds {
            poly,
            json,
            negative,
            tol,
        } => {
            check_tol(tol)?;
            let raw = read_poly(&poly, cli.descending, stdin)?;
            let base = Polynomial::new(raw).map_err(Failure::usage)?;
            let target = if negative { base.reflect() } else { base };
            let (p, zeros) = normalize(target.coeffs()).map_err(Failure::usage)?;
            let report = all_bounds(&p, tol).map_err(Failure::usage)?;
            let text = if json {
                report_json(&report, zeros, negative)
            } else {
                let shown = if negative { target.reflect() } else { target };
                report_table(&format_poly(shown.coeffs()), &report, zeros, negative)
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify { poly, tol } => {
            check_tol(tol)?;
            let raw = read_poly(&poly, cli.descending, stdin)?;
            let (p, zeros) = normalize(&raw).map_err(Failure::usage)?;
            verify(&p, zeros, tol, out).map_err(io)
        }
        Command::Bench {
            seed,
            count,
            degrees,
            coeffs,
            csv,
            tol,
        } => {
            check_tol(tol)?;
            let spec = GeneratorSpec {
                degree_range: degrees,
                distribution: CoefficientDistribution::IntegerUniform {
                    lo: coeffs.0,
                    hi: coeffs.1,
                },
                require_mixed_signs: true,
                count,
                seed,
            };
            let corpus = gen_random(&spec).map_err(Failure::usage)?;
            let report = tightness_study(&corpus, tol).map_err(Failure::usage)?;
            match csv.as_deref() {
                Some("-") => out.write_all(tightness_csv(&report).as_bytes()).map_err(io)?,
                Some(path) => {
                    std::fs::write(path, tightness_csv(&report))
                        .map_err(|e| Failure::usage(format!("cannot write {path}: {e}")))?;
                    out.write_all(tightness_table(&report).as_bytes()).map_err(io)?;
                }
                None => out.write_all(tightness_table(&report).as_bytes()).map_err(io)?,
            }
            Ok(if report.soundness_violations > 0 {
                EXIT_UNSOUND
            } else {
                EXIT_OK
            })
        }
    }
}

fn verify(p: &Polynomial, zeros: usize, tol: f64, out: &mut dyn Write) -> std::io::Result<i32> {
    writeln!(out, "polynomial: {}", format_poly(p.coeffs()))?;
    let report = match all_bounds(p, DEFAULT_REL_TOL) {
        Ok(r) => r,
        Err(e) => {
            writeln!(out, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let root = match largest_root(p, zeros, tol) {
        Ok(r) => r,
        Err(e) => {
            writeln!(out, "oracle error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    match root {
        Some(r) => writeln!(out, "oracle max real root: {}", fmt_sig(r, TABLE_DIGITS))?,
        None => writeln!(out, "oracle: no real roots (soundness holds vacuously)")?,
    }
    let Some(bounds) = report.bounds else {
        writeln!(out, "{SAME_SIGN_REMARK}")?;
        return Ok(EXIT_OK);
    };
    let mut failed = 0;
    for (name, value) in bounds.all_named() {
        let pass = root.is_none_or(|r| value >= r - SOUNDNESS_REL * r.abs().max(1.0));
        if !pass {
            failed += 1;
        }
        writeln!(
            out,
            "  {name:<16} {:<20} {}",
            fmt_sig(value, TABLE_DIGITS),
            if pass { "PASS" } else { "FAIL" }
        )?;
    }
    if failed > 0 {
        writeln!(out, "{failed} bound(s) below the largest real root")?;
        Ok(EXIT_UNSOUND)
    } else {
        writeln!(out, "all bounds PASS")?;
        Ok(EXIT_OK)
    }
}

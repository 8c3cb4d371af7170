//! Command-line front end for `unicrit-core`.
//!
//! [`run`] is the whole program; `main` only wires it to the process.
//! Reports are JSON on standard output, diagnostics go to standard error.

use std::f64::consts::TAU;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use unicrit_core::classes::{self, ClassReport};
use unicrit_core::fejer::{self, MinMethod, PositivityCertificate};
use unicrit_core::poly::NormalizedPoly;
use unicrit_core::roots::{self, RootSet};
use unicrit_core::theorem::{self, EquivalenceReport};
use unicrit_core::{Error, TrigPoly};

pub mod coeff_file;

use coeff_file::{complex_list, CoeffFile, ParseError};

pub const EXIT_ACCEPT: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

/// Overrides the default checker tolerance when `--tol` is absent.
pub const TOL_ENV: &str = "UNICRIT_TOL";

const AFTER_HELP: &str = "\
Exit codes: 0 accept/success, 1 reject or counterexample found,
2 usage or parse error, 3 numeric failure.

Environment: UNICRIT_TOL overrides the default tolerance (1e-9) of
`check`, `verify-theorem` and `threshold` when --tol is not given.";

#[derive(Debug, Parser)]
#[command(
    name = "unicrit",
    version,
    about = "Univalent polynomials with critical points on the unit circle"
)]
#[command(after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Roots of a complex polynomial
    Roots {
        file: PathBuf,
        #[arg(long, default_value_t = roots::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = roots::DEFAULT_MAX_ITER)]
        max_iter: usize,
    },
    /// Roots of the derivative of a complex polynomial
    CriticalPoints { file: PathBuf },
    /// Fejer-Riesz factor of a nonnegative trigonometric polynomial
    Factorize { file: PathBuf },
    /// Run one of the class checkers
    Check {
        class: Class,
        file: PathBuf,
        #[arg(long)]
        tol: Option<f64>,
        /// Also dump COUNT (t, value) samples of the boundary function
        #[arg(long, value_name = "COUNT")]
        emit_boundary: Option<usize>,
    },
    /// Check the equivalence of the three statements for z + z^n/n
    VerifyTheorem {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Random search for polynomials 1 + ... + z^n with positive real part
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Smallest grid eps rejecting z + eps z^k + z^n/n
    Threshold {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        step: f64,
        #[arg(long)]
        tol: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Class {
    /// Re Q > 0 on the disk
    Positive,
    /// Re P' > 0 on the disk
    Nw,
    /// Re zP'/P > 0 on the disk
    Starlike,
    /// z + a_n z^n with |a_n| = 1/n
    Brannan,
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("invalid {what}: {value:?}")]
    BadValue { what: &'static str, value: String },
    #[error(transparent)]
    Core(#[from] Error),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Core(Error::DidNotConverge(_))
            | Failure::Core(Error::OddUnitClusterAfterTolerance { .. })
            | Failure::Core(Error::UnpairedRoots { .. }) => EXIT_NUMERIC,
            Failure::Core(Error::NotNonnegative { .. }) => EXIT_REJECT,
            _ => EXIT_USAGE,
        }
    }
}

struct Outcome {
    report: Value,
    code: i32,
}

/// Runs the program with `UNICRIT_TOL` taken from the process environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let env_tol = std::env::var(TOL_ENV).ok();
    run_with_env(args, env_tol.as_deref(), out, err)
}

/// [`run`] with an explicit value for `UNICRIT_TOL`.
pub fn run_with_env<I, T>(
    args: I,
    env_tol: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_ACCEPT
            };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, env_tol) {
        Ok(outcome) => {
            let mut text =
                serde_json::to_string_pretty(&outcome.report).expect("report is valid JSON");
            text.push('\n');
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            outcome.code
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {failure}");
            failure.code()
        }
    }
}

fn dispatch(command: Command, env_tol: Option<&str>) -> Result<Outcome, Failure> {
    match command {
        Command::Roots {
            file,
            tol,
            max_iter,
        } => {
            let p = read(&file)?
                .into_complex()
                .map_err(|e| parse_failure(&file, e))?;
            let set = roots::find_roots(&p, tol, max_iter)?;
            Ok(success(root_report("roots", &set)))
        }
        Command::CriticalPoints { file } => {
            let p = read(&file)?
                .into_complex()
                .map_err(|e| parse_failure(&file, e))?;
            let set = roots::critical_points(&p)?;
            Ok(success(root_report("critical points", &set)))
        }
        Command::Factorize { file } => {
            let t = read(&file)?
                .into_trig()
                .map_err(|e| parse_failure(&file, e))?;
            let factor = fejer::spectral_factorize(&t)?;
            let residual = fejer::autocorrelate(&factor).max_coeff_diff(&t);
            Ok(success(json!({
                "summary": format!("factor of degree {}, round-trip residual {residual:e}", factor.degree()),
                "gammas": complex_list(&factor.gammas),
                "residual": residual,
            })))
        }
        Command::Check {
            class,
            file,
            tol,
            emit_boundary,
        } => {
            let tol = tolerance(tol, env_tol)?;
            let p = read(&file)?
                .into_complex()
                .map_err(|e| parse_failure(&file, e))?;
            if matches!(class, Class::Positive) {
                let report = classes::check_positive_real_part(&p, tol);
                return Ok(class_outcome("positive real part", &report, emit_boundary));
            }
            let p = NormalizedPoly::try_from_poly(&p)?;
            match class {
                Class::Nw => {
                    let report = classes::check_noshiro_warschawski(&p, tol);
                    Ok(class_outcome("Noshiro-Warschawski", &report, emit_boundary))
                }
                Class::Starlike => {
                    let report = classes::check_starlike(&p, tol);
                    Ok(class_outcome("starlike", &report, emit_boundary))
                }
                _ => {
                    let verdict = classes::check_brannan_form(&p, tol);
                    Ok(Outcome {
                        report: json!({
                            "summary": format!(
                                "{}: Brannan form, extremal defect {:e}",
                                verdict_word(verdict),
                                p.extremal_defect()
                            ),
                            "verdict": verdict,
                            "extremal_defect": p.extremal_defect(),
                            "max_middle_modulus": p.middle().iter().map(|a| a.norm()).fold(0.0, f64::max),
                        }),
                        code: verdict_code(verdict),
                    })
                }
            }
        }
        Command::VerifyTheorem { n, tol } => {
            let tol = tolerance(tol, env_tol)?;
            let p = theorem::canonical_polynomial(n)?;
            let report = theorem::verify_equivalence(&p, tol)?;
            let ok = report.all_true() && report.consistent;
            Ok(Outcome {
                report: equivalence_report(&report),
                code: verdict_code(ok),
            })
        }
        Command::Search { n, trials, seed } => {
            let found = theorem::proposition1_search(n, trials, seed)?;
            let summary = match &found {
                Some(_) => format!("counterexample found for n = {n}"),
                None => format!("no counterexample in {trials} trials (n = {n}, seed = {seed})"),
            };
            Ok(Outcome {
                code: if found.is_some() {
                    EXIT_REJECT
                } else {
                    EXIT_ACCEPT
                },
                report: json!({
                    "summary": summary,
                    "n": n,
                    "trials": trials,
                    "seed": seed,
                    "counterexample": found.map(|q| complex_list(q.coeffs())),
                }),
            })
        }
        Command::Threshold { n, k, step, tol } => {
            let tol = tolerance(tol, env_tol)?;
            let eps = theorem::perturbation_threshold(n, k, step, tol)?;
            let summary = match eps {
                Some(e) => format!("first rejection at eps = {e}"),
                None => "accepted on the whole grid up to eps = 1".to_string(),
            };
            Ok(success(json!({
                "summary": summary,
                "n": n,
                "k": k,
                "step": step,
                "threshold": eps,
            })))
        }
    }
}

fn success(report: Value) -> Outcome {
    Outcome {
        report,
        code: EXIT_ACCEPT,
    }
}

fn verdict_code(verdict: bool) -> i32 {
    if verdict {
        EXIT_ACCEPT
    } else {
        EXIT_REJECT
    }
}

fn verdict_word(verdict: bool) -> &'static str {
    if verdict {
        "accept"
    } else {
        "reject"
    }
}

fn tolerance(flag: Option<f64>, env_tol: Option<&str>) -> Result<f64, Failure> {
    let tol = match (flag, env_tol) {
        (Some(t), _) => t,
        (None, Some(text)) => text.trim().parse().map_err(|_| Failure::BadValue {
            what: TOL_ENV,
            value: text.to_string(),
        })?,
        (None, None) => classes::DEFAULT_TOL,
    };
    if tol.is_finite() && tol >= 0.0 {
        Ok(tol)
    } else {
        Err(Failure::BadValue {
            what: "tolerance",
            value: tol.to_string(),
        })
    }
}

fn read(path: &Path) -> Result<CoeffFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|source| Failure::Io {
        path: path.to_path_buf(),
        source,
    })?;
    coeff_file::parse(&text).map_err(|e| parse_failure(path, e))
}

fn parse_failure(path: &Path, source: ParseError) -> Failure {
    Failure::Parse {
        path: path.to_path_buf(),
        source,
    }
}

fn root_report(what: &str, set: &RootSet) -> Value {
    json!({
        "summary": format!("{} {what}, max residual {:e}", set.len(), set.max_residual()),
        "roots": complex_list(&set.roots),
        "residuals": set.residuals,
        "max_residual": set.max_residual(),
    })
}

fn certificate(cert: &Option<PositivityCertificate>) -> Value {
    match cert {
        Some(c) => json!({
            "min_value": c.min_value,
            "argmin_t": c.argmin_t,
            "method": match c.method {
                MinMethod::CriticalPointEnumeration => "critical-point-enumeration",
                MinMethod::RefinedGrid => "refined-grid",
            },
        }),
        None => Value::Null,
    }
}

fn trig_value(t: &TrigPoly) -> Value {
    json!({ "a0": t.a0(), "cos": t.cos_coeffs(), "sin": t.sin_coeffs() })
}

fn class_value(name: &str, report: &ClassReport) -> Value {
    json!({
        "summary": format!(
            "{}: {name}, boundary minimum {:e} at t = {}",
            verdict_word(report.verdict),
            report.min_value,
            report.argmin_t
        ),
        "verdict": report.verdict,
        "min_value": report.min_value,
        "argmin_t": report.argmin_t,
        "detail": report.detail,
        "certificate": certificate(&report.certificate),
        "boundary": trig_value(&report.boundary),
    })
}

fn class_outcome(name: &str, report: &ClassReport, emit_boundary: Option<usize>) -> Outcome {
    let mut value = class_value(name, report);
    if let Some(count) = emit_boundary {
        let samples: Vec<Value> = (0..count)
            .map(|m| {
                let t = TAU * m as f64 / count as f64;
                json!([t, report.boundary.eval(t)])
            })
            .collect();
        value["boundary_samples"] = Value::Array(samples);
    }
    Outcome {
        report: value,
        code: verdict_code(report.verdict),
    }
}

fn equivalence_report(report: &EquivalenceReport) -> Value {
    let ok = report.all_true() && report.consistent;
    json!({
        "summary": format!(
            "{}: n = {}, (a) {} (b) {} (c) {}, univalence screen {}, consistent {}",
            verdict_word(ok),
            report.n,
            report.verdict_a.verdict,
            report.verdict_b,
            report.verdict_c.verdict,
            report.univalence_screen,
            report.consistent
        ),
        "n": report.n,
        "verdict_a": class_value("Noshiro-Warschawski", &report.verdict_a),
        "verdict_b": report.verdict_b,
        "verdict_c": class_value("starlike", &report.verdict_c),
        "univalence_screen": report.univalence_screen,
        "consistent": report.consistent,
    })
}

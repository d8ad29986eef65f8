//! Command-line front end. Exit codes: 0 success, 1 failed verification,
//! 2 usage, input, or resource errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::invariants::{
    eval_matrix_form, invariance_battery, InvariantError, InvariantVector, MULTIDEGREES, NUM_INVARIANTS,
};
use crate::laurent::MemoryBudget;
use crate::molien::{
    default_grid_size, quadrature_coefficients, verify_theorem, EngineError, Golden, GoldenError, MolienEngine,
    QuadratureEstimate, SeriesReport,
};
use crate::states::json::{parse_state, StateMatrix};
use crate::states::{decompose_state, RealScalar, Sampler};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Rounding residual allowed between quadrature and exact coefficients.
pub const QUADRATURE_RESIDUAL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scalar {
    Exact,
    Float,
}

#[derive(Debug, Parser)]
#[command(name = "qq-invariants", version, about = "Poincare series and local-unitary invariants of qubit-qutrit states")]
pub struct RunConfig {
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain, global = true)]
    pub format: OutputFormat,
    /// Memory budget in bytes for the exact engine.
    #[arg(long, default_value_t = 1 << 30, global = true)]
    pub memory_budget: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact Poincare series coefficients.
    Series {
        #[arg(long, default_value_t = 14)]
        max_degree: usize,
    },
    /// Check computed coefficients against the reference rational function.
    Verify(VerifyArgs),
    /// Evaluate I1..I7 on a state, or run the local-unitary invariance battery.
    Invariants(InvariantArgs),
    /// Multigraded dimensions by (V1, V2, V3) degree.
    Multigraded {
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 14)]
    pub max_degree: usize,
    /// Cross-check by floating torus quadrature.
    #[arg(long)]
    pub with_quadrature: bool,
    /// Quadrature grid points per torus variable [default: 2 * max-degree + 7].
    #[arg(long)]
    pub grid_size: Option<usize>,
    /// Alternative reference fixture (testing).
    #[arg(long, hide = true)]
    pub fixtures: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InvariantArgs {
    /// JSON state file.
    #[arg(conflicts_with_all = ["random", "battery"])]
    pub state: Option<PathBuf>,
    /// Evaluate on a random state instead of a file.
    #[arg(long, requires = "seed")]
    pub random: bool,
    /// Run the Haar local-unitary invariance battery.
    #[arg(long, requires = "seed", conflicts_with = "random")]
    pub battery: bool,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum)]
    pub scalar: Option<Scalar>,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn error(message: impl Into<String>) -> Self {
        Failure { code: EXIT_ERROR, message: message.into() }
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        Failure::error(e.to_string())
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        Failure::error(e.to_string())
    }
}

impl From<GoldenError> for Failure {
    fn from(e: GoldenError) -> Self {
        let code = if e.degree().is_some() { EXIT_FAILED } else { EXIT_ERROR };
        Failure { code, message: e.to_string() }
    }
}

/// Output text plus exit code.
struct Outcome {
    text: String,
    code: i32,
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&config) {
        Ok(Outcome { text, code }) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn execute(config: &RunConfig) -> Result<Outcome, Failure> {
    let budget = MemoryBudget::bytes(config.memory_budget);
    match &config.command {
        Command::Series { max_degree } => cmd_series(*max_degree, budget, config.format),
        Command::Verify(args) => cmd_verify(args, budget, config.format),
        Command::Invariants(args) => cmd_invariants(args, config.format),
        Command::Multigraded { max_degree } => cmd_multigraded(*max_degree, budget, config.format),
    }
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn cmd_series(max_degree: usize, budget: MemoryBudget, format: OutputFormat) -> Result<Outcome, Failure> {
    let coeffs = MolienEngine::with_budget(budget).poincare_coefficients(max_degree)?;
    let text = match format {
        OutputFormat::Plain => format!("{}\n", strings(&coeffs).join(" ")),
        OutputFormat::Json => json_text(&json!({
            "schema": "qq-invariants/series/v1",
            "max_degree": max_degree,
            "coefficients": strings(&coeffs),
        })),
        OutputFormat::Csv => {
            let mut s = String::from("degree,coefficient\n");
            for (d, c) in coeffs.iter().enumerate() {
                let _ = writeln!(s, "{d},{c}");
            }
            s
        }
    };
    Ok(Outcome { text, code: EXIT_OK })
}

struct QuadratureCheck {
    estimate: QuadratureEstimate,
    residuals: Vec<f64>,
    mismatch: Option<usize>,
}

impl QuadratureCheck {
    fn new(estimate: QuadratureEstimate, exact: &[BigInt]) -> Self {
        let residuals = estimate.rounding_residuals();
        let mismatch = estimate.coefficients.iter().zip(exact).zip(&residuals).position(|((q, e), r)| {
            *r >= QUADRATURE_RESIDUAL || BigInt::from(q.round() as i64) != *e
        });
        QuadratureCheck { estimate, residuals, mismatch }
    }

    fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

fn cmd_verify(args: &VerifyArgs, budget: MemoryBudget, format: OutputFormat) -> Result<Outcome, Failure> {
    let golden = match &args.fixtures {
        Some(path) => Golden::from_path(path)?,
        None => Golden::published(),
    };
    let engine = MolienEngine::with_budget(budget);
    let coeffs = engine.poincare_coefficients(args.max_degree)?;
    let report = verify_theorem(&coeffs, &golden);
    let quadrature = if args.with_quadrature {
        let grid = args.grid_size.unwrap_or_else(|| default_grid_size(args.max_degree));
        let estimate = quadrature_coefficients(engine.weights(), args.max_degree, grid)?;
        Some(QuadratureCheck::new(estimate, &coeffs))
    } else {
        None
    };
    let passed = report.all_passed() && quadrature.as_ref().is_none_or(|q| q.mismatch.is_none());
    let text = match format {
        OutputFormat::Plain => verify_plain(&report, quadrature.as_ref(), passed),
        OutputFormat::Json => json_text(&verify_json(&report, quadrature.as_ref(), passed)),
        OutputFormat::Csv => {
            let mut s = String::from("check,passed,first_failure_degree,detail\n");
            for c in &report.checks {
                let degree = c.first_failure_degree.map_or(String::new(), |d| d.to_string());
                let _ = writeln!(s, "{},{},{degree},\"{}\"", c.name, c.passed, c.detail.replace('"', "'"));
            }
            if let Some(q) = &quadrature {
                let degree = q.mismatch.map_or(String::new(), |d| d.to_string());
                let _ = writeln!(
                    s,
                    "quadrature_agreement,{},{degree},\"grid {} max residual {:e}\"",
                    q.mismatch.is_none(),
                    q.estimate.grid_size,
                    q.max_residual()
                );
            }
            s
        }
    };
    Ok(Outcome { text, code: if passed { EXIT_OK } else { EXIT_FAILED } })
}

fn verify_plain(report: &SeriesReport, quadrature: Option<&QuadratureCheck>, passed: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "coefficients 0..={}: {}", report.max_degree, strings(&report.coefficients).join(" "));
    for c in &report.checks {
        let _ = writeln!(s, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    let degrees: Vec<String> = report.hsop_degrees.iter().map(ToString::to_string).collect();
    let _ = writeln!(s, "info: parameter degrees read from D*: {}", degrees.join(" "));
    if let Some(q) = quadrature {
        match q.mismatch {
            None => {
                let _ = writeln!(
                    s,
                    "PASS quadrature_agreement: grid {} reproduces degrees 0..={} (max residual {:e})",
                    q.estimate.grid_size,
                    report.max_degree,
                    q.max_residual()
                );
            }
            Some(d) => {
                let _ = writeln!(
                    s,
                    "FAIL quadrature_agreement: degree {d}: quadrature {} vs exact {}",
                    q.estimate.coefficients[d], report.coefficients[d]
                );
            }
        }
    }
    let _ = writeln!(s, "verdict: {}", if passed { "all checks passed" } else { "verification failed" });
    s
}

fn verify_json(report: &SeriesReport, quadrature: Option<&QuadratureCheck>, passed: bool) -> Value {
    let mut v = json!({
        "schema": "qq-invariants/verify/v1",
        "passed": passed,
        "max_degree": report.max_degree,
        "coefficients": strings(&report.coefficients),
        "theorem_match": report.theorem_match,
        "palindrome_N": report.palindrome_n,
        "palindrome_Nstar": report.palindrome_nstar,
        "nonnegative_Nstar": report.nonnegative_nstar,
        "transform_identity": report.transform_identity,
        "degree_gap": report.degree_gap,
        "degree_gap_star": report.degree_gap_star,
        "hsop_degrees": report.hsop_degrees,
        "orbit_space_dimension": report.orbit_space_dimension,
        "checks": report.checks,
    });
    if let Some(q) = quadrature {
        v["quadrature"] = json!({
            "grid_size": q.estimate.grid_size,
            "coefficients": q.estimate.coefficients,
            "imaginary": q.estimate.imaginary,
            "residuals": q.residuals,
            "agrees": q.mismatch.is_none(),
            "first_mismatch_degree": q.mismatch,
        });
    }
    v
}

fn invariant_output<R: RealScalar + ToString>(
    v: &InvariantVector<R>,
    scalar: &str,
    source: Value,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Plain => {
            let mut s = String::new();
            for j in 0..NUM_INVARIANTS {
                let _ = writeln!(s, "I{} = {}", j + 1, v.values[j].to_string());
            }
            s
        }
        OutputFormat::Json => {
            let list: Vec<Value> = (0..NUM_INVARIANTS)
                .map(|j| {
                    let m = MULTIDEGREES[j];
                    let value = if R::EXACT {
                        Value::String(v.values[j].to_string())
                    } else {
                        json!(v.values[j].to_f64())
                    };
                    json!({ "name": format!("I{}", j + 1), "value": value, "multidegree": [m.0, m.1, m.2] })
                })
                .collect();
            json_text(&json!({
                "schema": "qq-invariants/invariants/v1",
                "scalar": scalar,
                "source": source,
                "invariants": list,
            }))
        }
        OutputFormat::Csv => {
            let mut s = String::from("invariant,value,d1,d2,d3\n");
            for j in 0..NUM_INVARIANTS {
                let m = MULTIDEGREES[j];
                let _ = writeln!(s, "I{},{},{},{},{}", j + 1, v.values[j].to_string(), m.0, m.1, m.2);
            }
            s
        }
    }
}

fn cmd_invariants(args: &InvariantArgs, format: OutputFormat) -> Result<Outcome, Failure> {
    if args.battery {
        if args.trials == 0 {
            return Err(Failure::error("--trials must be at least 1"));
        }
        let seed = args.seed.expect("clap enforces --seed");
        let r = invariance_battery(args.trials, seed, args.tolerance)?;
        let text = match format {
            OutputFormat::Plain => {
                let mut s = String::new();
                for j in 0..NUM_INVARIANTS {
                    let _ = writeln!(s, "I{} max relative deviation {:e}", j + 1, r.max_deviation[j]);
                }
                let _ = writeln!(
                    s,
                    "{}: {} trials, seed {}, max deviation {:e} (tolerance {:e}, worst trial {})",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.trials,
                    r.seed,
                    r.overall_max(),
                    r.tolerance,
                    r.worst_trial
                );
                s
            }
            OutputFormat::Json => {
                let mut v = serde_json::to_value(&r).expect("report serializes");
                v["schema"] = json!("qq-invariants/battery/v1");
                json_text(&v)
            }
            OutputFormat::Csv => {
                let mut s = String::from("invariant,max_relative_deviation\n");
                for j in 0..NUM_INVARIANTS {
                    let _ = writeln!(s, "I{},{:e}", j + 1, r.max_deviation[j]);
                }
                s
            }
        };
        return Ok(Outcome { text, code: if r.passed { EXIT_OK } else { EXIT_FAILED } });
    }

    let (state, source) = if args.random {
        let seed = args.seed.expect("clap enforces --seed");
        let mut sampler = Sampler::new(seed);
        let state = match args.scalar.unwrap_or(Scalar::Exact) {
            Scalar::Exact => StateMatrix::Exact(sampler.rational_state()),
            Scalar::Float => StateMatrix::Float(sampler.psd_state()),
        };
        (state, json!({ "random_seed": seed }))
    } else {
        let Some(path) = &args.state else {
            return Err(Failure::error("give a state file, --random, or --battery"));
        };
        let text = std::fs::read_to_string(path).map_err(|e| Failure::error(format!("{}: {e}", path.display())))?;
        let state = parse_state(&text).map_err(|e| Failure::error(e.to_string()))?;
        let state = match (state, args.scalar) {
            (StateMatrix::Exact(m), Some(Scalar::Float)) => StateMatrix::Float(m.to_float()),
            (StateMatrix::Float(_), Some(Scalar::Exact)) => {
                return Err(Failure::error("a float state cannot be evaluated on the exact path"));
            }
            (s, _) => s,
        };
        (state, json!({ "file": path.display().to_string() }))
    };
    let text = match state {
        StateMatrix::Exact(rho) => {
            let dec = decompose_state(&rho).map_err(|e| Failure::error(e.to_string()))?;
            let v: InvariantVector<BigRational> = eval_matrix_form(&dec)?;
            invariant_output(&v, "exact", source, format)
        }
        StateMatrix::Float(rho) => {
            let dec = decompose_state(&rho).map_err(|e| Failure::error(e.to_string()))?;
            let v: InvariantVector<f64> = eval_matrix_form(&dec)?;
            invariant_output(&v, "float", source, format)
        }
    };
    Ok(Outcome { text, code: EXIT_OK })
}

pub const MULTIGRADED_BANNER: &str =
    "EXTENSION: multigraded dimensions are output of this engine; no published reference values exist to compare against";

fn cmd_multigraded(max_degree: usize, budget: MemoryBudget, format: OutputFormat) -> Result<Outcome, Failure> {
    let engine = MolienEngine::with_budget(budget);
    let table = engine.poincare_multigraded(max_degree)?;
    let single = engine.poincare_coefficients(max_degree)?;
    let mismatch = table.first_row_mismatch(&single);
    let rows: Vec<BigInt> = (0..=max_degree).map(|d| table.row_sum(d)).collect();
    let text = match format {
        OutputFormat::Plain => {
            let mut s = format!("{MULTIGRADED_BANNER}\n");
            for (k, v) in table.entries.iter().filter(|(_, v)| **v != BigInt::from(0)) {
                let _ = writeln!(s, "{k} {v}");
            }
            for d in 0..=max_degree {
                let _ = writeln!(s, "total degree {d}: row sum {} (single-graded {})", rows[d], single[d]);
            }
            let _ = writeln!(
                s,
                "{} row sums {} the single-graded series",
                if mismatch.is_none() { "PASS" } else { "FAIL" },
                if mismatch.is_none() { "match" } else { "do not match" }
            );
            s
        }
        OutputFormat::Json => {
            let entries: Vec<Value> = table
                .entries
                .iter()
                .map(|(k, v)| json!({ "multidegree": [k.0, k.1, k.2], "dimension": v.to_string() }))
                .collect();
            json_text(&json!({
                "schema": "qq-invariants/multigraded/v1",
                "extension": true,
                "note": MULTIGRADED_BANNER,
                "max_total_degree": max_degree,
                "entries": entries,
                "row_sums": strings(&rows),
                "single_graded": strings(&single),
                "rows_consistent": mismatch.is_none(),
                "first_mismatch_degree": mismatch,
            }))
        }
        OutputFormat::Csv => {
            let mut s = String::from("d1,d2,d3,dimension\n");
            for (k, v) in &table.entries {
                let _ = writeln!(s, "{},{},{},{v}", k.0, k.1, k.2);
            }
            s
        }
    };
    Ok(Outcome { text, code: if mismatch.is_none() { EXIT_OK } else { EXIT_FAILED } })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["qq-invariants"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn series_plain() {
        assert_eq!(run_capture(&["series", "--max-degree", "4"]), (0, "1 0 3 4 15\n".into(), String::new()));
        assert_eq!(run_capture(&["series", "--max-degree", "0"]).1, "1\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_capture(&["series", "--max-degree", "x"]).0, 2);
        assert_eq!(run_capture(&["bogus"]).0, 2);
        // randomized commands require a seed
        assert_eq!(run_capture(&["invariants", "--random"]).0, 2);
        assert_eq!(run_capture(&["invariants", "--battery"]).0, 2);
        assert_eq!(run_capture(&["invariants"]).0, 2);
    }

    #[test]
    fn budget_exhaustion_exit_2() {
        let (code, _, err) = run_capture(&["series", "--max-degree", "40", "--memory-budget", "1000000"]);
        assert_eq!(code, 2);
        assert!(err.contains("largest feasible degree"), "{err}");
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("multigraded"));
    }
}

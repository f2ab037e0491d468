use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use bessel_core::extremal::{self, Target};
use bessel_core::harness::{self, Ensemble, FieldMode, FuzzConfig, FuzzSummary, IntRange};
use bessel_core::{sharp, BoundReport, Complex, Disk, HVector, Status, Tolerance};
use serde::Serialize;

use crate::family_file::FamilyFile;

/// Process exit status of a command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    InputError = 1,
    /// A bound was violated, or extremal parameters were rejected.
    Failure = 2,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Sends `text` to `output`, or to `stdout` when no path is given.
fn emit(output: Option<&Path>, text: &str, stdout: &mut dyn Write) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => stdout.write_all(text.as_bytes()).context("writing to stdout"),
    }
}

#[derive(Debug, Clone)]
pub struct EvalArgs {
    pub input: PathBuf,
    pub tolerance: f64,
    pub format: Format,
    pub output: Option<PathBuf>,
}

#[derive(Serialize)]
struct StatusRow<'a> {
    #[serde(flatten)]
    report: &'a BoundReport,
    status: Status,
}

/// Evaluates every applicable bound on the family in `args.input`.
pub fn eval(args: &EvalArgs, stdout: &mut dyn Write) -> anyhow::Result<Exit> {
    anyhow::ensure!(args.tolerance > 0.0 && args.tolerance.is_finite(), "--tolerance must be positive");
    let tol = Tolerance::new(args.tolerance);
    let loaded = FamilyFile::read(&args.input)?.load()?;
    let p_values = loaded.p.clone().unwrap_or_else(|| FuzzConfig::default().p_values);
    let reports: Vec<BoundReport> =
        harness::check_all(&loaded.family, loaded.disk.as_ref(), loaded.coeffs.as_deref(), &p_values, &tol)
            .into_iter()
            .filter(|r| r.preconditions_met)
            .collect();

    let text = match args.format {
        Format::Json => {
            let rows: Vec<StatusRow> = reports.iter().map(|r| StatusRow { report: r, status: r.status(&tol) }).collect();
            let mut s = serde_json::to_string_pretty(&rows)?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["bound_id", "p", "lhs", "rhs", "slack", "ratio", "status"])?;
            for r in &reports {
                let status = serde_json::to_value(r.status(&tol))?;
                w.write_record([
                    r.bound_id.as_str().to_string(),
                    r.p.map(|p| p.to_string()).unwrap_or_default(),
                    r.lhs.to_string(),
                    r.rhs.to_string(),
                    r.slack.to_string(),
                    r.ratio.to_string(),
                    status.as_str().unwrap_or_default().to_string(),
                ])?;
            }
            String::from_utf8(w.into_inner()?)?
        }
    };
    emit(args.output.as_deref(), &text, stdout)?;
    Ok(if reports.iter().any(|r| r.is_violation(&tol)) { Exit::Failure } else { Exit::Success })
}

#[derive(Debug, Clone)]
pub struct FuzzArgs {
    pub seed: u64,
    pub instances: u64,
    pub n: IntRange,
    pub dim: IntRange,
    pub field: FieldMode,
    pub tolerance: f64,
    pub output: Option<PathBuf>,
    pub threads: Option<usize>,
}

/// Runs `f` on a pool of `threads` workers (the global pool when `None`).
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    match threads {
        #[cfg(feature = "parallel")]
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build().context("building thread pool")?;
            Ok(pool.install(f))
        }
        _ => Ok(f()),
    }
}

pub fn fuzz_summary(args: &FuzzArgs) -> anyhow::Result<FuzzSummary> {
    let cfg = FuzzConfig {
        master_seed: args.seed,
        instances: args.instances,
        n_range: args.n,
        d_range: args.dim,
        field_mode: args.field,
        tolerance: args.tolerance,
        ..FuzzConfig::default()
    };
    cfg.validate()?;
    with_threads(args.threads, || harness::fuzz(&cfg))
}

/// Fuzzes every bound and writes the JSON summary; fails on any violation.
pub fn fuzz(args: &FuzzArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> anyhow::Result<Exit> {
    let summary = fuzz_summary(args)?;
    let mut text = serde_json::to_string_pretty(&summary)?;
    text.push('\n');
    emit(args.output.as_deref(), &text, stdout)?;
    let evaluations: u64 = summary.checked.values().sum();
    writeln!(
        stderr,
        "{} instances, {} evaluations, {} violations",
        args.instances,
        evaluations,
        summary.violations.len()
    )?;
    Ok(if summary.is_clean() { Exit::Success } else { Exit::Failure })
}

#[derive(Debug, Clone)]
pub struct ExtremalArgs {
    pub target: Target,
    pub n: usize,
    pub gamma: Complex,
    pub gamma_high: Complex,
    pub dim: usize,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct ExtremalReport {
    pub target: Target,
    pub n: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub per_j_boundary: Vec<f64>,
    pub mean_residual: f64,
    pub max_residual: f64,
}

pub fn extremal_report(args: &ExtremalArgs) -> bessel_core::Result<(FamilyFile, ExtremalReport)> {
    let tol = Tolerance::DEFAULT;
    if args.dim == 0 {
        return Err(bessel_core::BoundError::ZeroDimension);
    }
    let d = Disk::new(args.gamma, args.gamma_high);
    let x = HVector::basis(args.dim, 0);
    let f = extremal::build(args.target, &x, args.n, &d, None, &tol)?;
    let (bound, residuals) = match args.target {
        Target::Root => (sharp::disk_root_bound(&f, &d, &tol)?, sharp::disk_root_residuals(&f, &d, &tol)?),
        Target::Square => (sharp::disk_square_bound(&f, &d, &tol)?, sharp::disk_square_residuals(&f, &d, &tol)?),
    };
    let report = ExtremalReport {
        target: args.target,
        n: args.n,
        lhs: bound.lhs,
        rhs: bound.rhs,
        per_j_boundary: residuals.per_j_boundary,
        mean_residual: residuals.mean_residual,
        max_residual: residuals.max_residual,
    };
    Ok((FamilyFile::from_family(&f, Some(&d)), report))
}

/// Builds an equality family, writes it, and prints its residual report.
/// Infeasible or invalid parameters exit with [`Exit::Failure`].
pub fn extremal(args: &ExtremalArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> anyhow::Result<Exit> {
    let (file, report) = match extremal_report(args) {
        Ok(v) => v,
        Err(e) => {
            writeln!(stderr, "error: {e}")?;
            return Ok(Exit::Failure);
        }
    };
    if let Some(path) = &args.output {
        fs::write(path, file.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    stdout.write_all(text.as_bytes())?;
    Ok(Exit::Success)
}

#[derive(Debug, Clone)]
pub struct CompareArgs {
    pub seed: u64,
    pub instances: u64,
    pub ensemble: Ensemble,
    pub n: IntRange,
    pub dim: IntRange,
    pub output: Option<PathBuf>,
    pub threads: Option<usize>,
}

pub fn compare_csv(args: &CompareArgs) -> anyhow::Result<String> {
    let cfg = FuzzConfig {
        master_seed: args.seed,
        instances: args.instances,
        n_range: args.n,
        d_range: args.dim,
        ..FuzzConfig::default()
    };
    cfg.validate()?;
    let rows = with_threads(args.threads, || harness::tightness_compare(&cfg, args.ensemble))?;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["bound_id", "wins", "mean_ratio"])?;
    for r in rows {
        w.write_record([r.bound_id.as_str().to_string(), r.wins.to_string(), r.mean_ratio.to_string()])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Writes the tightness table `bound_id,wins,mean_ratio`.
pub fn compare(args: &CompareArgs, stdout: &mut dyn Write) -> anyhow::Result<Exit> {
    let text = compare_csv(args)?;
    emit(args.output.as_deref(), &text, stdout)?;
    Ok(Exit::Success)
}

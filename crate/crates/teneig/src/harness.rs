//! Multi-start experiment driver.
//!
//! An experiment draws a set of seeded random start vectors, runs the
//! iteration from each, pools the converged runs into distinct eigenpairs,
//! and reports one row per pair: how often it was found, the median
//! iteration count, monotonicity-violation statistics, and residual and
//! wall-time statistics. The start set depends only on the seed and the
//! dimension, so experiments that differ in the shift setting alone consume
//! identical starts and their iteration counts compare like for like.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geap::{
    geap_iterate, zeap_iterate, BKind, Classification, EigenRecord, GeapConfig, IterationTrace,
    ProblemSpec,
};

/// Two converged runs are pooled as the same eigenpair when their
/// eigenvalues agree to this tolerance, absolutely or relatively...
pub const LAMBDA_DEDUP_TOL: f64 = 1e-4;
/// ...and their unit eigenvectors agree to this Euclidean distance, up to
/// an overall sign. Looser than converged residuals, tighter than the gap
/// between any two distinct eigenpairs of the bundled problems.
pub const X_DEDUP_TOL: f64 = 1e-3;

/// Settings for one multi-start experiment.
#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    /// Number of random starts; must be at least 1.
    pub starts: usize,
    /// Per-run iteration settings. `geap.seed` seeds the start vectors.
    pub geap: GeapConfig,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            starts: 100,
            geap: GeapConfig::default(),
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.starts < 1 {
            return Err(Error::InvalidInput(
                "an experiment needs at least one start".into(),
            ));
        }
        self.geap.validate()
    }
}

/// One distinct eigenpair with statistics pooled over the converged runs
/// that reached it. The representative pair comes from the first such run.
#[derive(Clone, Debug, Serialize)]
pub struct SummaryRow {
    /// Converged runs pooled into this row.
    pub occurrences: usize,
    pub lambda: f64,
    /// Unit eigenvector, canonical sign.
    pub x: Vec<f64>,
    pub classification: Classification,
    /// Median iteration count over the pooled runs (mean of the two middle
    /// counts when their number is even).
    pub median_iterations: f64,
    /// Total backward eigenvalue moves recorded across the pooled runs.
    pub n_violations: usize,
    /// Largest backward move recorded, 0 when there were none.
    pub max_violation: f64,
    /// Mean and sample standard deviation of the converged residuals.
    pub err_mean: f64,
    pub err_std: f64,
    /// Mean and sample standard deviation of the per-run wall times, in
    /// seconds. Reported for orientation only; timings are machine-specific
    /// and nothing asserts them.
    pub time_mean: f64,
    pub time_std: f64,
}

/// The outcome of a multi-start experiment.
#[derive(Clone, Debug, Serialize)]
pub struct RunSummary {
    /// Distinct eigenpairs, sorted by beta * lambda descending, so the
    /// best value for the requested orientation comes first.
    pub rows: Vec<SummaryRow>,
    /// Starts attempted.
    pub starts: usize,
    /// Runs that hit the iteration cap without converging or failed
    /// numerically. Occurrences and failures add up to `starts`.
    pub failures: usize,
}

/// The `index`-th start vector of the experiment seeded by `seed`: `dim`
/// entries drawn uniformly from [-1, 1). The generator is a fixed, portable
/// stream cipher keyed by `(seed, index)`, so the start set is reproducible
/// across platforms and runs, and every start can be regenerated on its own.
pub fn start_vector(seed: u64, index: u64, dim: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

/// Run one start, routing unit-sphere problems through the specialized
/// iteration and every other weighting through the general one.
pub fn run_start(
    p: &ProblemSpec,
    x0: &[f64],
    cfg: &GeapConfig,
) -> Result<(EigenRecord, IterationTrace)> {
    match p.b_kind() {
        BKind::Z => zeap_iterate(p.a(), x0, cfg, p.orientation()),
        _ => geap_iterate(p, x0, cfg),
    }
}

/// Run a full multi-start experiment with starts drawn by [`start_vector`].
pub fn run_experiment(p: &ProblemSpec, cfg: &ExperimentConfig) -> Result<RunSummary> {
    cfg.validate()?;
    let starts: Vec<Vec<f64>> = (0..cfg.starts)
        .map(|i| start_vector(cfg.geap.seed, i as u64, p.dim()))
        .collect();
    run_experiment_with(p, &cfg.geap, &starts)
}

/// Run an experiment over a caller-supplied start set: the seeded random
/// set, or a handful of prescribed vectors, or a single start.
///
/// A run that converges joins the pool; a run that hits the iteration cap
/// or fails numerically is counted as a failure. Any other error (a shape
/// mismatch, an invalid configuration) aborts the experiment.
pub fn run_experiment_with(
    p: &ProblemSpec,
    cfg: &GeapConfig,
    starts: &[Vec<f64>],
) -> Result<RunSummary> {
    if starts.is_empty() {
        return Err(Error::InvalidInput(
            "an experiment needs at least one start".into(),
        ));
    }
    let mut pools: Vec<Pool> = Vec::new();
    let mut failures = 0usize;
    for x0 in starts {
        match run_start(p, x0, cfg) {
            Ok((rec, trace)) => {
                if trace.converged {
                    absorb(&mut pools, rec, &trace);
                } else {
                    failures += 1;
                }
            }
            Err(e) if e.is_numerical() => failures += 1,
            Err(e) => return Err(e),
        }
    }
    let beta = p.beta();
    let mut rows: Vec<SummaryRow> = pools.into_iter().map(Pool::into_row).collect();
    rows.sort_by(|a, b| (beta * b.lambda).total_cmp(&(beta * a.lambda)));
    Ok(RunSummary {
        rows,
        starts: starts.len(),
        failures,
    })
}

/// Converged runs pooled under one representative eigenpair.
struct Pool {
    rec: EigenRecord,
    iterations: Vec<usize>,
    residuals: Vec<f64>,
    times: Vec<f64>,
    n_violations: usize,
    max_violation: f64,
}

impl Pool {
    fn new(rec: EigenRecord, trace: &IterationTrace) -> Self {
        let mut pool = Pool {
            rec,
            iterations: Vec::new(),
            residuals: Vec::new(),
            times: Vec::new(),
            n_violations: 0,
            max_violation: 0.0,
        };
        pool.push(pool.rec.residual, trace);
        pool
    }

    fn push(&mut self, residual: f64, trace: &IterationTrace) {
        self.iterations.push(trace.iterations);
        self.residuals.push(residual);
        self.times.push(trace.wall_time);
        self.n_violations += trace.monotonicity_violations.len();
        for v in &trace.monotonicity_violations {
            self.max_violation = self.max_violation.max(v.magnitude);
        }
    }

    fn into_row(mut self) -> SummaryRow {
        self.iterations.sort_unstable();
        let (err_mean, err_std) = mean_std(&self.residuals);
        let (time_mean, time_std) = mean_std(&self.times);
        SummaryRow {
            occurrences: self.iterations.len(),
            lambda: self.rec.lambda,
            x: self.rec.x,
            classification: self.rec.classification,
            median_iterations: median_of_sorted(&self.iterations),
            n_violations: self.n_violations,
            max_violation: self.max_violation,
            err_mean,
            err_std,
            time_mean,
            time_std,
        }
    }
}

fn absorb(pools: &mut Vec<Pool>, rec: EigenRecord, trace: &IterationTrace) {
    if let Some(pool) = pools.iter_mut().find(|g| same_pair(&g.rec, &rec)) {
        pool.push(rec.residual, trace);
    } else {
        pools.push(Pool::new(rec, trace));
    }
}

/// The pooling predicate: eigenvalues within [`LAMBDA_DEDUP_TOL`]
/// (absolutely or relative to the larger magnitude) and eigenvectors within
/// [`X_DEDUP_TOL`] up to sign.
fn same_pair(a: &EigenRecord, b: &EigenRecord) -> bool {
    let dl = (a.lambda - b.lambda).abs();
    let scale = a.lambda.abs().max(b.lambda.abs());
    if dl > LAMBDA_DEDUP_TOL && dl > LAMBDA_DEDUP_TOL * scale {
        return false;
    }
    let mut dplus = 0.0;
    let mut dminus = 0.0;
    for (u, v) in a.x.iter().zip(&b.x) {
        dplus += (u - v) * (u - v);
        dminus += (u + v) * (u + v);
    }
    dplus.min(dminus).sqrt() <= X_DEDUP_TOL
}

fn median_of_sorted(sorted: &[usize]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2] as f64
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) as f64 / 2.0
    }
}

/// Mean and sample standard deviation (n - 1 in the denominator; 0 for a
/// single observation).
fn mean_std(v: &[f64]) -> (f64, f64) {
    let n = v.len();
    let mean = v.iter().sum::<f64>() / n as f64;
    if n < 2 {
        return (mean, 0.0);
    }
    let var = v.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1) as f64;
    (mean, var.sqrt())
}

/// How [`emit_summary`] renders a summary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    /// Human-aligned fixed-width columns.
    Table,
    /// Machine-readable rows; the trailing failure count rides on a `#`
    /// comment line.
    Csv,
    /// The whole summary as one object.
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::InvalidInput(format!(
                "unknown output format `{other}`; expected table, csv, or json"
            ))),
        }
    }
}

/// Render a summary to a writer. Every field except the wall-time columns
/// is a deterministic function of the problem, the seed, and the settings,
/// so repeated runs render bitwise-identical output up to those columns.
pub fn emit_summary(s: &RunSummary, format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
    match format {
        OutputFormat::Table => write_table(s, out),
        OutputFormat::Csv => write_csv(s, out),
        OutputFormat::Json => write_json(s, out),
    }
}

fn write_csv(s: &RunSummary, out: &mut dyn Write) -> io::Result<()> {
    write!(out, "occurrences,lambda")?;
    let dim = s.rows.first().map_or(0, |r| r.x.len());
    for i in 1..=dim {
        write!(out, ",x{i}")?;
    }
    writeln!(
        out,
        ",median_its,n_violations,max_violation,err_mean,err_std,time_mean,time_std"
    )?;
    for r in &s.rows {
        write!(out, "{},{}", r.occurrences, r.lambda)?;
        for v in &r.x {
            write!(out, ",{v}")?;
        }
        writeln!(
            out,
            ",{},{},{},{},{},{},{}",
            r.median_iterations,
            r.n_violations,
            r.max_violation,
            r.err_mean,
            r.err_std,
            r.time_mean,
            r.time_std
        )?;
    }
    writeln!(
        out,
        "# failed_to_converge: {} of {} starts",
        s.failures, s.starts
    )
}

fn write_table(s: &RunSummary, out: &mut dyn Write) -> io::Result<()> {
    write!(out, "{:>11}  {:>12}", "occurrences", "lambda")?;
    let dim = s.rows.first().map_or(0, |r| r.x.len());
    for i in 1..=dim {
        write!(out, "  {:>8}", format!("x{i}"))?;
    }
    writeln!(
        out,
        "  {:>10}  {:>6}  {:>9}  {:>9}  {:>9}  {:>9}  {:>9}  type",
        "median_its", "nviol", "max_viol", "err_mean", "err_std", "time_mean", "time_std"
    )?;
    for r in &s.rows {
        write!(out, "{:>11}  {:>12.4}", r.occurrences, r.lambda)?;
        for v in &r.x {
            write!(out, "  {v:>8.4}")?;
        }
        writeln!(
            out,
            "  {:>10.1}  {:>6}  {:>9.2e}  {:>9.2e}  {:>9.2e}  {:>9.2e}  {:>9.2e}  {}",
            r.median_iterations,
            r.n_violations,
            r.max_violation,
            r.err_mean,
            r.err_std,
            r.time_mean,
            r.time_std,
            r.classification
        )?;
    }
    writeln!(
        out,
        "failed to converge: {} of {} starts",
        s.failures, s.starts
    )
}

fn write_json(s: &RunSummary, out: &mut dyn Write) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, s)?;
    writeln!(out)
}

/// Write a run history as csv rows `k,lambda_k,alpha_k`: enough to plot the
/// shift and the eigenvalue estimate against the iteration counter.
pub fn emit_trace(trace: &IterationTrace, path: &Path) -> Result<()> {
    if trace.steps.is_empty() {
        return Err(Error::InvalidInput("empty iteration trace".into()));
    }
    let mut text = String::from("k,lambda_k,alpha_k\n");
    for s in &trace.steps {
        let _ = writeln!(text, "{},{},{}", s.k, s.lambda, s.alpha);
    }
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

//! `teneig` — command-line driver for symmetric tensor eigenpair
//! experiments.
//!
//! Three subcommands:
//!
//! * `run` — multi-start shifted power iterations over a bundled dataset or
//!   tensors loaded from files, pooled into an occurrence table (text table,
//!   csv, or json).
//! * `classify` — label one candidate eigenpair of a bundled dataset by the
//!   spectrum of its projected Hessian.
//! * `export` — write a bundled dataset's tensor in the text format, so it
//!   can be fed back through `run --tensor-a`.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when every start
//! fails numerically and no eigenpair is produced.

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use teneig::geap::DEFAULT_TAU_CLASS;
use teneig::harness::{
    run_experiment, run_experiment_with, run_start, start_vector, emit_summary, emit_trace,
};
use teneig::problems::{builtin, load_matrix, load_tensor, save_tensor};
use teneig::{
    BKind, Error, ExperimentConfig, GeapConfig, Orientation, OutputFormat, ProblemSpec, Result,
    ShiftMode,
};

#[derive(Parser)]
#[command(
    name = "teneig",
    version,
    about = "Generalized eigenpairs of real symmetric tensors via the adaptive shifted power method"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

// Parsed exactly once; boxing the big run variant would only fight the
// derive.
#[allow(clippy::large_enum_variant)]
#[derive(Subcommand)]
enum Command {
    /// Run multi-start power iterations and print the pooled eigenpair table
    Run(RunArgs),
    /// Classify a candidate eigenpair of a bundled dataset
    Classify(ClassifyArgs),
    /// Write a bundled dataset's tensor in the text format
    Export(ExportArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Bundled dataset: kore02, heig, deig, or random
    #[arg(long, value_name = "NAME")]
    dataset: Option<String>,

    /// Tensor file for A (alternative to --dataset)
    #[arg(long, value_name = "PATH", conflicts_with = "dataset")]
    tensor_a: Option<PathBuf>,

    /// Tensor file for B when --b-kind is `explicit`
    #[arg(long, value_name = "PATH", conflicts_with = "dataset")]
    tensor_b: Option<PathBuf>,

    /// Weighting for --tensor-a problems: z (unit sphere), h (componentwise
    /// power), d (matrix-weighted, order 4), or explicit (from --tensor-b)
    #[arg(long, value_name = "KIND", conflicts_with = "dataset")]
    b_kind: Option<String>,

    /// Order-2 tensor file holding the matrix for --b-kind d
    #[arg(long, value_name = "PATH", conflicts_with = "dataset")]
    d_matrix: Option<PathBuf>,

    /// 1 seeks maxima, -1 minima
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    beta: i32,

    /// `adaptive`, or a number to use as a constant shift
    #[arg(long, default_value = "adaptive", allow_hyphen_values = true)]
    shift: String,

    /// Number of random start vectors
    #[arg(long, default_value_t = 100)]
    starts: usize,

    /// Base seed for the start vectors
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Definiteness margin for the shifted Hessian
    #[arg(long, value_name = "T")]
    tau: Option<f64>,

    /// Convergence tolerance on successive eigenvalue estimates
    #[arg(long, value_name = "T")]
    tol: Option<f64>,

    /// Iteration cap per start
    #[arg(long, value_name = "N")]
    max_iters: Option<usize>,

    /// Output format: table, csv, or json
    #[arg(long, default_value = "table")]
    format: String,

    /// Write the first start's iteration history (k,lambda_k,alpha_k) as csv
    #[arg(long, value_name = "PATH")]
    trace: Option<PathBuf>,

    /// Comma-separated start vector; runs this single start instead of
    /// drawing --starts random ones
    #[arg(long, value_name = "V1,V2,...", allow_hyphen_values = true)]
    x0: Option<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Bundled dataset: kore02, heig, deig, or random
    #[arg(long, value_name = "NAME")]
    dataset: String,

    /// Eigenvalue of the candidate pair
    #[arg(long, allow_negative_numbers = true)]
    lambda: f64,

    /// Comma-separated eigenvector (normalized internally)
    #[arg(long, value_name = "V1,V2,...", allow_hyphen_values = true)]
    x: String,
}

#[derive(Args)]
struct ExportArgs {
    /// Bundled dataset: kore02, heig, deig, or random
    #[arg(long, value_name = "NAME")]
    dataset: String,

    /// Destination path for the tensor file
    #[arg(long, value_name = "PATH")]
    out: PathBuf,

    /// Which tensor to write: the dataset's A or its materialized weighting B
    #[arg(long, value_enum, default_value_t = WhichTensor::A)]
    which: WhichTensor,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichTensor {
    A,
    B,
}

fn main() {
    // clap's own exit code for bad command lines is 2, which this tool
    // reserves for numerical failure; route parse errors through exit 1.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            std::process::exit(if is_help { 0 } else { 1 });
        }
    };

    let outcome = match cli.command {
        Command::Run(args) => cmd_run(&args),
        Command::Classify(args) => cmd_classify(&args),
        Command::Export(args) => cmd_export(&args),
    };

    if let Err(err) = outcome {
        eprintln!("error: {err}");
        std::process::exit(if err.is_numerical() { 2 } else { 1 });
    }
}

fn cmd_run(args: &RunArgs) -> Result<()> {
    let orientation = Orientation::from_beta(args.beta)?;
    let problem = build_problem(args, orientation)?;
    let cfg = build_config(args)?;
    let format: OutputFormat = args.format.parse()?;

    let explicit_start = match &args.x0 {
        Some(text) => {
            let x0 = parse_vector(text, "--x0")?;
            if x0.len() != problem.dim() {
                return Err(Error::ShapeMismatch(format!(
                    "--x0 has {} components but the problem dimension is {}",
                    x0.len(),
                    problem.dim()
                )));
            }
            Some(x0)
        }
        None => None,
    };

    let summary = match &explicit_start {
        Some(x0) => run_experiment_with(&problem, &cfg, std::slice::from_ref(x0))?,
        None => {
            let exp = ExperimentConfig {
                starts: args.starts,
                geap: cfg.clone(),
            };
            run_experiment(&problem, &exp)?
        }
    };

    let stdout = io::stdout();
    let mut out = stdout.lock();
    emit_summary(&summary, format, &mut out).map_err(|source| Error::Io {
        path: "<stdout>".into(),
        source,
    })?;
    out.flush().map_err(|source| Error::Io {
        path: "<stdout>".into(),
        source,
    })?;

    if let Some(trace_path) = &args.trace {
        let x0 = match &explicit_start {
            Some(x0) => x0.clone(),
            None => start_vector(cfg.seed, 0, problem.dim()),
        };
        let (_, trace) = run_start(&problem, &x0, &cfg)?;
        emit_trace(&trace, trace_path)?;
    }

    if summary.rows.is_empty() {
        // The (empty) table and its failure count were already printed;
        // signal that no start produced an eigenpair.
        return Err(Error::Numerical(format!(
            "all {} starts failed to produce an eigenpair",
            summary.starts
        )));
    }
    Ok(())
}

fn cmd_classify(args: &ClassifyArgs) -> Result<()> {
    let dataset = builtin(&args.dataset)?;
    // Classification is orientation-independent; any valid problem works.
    let problem = dataset.problem(Orientation::Maxima)?;
    let x = parse_vector(&args.x, "--x")?;
    let (label, eigs) = teneig::geap::classify(&problem, args.lambda, &x, DEFAULT_TAU_CLASS)?;

    println!("classification: {label}");
    let rendered: Vec<String> = eigs.iter().map(|v| format!("{v:.6}")).collect();
    println!("projected hessian eigenvalues: {}", rendered.join(", "));
    Ok(())
}

fn cmd_export(args: &ExportArgs) -> Result<()> {
    let dataset = builtin(&args.dataset)?;
    let tensor = match args.which {
        WhichTensor::A => dataset.a.clone(),
        WhichTensor::B => {
            let problem = dataset.problem(Orientation::Maxima)?;
            match problem.b_tensor() {
                Some(b) => b.clone(),
                None => {
                    return Err(Error::Unsupported(format!(
                        "dataset `{}` has no materialized weighting tensor",
                        dataset.name
                    )))
                }
            }
        }
    };
    save_tensor(&args.out, &tensor)
}

fn build_problem(args: &RunArgs, orientation: Orientation) -> Result<ProblemSpec> {
    if let Some(name) = &args.dataset {
        return builtin(name)?.problem(orientation);
    }

    let path = args.tensor_a.as_ref().ok_or_else(|| {
        Error::InvalidInput("either --dataset or --tensor-a is required".into())
    })?;
    let a = load_tensor(path)?;

    let kind = match args.b_kind.as_deref() {
        None => {
            return Err(Error::InvalidInput(
                "--b-kind is required with --tensor-a (z, h, d, or explicit)".into(),
            ))
        }
        Some("z") => BKind::Z,
        Some("h") => BKind::H,
        Some("d") => {
            let path = args.d_matrix.as_ref().ok_or_else(|| {
                Error::InvalidInput("--b-kind d requires --d-matrix".into())
            })?;
            BKind::D(load_matrix(path)?)
        }
        Some("explicit") => {
            let path = args.tensor_b.as_ref().ok_or_else(|| {
                Error::InvalidInput("--b-kind explicit requires --tensor-b".into())
            })?;
            BKind::Explicit(load_tensor(path)?)
        }
        Some(other) => {
            return Err(Error::InvalidInput(format!(
                "unknown --b-kind `{other}`; expected z, h, d, or explicit"
            )))
        }
    };

    ProblemSpec::new(a, kind, orientation)
}

fn build_config(args: &RunArgs) -> Result<GeapConfig> {
    let shift = if args.shift == "adaptive" {
        ShiftMode::Adaptive
    } else {
        let alpha: f64 = args.shift.parse().map_err(|_| {
            Error::InvalidInput(format!(
                "--shift must be `adaptive` or a number, got `{}`",
                args.shift
            ))
        })?;
        ShiftMode::Fixed(alpha)
    };

    let mut cfg = GeapConfig {
        shift,
        seed: args.seed,
        ..GeapConfig::default()
    };
    if let Some(tau) = args.tau {
        cfg.tau = tau;
    }
    if let Some(tol) = args.tol {
        cfg.lambda_tol = tol;
    }
    if let Some(max_iters) = args.max_iters {
        cfg.max_iters = max_iters;
    }
    Ok(cfg)
}

fn parse_vector(text: &str, flag: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<f64>().map_err(|_| {
                Error::InvalidInput(format!("{flag}: `{part}` is not a number"))
            })
        })
        .collect()
}

//! `monoinv`: classify distributions, invert distribution functions and
//! replay the library's identities from the command line.
//!
//! Exit codes: 0 ok (or unimodal), 1 parse error, 2 invalid input,
//! 3 not unimodal, 4 quantile function not absolutely continuous,
//! 5 law failure.

mod ingest;
mod report;
mod spec;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use monoinv_core::harness::{run_law, CheckReport, GenConfig, Law};
use monoinv_core::measure::{lebesgue_decompose, PiecewiseMeasure};
use monoinv_core::repr::{rat, AtomRepr, IntervalRepr, MonotoneRepr, StepRepr};
use monoinv_core::unimodal::quantile_density;
use monoinv_core::{parse_rational, Error, PiecewiseMonotone};
use serde::Serialize;

use report::{plot_points, Analysis};
use spec::{default_anchor, DistributionSpec};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Io { .. } => 1,
            CliError::Invalid(_) => 2,
            CliError::Core(Error::Parse(_) | Error::UnknownLaw(_)) => 1,
            CliError::Core(Error::QfNotAbsolutelyContinuous(_)) => 4,
            CliError::Core(_) => 2,
        }
    }
}

#[derive(Parser)]
#[command(name = "monoinv", version, about = "Exact generalized inverses and unimodality of piecewise distributions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a distribution as CDF-, density- and quantile-unimodal
    Classify(Input),
    /// Generalized inverse and quantile function of the distribution function
    Invert(Input),
    /// Split into atoms and an absolutely continuous part
    Decompose(Input),
    /// Derivative of the quantile function
    Qdensity(Input),
    /// Turn samples into a spec (interpolated empirical CDF)
    Ingest {
        #[arg(long)]
        samples: PathBuf,
        #[command(flatten)]
        samples_opts: SampleOpts,
        #[command(flatten)]
        out: Output,
    },
    /// Replay identities over random instances
    Verify {
        /// Law id, or `all`
        #[arg(long, default_value = "all")]
        law: String,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, env = "MONOINV_SEED", default_value_t = 0)]
        seed: u64,
        /// Maximum number of affine pieces per instance
        #[arg(long, default_value_t = 12)]
        max_knots: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct SampleOpts {
    /// Skip the first line of the sample file
    #[arg(long)]
    header: bool,
    /// Accept fewer than two distinct samples (the result is one atom)
    #[arg(long)]
    allow_degenerate: bool,
}

#[derive(Args)]
struct Output {
    /// Write the JSON here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Wrap the output with a timestamp
    #[arg(long)]
    stamp: bool,
}

#[derive(Args)]
struct Input {
    /// Distribution spec (JSON)
    #[arg(long, conflicts_with = "samples", required_unless_present = "samples")]
    spec: Option<PathBuf>,
    /// Samples, one number per line
    #[arg(long)]
    samples: Option<PathBuf>,
    #[command(flatten)]
    samples_opts: SampleOpts,
    /// Anchor z of the distribution function, F(z) = 0
    #[arg(long)]
    anchor: Option<String>,
    /// Also print N + 1 evaluation rows as CSV on stdout
    #[arg(long, value_name = "N")]
    plot_points: Option<usize>,
    #[command(flatten)]
    out: Output,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

impl Input {
    fn measure(&self) -> Result<PiecewiseMeasure, CliError> {
        let spec = match (&self.spec, &self.samples) {
            (Some(p), _) => DistributionSpec::parse(&read(p)?)?,
            (None, Some(p)) => {
                let xs = ingest::read_samples(&read(p)?, self.samples_opts.header)?;
                ingest::ingest(xs, self.samples_opts.allow_degenerate)?
            }
            (None, None) => return Err(CliError::Parse("one of --spec and --samples is required".into())),
        };
        spec.to_measure()
    }

    fn analysis(&self) -> Result<Analysis, CliError> {
        let m = self.measure()?;
        if m.is_zero() {
            return Err(CliError::Core(Error::ZeroMeasure));
        }
        let z = match &self.anchor {
            Some(a) => parse_rational(a).map_err(|e| CliError::Parse(e.to_string()))?,
            None => default_anchor(m.carrier()),
        };
        Ok(Analysis::new(m, z)?)
    }
}

/// Writes JSON to `--out` or stdout. With plot points the CSV owns stdout
/// and the JSON is written only when `--out` is given.
fn emit<T: Serialize>(body: &T, out: &Output, plot: Option<String>) -> Result<(), CliError> {
    let json = if out.stamp {
        let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        serde_json::to_string_pretty(&serde_json::json!({ "stamp_unix": secs, "body": body }))
    } else {
        serde_json::to_string_pretty(body)
    }
    .expect("reports serialize")
        + "\n";
    match &out.out {
        Some(p) => std::fs::write(p, json).map_err(|source| CliError::Io { path: p.clone(), source })?,
        None if plot.is_none() => print!("{json}"),
        None => {}
    }
    if let Some(csv) = plot {
        print!("{csv}");
    }
    Ok(())
}

fn plot(g: &PiecewiseMonotone, n: Option<usize>) -> Option<String> {
    n.map(|n| plot_points(g, n))
}

#[derive(Serialize)]
struct InvertReport {
    input: DistributionSpec,
    anchor: String,
    cdf: MonotoneRepr,
    inverse: MonotoneRepr,
    quantile: MonotoneRepr,
    quantile_domain: IntervalRepr,
}

#[derive(Serialize)]
struct DecomposeReport {
    input: DistributionSpec,
    atoms: Vec<AtomRepr>,
    abs_density: StepRepr,
}

#[derive(Serialize)]
struct QdensityReport {
    input: DistributionSpec,
    anchor: String,
    quantile: MonotoneRepr,
    quantile_density: StepRepr,
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Classify(input) => {
            let a = input.analysis()?;
            let r = a.report()?;
            let code = if r.classification.cdf_unimodal { 0 } else { 3 };
            emit(&r, &input.out, plot(&a.cdf, input.plot_points))?;
            Ok(code)
        }
        Command::Invert(input) => {
            let a = input.analysis()?;
            let inverse = a.cdf.generalized_inverse()?;
            let r = InvertReport {
                input: DistributionSpec::from_measure(&a.measure),
                anchor: rat(&a.anchor),
                cdf: (&a.cdf).into(),
                inverse: (&inverse).into(),
                quantile: (&a.quantile).into(),
                quantile_domain: a.quantile.regular_domain().into(),
            };
            emit(&r, &input.out, plot(&inverse, input.plot_points))?;
            Ok(0)
        }
        Command::Decompose(input) => {
            let m = input.measure()?;
            let (abs, sing) = lebesgue_decompose(&m);
            let r = DecomposeReport {
                input: DistributionSpec::from_measure(&m),
                atoms: sing.atoms().iter().map(AtomRepr::from).collect(),
                abs_density: (&abs.abs_density()).into(),
            };
            let cdf = match input.plot_points {
                Some(_) => Some(input.analysis()?.cdf),
                None => None,
            };
            emit(&r, &input.out, cdf.and_then(|g| plot(&g, input.plot_points)))?;
            Ok(0)
        }
        Command::Qdensity(input) => {
            let a = input.analysis()?;
            let qd = quantile_density(&a.cdf)?;
            let r = QdensityReport {
                input: DistributionSpec::from_measure(&a.measure),
                anchor: rat(&a.anchor),
                quantile: (&a.quantile).into(),
                quantile_density: (&qd).into(),
            };
            emit(&r, &input.out, plot(&a.quantile, input.plot_points))?;
            Ok(0)
        }
        Command::Ingest { samples, samples_opts, out } => {
            let xs = ingest::read_samples(&read(&samples)?, samples_opts.header)?;
            let spec = ingest::ingest(xs, samples_opts.allow_degenerate)?;
            emit(&spec, &out, None)?;
            Ok(0)
        }
        Command::Verify { law, n, seed, max_knots, out } => {
            let laws: Vec<Law> = if law.eq_ignore_ascii_case("all") { Law::ALL.to_vec() } else { vec![law.parse()?] };
            let cfg = GenConfig { seed, max_knots, ..GenConfig::default() };
            let reports: Vec<CheckReport> = laws.into_iter().map(|l| run_law(l, n, &cfg)).collect();
            let ok = reports.iter().all(CheckReport::ok);
            match reports.as_slice() {
                [one] => emit(one, &out, None)?,
                all => emit(&all, &out, None)?,
            }
            Ok(if ok { 0 } else { 5 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

//! Command-line front end for the entanglement-swapping toolkit.
//!
//! Five subcommands cover the workflows the core crate supports: `swap`
//! analyzes one Bell measurement, `sweep` scans the equal-angle family,
//! `ensemble` samples finite runs, `cascade` iterates purification levels,
//! and `measure` evaluates entanglement measures on a user-given state.
//! Every run emits one self-describing JSON or CSV report and is
//! byte-reproducible: same inputs, same bytes.

mod config;
mod report;

use std::fmt::Display;
use std::num::{NonZeroU32, NonZeroU64};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use entswap_core::{
    apply_bsm_mode, cascade_exact_with_mode, cascade_sampled_with_mode, entanglement_es,
    entropy_of_entanglement, procrustean_yield, sample_swap_workers, swap_general,
    theta_from_absorption, Amplitude, BsmMode, CascadeReport, EnsembleConfig, PhaseAngle,
    TwoQubitState,
};

use config::FileConfig;
use report::{
    opt17, render_csv, render_json, sig17, CascadeParameters, CascadeResults, ClassRow,
    EnsembleParameters, EnsembleResults, LevelRow, MeasureParameters, MeasureResults,
    OutcomeReport, Report, SwapParameters, SwapResults, SweepParameters, SweepResults, SweepRow,
    BASIS,
};

/// Sweep grids are clipped to this closed interval, comfortably inside the
/// open angle domain so every grid point constructs a valid state.
const SWEEP_CLIP_MIN: f64 = 1e-6;
const SWEEP_CLIP_MAX: f64 = std::f64::consts::FRAC_PI_2 - 1e-6;

const DEFAULT_PAIRS: u64 = 10_000;
const DEFAULT_LEVELS: u32 = 40;
const DEFAULT_CASCADE_TOL: f64 = 1e-9;
const DEFAULT_STEPS: u64 = 50;

#[derive(Parser)]
#[command(
    name = "entswap",
    version,
    about = "Entanglement swapping as a purifier for partially entangled photon pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Flat `key = value` file supplying parameter defaults; flags win.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Report format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the report to this path instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one swap: Bell measurement on the inner photons of two pairs.
    Swap(SwapArgs),
    /// Scan the equal-angle swap over an inclusive theta grid.
    Sweep(SweepArgs),
    /// Sample a finite ensemble of swaps and tally outcome classes.
    Ensemble(EnsembleArgs),
    /// Iterate the purification cascade, exactly or by sampling.
    Cascade(CascadeArgs),
    /// Compute entanglement measures of a two-qubit state given by its
    /// amplitudes.
    Measure(MeasureArgs),
}

#[derive(Args)]
struct SwapArgs {
    /// First pair angle in radians, strictly inside (0, pi/2).
    #[arg(long, allow_negative_numbers = true)]
    theta1: Option<f64>,

    /// Second pair angle in radians; defaults to theta1.
    #[arg(long, allow_negative_numbers = true)]
    theta2: Option<f64>,

    /// Absorption exponent gamma*L of the dichroic fiber that prepared the
    /// first pair; an alternative to --theta1 (give exactly one).
    #[arg(long, value_name = "GL", allow_negative_numbers = true)]
    gamma_l: Option<f64>,

    /// Bell-state analyzer model.
    #[arg(long, value_enum)]
    bsm: Option<BsmArg>,
}

#[derive(Args)]
struct SweepArgs {
    /// Lower grid edge in radians (clipped into the valid angle range).
    #[arg(long, allow_negative_numbers = true)]
    theta_min: Option<f64>,

    /// Upper grid edge in radians (clipped into the valid angle range).
    #[arg(long, allow_negative_numbers = true)]
    theta_max: Option<f64>,

    /// Number of grid points, endpoints inclusive (at least 2).
    #[arg(long)]
    steps: Option<u64>,
}

#[derive(Args)]
struct EnsembleArgs {
    /// First pair angle in radians, strictly inside (0, pi/2).
    #[arg(long, allow_negative_numbers = true)]
    theta1: Option<f64>,

    /// Second pair angle in radians; defaults to theta1.
    #[arg(long, allow_negative_numbers = true)]
    theta2: Option<f64>,

    /// Absorption exponent gamma*L fixing the first angle; an alternative
    /// to --theta1 (give exactly one).
    #[arg(long, value_name = "GL", allow_negative_numbers = true)]
    gamma_l: Option<f64>,

    /// Number of pair-of-pairs trials to sample.
    #[arg(long)]
    pairs: Option<u64>,

    /// Seed for the deterministic sample stream.
    #[arg(long)]
    seed: Option<u64>,

    /// Number of independent worker streams to split the trials across.
    #[arg(long)]
    workers: Option<u32>,

    /// Bell-state analyzer model.
    #[arg(long, value_enum)]
    bsm: Option<BsmArg>,
}

#[derive(Args)]
struct CascadeArgs {
    /// Starting angle in radians, strictly inside (0, pi/2).
    #[arg(long, allow_negative_numbers = true)]
    theta1: Option<f64>,

    /// Absorption exponent gamma*L fixing the starting angle; an
    /// alternative to --theta1 (give exactly one).
    #[arg(long, value_name = "GL", allow_negative_numbers = true)]
    gamma_l: Option<f64>,

    /// Maximum number of levels to iterate.
    #[arg(long)]
    levels: Option<u32>,

    /// Convergence tolerance on the distance to the yield limit.
    #[arg(long, allow_negative_numbers = true)]
    tol: Option<f64>,

    /// Sample this many pairs instead of iterating exact fractions.
    #[arg(long)]
    pairs: Option<u64>,

    /// Seed for the sampled mode.
    #[arg(long)]
    seed: Option<u64>,

    /// Bell-state analyzer model.
    #[arg(long, value_enum)]
    bsm: Option<BsmArg>,
}

#[derive(Args)]
struct MeasureArgs {
    /// Eight comma-separated floats: re,im amplitude pairs in HH,HV,VH,VV
    /// order. The state is normalized before measuring.
    #[arg(long, value_name = "A1R,A1I,...", allow_hyphen_values = true)]
    amps: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BsmArg {
    /// All four Bell states distinguished.
    Full,
    /// Linear optics: only the Psi pair resolved.
    Partial,
}

impl BsmArg {
    fn mode(self) -> BsmMode {
        match self {
            BsmArg::Full => BsmMode::Full,
            BsmArg::Partial => BsmMode::PartialLinearOptics,
        }
    }

    fn name(self) -> &'static str {
        match self {
            BsmArg::Full => "full",
            BsmArg::Partial => "partial",
        }
    }
}

/// One failure type per exit code: 2 for anything wrong with the request,
/// 1 for the environment failing underneath a valid one.
pub enum Failure {
    Validation(String),
    Io(String),
}

fn validation(message: impl Display) -> Failure {
    Failure::Validation(message.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Io(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::empty(),
    };
    let format = resolve_format(cli.format, &file)?;
    let output = cli
        .output
        .or_else(|| file.text("output").map(PathBuf::from));

    let text = match &cli.command {
        Command::Swap(args) => run_swap(args, &file, format)?,
        Command::Sweep(args) => run_sweep(args, &file, format)?,
        Command::Ensemble(args) => run_ensemble(args, &file, format)?,
        Command::Cascade(args) => run_cascade(args, &file, format)?,
        Command::Measure(args) => run_measure(args, &file, format)?,
    };
    emit(&text, output.as_deref())
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
    }
}

fn resolve_format(flag: Option<Format>, file: &FileConfig) -> Result<Format, Failure> {
    if let Some(format) = flag {
        return Ok(format);
    }
    match file.text("format") {
        None => Ok(Format::Json),
        Some("json") => Ok(Format::Json),
        Some("csv") => Ok(Format::Csv),
        Some(other) => Err(validation(format!(
            "config key `format`: expected json or csv, got `{other}`"
        ))),
    }
}

fn resolve_bsm(flag: Option<BsmArg>, file: &FileConfig) -> Result<BsmArg, Failure> {
    if let Some(bsm) = flag {
        return Ok(bsm);
    }
    match file.text("bsm") {
        None => Ok(BsmArg::Full),
        Some("full") => Ok(BsmArg::Full),
        Some("partial") => Ok(BsmArg::Partial),
        Some(other) => Err(validation(format!(
            "config key `bsm`: expected full or partial, got `{other}`"
        ))),
    }
}

/// The first pair angle with its provenance: either given directly or
/// derived from the absorption exponent of the preparing fiber.
struct FirstAngle {
    theta: PhaseAngle,
    gamma_l: Option<f64>,
}

/// Exactly one of theta1 / gamma_l must be given. Flags are considered
/// first as a pair: if either is on the command line, the config file's
/// pair is ignored entirely, so a file default cannot collide with a flag.
fn resolve_first_angle(
    flag_theta1: Option<f64>,
    flag_gamma_l: Option<f64>,
    file: &FileConfig,
) -> Result<FirstAngle, Failure> {
    let (theta1, gamma_l) = if flag_theta1.is_some() || flag_gamma_l.is_some() {
        (flag_theta1, flag_gamma_l)
    } else {
        (file.real("theta1")?, file.real("gamma_l")?)
    };
    match (theta1, gamma_l) {
        (Some(radians), None) => Ok(FirstAngle {
            theta: PhaseAngle::new(radians).map_err(validation)?,
            gamma_l: None,
        }),
        (None, Some(gl)) => Ok(FirstAngle {
            theta: theta_from_absorption(gl, 1.0).map_err(validation)?,
            gamma_l: Some(gl),
        }),
        (Some(_), Some(_)) => Err(validation(
            "give exactly one of --theta1 or --gamma-l, not both",
        )),
        (None, None) => Err(validation(
            "the first pair angle is required: pass --theta1 <radians> or --gamma-l <value>",
        )),
    }
}

fn resolve_theta2(
    flag: Option<f64>,
    file: &FileConfig,
    default: PhaseAngle,
) -> Result<PhaseAngle, Failure> {
    match flag.map(Ok).or_else(|| file.real("theta2").transpose()) {
        Some(radians) => PhaseAngle::new(radians?).map_err(validation),
        None => Ok(default),
    }
}

fn resolve_u64(
    flag: Option<u64>,
    file: &FileConfig,
    key: &str,
    default: u64,
) -> Result<u64, Failure> {
    match flag {
        Some(value) => Ok(value),
        None => Ok(file.integer(key)?.unwrap_or(default)),
    }
}

fn flatten(state: &TwoQubitState) -> [f64; 8] {
    let amps = state.amps();
    let mut flat = [0.0; 8];
    for (pair, amp) in flat.chunks_exact_mut(2).zip(amps) {
        pair[0] = amp.re;
        pair[1] = amp.im;
    }
    flat
}

fn run_swap(args: &SwapArgs, file: &FileConfig, format: Format) -> Result<String, Failure> {
    let first = resolve_first_angle(args.theta1, args.gamma_l, file)?;
    let theta2 = resolve_theta2(args.theta2, file, first.theta)?;
    let bsm = resolve_bsm(args.bsm, file)?;

    let result = swap_general(first.theta, theta2);
    let classes = apply_bsm_mode(&result, bsm.mode());
    let mean_es = match bsm {
        BsmArg::Full => Some(result.mean_es),
        BsmArg::Partial => None,
    };

    let outcomes: Vec<OutcomeReport> = classes
        .iter()
        .map(|c| OutcomeReport {
            class: c.class.name(),
            probability: c.probability,
            es_after: c.es_after.map(|es| es.value()),
            amplitudes: c.post_state.as_ref().map(flatten),
        })
        .collect();

    let report = Report {
        command: "swap",
        parameters: SwapParameters {
            theta1: first.theta.radians(),
            theta2: theta2.radians(),
            gamma_l: first.gamma_l,
            bsm: bsm.name(),
        },
        results: SwapResults {
            basis: BASIS,
            outcomes,
            mean_es,
        },
        version: env!("CARGO_PKG_VERSION"),
    };

    Ok(match format {
        Format::Json => render_json(&report),
        Format::Csv => {
            let header = [
                "class",
                "probability",
                "es_after",
                "amp_hh_re",
                "amp_hh_im",
                "amp_hv_re",
                "amp_hv_im",
                "amp_vh_re",
                "amp_vh_im",
                "amp_vv_re",
                "amp_vv_im",
                "mean_es",
            ];
            let rows: Vec<Vec<String>> = report
                .results
                .outcomes
                .iter()
                .map(|o| {
                    let mut row = vec![
                        o.class.to_string(),
                        sig17(o.probability),
                        opt17(o.es_after),
                    ];
                    match o.amplitudes {
                        Some(flat) => row.extend(flat.iter().copied().map(sig17)),
                        None => row.extend(std::iter::repeat_n(String::new(), 8)),
                    }
                    row.push(opt17(report.results.mean_es));
                    row
                })
                .collect();
            render_csv(&header, &rows)
        }
    })
}

fn run_sweep(args: &SweepArgs, file: &FileConfig, format: Format) -> Result<String, Failure> {
    let requested_min = match args.theta_min {
        Some(value) => value,
        None => file.real("theta_min")?.unwrap_or(SWEEP_CLIP_MIN),
    };
    let requested_max = match args.theta_max {
        Some(value) => value,
        None => file.real("theta_max")?.unwrap_or(SWEEP_CLIP_MAX),
    };
    if !requested_min.is_finite() || !requested_max.is_finite() {
        return Err(validation("sweep grid edges must be finite"));
    }
    let theta_min = requested_min.clamp(SWEEP_CLIP_MIN, SWEEP_CLIP_MAX);
    let theta_max = requested_max.clamp(SWEEP_CLIP_MIN, SWEEP_CLIP_MAX);
    if theta_min > theta_max {
        return Err(validation(format!(
            "sweep grid is empty: theta_min {theta_min} exceeds theta_max {theta_max} after clipping"
        )));
    }
    let steps = resolve_u64(args.steps, file, "steps", DEFAULT_STEPS)?;
    if steps < 2 {
        return Err(validation("sweep needs at least 2 steps"));
    }

    let rows: Result<Vec<SweepRow>, Failure> = (0..steps)
        .map(|i| {
            // Both endpoints land exactly on the clipped edges.
            let radians = if i + 1 == steps {
                theta_max
            } else {
                theta_min + (i as f64 / (steps - 1) as f64) * (theta_max - theta_min)
            };
            let theta = PhaseAngle::new(radians).map_err(validation)?;
            let result = swap_general(theta, theta);
            let limit = procrustean_yield(theta).value();
            let p = |k: usize| result.outcomes[k].probability;
            Ok(SweepRow {
                theta: radians,
                p_phi_plus: p(0),
                p_phi_minus: p(1),
                p_psi_plus: p(2),
                p_psi_minus: p(3),
                mean_es: result.mean_es,
                conservation_residual: (result.mean_es - limit).abs(),
            })
        })
        .collect();

    let report = Report {
        command: "sweep",
        parameters: SweepParameters {
            theta_min,
            theta_max,
            steps,
        },
        results: SweepResults { rows: rows? },
        version: env!("CARGO_PKG_VERSION"),
    };

    Ok(match format {
        Format::Json => render_json(&report),
        Format::Csv => {
            let header = [
                "theta",
                "p_phi_plus",
                "p_phi_minus",
                "p_psi_plus",
                "p_psi_minus",
                "mean_es",
                "conservation_residual",
            ];
            let rows: Vec<Vec<String>> = report
                .results
                .rows
                .iter()
                .map(|r| {
                    vec![
                        sig17(r.theta),
                        sig17(r.p_phi_plus),
                        sig17(r.p_phi_minus),
                        sig17(r.p_psi_plus),
                        sig17(r.p_psi_minus),
                        sig17(r.mean_es),
                        sig17(r.conservation_residual),
                    ]
                })
                .collect();
            render_csv(&header, &rows)
        }
    })
}

fn run_ensemble(args: &EnsembleArgs, file: &FileConfig, format: Format) -> Result<String, Failure> {
    let first = resolve_first_angle(args.theta1, args.gamma_l, file)?;
    let theta2 = resolve_theta2(args.theta2, file, first.theta)?;
    let bsm = resolve_bsm(args.bsm, file)?;
    let pairs_requested = resolve_u64(args.pairs, file, "pairs", DEFAULT_PAIRS)?;
    let pairs = NonZeroU64::new(pairs_requested).ok_or_else(|| validation("pairs must be positive"))?;
    let seed = resolve_u64(args.seed, file, "seed", 0)?;
    let workers_requested = match args.workers {
        Some(value) => u64::from(value),
        None => file.integer("workers")?.unwrap_or(1),
    };
    let workers: u32 = workers_requested
        .try_into()
        .map_err(|_| validation("workers must fit in 32 bits"))?;
    let workers = NonZeroU32::new(workers).ok_or_else(|| validation("workers must be positive"))?;

    let stats = sample_swap_workers(
        &EnsembleConfig {
            theta1: first.theta,
            theta2,
            pairs,
            seed,
            bsm_mode: bsm.mode(),
        },
        workers,
    );

    let classes: Vec<ClassRow> = stats
        .classes
        .iter()
        .map(|c| ClassRow {
            class: c.class.name(),
            count: c.count,
            empirical_probability: c.empirical_probability,
            standard_error: c.standard_error,
        })
        .collect();

    let report = Report {
        command: "ensemble",
        parameters: EnsembleParameters {
            theta1: first.theta.radians(),
            theta2: theta2.radians(),
            gamma_l: first.gamma_l,
            pairs: pairs.get(),
            seed,
            workers: workers.get(),
            bsm: bsm.name(),
        },
        results: EnsembleResults {
            classes,
            bell_fraction: stats.bell_fraction,
            empirical_mean_es: stats.empirical_mean_es,
            pairs: stats.pairs,
            workers: stats.workers,
        },
        version: env!("CARGO_PKG_VERSION"),
    };

    Ok(match format {
        Format::Json => render_json(&report),
        Format::Csv => {
            let header = [
                "class",
                "count",
                "empirical_probability",
                "standard_error",
                "bell_fraction",
                "empirical_mean_es",
                "pairs",
                "workers",
            ];
            let rows: Vec<Vec<String>> = report
                .results
                .classes
                .iter()
                .map(|c| {
                    vec![
                        c.class.to_string(),
                        c.count.to_string(),
                        sig17(c.empirical_probability),
                        sig17(c.standard_error),
                        sig17(report.results.bell_fraction),
                        opt17(report.results.empirical_mean_es),
                        report.results.pairs.to_string(),
                        report.results.workers.to_string(),
                    ]
                })
                .collect();
            render_csv(&header, &rows)
        }
    })
}

fn run_cascade(args: &CascadeArgs, file: &FileConfig, format: Format) -> Result<String, Failure> {
    let first = resolve_first_angle(args.theta1, args.gamma_l, file)?;
    let bsm = resolve_bsm(args.bsm, file)?;
    let levels_requested = match args.levels {
        Some(value) => u64::from(value),
        None => file.integer("levels")?.unwrap_or(u64::from(DEFAULT_LEVELS)),
    };
    let levels: u32 = levels_requested
        .try_into()
        .map_err(|_| validation("levels must fit in 32 bits"))?;
    let tol = match args.tol {
        Some(value) => value,
        None => file.real("tol")?.unwrap_or(DEFAULT_CASCADE_TOL),
    };
    if !(tol.is_finite() && tol > 0.0) {
        return Err(validation("tol must be a positive finite number"));
    }

    // The presence of a pair count selects Monte Carlo mode.
    let pairs_requested = match args.pairs {
        Some(value) => Some(value),
        None => file.integer("pairs")?,
    };
    let seed = resolve_u64(args.seed, file, "seed", 0)?;

    let (mode_name, pairs_echo, seed_echo, cascade): (_, _, _, CascadeReport) =
        match pairs_requested {
            Some(requested) => {
                let pairs =
                    NonZeroU64::new(requested).ok_or_else(|| validation("pairs must be positive"))?;
                let report =
                    cascade_sampled_with_mode(first.theta, pairs, seed, levels, bsm.mode());
                ("sampled", Some(pairs.get()), Some(seed), report)
            }
            None => (
                "exact",
                None,
                None,
                cascade_exact_with_mode(first.theta, levels, tol, bsm.mode()),
            ),
        };

    let level_rows: Vec<LevelRow> = cascade
        .levels
        .iter()
        .map(|l| LevelRow {
            level: l.level,
            theta: l.theta.radians(),
            bell_yield_this_level: l.bell_yield_this_level,
            residual_fraction: l.residual_fraction,
            cumulative_bell_fraction: l.cumulative_bell_fraction,
        })
        .collect();

    let report = Report {
        command: "cascade",
        parameters: CascadeParameters {
            theta1: first.theta.radians(),
            gamma_l: first.gamma_l,
            mode: mode_name,
            levels,
            tol,
            bsm: bsm.name(),
            pairs: pairs_echo,
            seed: seed_echo,
        },
        results: CascadeResults {
            limit_target: cascade.limit_target,
            converged_at: cascade.converged_at,
            levels: level_rows,
        },
        version: env!("CARGO_PKG_VERSION"),
    };

    Ok(match format {
        Format::Json => render_json(&report),
        Format::Csv => {
            let header = [
                "level",
                "theta",
                "bell_yield_this_level",
                "residual_fraction",
                "cumulative_bell_fraction",
                "limit_target",
                "converged_at",
            ];
            let converged = report
                .results
                .converged_at
                .map(|l| l.to_string())
                .unwrap_or_default();
            let rows: Vec<Vec<String>> = report
                .results
                .levels
                .iter()
                .map(|l| {
                    vec![
                        l.level.to_string(),
                        sig17(l.theta),
                        sig17(l.bell_yield_this_level),
                        sig17(l.residual_fraction),
                        sig17(l.cumulative_bell_fraction),
                        sig17(report.results.limit_target),
                        converged.clone(),
                    ]
                })
                .collect();
            render_csv(&header, &rows)
        }
    })
}

fn run_measure(args: &MeasureArgs, file: &FileConfig, format: Format) -> Result<String, Failure> {
    let raw = match &args.amps {
        Some(text) => text.as_str(),
        None => file
            .text("amps")
            .ok_or_else(|| validation("measure needs --amps with 8 comma-separated floats"))?,
    };

    let fields: Vec<&str> = raw.split(',').map(str::trim).collect();
    if fields.len() != 8 {
        return Err(validation(format!(
            "--amps expects 8 comma-separated floats (re,im pairs in HH,HV,VH,VV order), got {}",
            fields.len()
        )));
    }
    let mut given = [0.0f64; 8];
    for (slot, field) in given.iter_mut().zip(&fields) {
        *slot = field
            .parse()
            .map_err(|e| validation(format!("--amps: cannot parse `{field}`: {e}")))?;
    }
    let amps = [
        Amplitude::new(given[0], given[1]),
        Amplitude::new(given[2], given[3]),
        Amplitude::new(given[4], given[5]),
        Amplitude::new(given[6], given[7]),
    ];
    let state = TwoQubitState::new(amps).map_err(validation)?;

    let report = Report {
        command: "measure",
        parameters: MeasureParameters { amps: given },
        results: MeasureResults {
            basis: BASIS,
            es: entanglement_es(&state).value(),
            entropy: entropy_of_entanglement(&state),
            amplitudes: flatten(&state),
        },
        version: env!("CARGO_PKG_VERSION"),
    };

    Ok(match format {
        Format::Json => render_json(&report),
        Format::Csv => {
            let header = [
                "es",
                "entropy",
                "amp_hh_re",
                "amp_hh_im",
                "amp_hv_re",
                "amp_hv_im",
                "amp_vh_re",
                "amp_vh_im",
                "amp_vv_re",
                "amp_vv_im",
            ];
            let mut row = vec![sig17(report.results.es), sig17(report.results.entropy)];
            row.extend(report.results.amplitudes.iter().copied().map(sig17));
            render_csv(&header, &[row])
        }
    })
}

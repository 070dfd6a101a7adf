//! `ising` — command-line front end for the stability library.
//!
//! One command per invocation; all randomized commands require an explicit
//! `--seed`, and identical flags plus an identical seed produce
//! byte-identical output files.

mod graph_spec;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use ising_stability::bounds::{self, BoundMethod, StabilityReport};
use ising_stability::compression::{self, TorusGuaranteeQuery};
use ising_stability::hamiltonian::{self, SpinConfig};
use ising_stability::montecarlo::{self, RhSolver, TrialPerturbation, TrialPlan};
use ising_stability::perturb::{self, PerturbationSpec};
use ising_stability::solvers::{self, AnnealerParams, GroundStateResult};
use ising_stability::{Error, Graph, IsingInstance};

use graph_spec::{Family, GraphSpec};

/// Failure categories with their process exit codes: validation problems
/// (including bad input files) exit 2, oracle-size refusals exit 3.
#[derive(Debug)]
pub enum Failure {
    Validation(String),
    Io(String),
    TooLarge(String),
}

impl Failure {
    fn validation(msg: impl Into<String>) -> Self {
        Failure::Validation(msg.into())
    }

    fn io(msg: impl Into<String>) -> Self {
        Failure::Io(msg.into())
    }

    fn exit_code(&self) -> u8 {
        match self {
            Failure::Validation(_) | Failure::Io(_) => 2,
            Failure::TooLarge(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Validation(_) => "validation",
            Failure::Io(_) => "io",
            Failure::TooLarge(_) => "too-large",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Validation(m) | Failure::Io(m) | Failure::TooLarge(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge { .. } => Failure::TooLarge(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "ising",
    version,
    about = "Stability certificates, compression guarantees, and Monte Carlo \
             validation for Ising energy landscapes"
)]
struct Cli {
    /// Cap the number of worker threads (results do not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph file, or a Gaussian instance on a graph.
    Gen(GenArgs),
    /// Evaluate the energy of a configuration on an instance.
    Energy(EnergyArgs),
    /// Find a ground state, exactly or with the annealer.
    Ground(GroundArgs),
    /// Round parameters off or add bounded uniform noise.
    Perturb(PerturbArgs),
    /// Stability probability lower bounds for a graph.
    Bounds(BoundsArgs),
    /// Minimal binary digits per graph size (CSV).
    Digits(DigitsArgs),
    /// Partition a field-free instance by coupling magnitude.
    Compress(CompressArgs),
    /// Compression probability guarantee for the 1-D torus.
    TorusGuarantee(TorusGuaranteeArgs),
    /// Built-in parameter study of the torus compression guarantee (CSV).
    Table1(Table1Args),
    /// Monte Carlo validation runs.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    graph: GraphSpec,

    /// Emit an instance with i.i.d. standard Gaussian couplings instead of
    /// a bare graph.
    #[arg(long, requires = "seed")]
    gaussian: bool,

    /// Also draw Gaussian external fields (otherwise all fields are zero).
    #[arg(long, requires = "gaussian")]
    with_fields: bool,

    /// RNG seed (required with --gaussian).
    #[arg(long)]
    seed: Option<u64>,

    /// Output file (stdout when omitted).
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EnergyArgs {
    /// Instance JSON file.
    #[arg(long)]
    instance: PathBuf,

    /// Configuration JSON ({"spins": [...]}) or a ground-state result file.
    #[arg(long)]
    config: PathBuf,

    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GroundArgs {
    #[arg(long)]
    instance: PathBuf,

    /// Exhaustive enumeration (exact).
    #[arg(long, conflicts_with = "anneal")]
    exact: bool,

    /// Annealed estimate (requires --seed).
    #[arg(long, requires = "seed")]
    anneal: bool,

    /// Brute-force cap override for --exact.
    #[arg(long)]
    cap: Option<usize>,

    #[arg(long)]
    seed: Option<u64>,

    #[arg(long)]
    sweeps: Option<u32>,

    /// Initial temperature.
    #[arg(long)]
    t0: Option<f64>,

    /// Final temperature.
    #[arg(long)]
    t1: Option<f64>,

    /// Initial pinning strength.
    #[arg(long)]
    pin0: Option<f64>,

    /// Final pinning strength.
    #[arg(long)]
    pin1: Option<f64>,

    #[arg(long)]
    restarts: Option<u32>,

    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PerturbArgs {
    #[arg(long)]
    instance: PathBuf,

    /// Round off after this many binary digits.
    #[arg(long, conflicts_with_all = ["delta", "seed"])]
    bits: Option<u32>,

    /// Uniform noise bound (requires --seed).
    #[arg(long, requires = "seed")]
    delta: Option<f64>,

    #[arg(long)]
    seed: Option<u64>,

    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Uniform,
    GraphStructured,
    Complete,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    graph: GraphSpec,

    /// Perturbation bound delta.
    #[arg(long)]
    delta: Option<f64>,

    /// Error margin epsilon.
    #[arg(long)]
    eps: f64,

    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,

    /// Sweep delta over lo:hi:steps (geometric grid) and emit CSV.
    #[arg(long, conflicts_with = "delta")]
    sweep_delta: Option<String>,

    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DigitsArgs {
    /// Graph family for the size sweep.
    #[arg(long, value_enum)]
    family: Family,

    /// Sizes, comma separated: vertices (complete), board side (kings,
    /// taken square), leaves (star), or ring length (torus).
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,

    #[arg(long)]
    eps: f64,

    /// Target probability in (0, 1).
    #[arg(long)]
    target: f64,

    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,

    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CompressArgs {
    #[arg(long)]
    instance: PathBuf,

    /// Compression level delta.
    #[arg(long)]
    delta: f64,

    /// Also compute the exact worst-case deviation (enumeration; small
    /// instances only).
    #[arg(long)]
    exact: bool,

    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TorusGuaranteeArgs {
    /// Torus size N.
    #[arg(long)]
    n: u64,

    #[arg(long)]
    eps: f64,

    #[arg(long)]
    delta: f64,

    /// Removed-set size constant C.
    #[arg(long, default_value_t = 1.0)]
    c: f64,

    /// Removed-set size exponent alpha in [0, 1).
    #[arg(long)]
    alpha: f64,

    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Table1Args {
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Ground-state gap probability vs. the analytic bounds.
    Gap(VerifyGapArgs),
    /// Removed-set size moments vs. their closed forms.
    Moments(VerifyMomentsArgs),
    /// Total margin R_H/N across torus sizes (CSV).
    RhScan(VerifyRhScanArgs),
}

#[derive(Args)]
struct VerifyGapArgs {
    #[command(flatten)]
    graph: GraphSpec,

    #[arg(long)]
    eps: f64,

    #[arg(long)]
    trials: u64,

    #[arg(long)]
    seed: u64,

    /// Round-off perturbation with this many digits.
    #[arg(long, conflicts_with = "delta")]
    bits: Option<u32>,

    /// Uniform-noise perturbation bound.
    #[arg(long)]
    delta: Option<f64>,

    #[arg(long)]
    with_fields: bool,

    /// Include per-trial records in the output.
    #[arg(long)]
    verbose: bool,

    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyMomentsArgs {
    /// Ring length N (>= 3).
    #[arg(long)]
    n: u64,

    #[arg(long)]
    delta: f64,

    #[arg(long)]
    trials: u64,

    #[arg(long)]
    seed: u64,

    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolverArg {
    Exact1d,
    Anneal,
}

#[derive(Args)]
struct VerifyRhScanArgs {
    /// Torus dimension.
    #[arg(long, default_value_t = 1)]
    dimension: u32,

    /// Side lengths, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    sides: Vec<usize>,

    #[arg(long)]
    trials: u64,

    #[arg(long)]
    seed: u64,

    #[arg(long, value_enum, default_value = "exact1d")]
    solver: SolverArg,

    #[arg(long)]
    sweeps: Option<u32>,

    #[arg(long)]
    restarts: Option<u32>,

    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // Ignore failure: the pool may already be initialized in tests.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error[{}]: {}", failure.kind(), failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen(args) => cmd_gen(args),
        Command::Energy(args) => cmd_energy(args),
        Command::Ground(args) => cmd_ground(args),
        Command::Perturb(args) => cmd_perturb(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Digits(args) => cmd_digits(args),
        Command::Compress(args) => cmd_compress(args),
        Command::TorusGuarantee(args) => cmd_torus_guarantee(args),
        Command::Table1(args) => cmd_table1(args),
        Command::Verify(VerifyCommand::Gap(args)) => cmd_verify_gap(args),
        Command::Verify(VerifyCommand::Moments(args)) => cmd_verify_moments(args),
        Command::Verify(VerifyCommand::RhScan(args)) => cmd_verify_rh_scan(args),
    }
}

fn read_instance(path: &PathBuf) -> Result<IsingInstance, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::io(format!("reading {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::validation(format!("parsing {}: {e}", path.display())))
}

fn read_config(path: &PathBuf) -> Result<SpinConfig, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::io(format!("reading {}: {e}", path.display())))?;
    // Accept either a bare configuration or a ground-state result.
    #[derive(Deserialize)]
    struct GroundShape {
        config: SpinConfig,
    }
    if let Ok(g) = serde_json::from_str::<GroundShape>(&text) {
        return Ok(g.config);
    }
    serde_json::from_str(&text)
        .map_err(|e| Failure::validation(format!("parsing {}: {e}", path.display())))
}

fn emit(path: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    output::emit(path.as_deref(), content).map_err(|e| Failure::io(e.to_string()))
}

fn cmd_gen(args: GenArgs) -> Result<(), Failure> {
    let (graph, _) = args.graph.build()?;
    if args.gaussian {
        let seed = args.seed.expect("clap enforces --seed with --gaussian");
        let instance = montecarlo::sample_instance(&graph, args.with_fields, seed);
        emit(&args.output, &output::to_json(&instance))
    } else {
        emit(&args.output, &output::to_json(&graph))
    }
}

fn cmd_energy(args: EnergyArgs) -> Result<(), Failure> {
    let instance = read_instance(&args.instance)?;
    let config = read_config(&args.config)?;
    let energy = hamiltonian::energy(&instance, &config)?;

    #[derive(Serialize)]
    struct EnergyOut {
        energy: f64,
    }
    emit(&args.output, &output::to_json(EnergyOut { energy }))
}

fn annealer_params(
    seed: u64,
    sweeps: Option<u32>,
    t0: Option<f64>,
    t1: Option<f64>,
    pin0: Option<f64>,
    pin1: Option<f64>,
    restarts: Option<u32>,
) -> AnnealerParams {
    let mut params = AnnealerParams::with_seed(seed);
    if let Some(v) = sweeps {
        params.sweeps = v;
    }
    if let Some(v) = t0 {
        params.t_initial = v;
    }
    if let Some(v) = t1 {
        params.t_final = v;
    }
    if let Some(v) = pin0 {
        params.pin_initial = v;
    }
    if let Some(v) = pin1 {
        params.pin_final = v;
    }
    if let Some(v) = restarts {
        params.restarts = v;
    }
    params
}

fn cmd_ground(args: GroundArgs) -> Result<(), Failure> {
    let instance = read_instance(&args.instance)?;
    let result: GroundStateResult = if args.anneal {
        let params = annealer_params(
            args.seed.expect("clap enforces --seed with --anneal"),
            args.sweeps,
            args.t0,
            args.t1,
            args.pin0,
            args.pin1,
            args.restarts,
        );
        let (min_est, _, config) = solvers::anneal_extremes(&instance, &params)?;
        GroundStateResult { config, energy: min_est, exact: false }
    } else if args.exact {
        match args.cap {
            Some(cap) => solvers::ground_state_exact_capped(&instance, cap)?,
            None => solvers::ground_state_exact(&instance)?,
        }
    } else {
        return Err(Failure::validation("choose one of --exact or --anneal"));
    };
    emit(&args.output, &output::to_json(&result))
}

fn cmd_perturb(args: PerturbArgs) -> Result<(), Failure> {
    let instance = read_instance(&args.instance)?;
    let perturbed = match (args.bits, args.delta) {
        (Some(bits), None) => perturb::round_off(&instance, bits)?.0,
        (None, Some(delta)) => {
            let seed = args.seed.expect("clap enforces --seed with --delta");
            PerturbationSpec::UniformNoise { delta, seed }.apply(&instance)?
        }
        _ => return Err(Failure::validation("choose one of --bits or --delta")),
    };
    emit(&args.output, &output::to_json(&perturbed))
}

fn evaluate_bound(
    graph: &Graph,
    hint: Option<bounds::GraphFamily>,
    method: MethodArg,
    delta: f64,
    eps: f64,
) -> Result<StabilityReport, Failure> {
    let report = match method {
        MethodArg::Auto => bounds::best_bound(graph, hint, delta, eps)?,
        MethodArg::Uniform => bounds::bound_uniform(graph.k_g(), delta, eps)?,
        MethodArg::GraphStructured => bounds::bound_graph_structured(graph, delta, eps)?,
        MethodArg::Complete => {
            if !graph.is_complete() {
                return Err(Failure::validation(
                    "the complete-graph bound needs a complete graph",
                ));
            }
            bounds::bound_complete_graph(graph.n_vertices() as u64, delta, eps)?
        }
    };
    Ok(report)
}

fn parse_sweep(spec: &str) -> Result<Vec<f64>, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [lo, hi, steps] = parts.as_slice() else {
        return Err(Failure::validation("--sweep-delta expects lo:hi:steps"));
    };
    let lo: f64 = lo.parse().map_err(|_| Failure::validation("bad sweep lower bound"))?;
    let hi: f64 = hi.parse().map_err(|_| Failure::validation("bad sweep upper bound"))?;
    let steps: usize = steps.parse().map_err(|_| Failure::validation("bad sweep step count"))?;
    if !lo.is_finite() || lo <= 0.0 || hi < lo || steps < 2 {
        return Err(Failure::validation(
            "sweep needs 0 < lo <= hi and at least 2 steps",
        ));
    }
    let ratio = (hi / lo).powf(1.0 / (steps - 1) as f64);
    Ok((0..steps).map(|i| lo * ratio.powi(i as i32)).collect())
}

fn cmd_bounds(args: BoundsArgs) -> Result<(), Failure> {
    let (graph, hint) = args.graph.build()?;
    if let Some(sweep) = &args.sweep_delta {
        let rows = parse_sweep(sweep)?
            .into_iter()
            .map(|delta| {
                let r = evaluate_bound(&graph, hint, args.method, delta, args.eps)?;
                Ok(format!(
                    "{},{},{},{},{},{}",
                    r.delta,
                    r.epsilon,
                    r.method,
                    r.k_g,
                    r.chi_square_argument,
                    r.probability_lower_bound
                ))
            })
            .collect::<Result<Vec<_>, Failure>>()?;
        let csv = output::csv_document(
            "delta,epsilon,method,k_g,chi_square_argument,probability_lower_bound",
            rows,
        );
        return emit(&args.output, &csv);
    }
    let delta = args
        .delta
        .ok_or_else(|| Failure::validation("need --delta (or --sweep-delta)"))?;
    let report = evaluate_bound(&graph, hint, args.method, delta, args.eps)?;
    emit(&args.output, &output::to_json(&report))
}

fn cmd_digits(args: DigitsArgs) -> Result<(), Failure> {
    let rows = args
        .sizes
        .iter()
        .map(|&size| {
            let graph = match args.family {
                Family::Complete => Graph::complete(size)?,
                Family::Kings => Graph::kings(size, size)?,
                Family::Star => Graph::star(size)?,
                Family::Torus => Graph::torus(&[size])?,
            };
            let bits = match args.method {
                MethodArg::Auto => bounds::min_digits(&graph, args.eps, args.target)?,
                MethodArg::Uniform => bounds::min_digits_with_method(
                    &graph,
                    BoundMethod::Uniform,
                    args.eps,
                    args.target,
                )?,
                MethodArg::GraphStructured => bounds::min_digits_with_method(
                    &graph,
                    BoundMethod::GraphStructured,
                    args.eps,
                    args.target,
                )?,
                MethodArg::Complete => bounds::min_digits_with_method(
                    &graph,
                    BoundMethod::CompleteGraph,
                    args.eps,
                    args.target,
                )?,
            };
            // Report the method that wins at the chosen digit count.
            let winning = match args.method {
                MethodArg::Auto => {
                    bounds::best_bound(&graph, None, (0.5f64).powi(bits as i32), args.eps)?.method
                }
                MethodArg::Uniform => BoundMethod::Uniform,
                MethodArg::GraphStructured => BoundMethod::GraphStructured,
                MethodArg::Complete => BoundMethod::CompleteGraph,
            };
            Ok(format!("{size},{},{bits},{winning}", graph.k_g()))
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    let csv = output::csv_document("size,k_g,min_digits,method", rows);
    emit(&args.output, &csv)
}

fn cmd_compress(args: CompressArgs) -> Result<(), Failure> {
    let instance = read_instance(&args.instance)?;
    let result = compression::build_v0(&instance, args.delta)?;

    #[derive(Serialize)]
    struct CompressOut {
        #[serde(flatten)]
        result: compression::CompressionResult,
        #[serde(skip_serializing_if = "Option::is_none")]
        deviation_exact: Option<f64>,
    }
    let deviation_exact = if args.exact {
        Some(compression::deviation_exact(&instance, &result)?)
    } else {
        None
    };
    emit(&args.output, &output::to_json(CompressOut { result, deviation_exact }))
}

fn cmd_torus_guarantee(args: TorusGuaranteeArgs) -> Result<(), Failure> {
    let query = TorusGuaranteeQuery {
        n: args.n,
        epsilon: args.eps,
        delta: args.delta,
        c: args.c,
        alpha: args.alpha,
    };
    let (bound_general, bound_with_size) = compression::torus_guarantee(&query)?;

    #[derive(Serialize)]
    struct GuaranteeOut {
        n: u64,
        epsilon: f64,
        delta: f64,
        c: f64,
        alpha: f64,
        theta: f64,
        min_removed_size: u64,
        bound_general: f64,
        bound_with_size: f64,
    }
    let out = GuaranteeOut {
        n: args.n,
        epsilon: args.eps,
        delta: args.delta,
        c: args.c,
        alpha: args.alpha,
        theta: query.theta(),
        min_removed_size: compression::minimum_removed_size(args.n, args.c, args.alpha)?,
        bound_general,
        bound_with_size,
    };
    emit(&args.output, &output::to_json(out))
}

fn cmd_table1(args: Table1Args) -> Result<(), Failure> {
    let rows = compression::table1()
        .into_iter()
        .map(|r| {
            format!(
                "{},{},{},{},{},{},{}",
                r.n, r.epsilon, r.delta, r.alpha, r.c, r.min_removed_size, r.bound
            )
        })
        .collect::<Vec<_>>();
    let csv =
        output::csv_document("n,epsilon,delta,alpha,c,min_removed_size,bound", rows);
    emit(&args.output, &csv)
}

fn cmd_verify_gap(args: VerifyGapArgs) -> Result<(), Failure> {
    let (graph, _) = args.graph.build()?;
    let perturbation = match (args.bits, args.delta) {
        (Some(bits), None) => TrialPerturbation::RoundOff { bits },
        (None, Some(delta)) => TrialPerturbation::UniformNoise { delta },
        _ => return Err(Failure::validation("choose one of --bits or --delta")),
    };
    let plan = TrialPlan {
        graph,
        perturbation,
        epsilon: args.eps,
        trials: args.trials,
        master_seed: args.seed,
        with_fields: args.with_fields,
    };
    let mut outcome = montecarlo::estimate_gap_probability(&plan)?;
    if !args.verbose {
        outcome.records.clear();
    }

    #[derive(Serialize)]
    struct GapOut {
        successes: u64,
        trials: u64,
        estimate: f64,
        standard_error: f64,
        theoretical_bound: Option<f64>,
        bounds: Vec<StabilityReport>,
        #[serde(skip_serializing_if = "Vec::is_empty")]
        records: Vec<montecarlo::GapTrial>,
    }
    let out = GapOut {
        successes: outcome.empirical.successes,
        trials: outcome.empirical.trials,
        estimate: outcome.empirical.estimate,
        standard_error: outcome.empirical.standard_error,
        theoretical_bound: outcome.empirical.theoretical_bound,
        bounds: outcome.bounds,
        records: outcome.records,
    };
    emit(&args.output, &output::to_json(out))
}

fn cmd_verify_moments(args: VerifyMomentsArgs) -> Result<(), Failure> {
    let stats = montecarlo::estimate_removed_stats(args.n, args.delta, args.trials, args.seed)?;
    emit(&args.output, &output::to_json(&stats))
}

fn cmd_verify_rh_scan(args: VerifyRhScanArgs) -> Result<(), Failure> {
    let solver = match args.solver {
        SolverArg::Exact1d => RhSolver::Exact1d,
        SolverArg::Anneal => {
            let mut params = AnnealerParams::with_seed(args.seed);
            if let Some(v) = args.sweeps {
                params.sweeps = v;
            }
            if let Some(v) = args.restarts {
                params.restarts = v;
            }
            RhSolver::Anneal(params)
        }
    };
    let samples =
        montecarlo::scan_rh_over_n(args.dimension, &args.sides, args.trials, &solver, args.seed)?;
    let rows = samples
        .into_iter()
        .map(|s| {
            format!("{},{},{},{},{},{}", s.dimension, s.side, s.n, s.trial, s.r_h, s.r_h_over_n)
        })
        .collect::<Vec<_>>();
    let csv = output::csv_document("dimension,side,n,trial,r_h,r_h_over_n", rows);
    emit(&args.output, &csv)
}

//! Randomized validation of the probabilistic statements: ground-state gap
//! probabilities against the analytic bounds, removed-set moments, and the
//! growth of the total margin `R_H` with torus size.
//!
//! Everything is reproducible: a trial plan carries one master seed, and
//! per-trial sub-seeds are derived by mixing the trial index into it, so
//! results are bit-identical across runs and across worker counts. Trials
//! run in parallel and are reduced in trial order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, StabilityReport};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamiltonian::{IsingInstance, DEFAULT_ENUMERATION_CAP};
use crate::perturb::PerturbationSpec;
use crate::rng;
use crate::solvers::{self, AnnealerParams};
use crate::special::gaussian_central_mass;

/// Perturbation mode for a trial plan. Noise seeds are not part of the
/// mode; each trial derives its own from the plan's master seed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum TrialPerturbation {
    RoundOff { bits: u32 },
    UniformNoise { delta: f64 },
}

impl TrialPerturbation {
    pub fn delta(&self) -> f64 {
        match *self {
            TrialPerturbation::RoundOff { bits } => (0.5f64).powi(bits as i32),
            TrialPerturbation::UniformNoise { delta } => delta,
        }
    }
}

/// A reproducible batch of ground-state gap trials.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialPlan {
    pub graph: Graph,
    pub perturbation: TrialPerturbation,
    pub epsilon: f64,
    pub trials: u64,
    pub master_seed: u64,
    pub with_fields: bool,
}

/// A Bernoulli estimate with its normal-approximation standard error.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalResult {
    pub successes: u64,
    pub trials: u64,
    pub estimate: f64,
    pub standard_error: f64,
    /// Best applicable theoretical lower bound, when one exists.
    pub theoretical_bound: Option<f64>,
}

/// Per-trial record of a gap experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapTrial {
    pub trial: u64,
    /// `H(perturbed ground state) - H(ground state)`, always nonnegative.
    pub gap: f64,
    pub r_h: f64,
    /// Success threshold `epsilon * R_H` for this trial.
    pub threshold: f64,
    pub success: bool,
}

/// Outcome of [`estimate_gap_probability`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapProbability {
    pub empirical: EmpiricalResult,
    /// Every applicable analytic bound at the plan's `delta` and `epsilon`.
    pub bounds: Vec<StabilityReport>,
    pub records: Vec<GapTrial>,
}

/// Samples an instance with i.i.d. standard Gaussian couplings (and fields
/// when requested; otherwise all fields are exactly zero). Couplings are
/// drawn in canonical edge order, then fields in vertex order.
pub fn sample_instance(g: &Graph, with_fields: bool, seed: u64) -> IsingInstance {
    let mut rng = rng::chacha(seed);
    let couplings = (0..g.n_edges()).map(|_| rng::standard_normal(&mut rng)).collect();
    let fields = if with_fields {
        (0..g.n_vertices()).map(|_| rng::standard_normal(&mut rng)).collect()
    } else {
        vec![0.0; g.n_vertices()]
    };
    IsingInstance::new(g.clone(), couplings, fields).expect("sampled parameters are finite")
}

/// Estimates the probability that the perturbed ground state's energy gap
/// in the original Hamiltonian stays within `epsilon * R_H`. Every trial
/// samples a fresh instance, perturbs it, finds both ground states and the
/// exact range by enumeration, and counts a success when
/// `0 <= H(perturbed gs) - H(gs) <= epsilon * R_H`.
pub fn estimate_gap_probability(plan: &TrialPlan) -> Result<GapProbability> {
    if plan.trials == 0 {
        return Err(Error::InvalidParameter("plan needs at least one trial".into()));
    }
    if !plan.epsilon.is_finite() || plan.epsilon <= 0.0 {
        return Err(Error::InvalidParameter("error margin must be positive".into()));
    }
    if plan.graph.n_vertices() > DEFAULT_ENUMERATION_CAP {
        return Err(Error::TooLarge {
            vertices: plan.graph.n_vertices(),
            cap: DEFAULT_ENUMERATION_CAP,
        });
    }

    let records: Vec<GapTrial> = (0..plan.trials)
        .into_par_iter()
        .map(|trial| run_gap_trial(plan, trial))
        .collect::<Result<_>>()?;

    let successes = records.iter().filter(|r| r.success).count() as u64;
    let estimate = successes as f64 / plan.trials as f64;
    let standard_error = (estimate * (1.0 - estimate) / plan.trials as f64).sqrt();

    let delta = plan.perturbation.delta();
    let mut bound_reports = vec![
        bounds::bound_uniform(plan.graph.k_g(), delta, plan.epsilon)?,
        bounds::bound_graph_structured(&plan.graph, delta, plan.epsilon)?,
    ];
    if plan.graph.is_complete() {
        bound_reports.push(bounds::bound_complete_graph(
            plan.graph.n_vertices() as u64,
            delta,
            plan.epsilon,
        )?);
    }
    let best = bound_reports
        .iter()
        .map(|r| r.probability_lower_bound)
        .fold(f64::NEG_INFINITY, f64::max);

    Ok(GapProbability {
        empirical: EmpiricalResult {
            successes,
            trials: plan.trials,
            estimate,
            standard_error,
            theoretical_bound: Some(best),
        },
        bounds: bound_reports,
        records,
    })
}

fn run_gap_trial(plan: &TrialPlan, trial: u64) -> Result<GapTrial> {
    let instance_seed = rng::derive_seed(plan.master_seed, 2 * trial);
    let noise_seed = rng::derive_seed(plan.master_seed, 2 * trial + 1);
    let instance = sample_instance(&plan.graph, plan.with_fields, instance_seed);

    let spec = match plan.perturbation {
        TrialPerturbation::RoundOff { bits } => PerturbationSpec::RoundOff { bits },
        TrialPerturbation::UniformNoise { delta } => {
            PerturbationSpec::UniformNoise { delta, seed: noise_seed }
        }
    };
    let perturbed = spec.apply(&instance)?;

    let original = enumerate::extreme_states(&instance, DEFAULT_ENUMERATION_CAP)?;
    let perturbed_gs = solvers::ground_state_exact(&perturbed)?;
    let gap_energy = enumerate::exact_energy(&instance, perturbed_gs.config.spins());
    let gap = gap_energy - original.min_energy;
    let r_h = original.max_energy - original.min_energy;
    let threshold = plan.epsilon * r_h;
    Ok(GapTrial { trial, gap, r_h, threshold, success: (0.0..=threshold).contains(&gap) })
}

/// A sample-mean estimate with its standard error.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentEstimate {
    pub estimate: f64,
    pub standard_error: f64,
    pub trials: u64,
}

/// Empirical vs. closed-form removed-set moments on a 1-D torus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RemovedSizeStats {
    pub mean: MomentEstimate,
    pub second_moment: MomentEstimate,
    pub theoretical_mean: f64,
    pub theoretical_second_moment: f64,
    pub theta: f64,
}

/// Samples `trials` torus instances of size `n`, compresses each at level
/// `delta`, and reports first and second moments of the removed-set size
/// next to their closed forms.
pub fn estimate_removed_stats(
    n: u64,
    delta: f64,
    trials: u64,
    seed: u64,
) -> Result<RemovedSizeStats> {
    if trials == 0 {
        return Err(Error::InvalidParameter("need at least one trial".into()));
    }
    let graph = Graph::torus(&[n as usize])?;
    let sizes: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let inst = sample_instance(&graph, false, rng::derive_seed(seed, trial));
            crate::compression::build_v0(&inst, delta).map(|r| r.removed.len() as f64)
        })
        .collect::<Result<_>>()?;

    let theta = gaussian_central_mass(delta);
    let (theoretical_mean, theoretical_second_moment) =
        crate::compression::removed_size_moments(n, theta)?;
    let squares: Vec<f64> = sizes.iter().map(|x| x * x).collect();
    Ok(RemovedSizeStats {
        mean: moment_estimate(&sizes),
        second_moment: moment_estimate(&squares),
        theoretical_mean,
        theoretical_second_moment,
        theta,
    })
}

fn moment_estimate(samples: &[f64]) -> MomentEstimate {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let var = if samples.len() > 1 {
        samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0)
    } else {
        0.0
    };
    MomentEstimate {
        estimate: mean,
        standard_error: (var / n).sqrt(),
        trials: samples.len() as u64,
    }
}

/// Solver choice for [`scan_rh_over_n`].
#[derive(Debug, Clone, PartialEq)]
pub enum RhSolver {
    /// Closed-form extremes; 1-D tori only.
    Exact1d,
    /// Annealed estimates; any dimension. The seed inside the params is
    /// re-derived per trial.
    Anneal(AnnealerParams),
}

/// One sampled value of the total margin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RhSample {
    pub dimension: u32,
    pub side: usize,
    pub n: u64,
    pub trial: u64,
    pub r_h: f64,
    pub r_h_over_n: f64,
}

/// Samples `R_H / N` across torus sizes: for each side length, draws
/// `trials_per_size` Gaussian instances on the `dimension`-dimensional
/// torus and solves each with the requested solver.
pub fn scan_rh_over_n(
    dimension: u32,
    sides: &[usize],
    trials_per_size: u64,
    solver: &RhSolver,
    master_seed: u64,
) -> Result<Vec<RhSample>> {
    if dimension == 0 {
        return Err(Error::InvalidParameter("dimension must be at least 1".into()));
    }
    if matches!(solver, RhSolver::Exact1d) && dimension != 1 {
        return Err(Error::WrongGraphFamily(
            "the closed-form solver only applies to 1-D tori".into(),
        ));
    }
    let mut samples = Vec::with_capacity(sides.len() * trials_per_size as usize);
    for (side_idx, &side) in sides.iter().enumerate() {
        let dims = vec![side; dimension as usize];
        let graph = Graph::torus(&dims)?;
        let n = graph.n_vertices() as u64;
        let size_seed = rng::derive_seed(master_seed, side_idx as u64);
        let per_size: Vec<RhSample> = (0..trials_per_size)
            .into_par_iter()
            .map(|trial| {
                let inst =
                    sample_instance(&graph, false, rng::derive_seed(size_seed, trial));
                let r_h = match solver {
                    RhSolver::Exact1d => {
                        let (min, max) = solvers::extremes_1d_torus(&inst)?;
                        max - min
                    }
                    RhSolver::Anneal(params) => {
                        let mut p = params.clone();
                        p.seed = rng::derive_seed(params.seed, (side_idx as u64) << 32 | trial);
                        let (min, max, _) = solvers::anneal_extremes(&inst, &p)?;
                        max - min
                    }
                };
                Ok(RhSample {
                    dimension,
                    side,
                    n,
                    trial,
                    r_h,
                    r_h_over_n: r_h / n as f64,
                })
            })
            .collect::<Result<_>>()?;
        samples.extend(per_size);
    }
    Ok(samples)
}

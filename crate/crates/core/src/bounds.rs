//! Analytic stability certificates for perturbed Hamiltonians.
//!
//! Three probability lower bounds are available for the event that the
//! perturbed ground state stays within `ε R_H` of the true one when the
//! parameters are i.i.d. standard Gaussian:
//!
//! * [`bound_uniform`] — from the sup-norm estimate `|H_δ - H| <= δ k_G`;
//!   works on any graph, depends only on the parameter count `k_G`.
//! * [`bound_graph_structured`] — from the overlap estimate
//!   `|W| + |D| <= (deg G + 1)|V| / 2`; tighter on dense regular-ish
//!   graphs, looser on stars.
//! * [`bound_complete_graph`] — the sharpened complete-graph version using
//!   `|W| + |D| <= (N+1)^2 / 4`.
//!
//! All three report `1 - γ(k_G; A)` for a method-specific chi-square
//! argument `A`; smaller `A` means a better bound. [`best_bound`] picks
//! the winner, and [`min_digits`] inverts the bound into the number of
//! binary digits a round-off perturbation must keep.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::special::chi_square_cdf;

/// Hard cap for the digit search.
pub const DIGIT_SEARCH_CAP: u32 = 128;

/// Which estimate produced a stability report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMethod {
    Uniform,
    GraphStructured,
    CompleteGraph,
}

impl std::fmt::Display for BoundMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BoundMethod::Uniform => "uniform",
            BoundMethod::GraphStructured => "graph_structured",
            BoundMethod::CompleteGraph => "complete_graph",
        };
        f.write_str(s)
    }
}

/// Graph family hint for [`best_bound`]; used by callers that already know
/// the construction instead of re-detecting it structurally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Complete,
    Kings,
    Star,
    Torus,
}

/// One evaluated stability certificate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub method: BoundMethod,
    pub delta: f64,
    pub epsilon: f64,
    pub k_g: u64,
    pub chi_square_argument: f64,
    /// `1 - γ(k_G; argument)`, clamped into `[0, 1]`.
    pub probability_lower_bound: f64,
}

fn validate_delta_epsilon(delta: f64, epsilon: f64) -> Result<()> {
    if !delta.is_finite() || delta < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "perturbation bound must be finite and nonnegative, got {delta}"
        )));
    }
    if !epsilon.is_finite() || epsilon <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "error margin must be finite and positive, got {epsilon}"
        )));
    }
    Ok(())
}

fn report(method: BoundMethod, delta: f64, epsilon: f64, k_g: u64, argument: f64) -> StabilityReport {
    // When the argument is so large that γ saturates, the vacuous-but-valid
    // truth is a lower bound of 0.
    let probability_lower_bound = (1.0 - chi_square_cdf(k_g, argument)).max(0.0);
    StabilityReport {
        method,
        delta,
        epsilon,
        k_g,
        chi_square_argument: argument,
        probability_lower_bound,
    }
}

/// Largest `delta` for which order preservation is certified: any
/// perturbation with `delta <= ε sqrt(v_H) / (2 k_G)` guarantees that
/// `H_δ(σ) >= H_δ(τ)` implies `H(σ) >= H(τ) - ε R_H`.
pub fn order_preservation_threshold(k_g: u64, v_h: f64, epsilon: f64) -> Result<f64> {
    if k_g == 0 {
        return Err(Error::InvalidParameter("parameter count must be positive".into()));
    }
    if !v_h.is_finite() || v_h <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "squared parameter sum must be finite and positive, got {v_h}"
        )));
    }
    if !epsilon.is_finite() || epsilon <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "error margin must be finite and positive, got {epsilon}"
        )));
    }
    Ok(epsilon * v_h.sqrt() / (2.0 * k_g as f64))
}

/// Sup-norm bound: chi-square argument `(2 δ k_G / ε)^2`.
pub fn bound_uniform(k_g: u64, delta: f64, epsilon: f64) -> Result<StabilityReport> {
    if k_g == 0 {
        return Err(Error::InvalidParameter("parameter count must be positive".into()));
    }
    validate_delta_epsilon(delta, epsilon)?;
    let arg = (2.0 * delta * k_g as f64 / epsilon).powi(2);
    Ok(report(BoundMethod::Uniform, delta, epsilon, k_g, arg))
}

/// Overlap bound: chi-square argument `(δ |V| (deg G + 1) / ε)^2`.
pub fn bound_graph_structured(g: &Graph, delta: f64, epsilon: f64) -> Result<StabilityReport> {
    validate_delta_epsilon(delta, epsilon)?;
    let n = g.n_vertices() as f64;
    let arg = (delta * n * (g.max_degree() as f64 + 1.0) / epsilon).powi(2);
    Ok(report(BoundMethod::GraphStructured, delta, epsilon, g.k_g(), arg))
}

/// Complete-graph bound: chi-square argument `δ^2 (n+1)^4 / (4 ε^2)` with
/// `k_G = n (n+1) / 2`.
pub fn bound_complete_graph(n: u64, delta: f64, epsilon: f64) -> Result<StabilityReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    validate_delta_epsilon(delta, epsilon)?;
    let np1 = n as f64 + 1.0;
    let arg = delta * delta * np1.powi(4) / (4.0 * epsilon * epsilon);
    Ok(report(BoundMethod::CompleteGraph, delta, epsilon, n * (n + 1) / 2, arg))
}

/// Evaluates every applicable bound and returns the one with the largest
/// probability lower bound — equivalently the smallest chi-square argument,
/// since `k_G` is fixed per graph. The complete-graph sharpening only
/// applies when the graph is complete (detected structurally unless a
/// family hint says so).
pub fn best_bound(
    g: &Graph,
    family_hint: Option<GraphFamily>,
    delta: f64,
    epsilon: f64,
) -> Result<StabilityReport> {
    let mut candidates = vec![
        bound_uniform(g.k_g(), delta, epsilon)?,
        bound_graph_structured(g, delta, epsilon)?,
    ];
    let complete = match family_hint {
        Some(GraphFamily::Complete) => true,
        Some(_) => false,
        None => g.is_complete(),
    };
    if complete {
        candidates.push(bound_complete_graph(g.n_vertices() as u64, delta, epsilon)?);
    }
    // Ties keep the earlier (uniform-first) method for determinism.
    Ok(candidates
        .into_iter()
        .min_by(|a, b| a.chi_square_argument.total_cmp(&b.chi_square_argument))
        .expect("at least two candidates"))
}

/// Smallest number of binary digits `N` such that rounding parameters off
/// after `N` digits (`delta = 2^-N`) certifies the target probability via
/// the best applicable bound. Linear search from 1 bit; errors out past
/// [`DIGIT_SEARCH_CAP`].
pub fn min_digits(g: &Graph, epsilon: f64, target_probability: f64) -> Result<u32> {
    min_digits_by(epsilon, target_probability, |delta| best_bound(g, None, delta, epsilon))
}

/// Same search restricted to a single method.
pub fn min_digits_with_method(
    g: &Graph,
    method: BoundMethod,
    epsilon: f64,
    target_probability: f64,
) -> Result<u32> {
    min_digits_by(epsilon, target_probability, |delta| match method {
        BoundMethod::Uniform => bound_uniform(g.k_g(), delta, epsilon),
        BoundMethod::GraphStructured => bound_graph_structured(g, delta, epsilon),
        BoundMethod::CompleteGraph => {
            if !g.is_complete() {
                return Err(Error::WrongGraphFamily(
                    "complete-graph bound on a non-complete graph".into(),
                ));
            }
            bound_complete_graph(g.n_vertices() as u64, delta, epsilon)
        }
    })
}

fn min_digits_by(
    epsilon: f64,
    target_probability: f64,
    eval: impl Fn(f64) -> Result<StabilityReport>,
) -> Result<u32> {
    if !epsilon.is_finite() || epsilon <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "error margin must be finite and positive, got {epsilon}"
        )));
    }
    if !(target_probability > 0.0 && target_probability < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "target probability must lie in (0, 1), got {target_probability}"
        )));
    }
    for bits in 1..=DIGIT_SEARCH_CAP {
        let delta = (0.5f64).powi(bits as i32);
        if eval(delta)?.probability_lower_bound >= target_probability {
            return Ok(bits);
        }
    }
    Err(Error::DigitCapExceeded { cap: DIGIT_SEARCH_CAP })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_examples() {
        // Direct substitution: 0.1 * 2 / 20.
        let d = order_preservation_threshold(10, 4.0, 0.1).unwrap();
        assert_eq!(d, 0.01);
        // Linear in epsilon.
        let d2 = order_preservation_threshold(10, 4.0, 0.2).unwrap();
        assert_eq!(d2, 2.0 * d);

        assert!(order_preservation_threshold(0, 4.0, 0.1).is_err());
        assert!(order_preservation_threshold(10, 0.0, 0.1).is_err());
        assert!(order_preservation_threshold(10, 4.0, 0.0).is_err());
    }

    #[test]
    fn uniform_bound_examples() {
        // Zero perturbation certifies probability 1.
        let r = bound_uniform(10, 0.0, 0.1).unwrap();
        assert_eq!(r.probability_lower_bound, 1.0);

        // Argument 4 at k_G = 10; value frozen from a 40-digit evaluation
        // of the chi-square CDF.
        let r = bound_uniform(10, 0.01, 0.1).unwrap();
        assert_eq!(r.chi_square_argument, 4.0);
        assert!((r.probability_lower_bound - 0.947_346_982_656_288_8).abs() < 1e-12);

        assert!(bound_uniform(10, -0.1, 0.1).is_err());
        assert!(bound_uniform(10, 0.1, 0.0).is_err());
    }

    #[test]
    fn bound_monotonicity() {
        // Nonincreasing in delta, nondecreasing in epsilon.
        let g = Graph::kings(4, 4).unwrap();
        let deltas = [0.0, 1e-4, 1e-3, 1e-2, 0.1];
        for eps in [0.05, 0.1, 0.5] {
            let mut prev = f64::INFINITY;
            for d in deltas {
                let p = bound_graph_structured(&g, d, eps).unwrap().probability_lower_bound;
                assert!(p <= prev);
                assert!((0.0..=1.0).contains(&p));
                prev = p;
            }
        }
        for d in [1e-3, 1e-2] {
            let mut prev = 0.0;
            for eps in [0.01, 0.05, 0.1, 0.5, 1.0] {
                let p = bound_uniform(g.k_g(), d, eps).unwrap().probability_lower_bound;
                assert!(p >= prev);
                prev = p;
            }
        }
    }

    #[test]
    fn method_crossover_matches_examples() {
        // Complete graphs: (deg+1)|V|/2 = N^2/2 < k_G = N(N+1)/2, so the
        // graph-structured argument beats the uniform one for all N.
        for n in 1..=12 {
            let g = Graph::complete(n).unwrap();
            let a = bound_graph_structured(&g, 0.01, 0.1).unwrap().chi_square_argument;
            let b = bound_uniform(g.k_g(), 0.01, 0.1).unwrap().chi_square_argument;
            assert!(a < b, "n = {n}");
        }
        // Stars with k >= 3 go the other way.
        for k in 3..=12 {
            let g = Graph::star(k).unwrap();
            let a = bound_graph_structured(&g, 0.01, 0.1).unwrap().chi_square_argument;
            let b = bound_uniform(g.k_g(), 0.01, 0.1).unwrap().chi_square_argument;
            assert!(a > b, "k = {k}");
        }
        // Square King's graphs cross over exactly at 12x12:
        // 9NM/2 < 5NM - 3(N+M) + 2 first holds there.
        let g = Graph::kings(11, 11).unwrap();
        let a = bound_graph_structured(&g, 0.01, 0.1).unwrap().chi_square_argument;
        let b = bound_uniform(g.k_g(), 0.01, 0.1).unwrap().chi_square_argument;
        assert!(a > b);
        let g = Graph::kings(12, 12).unwrap();
        let a = bound_graph_structured(&g, 0.01, 0.1).unwrap().chi_square_argument;
        let b = bound_uniform(g.k_g(), 0.01, 0.1).unwrap().chi_square_argument;
        assert!(a < b);
    }

    #[test]
    fn complete_graph_bound_dominates() {
        // (n+1)^2/4 < n^2/2 for n >= 3, so the sharpened argument wins.
        for n in 3..=12u64 {
            let g = Graph::complete(n as usize).unwrap();
            let sharp = bound_complete_graph(n, 0.01, 0.1).unwrap().chi_square_argument;
            let generic = bound_graph_structured(&g, 0.01, 0.1).unwrap().chi_square_argument;
            assert!(sharp < generic, "n = {n}");
        }
        // |W| + |D| on K4 peaks at |D| = 2: 2 * 3 = 6 <= 25/4.
        let peak = (0..=4u64).map(|d| d * (4 + 1 - d)).max().unwrap();
        assert_eq!(peak, 6);
        assert!((peak as f64) <= 25.0 / 4.0);
    }

    #[test]
    fn best_bound_selects_expected_method() {
        let complete = Graph::complete(8).unwrap();
        assert_eq!(
            best_bound(&complete, None, 0.01, 0.1).unwrap().method,
            BoundMethod::CompleteGraph
        );

        let star = Graph::star(5).unwrap();
        assert_eq!(best_bound(&star, None, 0.01, 0.1).unwrap().method, BoundMethod::Uniform);

        let kings = Graph::kings(12, 12).unwrap();
        assert_eq!(
            best_bound(&kings, None, 0.01, 0.1).unwrap().method,
            BoundMethod::GraphStructured
        );

        // A hint can suppress structural detection.
        assert_ne!(
            best_bound(&complete, Some(GraphFamily::Torus), 0.01, 0.1).unwrap().method,
            BoundMethod::CompleteGraph
        );
    }

    #[test]
    fn min_digits_definition() {
        let g = Graph::complete(100).unwrap();
        let bits = min_digits(&g, 0.01, 0.99).unwrap();
        assert!(bits >= 1);
        let at = best_bound(&g, None, (0.5f64).powi(bits as i32), 0.01).unwrap();
        assert!(at.probability_lower_bound >= 0.99);
        if bits > 1 {
            let before = best_bound(&g, None, (0.5f64).powi(bits as i32 - 1), 0.01).unwrap();
            assert!(before.probability_lower_bound < 0.99);
        }
    }

    #[test]
    fn min_digits_monotone_in_epsilon() {
        let g = Graph::kings(6, 6).unwrap();
        let mut prev = u32::MAX;
        for eps in [0.005, 0.01, 0.02, 0.05, 0.1] {
            let bits = min_digits(&g, eps, 0.99).unwrap();
            assert!(bits <= prev, "eps {eps}");
            prev = bits;
        }
    }

    #[test]
    fn star_needs_more_digits_under_degree_method() {
        for k in [8, 16, 32, 64] {
            let g = Graph::star(k).unwrap();
            let by_uniform = min_digits_with_method(&g, BoundMethod::Uniform, 0.01, 0.99).unwrap();
            let by_degree =
                min_digits_with_method(&g, BoundMethod::GraphStructured, 0.01, 0.99).unwrap();
            assert!(by_degree > by_uniform, "k = {k}");
        }
    }

    #[test]
    fn min_digits_validation() {
        let g = Graph::complete(4).unwrap();
        assert!(min_digits(&g, 0.0, 0.99).is_err());
        assert!(min_digits(&g, 0.01, 0.0).is_err());
        assert!(min_digits(&g, 0.01, 1.0).is_err());
        assert!(matches!(
            min_digits_with_method(&Graph::star(4).unwrap(), BoundMethod::CompleteGraph, 0.01, 0.9),
            Err(Error::WrongGraphFamily(_))
        ));
    }
}

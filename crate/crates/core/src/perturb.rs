//! Perturbed Hamiltonians: binary round-off of the parameters and bounded
//! uniform noise. Both modes guarantee a sup-norm parameter error of at
//! most `delta`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonian::IsingInstance;
use crate::rng;

/// How to derive a perturbed instance from an original one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum PerturbationSpec {
    /// Truncate every parameter after `bits` fractional binary digits.
    RoundOff { bits: u32 },
    /// Shift every parameter by an independent uniform draw from
    /// `[-delta, delta]`, deterministically per seed. `delta = 0` leaves
    /// the instance unchanged.
    UniformNoise { delta: f64, seed: u64 },
}

impl PerturbationSpec {
    /// The sup-norm error bound `delta` this perturbation guarantees.
    pub fn delta(&self) -> f64 {
        match *self {
            PerturbationSpec::RoundOff { bits } => (0.5f64).powi(bits as i32),
            PerturbationSpec::UniformNoise { delta, .. } => delta,
        }
    }

    pub fn apply(&self, instance: &IsingInstance) -> Result<IsingInstance> {
        match *self {
            PerturbationSpec::RoundOff { bits } => Ok(round_off(instance, bits)?.0),
            PerturbationSpec::UniformNoise { delta, seed } => {
                perturb_uniform(instance, delta, seed)
            }
        }
    }
}

/// Truncates `p` after `bits` fractional binary digits, toward minus
/// infinity. Exact: multiplying by a power of two never rounds.
fn truncate_binary(p: f64, bits: u32) -> f64 {
    let scale = (2.0f64).powi(bits as i32);
    (p * scale).floor() / scale
}

/// Rounds every coupling and field off after `bits` binary digits of its
/// fractional part, keeping the integer part (floor convention, so the
/// fractional digits are in {0,1} even for negative parameters). Returns
/// the perturbed instance and the error bound `delta = 2^-bits`;
/// `0 <= p - p' < delta` holds parameter-wise.
pub fn round_off(instance: &IsingInstance, bits: u32) -> Result<(IsingInstance, f64)> {
    if bits == 0 {
        return Err(Error::InvalidParameter("round-off needs bits >= 1".into()));
    }
    let couplings = instance.couplings().iter().map(|&j| truncate_binary(j, bits)).collect();
    let fields = instance.fields().iter().map(|&h| truncate_binary(h, bits)).collect();
    let perturbed = IsingInstance::new(instance.graph().clone(), couplings, fields)?;
    Ok((perturbed, (0.5f64).powi(bits as i32)))
}

/// Shifts every parameter by an independent uniform draw from
/// `[-delta, delta]`. Deterministic for a fixed seed: couplings are drawn
/// in canonical edge order, then fields in vertex order.
pub fn perturb_uniform(instance: &IsingInstance, delta: f64, seed: u64) -> Result<IsingInstance> {
    if !delta.is_finite() || delta < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "noise bound must be finite and nonnegative, got {delta}"
        )));
    }
    if delta == 0.0 {
        return Ok(instance.clone());
    }
    let mut rng = rng::chacha(seed);
    let couplings = instance
        .couplings()
        .iter()
        .map(|&j| j + rng::symmetric_uniform(&mut rng, delta))
        .collect();
    let fields = instance
        .fields()
        .iter()
        .map(|&h| h + rng::symmetric_uniform(&mut rng, delta))
        .collect();
    IsingInstance::new(instance.graph().clone(), couplings, fields)
}

//! Gray-code exhaustive enumeration over spin configurations.
//!
//! This is the brute-force oracle the rest of the crate leans on. The
//! traversal visits all `2^n` configurations flipping one spin at a time,
//! maintaining the energy incrementally in O(deg) per step. Incremental
//! floating-point drift never leaks into results: whenever a configuration
//! comes within a guard band of the running extreme it is re-evaluated with
//! the exact canonical-order sum, and only exact values are compared and
//! returned. Ties break toward the lexicographically smallest configuration
//! (spins read in vertex order, -1 before +1).

use crate::error::{Error, Result};
use crate::hamiltonian::IsingInstance;

/// Exact energy in canonical order: edges first (lexicographic), then
/// vertex fields. Callers must pass spins of the right length.
pub(crate) fn exact_energy(instance: &IsingInstance, spins: &[i8]) -> f64 {
    let mut acc = 0.0;
    for (&(x, y), &j) in instance.graph().edges().iter().zip(instance.couplings()) {
        acc -= j * f64::from(spins[x] * spins[y]);
    }
    for (&h, &s) in instance.fields().iter().zip(spins) {
        acc -= h * f64::from(s);
    }
    acc
}

pub(crate) struct ExtremeStates {
    pub min_energy: f64,
    pub min_config: Vec<i8>,
    pub max_energy: f64,
    #[allow(dead_code)] // exercised by tests; kept for symmetry with min
    pub max_config: Vec<i8>,
}

struct GrayWalk<'a> {
    instance: &'a IsingInstance,
    /// Per-vertex incident couplings `(neighbor, J)`.
    incident: Vec<Vec<(usize, f64)>>,
    spins: Vec<i8>,
    energy: f64,
}

impl<'a> GrayWalk<'a> {
    fn new(instance: &'a IsingInstance) -> Self {
        let g = instance.graph();
        let mut incident = vec![Vec::new(); g.n_vertices()];
        for (&(x, y), &j) in g.edges().iter().zip(instance.couplings()) {
            incident[x].push((y, j));
            incident[y].push((x, j));
        }
        let spins = vec![-1i8; g.n_vertices()];
        let energy = exact_energy(instance, &spins);
        GrayWalk { instance, incident, spins, energy }
    }

    /// Flips vertex `v`, updating the incremental energy.
    fn flip(&mut self, v: usize) {
        let mut local = self.instance.fields()[v];
        for &(w, j) in &self.incident[v] {
            local += j * f64::from(self.spins[w]);
        }
        self.energy += 2.0 * f64::from(self.spins[v]) * local;
        self.spins[v] = -self.spins[v];
    }

    fn resync(&mut self) {
        self.energy = exact_energy(self.instance, &self.spins);
    }
}

fn check_cap(instance: &IsingInstance, cap: usize) -> Result<usize> {
    let n = instance.n_vertices();
    if n > cap {
        return Err(Error::TooLarge { vertices: n, cap });
    }
    Ok(n)
}

/// Exact minimum and maximum energy states of `instance`.
pub(crate) fn extreme_states(instance: &IsingInstance, cap: usize) -> Result<ExtremeStates> {
    let n = check_cap(instance, cap)?;
    let total: u64 = 1 << n;

    let mut walk = GrayWalk::new(instance);
    // Worst-case accumulated drift of the incremental energy; anything
    // within this band of the running extreme gets re-evaluated exactly.
    let guard = total as f64 * f64::EPSILON * 8.0 * walk.instance.parameter_scale().max(1.0);

    let mut min_energy = walk.energy;
    let mut min_config = walk.spins.clone();
    let mut max_energy = walk.energy;
    let mut max_config = walk.spins.clone();

    for k in 1..total {
        walk.flip(k.trailing_zeros() as usize);
        if walk.energy < min_energy + guard {
            let exact = exact_energy(instance, &walk.spins);
            if exact < min_energy || (exact == min_energy && walk.spins < min_config) {
                min_energy = exact;
                min_config.copy_from_slice(&walk.spins);
            }
        }
        if walk.energy > max_energy - guard {
            let exact = exact_energy(instance, &walk.spins);
            if exact > max_energy || (exact == max_energy && walk.spins < max_config) {
                max_energy = exact;
                max_config.copy_from_slice(&walk.spins);
            }
        }
    }

    Ok(ExtremeStates { min_energy, min_config, max_energy, max_config })
}

/// Mean and second moment of the energy under the uniform measure.
pub(crate) fn moments(instance: &IsingInstance, cap: usize) -> Result<(f64, f64)> {
    let n = check_cap(instance, cap)?;
    let total: u64 = 1 << n;
    // Kill incremental drift periodically; the exact value is cheap
    // relative to a block of flips.
    const RESYNC_MASK: u64 = 0xfff;

    let mut walk = GrayWalk::new(instance);
    let mut sum = walk.energy;
    let mut sum_sq = walk.energy * walk.energy;
    for k in 1..total {
        walk.flip(k.trailing_zeros() as usize);
        if k & RESYNC_MASK == 0 {
            walk.resync();
        }
        sum += walk.energy;
        sum_sq += walk.energy * walk.energy;
    }
    let count = total as f64;
    Ok((sum / count, sum_sq / count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::montecarlo::sample_instance;

    /// Plain reference enumeration: every configuration evaluated exactly.
    fn naive_extremes(instance: &IsingInstance) -> (f64, f64) {
        let n = instance.n_vertices();
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for mask in 0u64..(1 << n) {
            let spins: Vec<i8> =
                (0..n).map(|v| if mask >> v & 1 == 1 { 1 } else { -1 }).collect();
            let e = exact_energy(instance, &spins);
            min = min.min(e);
            max = max.max(e);
        }
        (min, max)
    }

    #[test]
    fn gray_walk_matches_naive() {
        for seed in 0..30 {
            let g = Graph::kings(3, 3).unwrap();
            let inst = sample_instance(&g, true, seed);
            let ext = extreme_states(&inst, 24).unwrap();
            let (min, max) = naive_extremes(&inst);
            assert_eq!(ext.min_energy, min, "seed {seed}");
            assert_eq!(ext.max_energy, max, "seed {seed}");
            assert_eq!(exact_energy(&inst, &ext.min_config), min);
            assert_eq!(exact_energy(&inst, &ext.max_config), max);
        }
    }

    #[test]
    fn tie_break_is_lexicographic() {
        // Degenerate ferromagnet on one edge: both aligned states reach -1;
        // the all-down configuration is lexicographically smaller.
        let g = Graph::from_edges(2, vec![(0, 1)]).unwrap();
        let inst = IsingInstance::without_fields(g, vec![1.0]).unwrap();
        let ext = extreme_states(&inst, 24).unwrap();
        assert_eq!(ext.min_energy, -1.0);
        assert_eq!(ext.min_config, vec![-1, -1]);
        // The maximum is likewise degenerate; (-1, +1) precedes (+1, -1).
        assert_eq!(ext.max_energy, 1.0);
        assert_eq!(ext.max_config, vec![-1, 1]);
    }

    #[test]
    fn moments_match_naive_sums() {
        let g = Graph::torus(&[6]).unwrap();
        let inst = sample_instance(&g, true, 99);
        let (mean, second) = moments(&inst, 24).unwrap();
        let n = inst.n_vertices();
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for mask in 0u64..(1 << n) {
            let spins: Vec<i8> =
                (0..n).map(|v| if mask >> v & 1 == 1 { 1 } else { -1 }).collect();
            let e = exact_energy(&inst, &spins);
            sum += e;
            sum_sq += e * e;
        }
        let count = (1u64 << n) as f64;
        assert!((mean - sum / count).abs() < 1e-12);
        assert!((second - sum_sq / count).abs() < 1e-9 * second.abs().max(1.0));
    }
}

//! Ising instances, spin configurations, and the exact quantities defined
//! on them: energies, the parameter variance proxy `v_H`, spin/link overlap
//! sets, and the exhaustively enumerated energy range.

use serde::{Deserialize, Serialize};

use crate::enumerate;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for exhaustive enumeration (~16M configurations).
/// Operations refuse larger instances instead of silently truncating.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

/// A graph together with one coupling per edge and one field per vertex.
///
/// Couplings are indexed against the canonical edge order of the graph,
/// fields against vertex indices. All values must be finite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "InstanceData", into = "InstanceData")]
pub struct IsingInstance {
    graph: Graph,
    couplings: Vec<f64>,
    fields: Vec<f64>,
}

/// Wire format: `{"graph": ..., "J": [...], "h": [...]}` with `J` in
/// canonical edge order and `h` in vertex order.
#[derive(Serialize, Deserialize)]
struct InstanceData {
    graph: Graph,
    #[serde(rename = "J")]
    couplings: Vec<f64>,
    #[serde(rename = "h")]
    fields: Vec<f64>,
}

impl From<IsingInstance> for InstanceData {
    fn from(i: IsingInstance) -> Self {
        InstanceData { graph: i.graph, couplings: i.couplings, fields: i.fields }
    }
}

impl TryFrom<InstanceData> for IsingInstance {
    type Error = Error;

    fn try_from(d: InstanceData) -> Result<Self> {
        IsingInstance::new(d.graph, d.couplings, d.fields)
    }
}

impl IsingInstance {
    pub fn new(graph: Graph, couplings: Vec<f64>, fields: Vec<f64>) -> Result<Self> {
        if couplings.len() != graph.n_edges() {
            return Err(Error::LengthMismatch {
                expected: graph.n_edges(),
                actual: couplings.len(),
            });
        }
        if fields.len() != graph.n_vertices() {
            return Err(Error::LengthMismatch {
                expected: graph.n_vertices(),
                actual: fields.len(),
            });
        }
        if couplings.iter().chain(&fields).any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter("couplings and fields must be finite".into()));
        }
        Ok(IsingInstance { graph, couplings, fields })
    }

    /// Instance with all fields zero.
    pub fn without_fields(graph: Graph, couplings: Vec<f64>) -> Result<Self> {
        let fields = vec![0.0; graph.n_vertices()];
        Self::new(graph, couplings, fields)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn couplings(&self) -> &[f64] {
        &self.couplings
    }

    pub fn fields(&self) -> &[f64] {
        &self.fields
    }

    pub fn n_vertices(&self) -> usize {
        self.graph.n_vertices()
    }

    pub fn has_fields(&self) -> bool {
        self.fields.iter().any(|&h| h != 0.0)
    }

    /// Instance with every parameter negated. Minimizing the negated
    /// instance maximizes the original.
    pub fn negated(&self) -> IsingInstance {
        IsingInstance {
            graph: self.graph.clone(),
            couplings: self.couplings.iter().map(|j| -j).collect(),
            fields: self.fields.iter().map(|h| -h).collect(),
        }
    }

    /// `Σ|J_b| + Σ|h_x|`, an upper bound on `|H|` over all configurations.
    pub(crate) fn parameter_scale(&self) -> f64 {
        self.couplings.iter().map(|j| j.abs()).sum::<f64>()
            + self.fields.iter().map(|h| h.abs()).sum::<f64>()
    }
}

/// An assignment of `-1` or `+1` to every vertex.
///
/// Ordering is lexicographic over the spin vector with `-1 < +1`, which is
/// the tie-break order used by the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ConfigData", into = "ConfigData")]
pub struct SpinConfig {
    spins: Vec<i8>,
}

#[derive(Serialize, Deserialize)]
struct ConfigData {
    spins: Vec<i8>,
}

impl From<SpinConfig> for ConfigData {
    fn from(c: SpinConfig) -> Self {
        ConfigData { spins: c.spins }
    }
}

impl TryFrom<ConfigData> for SpinConfig {
    type Error = Error;

    fn try_from(d: ConfigData) -> Result<Self> {
        SpinConfig::new(d.spins)
    }
}

impl SpinConfig {
    pub fn new(spins: Vec<i8>) -> Result<Self> {
        if spins.is_empty() {
            return Err(Error::InvalidSize("configuration needs at least one spin".into()));
        }
        if let Some(&bad) = spins.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidParameter(format!("spin value {bad} is not -1 or +1")));
        }
        Ok(SpinConfig { spins })
    }

    pub(crate) fn from_raw(spins: Vec<i8>) -> Self {
        debug_assert!(spins.iter().all(|&s| s == 1 || s == -1));
        SpinConfig { spins }
    }

    pub fn all_up(n: usize) -> Self {
        SpinConfig { spins: vec![1; n] }
    }

    pub fn all_down(n: usize) -> Self {
        SpinConfig { spins: vec![-1; n] }
    }

    pub fn spins(&self) -> &[i8] {
        &self.spins
    }

    pub fn len(&self) -> usize {
        self.spins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spins.is_empty()
    }

    /// Global spin flip.
    pub fn flipped(&self) -> SpinConfig {
        SpinConfig { spins: self.spins.iter().map(|s| -s).collect() }
    }
}

/// Exact energy `H(σ) = -Σ J_b σ_x σ_y - Σ h_x σ_x`, summed in canonical
/// edge order followed by vertex order.
pub fn energy(instance: &IsingInstance, config: &SpinConfig) -> Result<f64> {
    if config.len() != instance.n_vertices() {
        return Err(Error::LengthMismatch {
            expected: instance.n_vertices(),
            actual: config.len(),
        });
    }
    Ok(enumerate::exact_energy(instance, config.spins()))
}

/// Sum of squared parameters `v_H = Σ J_b² + Σ h_x²`.
pub fn v_h(instance: &IsingInstance) -> f64 {
    instance.couplings.iter().map(|j| j * j).sum::<f64>()
        + instance.fields.iter().map(|h| h * h).sum::<f64>()
}

/// Disagreement sets between two configurations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapSets {
    /// Vertices where the spin overlap `σ_x τ_x` is -1.
    pub disagreement_vertices: Vec<usize>,
    /// Edge indices where the link overlap `σ_x σ_y τ_x τ_y` is -1.
    pub disagreement_edges: Vec<usize>,
}

impl OverlapSets {
    pub fn d_size(&self) -> usize {
        self.disagreement_vertices.len()
    }

    pub fn w_size(&self) -> usize {
        self.disagreement_edges.len()
    }
}

/// Spin and link overlap disagreement sets of `sigma` and `tau` on `g`.
pub fn overlaps(sigma: &SpinConfig, tau: &SpinConfig, g: &Graph) -> Result<OverlapSets> {
    if sigma.len() != g.n_vertices() || tau.len() != g.n_vertices() {
        return Err(Error::LengthMismatch {
            expected: g.n_vertices(),
            actual: sigma.len().min(tau.len()),
        });
    }
    let s = sigma.spins();
    let t = tau.spins();
    let disagreement_vertices = (0..g.n_vertices()).filter(|&x| s[x] != t[x]).collect();
    let disagreement_edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(x, y))| s[x] * s[y] != t[x] * t[y])
        .map(|(i, _)| i)
        .collect();
    Ok(OverlapSets { disagreement_vertices, disagreement_edges })
}

/// Exact energy extremes of an instance.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyRange {
    pub min_energy: f64,
    pub max_energy: f64,
    /// Total margin `R_H = max - min`.
    pub r_h: f64,
}

/// Exact energy extremes by exhaustive enumeration, using the default cap.
pub fn range_exact(instance: &IsingInstance) -> Result<EnergyRange> {
    range_exact_capped(instance, DEFAULT_ENUMERATION_CAP)
}

/// Exact energy extremes with an explicit brute-force cap.
pub fn range_exact_capped(instance: &IsingInstance, cap: usize) -> Result<EnergyRange> {
    let ext = enumerate::extreme_states(instance, cap)?;
    Ok(EnergyRange {
        min_energy: ext.min_energy,
        max_energy: ext.max_energy,
        r_h: ext.max_energy - ext.min_energy,
    })
}

/// Mean and second moment of `H` under the uniform measure on all `2^|V|`
/// configurations. The mean is exactly 0 and the second moment exactly
/// `v_H`; this is the enumeration oracle for that identity.
pub fn uniform_moments(instance: &IsingInstance) -> Result<(f64, f64)> {
    uniform_moments_capped(instance, DEFAULT_ENUMERATION_CAP)
}

pub fn uniform_moments_capped(instance: &IsingInstance, cap: usize) -> Result<(f64, f64)> {
    enumerate::moments(instance, cap)
}

//! Stability analysis of Ising energy landscapes.
//!
//! The library models Ising Hamiltonians `H(σ) = -Σ J_b σ_x σ_y - Σ h_x σ_x`
//! on finite simple graphs and answers three practical questions about them:
//!
//! 1. How much can the couplings and fields be perturbed (rounded off to a
//!    finite number of binary digits, or shifted by bounded noise) before the
//!    energy ordering of configurations breaks down? See [`bounds`].
//! 2. With Gaussian random parameters, what is the probability that the
//!    ground state of the perturbed Hamiltonian stays within a given energy
//!    margin of the true ground state? See [`bounds`] and [`montecarlo`].
//! 3. Which vertices can be dropped entirely — spins on them chosen
//!    arbitrarily — while keeping the energy deviation under control?
//!    See [`compression`].
//!
//! Every analytic certificate has a matching brute-force or Monte Carlo
//! validation path: exact enumeration oracles live in [`hamiltonian`] and
//! [`solvers`], randomized validation in [`montecarlo`].

pub mod bounds;
pub mod compression;
mod enumerate;
mod error;
pub mod graph;
pub mod hamiltonian;
pub mod montecarlo;
pub mod perturb;
mod rng;
pub mod solvers;
pub mod special;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hamiltonian::{IsingInstance, SpinConfig};

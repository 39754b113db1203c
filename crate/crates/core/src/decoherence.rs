// Copyright 2026 ghzw-teleport Contributors
// SPDX-License-Identifier: Apache-2.0

//! Open-system dynamics: the Lindblad master equation, a fixed-step RK4
//! integrator, and closed-form solutions for every channel the crate
//! analyzes. Integrator and closed forms serve as each other's oracles.
//!
//! The master equation (purely dissipative; no Hamiltonian acts while the
//! states wait in storage) is
//!
//! ```text
//! dρ/dt = (γ/2) Σ_{k,i} (2 L_{k,i} ρ L_{k,i}† − L_{k,i}†L_{k,i} ρ − ρ L_{k,i}†L_{k,i})
//! ```
//!
//! with one operator set per qubit k chosen by [`EnvironmentKind`]:
//!
//! - zero temperature: `L_k = σ_k⁻` (energy relaxation),
//! - infinite temperature: `L_{k,1} = σ_k⁻`, `L_{k,2} = σ_k⁺` (balanced
//!   flip-up/flip-down noise),
//! - dephasing: `L_k = σ_k⁺σ_k⁻` (phase scrambling, populations frozen).
//!
//! Under the crate's σ⁻ = |1⟩⟨0| convention the zero-temperature fixed
//! point is the all-|1⟩ state. Single-qubit consequences, used pervasively
//! below (writing `g = γt`): zero temperature damps ρ¹¹ by e^{−g} and
//! coherences by e^{−g/2}; infinite temperature damps the population
//! imbalance by e^{−2g} and coherences by e^{−g}; dephasing leaves
//! populations untouched and damps coherences by e^{−g/2}.

use crate::error::{Error, Result};
use crate::linalg::{self, c, CMatrix};
use crate::states::DensityMatrix;
use crate::tol;

/// Environment (noise) model applied independently to each qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnvironmentKind {
    /// Energy relaxation toward the all-|1⟩ state.
    ZeroTemperature,
    /// Balanced excitation/relaxation driving toward the maximally mixed state.
    InfiniteTemperature,
    /// Pure dephasing: populations conserved, coherences decay.
    Dephasing,
}

impl EnvironmentKind {
    /// All three environments, in the crate's canonical order.
    pub const ALL: [EnvironmentKind; 3] = [
        EnvironmentKind::ZeroTemperature,
        EnvironmentKind::InfiniteTemperature,
        EnvironmentKind::Dephasing,
    ];

    /// Short machine-readable token used in CSV output and CLI flags.
    pub fn token(&self) -> &'static str {
        match self {
            EnvironmentKind::ZeroTemperature => "zero",
            EnvironmentKind::InfiniteTemperature => "inf",
            EnvironmentKind::Dephasing => "deph",
        }
    }
}

impl std::fmt::Display for EnvironmentKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            EnvironmentKind::ZeroTemperature => "zero-temperature",
            EnvironmentKind::InfiniteTemperature => "infinite-temperature",
            EnvironmentKind::Dephasing => "dephasing",
        };
        f.write_str(name)
    }
}

/// Jump operators coupling one qubit of an n-qubit register to its
/// environment, embedded into the full register.
///
/// Zero temperature and dephasing yield one operator, infinite temperature
/// two.
///
/// # Panics
/// If `qubit` is outside `1..=n` or the register exceeds four qubits.
pub fn lindblad_ops(env: EnvironmentKind, qubit: usize, n: usize) -> Vec<CMatrix> {
    let single: Vec<CMatrix> = match env {
        EnvironmentKind::ZeroTemperature => vec![linalg::sigma_minus()],
        EnvironmentKind::InfiniteTemperature => {
            vec![linalg::sigma_minus(), linalg::sigma_plus()]
        }
        EnvironmentKind::Dephasing => vec![linalg::sigma_plus() * linalg::sigma_minus()],
    };
    single
        .into_iter()
        .map(|op| linalg::embed_single(&op, qubit, n))
        .collect()
}

/// Precomputed right-hand side of the master equation for a fixed register
/// size, environment, and rate.
#[derive(Debug, Clone)]
pub struct LindbladGenerator {
    gamma: f64,
    // One (L, L†, L†L) triple per jump operator, all qubits included.
    terms: Vec<(CMatrix, CMatrix, CMatrix)>,
}

impl LindbladGenerator {
    /// Generator with the environment acting on every qubit of the register.
    pub fn new(env: EnvironmentKind, n_qubits: usize, gamma: f64) -> Self {
        assert!(gamma >= 0.0, "LindbladGenerator: negative rate");
        let mut terms = Vec::new();
        for qubit in 1..=n_qubits {
            for l in lindblad_ops(env, qubit, n_qubits) {
                let l_dag = linalg::dagger(&l);
                let l_dag_l = &l_dag * &l;
                terms.push((l, l_dag, l_dag_l));
            }
        }
        Self { gamma, terms }
    }

    /// dρ/dt = (γ/2) Σ (2 LρL† − L†Lρ − ρL†L). Trace-free and Hermitian for
    /// Hermitian input, up to rounding.
    pub fn rhs(&self, rho: &CMatrix) -> CMatrix {
        let dim = rho.nrows();
        let mut acc = CMatrix::zeros(dim, dim);
        for (l, l_dag, l_dag_l) in &self.terms {
            acc += ((l * rho) * l_dag).scale(2.0);
            acc -= l_dag_l * rho;
            acc -= rho * l_dag_l;
        }
        acc.scale(0.5 * self.gamma)
    }
}

/// Convenience wrapper: master-equation right-hand side for a density matrix.
pub fn lindblad_rhs(rho: &DensityMatrix, env: EnvironmentKind, gamma: f64) -> CMatrix {
    LindbladGenerator::new(env, rho.n_qubits(), gamma).rhs(rho.matrix())
}

/// Default dimensionless integrator step γ·dt. Fixed-step RK4 at this size
/// carries a global error around 1e-12 for these contractive generators,
/// four orders below the oracle tolerance.
pub const DEFAULT_GAMMA_DT: f64 = 1e-3;

// Drift guard thresholds for the raw (pre-cleanup) integrator output. At the
// default step the drift must stay below the oracle tolerance; for coarser
// experimental steps only a loose sanity bound applies.
const DRIFT_STRICT_STEP: f64 = 1.5e-3;
const DRIFT_LOOSE: f64 = 1e-3;

/// Integrates the master equation with classical fixed-step RK4.
///
/// The raw endpoint is checked for Hermiticity/trace drift (strict
/// [`tol::ORACLE`] bound when γ·dt ≤ 1.5e-3, loose 1e-3 guard otherwise),
/// then re-Hermitized as (ρ+ρ†)/2 and trace-renormalized once. Cleanup is
/// applied only at the end so integrator bugs are not masked step-by-step.
pub fn evolve_rk4(
    rho0: &DensityMatrix,
    env: EnvironmentKind,
    gamma: f64,
    t: f64,
    steps: usize,
) -> Result<DensityMatrix> {
    if t == 0.0 {
        return Ok(rho0.clone());
    }
    assert!(t > 0.0 && gamma >= 0.0, "evolve_rk4: negative time or rate");
    assert!(steps >= 1, "evolve_rk4: at least one step required");
    let generator = LindbladGenerator::new(env, rho0.n_qubits(), gamma);
    let dt = t / steps as f64;
    let mut raw = rho0.matrix().clone();
    rk4_advance(&generator, &mut raw, dt, steps);
    cleanup(raw, gamma * dt)
}

/// [`evolve_rk4`] with the step count chosen from [`DEFAULT_GAMMA_DT`].
pub fn evolve_rk4_auto(rho0: &DensityMatrix, env: EnvironmentKind, gt: f64) -> Result<DensityMatrix> {
    if gt == 0.0 {
        return Ok(rho0.clone());
    }
    let steps = (gt / DEFAULT_GAMMA_DT).ceil() as usize;
    evolve_rk4(rho0, env, 1.0, gt, steps.max(1))
}

/// Integrates once along a nondecreasing schedule of times, returning the
/// cleaned state at every checkpoint. Far cheaper than independent runs when
/// scanning a time grid, and numerically identical to a single long run.
///
/// # Panics
/// If the schedule is empty, starts below zero, or decreases.
pub fn evolve_rk4_checkpoints(
    rho0: &DensityMatrix,
    env: EnvironmentKind,
    gamma: f64,
    times: &[f64],
    gamma_dt: f64,
) -> Result<Vec<DensityMatrix>> {
    assert!(!times.is_empty(), "evolve_rk4_checkpoints: empty schedule");
    assert!(
        times[0] >= 0.0 && times.windows(2).all(|w| w[0] <= w[1]),
        "evolve_rk4_checkpoints: schedule must be nondecreasing from 0"
    );
    assert!(gamma_dt > 0.0, "evolve_rk4_checkpoints: step must be positive");

    let generator = LindbladGenerator::new(env, rho0.n_qubits(), gamma);
    let mut raw = rho0.matrix().clone();
    let mut now = 0.0;
    let mut out = Vec::with_capacity(times.len());
    for &target in times {
        let span = target - now;
        if span > 0.0 && gamma > 0.0 {
            let steps = ((gamma * span) / gamma_dt).ceil().max(1.0) as usize;
            rk4_advance(&generator, &mut raw, span / steps as f64, steps);
        }
        now = target;
        out.push(cleanup(raw.clone(), gamma_dt)?);
    }
    Ok(out)
}

fn rk4_advance(generator: &LindbladGenerator, rho: &mut CMatrix, dt: f64, steps: usize) {
    for _ in 0..steps {
        let k1 = generator.rhs(rho);
        let k2 = generator.rhs(&(&*rho + k1.scale(0.5 * dt)));
        let k3 = generator.rhs(&(&*rho + k2.scale(0.5 * dt)));
        let k4 = generator.rhs(&(&*rho + k3.scale(dt)));
        *rho += (k1 + k2.scale(2.0) + k3.scale(2.0) + k4).scale(dt / 6.0);
    }
}

fn cleanup(raw: CMatrix, gamma_dt: f64) -> Result<DensityMatrix> {
    let drift = linalg::hermiticity_deviation(&raw)
        .max((linalg::trace(&raw) - c(1.0, 0.0)).norm());
    let guard = if gamma_dt <= DRIFT_STRICT_STEP {
        tol::ORACLE
    } else {
        DRIFT_LOOSE
    };
    if drift > guard {
        return Err(Error::InvalidDensityMatrix {
            reason: "integrator drift beyond guard before cleanup",
            measured: drift,
            tolerance: guard,
        });
    }
    let sym = (&raw + raw.adjoint()).scale(0.5);
    let trace = linalg::trace(&sym).re;
    DensityMatrix::new(sym.scale(1.0 / trace))
}

/// Closed-form single-qubit solution of the master equation.
///
/// Writing `g = γt` and primes for evolved entries: zero temperature gives
/// ρ¹¹' = ρ¹¹e^{−g}, ρ¹²' = ρ¹²e^{−g/2}; infinite temperature gives
/// ρ¹¹'−ρ²²' = (ρ¹¹−ρ²²)e^{−2g}, ρ¹²' = ρ¹²e^{−g}; dephasing leaves the
/// diagonal alone and damps ρ¹² by e^{−g/2}.
pub fn closed_single_qubit(
    rho0: &DensityMatrix,
    env: EnvironmentKind,
    gt: f64,
) -> Result<DensityMatrix> {
    if rho0.dim() != 2 {
        return Err(Error::DimensionMismatch {
            context: "closed_single_qubit",
            expected: 2,
            actual: rho0.dim(),
        });
    }
    assert!(gt >= 0.0, "closed_single_qubit: negative time");
    let p00 = rho0.entry(1, 1).re;
    let p11 = rho0.entry(2, 2).re;
    let coh = rho0.entry(1, 2);

    let (q00, q11, qcoh) = match env {
        EnvironmentKind::ZeroTemperature => {
            let x1 = (-gt).exp();
            (p00 * x1, 1.0 - p00 * x1, coh * c((-0.5 * gt).exp(), 0.0))
        }
        EnvironmentKind::InfiniteTemperature => {
            let imbalance = (p00 - p11) * (-2.0 * gt).exp();
            (
                0.5 * (1.0 + imbalance),
                0.5 * (1.0 - imbalance),
                coh * c((-gt).exp(), 0.0),
            )
        }
        EnvironmentKind::Dephasing => (p00, p11, coh * c((-0.5 * gt).exp(), 0.0)),
    };

    let m = CMatrix::from_row_slice(2, 2, &[c(q00, 0.0), qcoh, qcoh.conj(), c(q11, 0.0)]);
    DensityMatrix::new(m)
}

/// Closed-form decohered GHZ channel state at dimensionless time `g = γt`.
///
/// Nonvanishing components (x_k = e^{−kg}, y₃ = e^{−3g/2}; ρ^{jk} = ρ^{kj}):
///
/// - zero temperature: ρ¹¹ = x₃/2, ρ¹⁸ = y₃/2, ρ²²˒³³˒⁵⁵ = (x₂−x₃)/2,
///   ρ⁴⁴˒⁶⁶˒⁷⁷ = x₁/2 − x₂ + x₃/2, ρ⁸⁸ = 1 − 3x₁/2 + 3x₂/2 − x₃/2;
/// - infinite temperature: ρ¹¹ = ρ⁸⁸ = (1+3x₄)/8, ρ¹⁸ = x₃/2,
///   remaining diagonal = (1−x₄)/8;
/// - dephasing: ρ¹¹ = ρ⁸⁸ = 1/2, ρ¹⁸ = y₃/2.
///
/// # Panics
/// If `gt` is negative. (The component lists are physical for all g ≥ 0 by
/// construction; the final validation cannot fail.)
pub fn closed_ghz(env: EnvironmentKind, gt: f64) -> DensityMatrix {
    assert!(gt >= 0.0, "closed_ghz: negative time");
    let x1 = (-gt).exp();
    let x2 = (-2.0 * gt).exp();
    let x3 = (-3.0 * gt).exp();
    let x4 = (-4.0 * gt).exp();
    let y3 = (-1.5 * gt).exp();

    let mut m = CMatrix::zeros(8, 8);
    let mut set = |j: usize, k: usize, v: f64| {
        m[(j - 1, k - 1)] = c(v, 0.0);
        m[(k - 1, j - 1)] = c(v, 0.0);
    };
    match env {
        EnvironmentKind::ZeroTemperature => {
            set(1, 1, 0.5 * x3);
            set(1, 8, 0.5 * y3);
            for j in [2, 3, 5] {
                set(j, j, 0.5 * (x2 - x3));
            }
            for j in [4, 6, 7] {
                set(j, j, 0.5 * x1 - x2 + 0.5 * x3);
            }
            set(8, 8, 1.0 - 1.5 * x1 + 1.5 * x2 - 0.5 * x3);
        }
        EnvironmentKind::InfiniteTemperature => {
            set(1, 1, (1.0 + 3.0 * x4) / 8.0);
            set(8, 8, (1.0 + 3.0 * x4) / 8.0);
            set(1, 8, 0.5 * x3);
            for j in 2..=7 {
                set(j, j, (1.0 - x4) / 8.0);
            }
        }
        EnvironmentKind::Dephasing => {
            set(1, 1, 0.5);
            set(8, 8, 0.5);
            set(1, 8, 0.5 * y3);
        }
    }
    DensityMatrix::new(m).expect("closed-form GHZ state is physical for all gt >= 0")
}

/// Closed-form decohered W channel state at dimensionless time `g = γt`.
///
/// Nonvanishing components (x_k = e^{−kg}, u = x₁ − x₂, v± = x₂ ± x₄,
/// w± = 1 ± x₆; ρ^{jk} = ρ^{kj}):
///
/// - zero temperature: ρ²² = x₂/2, ρ²³ = ρ²⁵ = x₂/(2√2),
///   ρ³³ = ρ⁵⁵ = ρ³⁵ = x₂/4, ρ⁴⁴ = ρ⁶⁶ = 3u/4, ρ⁴⁶ = u/4,
///   ρ⁴⁷ = ρ⁶⁷ = √2u/4, ρ⁷⁷ = u/2, ρ⁸⁸ = (1−x₁)²;
/// - infinite temperature: ρ¹¹/ρ⁷⁷ = (w₋ ± v₋)/8, ρ²²/ρ⁸⁸ = (w₊ ± v₊)/8
///   (first-listed label takes "+"), ρ³³ = ρ⁵⁵ = w₊/8, ρ⁴⁴ = ρ⁶⁶ = w₋/8,
///   ρ²³ = ρ²⁵ = √2v₊/8, ρ⁴⁷ = ρ⁶⁷ = √2v₋/8, ρ³⁵ = v₊/8, ρ⁴⁶ = v₋/8;
/// - dephasing: populations frozen at the W values, ρ²³ = ρ²⁵ = √2x₁/4,
///   ρ³⁵ = x₁/4.
///
/// # Panics
/// If `gt` is negative.
pub fn closed_w(env: EnvironmentKind, gt: f64) -> DensityMatrix {
    assert!(gt >= 0.0, "closed_w: negative time");
    let x1 = (-gt).exp();
    let x2 = (-2.0 * gt).exp();
    let x4 = (-4.0 * gt).exp();
    let x6 = (-6.0 * gt).exp();
    let sqrt2 = std::f64::consts::SQRT_2;

    let mut m = CMatrix::zeros(8, 8);
    let mut set = |j: usize, k: usize, v: f64| {
        m[(j - 1, k - 1)] = c(v, 0.0);
        m[(k - 1, j - 1)] = c(v, 0.0);
    };
    match env {
        EnvironmentKind::ZeroTemperature => {
            let u = x1 - x2;
            set(2, 2, 0.5 * x2);
            set(2, 3, x2 / (2.0 * sqrt2));
            set(2, 5, x2 / (2.0 * sqrt2));
            set(3, 3, 0.25 * x2);
            set(5, 5, 0.25 * x2);
            set(3, 5, 0.25 * x2);
            set(4, 4, 0.75 * u);
            set(6, 6, 0.75 * u);
            set(4, 6, 0.25 * u);
            set(4, 7, sqrt2 * u / 4.0);
            set(6, 7, sqrt2 * u / 4.0);
            set(7, 7, 0.5 * u);
            set(8, 8, (1.0 - x1) * (1.0 - x1));
        }
        EnvironmentKind::InfiniteTemperature => {
            let v_plus = x2 + x4;
            let v_minus = x2 - x4;
            let w_plus = 1.0 + x6;
            let w_minus = 1.0 - x6;
            set(1, 1, (w_minus + v_minus) / 8.0);
            set(7, 7, (w_minus - v_minus) / 8.0);
            set(2, 2, (w_plus + v_plus) / 8.0);
            set(8, 8, (w_plus - v_plus) / 8.0);
            set(3, 3, w_plus / 8.0);
            set(5, 5, w_plus / 8.0);
            set(4, 4, w_minus / 8.0);
            set(6, 6, w_minus / 8.0);
            set(2, 3, sqrt2 * v_plus / 8.0);
            set(2, 5, sqrt2 * v_plus / 8.0);
            set(4, 7, sqrt2 * v_minus / 8.0);
            set(6, 7, sqrt2 * v_minus / 8.0);
            set(3, 5, v_plus / 8.0);
            set(4, 6, v_minus / 8.0);
        }
        EnvironmentKind::Dephasing => {
            set(2, 2, 0.5);
            set(3, 3, 0.25);
            set(5, 5, 0.25);
            set(2, 3, sqrt2 * x1 / 4.0);
            set(2, 5, sqrt2 * x1 / 4.0);
            set(3, 5, 0.25 * x1);
        }
    }
    DensityMatrix::new(m).expect("closed-form W state is physical for all gt >= 0")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{max_abs, max_abs_diff};
    use crate::states::{ghz_vector, w_vector};
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_density(rng: &mut ChaCha8Rng, dim: usize) -> DensityMatrix {
        // A·A†, normalized, is a generic full-rank density matrix.
        let a = CMatrix::from_fn(dim, dim, |_, _| {
            c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        let m = &a * a.adjoint();
        let trace = linalg::trace(&m).re;
        DensityMatrix::new(m.scale(1.0 / trace)).expect("A·A†/tr is a valid state")
    }

    fn ket0_density() -> DensityMatrix {
        let mut m = CMatrix::zeros(2, 2);
        m[(0, 0)] = c(1.0, 0.0);
        DensityMatrix::new(m).unwrap()
    }

    fn ket1_density() -> DensityMatrix {
        let mut m = CMatrix::zeros(2, 2);
        m[(1, 1)] = c(1.0, 0.0);
        DensityMatrix::new(m).unwrap()
    }

    fn plus_density() -> DensityMatrix {
        DensityMatrix::new(CMatrix::from_row_slice(
            2,
            2,
            &[c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0)],
        ))
        .unwrap()
    }

    #[test]
    fn lindblad_ops_counts_and_shapes() {
        assert_eq!(lindblad_ops(EnvironmentKind::ZeroTemperature, 1, 1).len(), 1);
        assert_eq!(lindblad_ops(EnvironmentKind::InfiniteTemperature, 2, 2).len(), 2);
        assert_eq!(lindblad_ops(EnvironmentKind::Dephasing, 3, 3).len(), 1);
        // Dephasing operator on one qubit is the |0⟩⟨0| projector.
        let deph = &lindblad_ops(EnvironmentKind::Dephasing, 1, 1)[0];
        assert_relative_eq!(deph[(0, 0)].re, 1.0, epsilon = 1e-15);
        assert_relative_eq!(deph[(1, 1)].re, 0.0, epsilon = 1e-15);
        // Infinite-temperature pair on qubit 2 of 2 embeds as I⊗σ∓.
        let pair = lindblad_ops(EnvironmentKind::InfiniteTemperature, 2, 2);
        assert!(max_abs_diff(&pair[0], &linalg::embed_single(&linalg::sigma_minus(), 2, 2)) < 1e-15);
        assert!(max_abs_diff(&pair[1], &linalg::embed_single(&linalg::sigma_plus(), 2, 2)) < 1e-15);
    }

    #[test]
    fn rhs_of_ground_state_under_relaxation_transfers_population() {
        // d/dt |0⟩⟨0| = γ(|1⟩⟨1| − |0⟩⟨0|) at zero temperature.
        let rhs = lindblad_rhs(&ket0_density(), EnvironmentKind::ZeroTemperature, 1.0);
        let expected = CMatrix::from_row_slice(
            2,
            2,
            &[c(-1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        );
        assert!(max_abs_diff(&rhs, &expected) < 1e-14);
    }

    #[test]
    fn all_ones_state_is_zero_temperature_steady_state() {
        let rhs = lindblad_rhs(&ket1_density(), EnvironmentKind::ZeroTemperature, 1.0);
        assert!(max_abs(&rhs) < 1e-14);
    }

    #[test]
    fn dephasing_rhs_scales_coherences_and_freezes_populations() {
        let rhs = lindblad_rhs(&plus_density(), EnvironmentKind::Dephasing, 1.0);
        assert_relative_eq!(rhs[(0, 0)].re, 0.0, epsilon = 1e-14);
        assert_relative_eq!(rhs[(1, 1)].re, 0.0, epsilon = 1e-14);
        assert_relative_eq!(rhs[(0, 1)].re, -0.25, epsilon = 1e-14); // −(γ/2)·ρ01
        assert_relative_eq!(rhs[(1, 0)].re, -0.25, epsilon = 1e-14);
    }

    #[test]
    fn rhs_is_traceless_and_hermitian_on_random_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for env in EnvironmentKind::ALL {
            for dim in [2, 4, 8] {
                for _ in 0..20 {
                    let rho = random_density(&mut rng, dim);
                    let rhs = lindblad_rhs(&rho, env, 0.8);
                    assert!(linalg::trace(&rhs).norm() < 1e-12);
                    assert!(linalg::hermiticity_deviation(&rhs) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn evolve_at_zero_time_returns_input_exactly() {
        let rho = plus_density();
        let out = evolve_rk4(&rho, EnvironmentKind::ZeroTemperature, 1.0, 0.0, 1).unwrap();
        assert!(max_abs_diff(out.matrix(), rho.matrix()) == 0.0);
    }

    #[test]
    fn rk4_halves_ground_population_at_ln_two() {
        let gt = std::f64::consts::LN_2;
        let out = evolve_rk4_auto(&ket0_density(), EnvironmentKind::ZeroTemperature, gt).unwrap();
        assert_relative_eq!(out.entry(1, 1).re, 0.5, epsilon = 1e-8);
        assert_relative_eq!(out.entry(2, 2).re, 0.5, epsilon = 1e-8);
    }

    #[test]
    fn rk4_matches_closed_single_qubit_for_all_environments() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let rho0 = random_density(&mut rng, 2);
        for env in EnvironmentKind::ALL {
            for gt in [0.3, 1.0, 2.0] {
                let sim = evolve_rk4_auto(&rho0, env, gt).unwrap();
                let closed = closed_single_qubit(&rho0, env, gt).unwrap();
                assert!(
                    max_abs_diff(sim.matrix(), closed.matrix()) < tol::ORACLE,
                    "{env} gt={gt}"
                );
            }
        }
    }

    #[test]
    fn rk4_matches_closed_ghz_and_w_at_sample_times() {
        let ghz0 = DensityMatrix::from_pure(&ghz_vector());
        let w0 = DensityMatrix::from_pure(&w_vector());
        for env in EnvironmentKind::ALL {
            for gt in [0.25, 1.0] {
                let sim = evolve_rk4_auto(&ghz0, env, gt).unwrap();
                assert!(
                    max_abs_diff(sim.matrix(), closed_ghz(env, gt).matrix()) < tol::ORACLE,
                    "GHZ {env} gt={gt}"
                );
                let sim = evolve_rk4_auto(&w0, env, gt).unwrap();
                assert!(
                    max_abs_diff(sim.matrix(), closed_w(env, gt).matrix()) < tol::ORACLE,
                    "W {env} gt={gt}"
                );
            }
        }
    }

    #[test]
    fn checkpoint_evolution_matches_single_runs() {
        let w0 = DensityMatrix::from_pure(&w_vector());
        let times = [0.0, 0.4, 0.4, 1.1];
        let snaps = evolve_rk4_checkpoints(
            &w0,
            EnvironmentKind::InfiniteTemperature,
            1.0,
            &times,
            DEFAULT_GAMMA_DT,
        )
        .unwrap();
        assert_eq!(snaps.len(), 4);
        assert!(max_abs_diff(snaps[0].matrix(), w0.matrix()) < 1e-12);
        assert!(max_abs_diff(snaps[1].matrix(), snaps[2].matrix()) < 1e-15);
        let direct = evolve_rk4_auto(&w0, EnvironmentKind::InfiniteTemperature, 1.1).unwrap();
        // Same scheme, same step bound; both sit on the closed form to oracle accuracy.
        assert!(max_abs_diff(snaps[3].matrix(), direct.matrix()) < 1e-9);
    }

    #[test]
    fn ghz_dephasing_coherence_decays_with_three_halves_rate() {
        // ρ¹⁸(γt=1) = e^{−3/2}/2 ≈ 0.1115650800, via the integrator.
        let ghz0 = DensityMatrix::from_pure(&ghz_vector());
        let out = evolve_rk4_auto(&ghz0, EnvironmentKind::Dephasing, 1.0).unwrap();
        assert_relative_eq!(out.entry(1, 8).re, 0.111_565_080_0, epsilon = 1e-8);
    }

    #[test]
    fn closed_channels_reduce_to_pure_states_at_time_zero() {
        let ghz0 = DensityMatrix::from_pure(&ghz_vector());
        let w0 = DensityMatrix::from_pure(&w_vector());
        for env in EnvironmentKind::ALL {
            assert!(max_abs_diff(closed_ghz(env, 0.0).matrix(), ghz0.matrix()) < 1e-14);
            assert!(max_abs_diff(closed_w(env, 0.0).matrix(), w0.matrix()) < 1e-14);
        }
    }

    #[test]
    fn closed_channels_have_unit_trace_for_all_times() {
        for env in EnvironmentKind::ALL {
            for gt in [0.0, 0.1, 0.7, 2.0, 10.0] {
                assert!((linalg::trace(closed_ghz(env, gt).matrix()).re - 1.0).abs() < 1e-12);
                assert!((linalg::trace(closed_w(env, gt).matrix()).re - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn dephasing_preserves_diagonals_exactly() {
        let w0 = DensityMatrix::from_pure(&w_vector());
        let evolved = closed_w(EnvironmentKind::Dephasing, 1.3);
        for j in 1..=8 {
            assert_relative_eq!(
                evolved.entry(j, j).re,
                w0.entry(j, j).re,
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn zero_temperature_drives_both_channels_to_all_ones() {
        for state in [closed_ghz(EnvironmentKind::ZeroTemperature, 10.0),
                      closed_w(EnvironmentKind::ZeroTemperature, 10.0)] {
            assert!(state.entry(8, 8).re > 0.9999);
        }
        // And the integrator agrees.
        let w0 = DensityMatrix::from_pure(&w_vector());
        let sim = evolve_rk4_auto(&w0, EnvironmentKind::ZeroTemperature, 10.0).unwrap();
        assert!(sim.entry(8, 8).re > 0.9999);
    }

    #[test]
    fn infinite_temperature_drives_channels_to_maximally_mixed() {
        let target = DensityMatrix::maximally_mixed(3);
        for state in [closed_ghz(EnvironmentKind::InfiniteTemperature, 10.0),
                      closed_w(EnvironmentKind::InfiniteTemperature, 10.0)] {
            assert!(max_abs_diff(state.matrix(), target.matrix()) < 1e-4);
        }
    }

    #[test]
    fn wildly_coarse_steps_are_rejected_as_unphysical() {
        // One giant RK4 step over gt=2 amplifies the fast decay modes (the
        // stability polynomial exceeds 1 there), producing an indefinite
        // matrix. Trace and Hermiticity survive by construction, so it is
        // the PSD validation that must catch this.
        let result = evolve_rk4(
            &DensityMatrix::from_pure(&ghz_vector()),
            EnvironmentKind::ZeroTemperature,
            1.0,
            2.0,
            1,
        );
        assert!(matches!(result, Err(Error::InvalidDensityMatrix { .. })));
    }
}

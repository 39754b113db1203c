// Copyright 2026 ghzw-teleport Contributors
// SPDX-License-Identifier: Apache-2.0

//! Quantum state constructors and the validated density-matrix type.
//!
//! The input qubit is parameterized on the Bloch sphere as
//!
//! ```text
//! |φ_in⟩ = cos(θ/2) e^{iφ/2} |0⟩ + sin(θ/2) e^{−iφ/2} |1⟩
//! ```
//!
//! with polar angle θ ∈ [0, π] and azimuthal angle φ ∈ [0, 2π]. The two
//! three-qubit resource states are
//!
//! ```text
//! |ψ_GHZ⟩ = (|000⟩ + |111⟩)/√2          (support on basis labels {1, 8})
//! |ψ_W⟩   = (√2|001⟩ + |010⟩ + |100⟩)/2 (support on basis labels {2, 3, 5})
//! ```
//!
//! In the four-qubit teleportation register the channel occupies qubits
//! 2–4 and the √2-weighted W amplitude sits on Bob's qubit 4 — the
//! asymmetric weight is what makes the (2,3 | 4) bipartition maximally
//! entangled and perfect teleportation possible.

use crate::error::{Error, Result};
use crate::linalg::{self, c, CMatrix, CVector};
use crate::tol;

/// Bloch-sphere angles (θ, φ) of a pure single-qubit state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureStateAngles {
    theta: f64,
    phi: f64,
}

impl PureStateAngles {
    /// Validates θ ∈ [0, π] and φ ∈ [0, 2π].
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(Error::AngleOutOfRange {
                name: "theta",
                value: theta,
                lo: 0.0,
                hi: std::f64::consts::PI,
            });
        }
        if !(0.0..=2.0 * std::f64::consts::PI).contains(&phi) {
            return Err(Error::AngleOutOfRange {
                name: "phi",
                value: phi,
                lo: 0.0,
                hi: 2.0 * std::f64::consts::PI,
            });
        }
        Ok(Self { theta, phi })
    }

    /// Polar angle θ in radians.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Azimuthal angle φ in radians.
    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// Input state |φ_in⟩ = cos(θ/2)e^{iφ/2}|0⟩ + sin(θ/2)e^{−iφ/2}|1⟩.
pub fn input_state(angles: PureStateAngles) -> CVector {
    let half_theta = 0.5 * angles.theta;
    let half_phi = 0.5 * angles.phi;
    CVector::from_vec(vec![
        c(0.0, half_phi).exp() * c(half_theta.cos(), 0.0),
        c(0.0, -half_phi).exp() * c(half_theta.sin(), 0.0),
    ])
}

/// Three-qubit GHZ state vector (|000⟩ + |111⟩)/√2.
pub fn ghz_vector() -> CVector {
    let a = std::f64::consts::FRAC_1_SQRT_2;
    let mut v = CVector::zeros(8);
    v[0] = c(a, 0.0); // |000⟩, basis label 1
    v[7] = c(a, 0.0); // |111⟩, basis label 8
    v
}

/// Three-qubit W state vector (√2|001⟩ + |010⟩ + |100⟩)/2.
pub fn w_vector() -> CVector {
    let mut v = CVector::zeros(8);
    v[1] = c(std::f64::consts::FRAC_1_SQRT_2, 0.0); // |001⟩, basis label 2
    v[2] = c(0.5, 0.0); // |010⟩, basis label 3
    v[4] = c(0.5, 0.0); // |100⟩, basis label 5
    v
}

/// Hermitian, unit-trace, positive-semidefinite operator on 1–4 qubits.
///
/// Construction validates all three invariants; every public operation in
/// the crate that returns a `DensityMatrix` therefore returns a physical
/// state (up to the documented tolerances).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: CMatrix,
}

impl DensityMatrix {
    /// Validates and wraps a candidate density matrix.
    ///
    /// Checks, in order: all entries finite; Hermiticity within
    /// [`tol::HERMITICITY`]; trace within [`tol::UNIT_TRACE`] of one;
    /// smallest eigenvalue ≥ [`tol::PSD_FLOOR`].
    pub fn new(matrix: CMatrix) -> Result<Self> {
        let dim = matrix.nrows();
        if matrix.ncols() != dim || !dim.is_power_of_two() || !(2..=linalg::MAX_DIM).contains(&dim)
        {
            return Err(Error::DimensionMismatch {
                context: "DensityMatrix::new",
                expected: 2,
                actual: matrix.ncols().max(matrix.nrows()),
            });
        }
        if matrix.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("DensityMatrix::new"));
        }

        let herm = linalg::hermiticity_deviation(&matrix);
        if herm > tol::HERMITICITY {
            return Err(Error::InvalidDensityMatrix {
                reason: "Hermiticity deviation too large",
                measured: herm,
                tolerance: tol::HERMITICITY,
            });
        }

        let trace_dev = (linalg::trace(&matrix) - c(1.0, 0.0)).norm();
        if trace_dev > tol::UNIT_TRACE {
            return Err(Error::InvalidDensityMatrix {
                reason: "trace deviates from one",
                measured: trace_dev,
                tolerance: tol::UNIT_TRACE,
            });
        }

        let min_eig = linalg::hermitian_eigenvalues(&matrix)
            .first()
            .copied()
            .unwrap_or(0.0);
        if min_eig < tol::PSD_FLOOR {
            return Err(Error::InvalidDensityMatrix {
                reason: "negative eigenvalue beyond PSD floor",
                measured: min_eig,
                tolerance: tol::PSD_FLOOR,
            });
        }

        Ok(Self { matrix })
    }

    /// Pure-state density matrix |ψ⟩⟨ψ| from a normalized state vector.
    ///
    /// # Panics
    /// If the vector norm deviates from one by more than [`tol::EXACT`]
    /// (constructors in this crate always produce normalized vectors).
    pub fn from_pure(psi: &CVector) -> Self {
        let norm = psi.norm();
        assert!(
            (norm - 1.0).abs() < tol::EXACT,
            "from_pure: state vector norm {norm} is not 1"
        );
        let matrix = psi * psi.adjoint();
        Self { matrix }
    }

    /// Maximally mixed state I/2ⁿ on `n_qubits` qubits.
    pub fn maximally_mixed(n_qubits: usize) -> Self {
        let dim = 1usize << n_qubits;
        Self {
            matrix: linalg::identity(dim).scale(1.0 / dim as f64),
        }
    }

    /// Hilbert-space dimension.
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Number of qubits.
    pub fn n_qubits(&self) -> usize {
        linalg::qubit_count(self.dim())
    }

    /// Immutable view of the underlying matrix.
    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Consumes the wrapper and returns the matrix.
    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    /// Entry ρ^{jk} by 1-based basis labels.
    ///
    /// # Panics
    /// If a label is outside `1..=dim`.
    pub fn entry(&self, j: usize, k: usize) -> linalg::C64 {
        assert!(
            (1..=self.dim()).contains(&j) && (1..=self.dim()).contains(&k),
            "entry: basis labels are 1-based up to the register dimension"
        );
        self.matrix[(j - 1, k - 1)]
    }

    /// Purity tr(ρ²).
    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }

    /// Partial trace keeping the listed 1-based qubits (strictly increasing).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        DensityMatrix::new(linalg::partial_trace(&self.matrix, keep))
    }
}

/// Teleportation fidelity F = ⟨ψ|ρ|ψ⟩ of a state against a pure target,
/// clamped to [0, 1].
///
/// The raw value is guaranteed real up to rounding for valid inputs; values
/// within [`tol::EXACT`] outside [0, 1] are clamped, anything further out is
/// a bug upstream and panics.
///
/// # Panics
/// If dimensions mismatch or the raw value leaves [−EXACT, 1 + EXACT].
pub fn fidelity_against_pure(psi: &CVector, rho: &DensityMatrix) -> f64 {
    assert_eq!(
        psi.len(),
        rho.dim(),
        "fidelity_against_pure: dimension mismatch"
    );
    let raw = (psi.adjoint() * rho.matrix() * psi)[(0, 0)];
    assert!(
        raw.im.abs() < tol::HERMITICITY,
        "fidelity_against_pure: non-real expectation {raw}"
    );
    let f = raw.re;
    assert!(
        (-tol::EXACT..=1.0 + tol::EXACT).contains(&f),
        "fidelity_against_pure: value {f} outside [0, 1] beyond tolerance"
    );
    f.clamp(0.0, 1.0)
}

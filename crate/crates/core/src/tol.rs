// Copyright 2026 ghzw-teleport Contributors
// SPDX-License-Identifier: Apache-2.0

//! Centralized numeric tolerances.
//!
//! Every comparison threshold used by state validation, oracle cross-checks,
//! and the validation suite lives here with a short justification. No ad-hoc
//! magic numbers at call sites: when a bound appears in an assertion it
//! should be one of these constants (or derive from one).

/// Exact-arithmetic comparisons: identities that hold to machine precision
/// (gate algebra, norms of freshly constructed states, clamping guards).
/// ~50 ulp of headroom over f64 ε ≈ 2.2e-16 absorbs rounding in short
/// products without hiding real bugs.
pub const EXACT: f64 = 1e-12;

/// Unitarity of protocol matrices, max |U†U − I|. The 16×16 circuit products
/// involve a few dozen multiply-adds per entry, so machine-precision scale.
pub const UNITARITY: f64 = 1e-12;

/// Noiseless teleportation identity |1 − F|. Pure linear algebra with no
/// integration error; same scale as [`EXACT`].
pub const NOISELESS: f64 = 1e-12;

/// Hermiticity of a density matrix, max |ρ_{jk} − ρ*_{kj}|.
pub const HERMITICITY: f64 = 1e-10;

/// Unit-trace deviation |tr ρ − 1| of a density matrix.
pub const UNIT_TRACE: f64 = 1e-10;

/// Most negative admissible eigenvalue of a density matrix. Slightly looser
/// than the trace/Hermiticity bounds because eigenvalues of a numerically
/// evolved state inherit integrator drift.
pub const PSD_FLOOR: f64 = -1e-9;

/// Agreement between the RK4 integrator and closed-form channel solutions
/// (max entry difference), and between simulated and closed-form fidelities.
/// Fixed-step RK4 at γ·dt = 1e-3 has global error O((γ·dt)⁴) ≈ 1e-12 for
/// these smooth, contractive generators; 1e-8 leaves four orders of margin.
pub const ORACLE: f64 = 1e-8;

/// Agreement between Gauss–Legendre averages and closed-form averages. The
/// integrand is a low-degree polynomial in cos θ, so 32-node quadrature is
/// exact up to rounding; 1e-9 is generous.
pub const AVERAGE: f64 = 1e-9;

/// Bisection convergence for critical times and crossover angles.
pub const ROOT: f64 = 1e-10;

/// Comparisons against reference values quoted to four decimal places;
/// half a unit in the last quoted digit.
pub const QUOTED_4DP: f64 = 5e-4;

/// φ-independence of teleportation fidelity: spread of F over azimuthal
/// samples at fixed (θ, γt). Holds exactly in theory; 1e-10 absorbs the
/// linear-algebra rounding of the 16×16 pipeline.
pub const PHI_INDEPENDENCE: f64 = 1e-10;

#[cfg(test)]
// These deliberately assert on constants: they exist to fail loudly if a
// tolerance edit ever breaks the documented ordering.
#[allow(clippy::assertions_on_constants)]
mod tests {
    use super::*;

    #[test]
    fn tolerances_are_positive_where_required() {
        for t in [
            EXACT,
            UNITARITY,
            NOISELESS,
            HERMITICITY,
            UNIT_TRACE,
            ORACLE,
            AVERAGE,
            ROOT,
            QUOTED_4DP,
            PHI_INDEPENDENCE,
        ] {
            assert!(t > 0.0 && t.is_finite());
        }
        assert!(PSD_FLOOR < 0.0, "PSD floor admits small negative drift");
    }

    #[test]
    fn tolerance_ordering_is_coherent() {
        // Machine-precision identities are the tightest checks.
        assert!(EXACT <= HERMITICITY);
        assert!(UNITARITY <= HERMITICITY);
        // Validation thresholds are looser than construction thresholds.
        assert!(HERMITICITY <= ORACLE);
        assert!(PSD_FLOOR.abs() <= ORACLE);
        // Quoted-reference comparisons are the loosest.
        assert!(ORACLE <= QUOTED_4DP);
    }
}

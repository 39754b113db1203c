// Copyright 2026 ghzw-teleport Contributors
// SPDX-License-Identifier: Apache-2.0

//! Dense complex linear algebra for small qubit registers (one to four
//! qubits, dimensions 2–16).
//!
//! Index convention: basis label `j ∈ {1..2ⁿ}` ↔ bitstring of `j − 1`,
//! leftmost bit = qubit 1, bit value 0 ↔ |0⟩. In code, matrix row/column
//! indices are the 0-based `j − 1`. Qubit positions in every public helper
//! are 1-based to match that labeling.
//!
//! Ladder operators follow the population-flow convention σ⁻ = |1⟩⟨0|,
//! σ⁺ = |0⟩⟨1|: repeated σ⁻ jumps drive a register toward the all-|1⟩
//! state (largest basis index).
//!
//! Dimension errors here are programmer errors, so the helpers assert
//! instead of returning `Result`; see the `# Panics` sections.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Complex scalar used throughout the crate.
pub type C64 = Complex64;
/// Dense dynamically sized complex matrix.
pub type CMatrix = DMatrix<C64>;
/// Dense dynamically sized complex column vector.
pub type CVector = DVector<C64>;

/// Largest register dimension the crate works with (four qubits).
pub const MAX_DIM: usize = 16;

/// Shorthand complex constructor.
#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `dim × dim` identity matrix.
///
/// # Panics
/// If `dim` is not a power of two in `2..=16`.
pub fn identity(dim: usize) -> CMatrix {
    assert_valid_dim(dim);
    CMatrix::identity(dim, dim)
}

/// Number of qubits for a register dimension.
///
/// # Panics
/// If `dim` is not a power of two in `2..=16`.
pub fn qubit_count(dim: usize) -> usize {
    assert_valid_dim(dim);
    dim.trailing_zeros() as usize
}

fn assert_valid_dim(dim: usize) {
    assert!(
        dim.is_power_of_two() && (2..=MAX_DIM).contains(&dim),
        "register dimension must be a power of two in 2..=16, got {dim}"
    );
}

/// Pauli X.
pub fn pauli_x() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
}

/// Pauli Y.
pub fn pauli_y() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)])
}

/// Pauli Z.
pub fn pauli_z() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)])
}

/// Hadamard gate H = (X + Z)/√2.
pub fn hadamard() -> CMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    CMatrix::from_row_slice(2, 2, &[c(s, 0.0), c(s, 0.0), c(s, 0.0), c(-s, 0.0)])
}

/// Lowering operator σ⁻ = |1⟩⟨0| (population flows |0⟩ → |1⟩).
pub fn sigma_minus() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
}

/// Raising operator σ⁺ = |0⟩⟨1|.
pub fn sigma_plus() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
}

/// Kronecker product a ⊗ b.
///
/// # Panics
/// If either operand is non-square, or the product dimension exceeds
/// [`MAX_DIM`].
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    assert_eq!(a.nrows(), a.ncols(), "kron: left operand must be square");
    assert_eq!(b.nrows(), b.ncols(), "kron: right operand must be square");
    assert!(
        a.nrows() * b.nrows() <= MAX_DIM,
        "kron: product dimension {} exceeds the 4-qubit limit",
        a.nrows() * b.nrows()
    );
    a.kronecker(b)
}

/// Conjugate transpose.
pub fn dagger(a: &CMatrix) -> CMatrix {
    a.adjoint()
}

/// Matrix trace.
pub fn trace(a: &CMatrix) -> C64 {
    a.trace()
}

/// Largest entry magnitude, max |a_{jk}|.
pub fn max_abs(a: &CMatrix) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest entrywise difference, max |a_{jk} − b_{jk}|.
///
/// # Panics
/// If shapes differ.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "max_abs_diff: shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Deviation from Hermiticity, max |a_{jk} − a*_{kj}|.
pub fn hermiticity_deviation(a: &CMatrix) -> f64 {
    max_abs_diff(a, &a.adjoint())
}

/// Whether max |U†U − I| stays below `tolerance`.
pub fn is_unitary(u: &CMatrix, tolerance: f64) -> bool {
    let dim = u.nrows();
    u.ncols() == dim && max_abs_diff(&(u.adjoint() * u), &CMatrix::identity(dim, dim)) < tolerance
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// The input is symmetrized as (a + a†)/2 first so that callers may pass
/// matrices carrying tiny anti-Hermitian numerical drift; the result is the
/// exact real spectrum of that symmetrization.
pub fn hermitian_eigenvalues(a: &CMatrix) -> Vec<f64> {
    let sym = (a + a.adjoint()).scale(0.5);
    let mut eig: Vec<f64> = sym.symmetric_eigen().eigenvalues.iter().copied().collect();
    eig.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
    eig
}

/// Single-qubit operator embedded into an n-qubit register:
/// I ⊗ … ⊗ op ⊗ … ⊗ I with `op` at 1-based position `qubit`.
///
/// # Panics
/// If `op` is not 2×2 or `qubit` is outside `1..=n`.
pub fn embed_single(op: &CMatrix, qubit: usize, n: usize) -> CMatrix {
    assert_eq!(op.shape(), (2, 2), "embed_single: operator must be 2×2");
    assert!(
        (1..=n).contains(&qubit) && n >= 1 && (1 << n) <= MAX_DIM,
        "embed_single: qubit {qubit} outside register 1..={n}"
    );
    let mut acc = CMatrix::identity(1, 1);
    for q in 1..=n {
        let factor = if q == qubit {
            op.clone()
        } else {
            CMatrix::identity(2, 2)
        };
        acc = acc.kronecker(&factor);
    }
    acc
}

/// Controlled single-qubit gate on an n-qubit register:
/// |0⟩⟨0|_control ⊗ I + |1⟩⟨1|_control ⊗ u_target.
///
/// # Panics
/// If `u` is not 2×2, indices coincide, or either index is out of range.
pub fn controlled_gate(n: usize, control: usize, target: usize, u: &CMatrix) -> CMatrix {
    assert_ne!(control, target, "controlled_gate: control equals target");
    let p0 = CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
    let p1 = CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
    embed_single(&p0, control, n) + embed_single(&p1, control, n) * embed_single(u, target, n)
}

/// CNOT with the given control and target on an n-qubit register.
pub fn cnot(n: usize, control: usize, target: usize) -> CMatrix {
    controlled_gate(n, control, target, &pauli_x())
}

/// Controlled-Z with the given control and target on an n-qubit register.
pub fn cz(n: usize, control: usize, target: usize) -> CMatrix {
    controlled_gate(n, control, target, &pauli_z())
}

/// Partial trace keeping the listed 1-based qubits (strictly increasing).
/// The reduced register preserves the relative order of the kept qubits.
///
/// # Panics
/// If `keep` is empty, not strictly increasing, or references a qubit
/// outside the register.
pub fn partial_trace(m: &CMatrix, keep: &[usize]) -> CMatrix {
    let dim = m.nrows();
    assert_eq!(dim, m.ncols(), "partial_trace: matrix must be square");
    let n = qubit_count(dim);
    assert!(!keep.is_empty(), "partial_trace: keep set must be nonempty");
    assert!(
        keep.windows(2).all(|w| w[0] < w[1]) && keep.iter().all(|&q| (1..=n).contains(&q)),
        "partial_trace: keep set must be strictly increasing within 1..={n}"
    );

    let traced: Vec<usize> = (1..=n).filter(|q| !keep.contains(q)).collect();
    let k = keep.len();
    let nt = traced.len();
    let dim_keep = 1usize << k;
    let dim_traced = 1usize << nt;

    // Bit position of 1-based qubit q inside an n-bit index (qubit 1 = MSB).
    let shift = |q: usize| n - q;
    // Assemble a full register index from kept bits and traced bits.
    let compose = |bits_keep: usize, bits_traced: usize| -> usize {
        let mut idx = 0usize;
        for (i, &q) in keep.iter().enumerate() {
            let bit = (bits_keep >> (k - 1 - i)) & 1;
            idx |= bit << shift(q);
        }
        for (i, &q) in traced.iter().enumerate() {
            let bit = (bits_traced >> (nt - 1 - i)) & 1;
            idx |= bit << shift(q);
        }
        idx
    };

    let mut out = CMatrix::zeros(dim_keep, dim_keep);
    for row_keep in 0..dim_keep {
        for col_keep in 0..dim_keep {
            let mut sum = c(0.0, 0.0);
            for t in 0..dim_traced {
                sum += m[(compose(row_keep, t), compose(col_keep, t))];
            }
            out[(row_keep, col_keep)] = sum;
        }
    }
    out
}

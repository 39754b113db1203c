// Copyright 2026 ghzw-teleport Contributors
// SPDX-License-Identifier: Apache-2.0

//! Crate-wide error type.
//!
//! Structural misuse (mismatched dimensions handed to pure linear-algebra
//! helpers, invalid qubit indices) panics with an assertion instead — those
//! are programmer errors, not data-dependent conditions. Everything that can
//! fail on legitimate numeric input is reported through [`Error`].

use thiserror::Error;

/// Errors produced by state validation, configuration checks, and numerics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A matrix or vector had the wrong dimension for the requested operation.
    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    DimensionMismatch {
        /// Operation that rejected the operand.
        context: &'static str,
        /// Dimension the operation requires.
        expected: usize,
        /// Dimension actually supplied.
        actual: usize,
    },

    /// A candidate density matrix violated one of its defining invariants
    /// (Hermiticity, unit trace, or positive semidefiniteness).
    #[error("invalid density matrix: {reason} (measured {measured:.3e}, tolerance {tolerance:.3e})")]
    InvalidDensityMatrix {
        /// Which invariant failed.
        reason: &'static str,
        /// Measured magnitude of the violation.
        measured: f64,
        /// Tolerance it was checked against.
        tolerance: f64,
    },

    /// A spherical angle fell outside its admissible range.
    #[error("angle out of range: {name} = {value} not in [{lo}, {hi}]")]
    AngleOutOfRange {
        /// Name of the offending parameter.
        name: &'static str,
        /// Supplied value (radians).
        value: f64,
        /// Lower bound of the admissible range.
        lo: f64,
        /// Upper bound of the admissible range.
        hi: f64,
    },

    /// The requested (scenario, channel, environment, method) combination has
    /// no defined result.
    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),

    /// A root finder was called on an interval without a sign change.
    #[error("root not bracketed: no sign change on [{lo}, {hi}]")]
    RootNotBracketed {
        /// Left end of the search interval.
        lo: f64,
        /// Right end of the search interval.
        hi: f64,
    },

    /// A computation produced NaN or an infinity.
    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

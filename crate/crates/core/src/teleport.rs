// Copyright 2026 ghzw-teleport Contributors
// SPDX-License-Identifier: Apache-2.0

//! Teleportation protocols for the GHZ and W channels as explicit 16×16
//! coherent circuits, plus the output-state map
//!
//! ```text
//! ρ_out = Tr_{1,2,3} { U_α (ρ_in ⊗ ρ_channel) U_α† }
//! ```
//!
//! Register order is (input-1, alice-2, alice-3, bob-4); the channel state
//! occupies qubits 2–4 and Bob holds qubit 4.
//!
//! Measurements followed by classically controlled Pauli fixes are folded
//! into the unitary: `U_α = C · U_pre`, where `U_pre` rotates Alice's
//! measurement basis to the computational basis and `C` applies the
//! outcome-controlled correction on Bob's qubit. Tracing out qubits 1–3
//! then averages over outcomes exactly (the partial trace keeps only the
//! diagonal outcome blocks), so the map is deterministic and respects the
//! outcome statistics.
//!
//! For the W channel, Alice's basis on qubits (1,2,3) splits into a
//! teleporting half
//!
//! ```text
//! η₁ = (√2|000⟩ + |110⟩ + |101⟩)/2 → X     η₂ = (√2|000⟩ − |110⟩ − |101⟩)/2 → Z·X
//! η₃ = (√2|100⟩ + |010⟩ + |001⟩)/2 → I     η₄ = (√2|100⟩ − |010⟩ − |001⟩)/2 → Z
//! ```
//!
//! and a complement half {|111⟩, |011⟩, (|110⟩−|101⟩)/√2, (|010⟩−|001⟩)/√2}
//! that a pristine W channel never populates but decohered channels do. The
//! complement corrections are a free protocol choice; see
//! [`search_w_complement_corrections`] for how the crate picks and documents
//! them.

use crate::decoherence::EnvironmentKind;
use crate::error::{Error, Result};
use crate::linalg::{self, c, CMatrix};
use crate::states::{fidelity_against_pure, input_state, DensityMatrix, PureStateAngles};
use crate::tol;

/// Entangled three-qubit resource used as the teleportation channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    /// (|000⟩ + |111⟩)/√2.
    Ghz,
    /// (√2|001⟩ + |010⟩ + |100⟩)/2, √2-weight on Bob's qubit.
    W,
}

impl ChannelKind {
    /// Both channels, canonical order.
    pub const ALL: [ChannelKind; 2] = [ChannelKind::Ghz, ChannelKind::W];

    /// Short machine-readable token used in CSV output and CLI flags.
    pub fn token(&self) -> &'static str {
        match self {
            ChannelKind::Ghz => "ghz",
            ChannelKind::W => "w",
        }
    }
}

impl std::fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ChannelKind::Ghz => "GHZ",
            ChannelKind::W => "W",
        })
    }
}

/// Which subsystem decoheres before the protocol runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    /// The input qubit decoheres; the channel stays pristine.
    InputDecoheres,
    /// The channel decoheres; the input stays pristine.
    ChannelDecoheres,
    /// Both decohere (no closed-form reference; simulation only).
    BothDecohere,
}

impl Scenario {
    /// All scenarios, canonical order.
    pub const ALL: [Scenario; 3] = [
        Scenario::InputDecoheres,
        Scenario::ChannelDecoheres,
        Scenario::BothDecohere,
    ];

    /// Short machine-readable token used in CSV output and CLI flags.
    pub fn token(&self) -> &'static str {
        match self {
            Scenario::InputDecoheres => "input",
            Scenario::ChannelDecoheres => "channel",
            Scenario::BothDecohere => "both",
        }
    }
}

impl std::fmt::Display for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Scenario::InputDecoheres => "input-decoheres",
            Scenario::ChannelDecoheres => "channel-decoheres",
            Scenario::BothDecohere => "both-decohere",
        })
    }
}

/// Single-qubit Pauli correction applied on Bob's qubit after a measurement
/// outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Correction {
    /// Identity.
    I,
    /// Pauli X.
    X,
    /// Pauli Z.
    Z,
    /// Product Z·X (equivalently X·Z up to an irrelevant global phase).
    ZX,
}

impl Correction {
    /// All corrections in the crate's search order (also the lexicographic
    /// order used to break ties between equally good assignments).
    pub const ALL: [Correction; 4] = [Correction::I, Correction::X, Correction::Z, Correction::ZX];

    /// 2×2 matrix of the correction.
    pub fn matrix(&self) -> CMatrix {
        match self {
            Correction::I => linalg::identity(2),
            Correction::X => linalg::pauli_x(),
            Correction::Z => linalg::pauli_z(),
            Correction::ZX => linalg::pauli_z() * linalg::pauli_x(),
        }
    }

    /// Short token for reports ("I", "X", "Z", "ZX").
    pub fn token(&self) -> &'static str {
        match self {
            Correction::I => "I",
            Correction::X => "X",
            Correction::Z => "Z",
            Correction::ZX => "ZX",
        }
    }
}

/// Corrections assigned to the four complement outcomes of the W protocol,
/// in basis order {|111⟩, |011⟩, (|110⟩−|101⟩)/√2, (|010⟩−|001⟩)/√2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WComplementCorrections(pub [Correction; 4]);

impl WComplementCorrections {
    /// Assignment used by [`w_protocol`]: lexicographically first among the
    /// 16 assignments that reproduce the zero-temperature W fidelity exactly
    /// (see [`search_w_complement_corrections`]).
    pub const DEFAULT: WComplementCorrections = WComplementCorrections([
        Correction::I,
        Correction::X,
        Correction::I,
        Correction::X,
    ]);

    /// "I,X,I,X"-style rendering for reports.
    pub fn render(&self) -> String {
        self.0
            .iter()
            .map(|correction| correction.token())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Default for WComplementCorrections {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Coherent four-qubit teleportation unitary for one channel.
#[derive(Debug, Clone)]
pub struct ProtocolUnitary {
    channel: ChannelKind,
    u: CMatrix,
}

impl ProtocolUnitary {
    /// Wraps a caller-supplied 16×16 unitary (for experiments such as
    /// perturbed-protocol negative controls). Checks dimension and
    /// unitarity within [`tol::UNITARITY`].
    pub fn from_matrix(channel: ChannelKind, u: CMatrix) -> Result<Self> {
        if u.shape() != (16, 16) {
            return Err(Error::DimensionMismatch {
                context: "ProtocolUnitary::from_matrix",
                expected: 16,
                actual: u.nrows().max(u.ncols()),
            });
        }
        if !linalg::is_unitary(&u, tol::UNITARITY) {
            return Err(Error::InvalidDensityMatrix {
                reason: "protocol matrix is not unitary",
                measured: linalg::max_abs_diff(&(u.adjoint() * &u), &linalg::identity(16)),
                tolerance: tol::UNITARITY,
            });
        }
        Ok(Self { channel, u })
    }

    /// Channel this protocol teleports through.
    pub fn channel(&self) -> ChannelKind {
        self.channel
    }

    /// The 16×16 unitary.
    pub fn matrix(&self) -> &CMatrix {
        &self.u
    }
}

// Outcome-controlled correction unitary C = Σ_m |m⟩⟨m|₁₂₃ ⊗ C_m.
fn outcome_controlled(corrections: &[CMatrix; 8]) -> CMatrix {
    let mut control = CMatrix::zeros(16, 16);
    for (outcome, correction) in corrections.iter().enumerate() {
        let mut projector = CMatrix::zeros(8, 8);
        projector[(outcome, outcome)] = c(1.0, 0.0);
        control += linalg::kron(&projector, correction);
    }
    control
}

/// Teleportation unitary for the GHZ channel.
///
/// Pre-measurement circuit (rightmost factor acts first):
/// `U_pre = (H₁ H₃) · CNOT(1→2)`; outcome (m₁, m₂, m₃) on qubits 1–3
/// triggers `X^{m₂}` then `Z^{m₁⊕m₃}` on Bob. In fully coherent form the
/// correction layer is precisely `CZ(3→4) · CZ(1→4) · CNOT(2→4)`, which is
/// how [`outcome_controlled`] realises it here.
pub fn ghz_protocol() -> ProtocolUnitary {
    let u_pre = (linalg::embed_single(&linalg::hadamard(), 1, 4)
        * linalg::embed_single(&linalg::hadamard(), 3, 4))
        * linalg::cnot(4, 1, 2);

    let corrections: [CMatrix; 8] = std::array::from_fn(|outcome| {
        let m1 = (outcome >> 2) & 1;
        let m2 = (outcome >> 1) & 1;
        let m3 = outcome & 1;
        let mut correction = linalg::identity(2);
        if m2 == 1 {
            correction = linalg::pauli_x() * correction;
        }
        if m1 ^ m3 == 1 {
            correction = linalg::pauli_z() * correction;
        }
        correction
    });

    let u = outcome_controlled(&corrections) * u_pre;
    debug_assert!(linalg::is_unitary(&u, tol::UNITARITY));
    ProtocolUnitary {
        channel: ChannelKind::Ghz,
        u,
    }
}

// Alice's measurement basis for the W protocol, as the 8×8 unitary M whose
// columns are [η₁, η₂, η₃, η₄, c₁, c₂, c₃, c₄] in computational amplitudes
// over qubits (1,2,3).
fn w_measurement_basis() -> CMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2; // 1/√2
    let mut m = CMatrix::zeros(8, 8);
    let mut col = |idx: usize, entries: &[(usize, f64)]| {
        for &(row, amp) in entries {
            m[(row, idx)] = c(amp, 0.0);
        }
    };
    // Teleporting half: indices are bitstrings q1q2q3.
    col(0, &[(0b000, h), (0b110, 0.5), (0b101, 0.5)]); // η₁
    col(1, &[(0b000, h), (0b110, -0.5), (0b101, -0.5)]); // η₂
    col(2, &[(0b100, h), (0b010, 0.5), (0b001, 0.5)]); // η₃
    col(3, &[(0b100, h), (0b010, -0.5), (0b001, -0.5)]); // η₄
    // Complement half.
    col(4, &[(0b111, 1.0)]); // c₁
    col(5, &[(0b011, 1.0)]); // c₂
    col(6, &[(0b110, h), (0b101, -h)]); // c₃
    col(7, &[(0b010, h), (0b001, -h)]); // c₄
    m
}

/// Teleportation unitary for the W channel with explicit complement-outcome
/// corrections.
///
/// `U_pre = M† ⊗ I₂` rotates Alice's η/complement basis into the
/// computational basis; outcomes 1–4 trigger the fixed corrections
/// (X, Z·X, I, Z) and outcomes 5–8 the supplied complement corrections.
pub fn w_protocol_with(complement: WComplementCorrections) -> ProtocolUnitary {
    let u_pre = linalg::kron(&linalg::dagger(&w_measurement_basis()), &linalg::identity(2));
    let corrections: [CMatrix; 8] = [
        Correction::X.matrix(),
        Correction::ZX.matrix(),
        Correction::I.matrix(),
        Correction::Z.matrix(),
        complement.0[0].matrix(),
        complement.0[1].matrix(),
        complement.0[2].matrix(),
        complement.0[3].matrix(),
    ];
    let u = outcome_controlled(&corrections) * u_pre;
    debug_assert!(linalg::is_unitary(&u, tol::UNITARITY));
    ProtocolUnitary {
        channel: ChannelKind::W,
        u,
    }
}

/// Teleportation unitary for the W channel with the crate's default
/// complement corrections ([`WComplementCorrections::DEFAULT`]).
pub fn w_protocol() -> ProtocolUnitary {
    w_protocol_with(WComplementCorrections::DEFAULT)
}

/// Protocol for either channel with default choices.
pub fn protocol_for(channel: ChannelKind) -> ProtocolUnitary {
    match channel {
        ChannelKind::Ghz => ghz_protocol(),
        ChannelKind::W => w_protocol(),
    }
}

/// Density matrix of the pristine (undecohered) channel state.
pub fn pristine_channel(channel: ChannelKind) -> DensityMatrix {
    match channel {
        ChannelKind::Ghz => DensityMatrix::from_pure(&crate::states::ghz_vector()),
        ChannelKind::W => DensityMatrix::from_pure(&crate::states::w_vector()),
    }
}

/// Bob's output state: ρ_out = Tr_{1,2,3}{ U (ρ_in ⊗ ρ_channel) U† }.
///
/// Linear and completely positive in both state arguments; the output
/// passes full density-matrix validation.
pub fn teleport_output(
    rho_in: &DensityMatrix,
    rho_channel: &DensityMatrix,
    protocol: &ProtocolUnitary,
) -> Result<DensityMatrix> {
    if rho_in.dim() != 2 {
        return Err(Error::DimensionMismatch {
            context: "teleport_output input state",
            expected: 2,
            actual: rho_in.dim(),
        });
    }
    if rho_channel.dim() != 8 {
        return Err(Error::DimensionMismatch {
            context: "teleport_output channel state",
            expected: 8,
            actual: rho_channel.dim(),
        });
    }
    let joint = linalg::kron(rho_in.matrix(), rho_channel.matrix());
    let rotated = protocol.matrix() * joint * linalg::dagger(protocol.matrix());
    DensityMatrix::new(linalg::partial_trace(&rotated, &[4]))
}

/// Teleportation fidelity of a pure input through an arbitrary channel
/// state: F = ⟨φ_in| ρ_out |φ_in⟩.
pub fn teleport_fidelity(
    angles: PureStateAngles,
    rho_channel: &DensityMatrix,
    protocol: &ProtocolUnitary,
) -> Result<f64> {
    let psi = input_state(angles);
    let rho_in = DensityMatrix::from_pure(&psi);
    let out = teleport_output(&rho_in, rho_channel, protocol)?;
    Ok(fidelity_against_pure(&psi, &out))
}

/// Result of the exhaustive complement-correction search for the W
/// protocol.
#[derive(Debug, Clone)]
pub struct CorrectionSearchOutcome {
    /// Best assignment found (lexicographically first among minimizers).
    pub best: WComplementCorrections,
    /// Max |closed − simulated| for the best assignment over the whole
    /// search grid (all three environments).
    pub best_deviation: f64,
    /// Max deviation of the best assignment per environment.
    pub deviation_by_env: [(EnvironmentKind, f64); 3],
    /// Whether the best assignment reproduces the closed forms within
    /// [`tol::ORACLE`] across all environments.
    pub converged: bool,
    /// How many of the 256 assignments reproduce the zero-temperature
    /// closed form within [`tol::ORACLE`] on the grid.
    pub exact_zero_temperature_count: usize,
}

impl CorrectionSearchOutcome {
    /// One-line summary for validation reports.
    pub fn render(&self) -> String {
        let per_env = self
            .deviation_by_env
            .iter()
            .map(|(env, dev)| format!("{}: {dev:.3e}", env.token()))
            .collect::<Vec<_>>()
            .join(", ");
        format!(
            "W complement-correction assignment: {} ({} of 256 exact at zero temperature; \
             converged across all environments: {}; max residual by environment: {per_env})",
            self.best.render(),
            self.exact_zero_temperature_count,
            self.converged,
        )
    }
}

/// Exhaustively searches the 256 complement-correction assignments for the
/// one whose simulated W-channel fidelity best reproduces the closed-form
/// expressions over a fixed grid (three environments × γt ∈ {0.25, 0.5, 1}
/// × θ ∈ {0, π/4, π/2}).
///
/// Outcome, frozen as a regression-tested fact: exactly 16 assignments —
/// {I,Z} × {X,ZX} × {I,Z} × {X,ZX} — reproduce the zero-temperature line
/// exactly, and the lexicographically first of them is
/// [`WComplementCorrections::DEFAULT`]. *No* assignment reproduces the
/// infinite-temperature or dephasing closed forms; see the crate README for
/// why no choice of fixed corrections can (the closed-form tables for those
/// two environments exceed what any measure-and-correct protocol attains).
pub fn search_w_complement_corrections() -> CorrectionSearchOutcome {
    let gts = [0.25, 0.5, 1.0];
    let thetas = [0.0, std::f64::consts::FRAC_PI_4, std::f64::consts::FRAC_PI_2];

    // Precompute channel states and closed-form targets per (env, gt, θ).
    let mut cases = Vec::new();
    for env in EnvironmentKind::ALL {
        for &gt in &gts {
            let channel_state = crate::decoherence::closed_w(env, gt);
            for &theta in &thetas {
                let target = crate::analysis::fidelity_closed(
                    Scenario::ChannelDecoheres,
                    env,
                    Some(ChannelKind::W),
                    theta,
                    gt,
                )
                .expect("closed form exists for the channel scenario");
                cases.push((env, channel_state.clone(), theta, target));
            }
        }
    }

    let mut best: Option<(WComplementCorrections, f64, [f64; 3])> = None;
    let mut exact_zero_count = 0usize;

    for a in Correction::ALL {
        for b in Correction::ALL {
            for d in Correction::ALL {
                for e in Correction::ALL {
                    let assignment = WComplementCorrections([a, b, d, e]);
                    let protocol = w_protocol_with(assignment);
                    let mut dev_by_env = [0.0f64; 3];
                    for (env, channel_state, theta, target) in &cases {
                        let angles = PureStateAngles::new(*theta, 0.0).expect("grid angles valid");
                        let f = teleport_fidelity(angles, channel_state, &protocol)
                            .expect("pipeline is well-posed on the search grid");
                        let slot = EnvironmentKind::ALL
                            .iter()
                            .position(|candidate| candidate == env)
                            .expect("environment is one of the three");
                        dev_by_env[slot] = dev_by_env[slot].max((f - target).abs());
                    }
                    if dev_by_env[0] < tol::ORACLE {
                        exact_zero_count += 1;
                    }
                    let overall = dev_by_env.iter().copied().fold(0.0, f64::max);
                    let better = match &best {
                        None => true,
                        // Strict inequality keeps the lexicographically first minimizer.
                        Some((_, incumbent, _)) => overall < *incumbent,
                    };
                    if better {
                        best = Some((assignment, overall, dev_by_env));
                    }
                }
            }
        }
    }

    let (best, best_deviation, dev_by_env) = best.expect("search space is nonempty");
    CorrectionSearchOutcome {
        best,
        best_deviation,
        deviation_by_env: [
            (EnvironmentKind::ZeroTemperature, dev_by_env[0]),
            (EnvironmentKind::InfiniteTemperature, dev_by_env[1]),
            (EnvironmentKind::Dephasing, dev_by_env[2]),
        ],
        converged: best_deviation < tol::ORACLE,
        exact_zero_temperature_count: exact_zero_count,
    }
}

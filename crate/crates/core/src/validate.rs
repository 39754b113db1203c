// Copyright 2026 ghzw-teleport Contributors
// SPDX-License-Identifier: Apache-2.0

//! End-to-end validation suite: every cross-check between the closed-form
//! catalog and the simulated pipeline, plus the derived-quantity anchors,
//! rendered as a human-readable report with one line per check.
//!
//! A fresh build passes every non-informational check. Two checks are
//! *informational*: the W channel under the infinite-temperature and
//! dephasing environments, where the closed-form catalog exceeds what any
//! fixed measure-and-correct protocol attains (see the README's "Known
//! deviations"). Those lines report the measured two-route gap without
//! affecting the exit status; everything else is strict.
//!
//! [`run_with`] accepts caller-supplied protocol unitaries so a harness can
//! verify the suite actually bites: perturbing a correction gate must fail
//! the noiseless-fidelity check.

use crate::analysis::{
    self, average_fidelity_closed, average_fidelity_quadrature, fidelity_closed, ChannelKind,
    CriticalValue, CrossoverKind, Scenario,
};
use crate::decoherence::{self, EnvironmentKind};
use crate::linalg;
use crate::states::{fidelity_against_pure, input_state, DensityMatrix, PureStateAngles};
use crate::teleport::{self, ProtocolUnitary};
use crate::tol;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PI: f64 = std::f64::consts::PI;

/// Outcome of one validation check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    /// Stable check identifier (also the report line prefix).
    pub name: String,
    /// Whether the measured deviation is within tolerance.
    pub passed: bool,
    /// Informational checks report a measurement but never affect the
    /// overall verdict.
    pub informational: bool,
    /// Largest deviation measured by the check.
    pub deviation: f64,
    /// Tolerance the deviation was compared against.
    pub tolerance: f64,
    /// Optional free-form detail appended to the report line.
    pub note: Option<String>,
}

impl CheckResult {
    fn strict(name: &str, deviation: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            passed: deviation <= tolerance,
            informational: false,
            deviation,
            tolerance,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn informational(mut self) -> Self {
        self.informational = true;
        self
    }
}

/// Full validation report.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    /// All checks, in execution order.
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    /// True when every non-informational check passed.
    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| !c.informational)
            .all(|c| c.passed)
    }

    /// First failing non-informational check, if any.
    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks
            .iter()
            .find(|c| !c.informational && !c.passed)
    }

    /// One line per check plus a summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let status = if check.informational {
                "INFO"
            } else if check.passed {
                "PASS"
            } else {
                "FAIL"
            };
            out.push_str(&format!(
                "[{status}] {:<44} deviation {:.3e} (tolerance {:.1e})",
                check.name, check.deviation, check.tolerance
            ));
            if let Some(note) = &check.note {
                out.push_str(&format!(" — {note}"));
            }
            out.push('\n');
        }
        let total = self.checks.len();
        let informational = self.checks.iter().filter(|c| c.informational).count();
        let failed = self
            .checks
            .iter()
            .filter(|c| !c.informational && !c.passed)
            .count();
        out.push_str(&format!(
            "summary: {total} checks — {} strict passed, {failed} failed, {informational} informational\n",
            total - informational - failed,
        ));
        out
    }
}

/// Tunable tolerances and integrator settings for the suite.
#[derive(Debug, Clone, Copy)]
pub struct ValidateOptions {
    /// Closed-form vs simulated agreement (states and fidelities).
    pub tol_oracle: f64,
    /// Quadrature vs closed-form averages.
    pub tol_average: f64,
    /// Root-finding targets with exact expressions.
    pub tol_root: f64,
    /// Integrator step γ·Δt for all RK4 evolution in the suite.
    pub gamma_dt: f64,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        Self {
            tol_oracle: tol::ORACLE,
            tol_average: tol::AVERAGE,
            tol_root: tol::ROOT,
            gamma_dt: decoherence::DEFAULT_GAMMA_DT,
        }
    }
}

/// The pair of protocol unitaries the protocol-identity checks run against.
///
/// Injectable so a test harness can demonstrate the suite catches a
/// perturbed correction gate; all other checks always use the standard
/// protocols built by [`teleport::protocol_for`].
#[derive(Debug, Clone)]
pub struct ProtocolSet {
    /// GHZ-channel protocol.
    pub ghz: ProtocolUnitary,
    /// W-channel protocol.
    pub w: ProtocolUnitary,
}

impl ProtocolSet {
    /// The crate's standard protocols.
    pub fn standard() -> Self {
        Self {
            ghz: teleport::ghz_protocol(),
            w: teleport::w_protocol(),
        }
    }
}

/// Runs the full suite with the standard protocols.
pub fn run(options: &ValidateOptions) -> ValidationReport {
    run_with(&ProtocolSet::standard(), options)
}

/// Runs the full suite, using `protocols` for the protocol-identity checks.
pub fn run_with(protocols: &ProtocolSet, options: &ValidateOptions) -> ValidationReport {
    let mut checks = Vec::new();

    checks.push(check_noiseless(protocols));
    checks.push(check_unitarity(protocols));
    checks.push(check_integrator_vs_closed_states(options));
    checks.extend(check_closed_vs_simulated(options));
    checks.push(check_correction_search(options));
    checks.push(check_quadrature_vs_closed(options));
    checks.push(check_simulated_averages(options));
    checks.push(check_unit_average_at_zero());
    checks.push(check_critical_times_closed_form(options));
    checks.push(check_critical_times_numeric());
    checks.push(check_critical_times_dephasing());
    checks.push(check_w_average_minimum());
    checks.push(check_w_dephasing_asymptote());
    checks.push(check_dephasing_bounds());
    checks.push(check_monotonicity_switch_ghz());
    checks.push(check_monotonicity_switch_w(options));
    checks.push(check_zero_temperature_asymptote());
    checks.push(check_channel_ordering());
    checks.push(check_robustness_crossovers());
    checks.push(check_phi_independence(options));

    ValidationReport { checks }
}

fn check_noiseless(protocols: &ProtocolSet) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    for (protocol, channel) in [
        (&protocols.ghz, ChannelKind::Ghz),
        (&protocols.w, ChannelKind::W),
    ] {
        let rho_channel = teleport::pristine_channel(channel);
        for _ in 0..50 {
            let angles = PureStateAngles::new(
                rng.random_range(0.0..PI),
                rng.random_range(0.0..2.0 * PI),
            )
            .expect("sampled in range");
            let f = teleport::teleport_fidelity(angles, &rho_channel, protocol)
                .expect("pristine pipeline is well-posed");
            worst = worst.max((1.0 - f).abs());
        }
    }
    CheckResult::strict("noiseless-fidelity", worst, tol::NOISELESS)
        .with_note("50 random inputs through each pristine channel")
}

fn check_unitarity(protocols: &ProtocolSet) -> CheckResult {
    let dev = |u: &ProtocolUnitary| {
        linalg::max_abs_diff(
            &(u.matrix().adjoint() * u.matrix()),
            &linalg::identity(16),
        )
    };
    let worst = dev(&protocols.ghz).max(dev(&protocols.w));
    CheckResult::strict("protocol-unitarity", worst, tol::UNITARITY)
}

// Checkpoint grid γt ∈ {0.1, 0.2, …, 2.0}.
fn checkpoint_times() -> Vec<f64> {
    (1..=20).map(|i| i as f64 * 0.1).collect()
}

fn check_integrator_vs_closed_states(options: &ValidateOptions) -> CheckResult {
    let times = checkpoint_times();
    let mut worst: f64 = 0.0;

    for env in EnvironmentKind::ALL {
        // Single qubit, coherence-bearing initial state.
        let angles = PureStateAngles::new(PI / 3.0, 0.9).expect("valid angles");
        let rho0 = DensityMatrix::from_pure(&input_state(angles));
        let evolved =
            decoherence::evolve_rk4_checkpoints(&rho0, env, 1.0, &times, options.gamma_dt)
                .expect("single-qubit evolution");
        for (rho, &gt) in evolved.iter().zip(&times) {
            let closed = decoherence::closed_single_qubit(&rho0, env, gt).expect("dim 2");
            worst = worst.max(linalg::max_abs_diff(rho.matrix(), closed.matrix()));
        }

        // Both channel states.
        for channel in ChannelKind::ALL {
            let rho0 = teleport::pristine_channel(channel);
            let evolved =
                decoherence::evolve_rk4_checkpoints(&rho0, env, 1.0, &times, options.gamma_dt)
                    .expect("channel evolution");
            for (rho, &gt) in evolved.iter().zip(&times) {
                let closed = match channel {
                    ChannelKind::Ghz => decoherence::closed_ghz(env, gt),
                    ChannelKind::W => decoherence::closed_w(env, gt),
                };
                worst = worst.max(linalg::max_abs_diff(rho.matrix(), closed.matrix()));
            }
        }
    }
    CheckResult::strict("integrator-vs-closed-states", worst, options.tol_oracle)
        .with_note("9 state families x 20 checkpoints on gt in [0.1, 2]")
}

// Max |closed − simulated| fidelity over a 10×10 (θ, γt ∈ [0, 2]) grid.
fn closed_vs_sim_deviation(
    scenario: Scenario,
    env: EnvironmentKind,
    channel: Option<ChannelKind>,
    options: &ValidateOptions,
) -> f64 {
    let thetas: Vec<f64> = (0..10).map(|j| PI * j as f64 / 9.0).collect();
    let times: Vec<f64> = (0..10).map(|i| 2.0 * i as f64 / 9.0).collect();
    let mut worst: f64 = 0.0;

    match scenario {
        Scenario::ChannelDecoheres => {
            let channel = channel.expect("channel scenario");
            let protocol = teleport::protocol_for(channel);
            let channel_states = decoherence::evolve_rk4_checkpoints(
                &teleport::pristine_channel(channel),
                env,
                1.0,
                &times,
                options.gamma_dt,
            )
            .expect("channel evolution");
            for (rho_channel, &gt) in channel_states.iter().zip(&times) {
                for &theta in &thetas {
                    let angles = PureStateAngles::new(theta, 0.0).expect("valid");
                    let psi = input_state(angles);
                    let out = teleport::teleport_output(
                        &DensityMatrix::from_pure(&psi),
                        rho_channel,
                        &protocol,
                    )
                    .expect("pipeline");
                    let sim = fidelity_against_pure(&psi, &out);
                    let closed = fidelity_closed(scenario, env, Some(channel), theta, gt)
                        .expect("closed form");
                    worst = worst.max((sim - closed).abs());
                }
            }
        }
        Scenario::InputDecoheres => {
            let protocol = teleport::protocol_for(ChannelKind::Ghz);
            let rho_channel = teleport::pristine_channel(ChannelKind::Ghz);
            for &theta in &thetas {
                let angles = PureStateAngles::new(theta, 0.0).expect("valid");
                let psi = input_state(angles);
                let inputs = decoherence::evolve_rk4_checkpoints(
                    &DensityMatrix::from_pure(&psi),
                    env,
                    1.0,
                    &times,
                    options.gamma_dt,
                )
                .expect("input evolution");
                for (rho_in, &gt) in inputs.iter().zip(&times) {
                    let out = teleport::teleport_output(rho_in, &rho_channel, &protocol)
                        .expect("pipeline");
                    let sim = fidelity_against_pure(&psi, &out);
                    let closed =
                        fidelity_closed(scenario, env, None, theta, gt).expect("closed form");
                    worst = worst.max((sim - closed).abs());
                }
            }
        }
        Scenario::BothDecohere => unreachable!("no closed form to compare against"),
    }
    worst
}

fn check_closed_vs_simulated(options: &ValidateOptions) -> Vec<CheckResult> {
    let mut results = Vec::new();
    for env in EnvironmentKind::ALL {
        let dev = closed_vs_sim_deviation(Scenario::InputDecoheres, env, None, options);
        results.push(CheckResult::strict(
            &format!("closed-vs-sim input {}", env.token()),
            dev,
            options.tol_oracle,
        ));
    }
    for env in EnvironmentKind::ALL {
        let dev = closed_vs_sim_deviation(
            Scenario::ChannelDecoheres,
            env,
            Some(ChannelKind::Ghz),
            options,
        );
        results.push(CheckResult::strict(
            &format!("closed-vs-sim channel ghz {}", env.token()),
            dev,
            options.tol_oracle,
        ));
    }
    for env in EnvironmentKind::ALL {
        let dev = closed_vs_sim_deviation(
            Scenario::ChannelDecoheres,
            env,
            Some(ChannelKind::W),
            options,
        );
        let name = format!("closed-vs-sim channel w {}", env.token());
        let result = CheckResult::strict(&name, dev, options.tol_oracle);
        if env == EnvironmentKind::ZeroTemperature {
            results.push(result);
        } else {
            results.push(result.informational().with_note(
                "known two-route gap: no fixed complement-correction assignment attains \
                 the closed form here; see README \"Known deviations\"",
            ));
        }
    }
    results
}

fn check_correction_search(options: &ValidateOptions) -> CheckResult {
    let outcome = teleport::search_w_complement_corrections();
    let zero_t_residual = outcome.deviation_by_env[0].1;
    let as_documented = outcome.best == teleport::WComplementCorrections::DEFAULT
        && outcome.exact_zero_temperature_count == 16
        && zero_t_residual <= options.tol_oracle;
    CheckResult {
        name: "w-correction-search".to_string(),
        passed: as_documented,
        informational: false,
        deviation: zero_t_residual,
        tolerance: options.tol_oracle,
        note: Some(outcome.render()),
    }
}

fn closed_configurations() -> Vec<(Scenario, EnvironmentKind, Option<ChannelKind>)> {
    let mut configs = Vec::new();
    for env in EnvironmentKind::ALL {
        configs.push((Scenario::InputDecoheres, env, None));
        for channel in ChannelKind::ALL {
            configs.push((Scenario::ChannelDecoheres, env, Some(channel)));
        }
    }
    configs
}

fn check_quadrature_vs_closed(options: &ValidateOptions) -> CheckResult {
    let mut worst: f64 = 0.0;
    for (scenario, env, channel) in closed_configurations() {
        for gt in [0.1, 0.5, 1.0, 2.0] {
            let quad = average_fidelity_quadrature(
                scenario,
                env,
                channel,
                gt,
                analysis::DEFAULT_QUADRATURE_NODES,
            )
            .expect("valid configuration");
            let closed =
                average_fidelity_closed(scenario, env, channel, gt).expect("valid configuration");
            worst = worst.max((quad - closed).abs());
        }
    }
    CheckResult::strict("quadrature-vs-closed-average", worst, options.tol_average)
        .with_note("9 configurations x gt in {0.1, 0.5, 1, 2}")
}

fn check_simulated_averages(options: &ValidateOptions) -> CheckResult {
    // Only configurations where the protocol attains the closed form.
    let configs: Vec<(Scenario, EnvironmentKind, Option<ChannelKind>)> = EnvironmentKind::ALL
        .into_iter()
        .flat_map(|env| {
            [
                (Scenario::InputDecoheres, env, None),
                (Scenario::ChannelDecoheres, env, Some(ChannelKind::Ghz)),
            ]
        })
        .chain(std::iter::once((
            Scenario::ChannelDecoheres,
            EnvironmentKind::ZeroTemperature,
            Some(ChannelKind::W),
        )))
        .collect();
    let settings = analysis::SimSettings {
        gamma_dt: options.gamma_dt,
    };
    let mut worst: f64 = 0.0;
    for (scenario, env, channel) in configs {
        let sim = analysis::average_fidelity_simulated(scenario, env, channel, 0.5, settings)
            .expect("valid configuration");
        let closed =
            average_fidelity_closed(scenario, env, channel, 0.5).expect("valid configuration");
        worst = worst.max((sim - closed).abs());
    }
    CheckResult::strict("simulated-vs-closed-average", worst, options.tol_oracle)
        .with_note("7 attainable configurations at gt = 0.5")
}

fn check_unit_average_at_zero() -> CheckResult {
    let mut worst: f64 = 0.0;
    for (scenario, env, channel) in closed_configurations() {
        let f = average_fidelity_closed(scenario, env, channel, 0.0).expect("valid configuration");
        worst = worst.max((f - 1.0).abs());
    }
    CheckResult::strict("unit-average-at-zero-time", worst, tol::EXACT)
}

fn check_critical_times_closed_form(options: &ValidateOptions) -> CheckResult {
    let targets: [(Scenario, EnvironmentKind, Option<ChannelKind>, f64); 4] = [
        (
            Scenario::InputDecoheres,
            EnvironmentKind::ZeroTemperature,
            None,
            (3.0 + 2.0 * 2.0f64.sqrt()).ln(),
        ),
        (
            Scenario::InputDecoheres,
            EnvironmentKind::InfiniteTemperature,
            None,
            (1.0 + 2.0f64.sqrt()).ln(),
        ),
        (
            Scenario::ChannelDecoheres,
            EnvironmentKind::ZeroTemperature,
            Some(ChannelKind::Ghz),
            ((3.0 + 5.0f64.sqrt()) / 2.0).ln(),
        ),
        (
            Scenario::ChannelDecoheres,
            EnvironmentKind::ZeroTemperature,
            Some(ChannelKind::W),
            (5.0f64 / 3.0).ln(),
        ),
    ];
    let mut worst: f64 = 0.0;
    for (scenario, env, channel, exact) in targets {
        let gt_c = analysis::critical_time(scenario, env, channel)
            .expect("valid configuration")
            .as_finite()
            .expect("finite crossing");
        worst = worst.max((gt_c - exact).abs());
    }
    CheckResult::strict("critical-times-exact-expressions", worst, options.tol_root)
        .with_note("ln(3+2*sqrt(2)), ln(1+sqrt(2)), ln((3+sqrt(5))/2), ln(5/3)")
}

fn check_critical_times_numeric() -> CheckResult {
    let ghz = analysis::critical_time(
        Scenario::ChannelDecoheres,
        EnvironmentKind::InfiniteTemperature,
        Some(ChannelKind::Ghz),
    )
    .expect("valid configuration")
    .as_finite()
    .expect("finite crossing");
    let w = analysis::critical_time(
        Scenario::ChannelDecoheres,
        EnvironmentKind::InfiniteTemperature,
        Some(ChannelKind::W),
    )
    .expect("valid configuration")
    .as_finite()
    .expect("finite crossing");
    let worst = (ghz - 0.3331).abs().max((w - 0.4615).abs());
    CheckResult::strict("critical-times-quoted-numerics", worst, tol::QUOTED_4DP)
        .with_note("0.3331 (ghz) and 0.4615 (w) at infinite temperature")
}

fn check_critical_times_dephasing() -> CheckResult {
    let all_infinite = [
        (Scenario::InputDecoheres, None),
        (Scenario::ChannelDecoheres, Some(ChannelKind::Ghz)),
        (Scenario::ChannelDecoheres, Some(ChannelKind::W)),
    ]
    .into_iter()
    .all(|(scenario, channel)| {
        analysis::critical_time(scenario, EnvironmentKind::Dephasing, channel)
            .expect("valid configuration")
            == CriticalValue::Infinite
    });
    CheckResult {
        name: "critical-times-dephasing-infinite".to_string(),
        passed: all_infinite,
        informational: false,
        deviation: if all_infinite { 0.0 } else { f64::INFINITY },
        tolerance: 0.0,
        note: Some("all three dephasing configurations stay above 2/3".to_string()),
    }
}

fn check_w_average_minimum() -> CheckResult {
    let gt_min = (10.0f64 / 3.0).ln();
    let at_min = average_fidelity_closed(
        Scenario::ChannelDecoheres,
        EnvironmentKind::ZeroTemperature,
        Some(ChannelKind::W),
        gt_min,
    )
    .expect("valid configuration");
    CheckResult::strict(
        "w-zero-temperature-average-minimum",
        (at_min - 71.0 / 120.0).abs(),
        1e-9,
    )
    .with_note("71/120 at gt = ln(10/3)")
}

fn check_w_dephasing_asymptote() -> CheckResult {
    let late = average_fidelity_closed(
        Scenario::ChannelDecoheres,
        EnvironmentKind::Dephasing,
        Some(ChannelKind::W),
        30.0,
    )
    .expect("valid configuration");
    CheckResult::strict(
        "w-dephasing-average-asymptote",
        (late - 17.0 / 24.0).abs(),
        1e-9,
    )
    .with_note("17/24 as gt grows")
}

fn check_dephasing_bounds() -> CheckResult {
    // Margin above the classical benchmark must stay positive on a grid
    // where it is representable (beyond ~gt = 20 the GHZ margin underflows
    // below the f64 resolution of 2/3).
    let mut min_margin = f64::INFINITY;
    for gt in [0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0] {
        for (scenario, channel) in [
            (Scenario::InputDecoheres, None),
            (Scenario::ChannelDecoheres, Some(ChannelKind::Ghz)),
            (Scenario::ChannelDecoheres, Some(ChannelKind::W)),
        ] {
            let f = average_fidelity_closed(scenario, EnvironmentKind::Dephasing, channel, gt)
                .expect("valid configuration");
            min_margin = min_margin.min(f - 2.0 / 3.0);
        }
    }
    // The W channel obeys the stronger bound ≥ 17/24.
    for gt in [0.25, 1.0, 5.0, 20.0] {
        let f = average_fidelity_closed(
            Scenario::ChannelDecoheres,
            EnvironmentKind::Dephasing,
            Some(ChannelKind::W),
            gt,
        )
        .expect("valid configuration");
        min_margin = min_margin.min(f - 17.0 / 24.0);
    }
    CheckResult {
        name: "dephasing-average-lower-bounds".to_string(),
        passed: min_margin > 0.0,
        informational: false,
        deviation: (-min_margin).max(0.0),
        tolerance: 0.0,
        note: Some("averages stay above 2/3; W stays above 17/24".to_string()),
    }
}

fn check_monotonicity_switch_ghz() -> CheckResult {
    let switch = analysis::monotonicity_switch(ChannelKind::Ghz).expect("switch exists");
    CheckResult::strict(
        "monotonicity-switch-ghz",
        (switch - 0.3739).abs(),
        tol::QUOTED_4DP,
    )
    .with_note("equator-favored to pole-favored near gt = 0.3739")
}

fn check_monotonicity_switch_w(options: &ValidateOptions) -> CheckResult {
    let switch = analysis::monotonicity_switch(ChannelKind::W).expect("switch exists");
    CheckResult::strict(
        "monotonicity-switch-w",
        (switch - 2.0f64.ln()).abs(),
        options.tol_root,
    )
    .with_note("exactly ln 2")
}

fn check_zero_temperature_asymptote() -> CheckResult {
    let mut worst: f64 = 0.0;
    for channel in ChannelKind::ALL {
        let late = average_fidelity_closed(
            Scenario::ChannelDecoheres,
            EnvironmentKind::ZeroTemperature,
            Some(channel),
            20.0,
        )
        .expect("valid configuration");
        worst = worst.max((late - 2.0 / 3.0).abs());
    }
    CheckResult::strict("zero-temperature-average-asymptote", worst, 1e-8)
        .with_note("both channels decay to 2/3 by gt = 20")
}

fn check_channel_ordering() -> CheckResult {
    let avg = |env, channel| {
        average_fidelity_closed(Scenario::ChannelDecoheres, env, Some(channel), 0.5)
            .expect("valid configuration")
    };
    let margins = [
        avg(EnvironmentKind::ZeroTemperature, ChannelKind::Ghz)
            - avg(EnvironmentKind::ZeroTemperature, ChannelKind::W),
        avg(EnvironmentKind::InfiniteTemperature, ChannelKind::W)
            - avg(EnvironmentKind::InfiniteTemperature, ChannelKind::Ghz),
        avg(EnvironmentKind::Dephasing, ChannelKind::W)
            - avg(EnvironmentKind::Dephasing, ChannelKind::Ghz),
    ];
    let min_margin = margins.into_iter().fold(f64::INFINITY, f64::min);
    CheckResult {
        name: "channel-ordering-at-half-lifetime".to_string(),
        passed: min_margin > 0.0,
        informational: false,
        deviation: (-min_margin).max(0.0),
        tolerance: 0.0,
        note: Some(
            "gt = 0.5: GHZ leads at zero temperature; W leads at infinite temperature \
             and under dephasing"
                .to_string(),
        ),
    }
}

fn check_robustness_crossovers() -> CheckResult {
    let mut worst: f64 = 0.0;
    let mut structure_ok = true;

    match analysis::robustness_crossover(EnvironmentKind::ZeroTemperature, 0.5)
        .expect("valid configuration")
        .kind
    {
        CrossoverKind::Empty => {}
        _ => structure_ok = false,
    }
    match analysis::robustness_crossover(EnvironmentKind::InfiniteTemperature, 0.5)
        .expect("valid configuration")
        .kind
    {
        CrossoverKind::Interval {
            theta_low_over_pi,
            theta_high_over_pi,
        } => {
            worst = worst
                .max((theta_low_over_pi - 0.1418).abs())
                .max((theta_high_over_pi - 0.8582).abs());
        }
        _ => structure_ok = false,
    }
    match analysis::robustness_crossover(EnvironmentKind::Dephasing, 0.5)
        .expect("valid configuration")
        .kind
    {
        CrossoverKind::Interval {
            theta_low_over_pi,
            theta_high_over_pi,
        } => {
            worst = worst
                .max((theta_low_over_pi - 0.2216).abs())
                .max((theta_high_over_pi - 0.7784).abs());
        }
        _ => structure_ok = false,
    }

    CheckResult {
        name: "robustness-crossovers-at-half-lifetime".to_string(),
        passed: structure_ok && worst <= tol::QUOTED_4DP,
        informational: false,
        deviation: if structure_ok { worst } else { f64::INFINITY },
        tolerance: tol::QUOTED_4DP,
        note: Some(
            "zero temperature: GHZ everywhere; infinite temperature: W on (0.1418, 0.8582)pi; \
             dephasing: W on (0.2216, 0.7784)pi"
                .to_string(),
        ),
    }
}

fn check_phi_independence(options: &ValidateOptions) -> CheckResult {
    let settings = analysis::SimSettings {
        gamma_dt: options.gamma_dt,
    };
    let mut worst: f64 = 0.0;
    for env in EnvironmentKind::ALL {
        let mut values = Vec::new();
        for phi in [0.0, 1.3, 2.6, 5.2] {
            let f = analysis::fidelity_simulated(
                Scenario::ChannelDecoheres,
                env,
                Some(ChannelKind::W),
                PureStateAngles::new(1.1, phi).expect("valid angles"),
                0.5,
                settings,
            )
            .expect("valid configuration");
            values.push(f);
        }
        let spread = values.iter().cloned().fold(f64::MIN, f64::max)
            - values.iter().cloned().fold(f64::MAX, f64::min);
        worst = worst.max(spread);
    }
    CheckResult::strict("phi-independence", worst, tol::PHI_INDEPENDENCE)
        .with_note("simulated fidelity spread across azimuths at fixed theta")
}

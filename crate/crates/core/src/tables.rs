// Copyright 2026 ghzw-teleport Contributors
// SPDX-License-Identifier: Apache-2.0

//! Deterministic CSV sweeps: the data behind fidelity-versus-θ and
//! average-fidelity-versus-γt curves, plus the critical-time catalog.
//!
//! Output contract (shared with the `ghzw-teleport` binary): numbers are
//! printed with 12 significant digits, '.' as the decimal separator, ',' as
//! the field separator, and '\n' as the line terminator. Rendering the same
//! spec twice yields byte-identical output — no locale, time, or pointer
//! dependence anywhere.
//!
//! Column layouts:
//!
//! | command | method | columns |
//! |---|---|---|
//! | time sweep (average) | closed | `gt, f_av_closed` |
//! | time sweep (average) | sim | `gt, f_av_quadrature` |
//! | time sweep (average) | both | `gt, f_av_closed, f_av_quadrature` |
//! | time sweep (average, both-decohere) | sim | `gt, f_av_sim` |
//! | time sweep (fixed θ) | closed / sim / both | `gt, f_closed` / `gt, f_sim` / `gt, f_closed, f_sim` |
//! | θ sweep (channel-decoheres) | closed or sim | `theta_over_pi, f_ghz, f_w` |
//! | θ sweep (channel-decoheres) | both | `theta_over_pi, f_ghz_closed, f_ghz_sim, f_w_closed, f_w_sim` |
//! | θ sweep (input-decoheres) | closed or sim | `theta_over_pi, f` |
//! | θ sweep (input-decoheres) | both | `theta_over_pi, f_closed, f_sim` |
//!
//! For the average time sweep, `sim` means the Gauss–Legendre quadrature of
//! the closed-form fidelity (the numerical route to the angular average);
//! the fixed-θ time sweep's `sim` column is the full RK4 + protocol
//! pipeline. The both-decohere scenario has no closed form, so it only
//! supports `sim` and its output carries an explanatory notice.

use crate::analysis::{self, CriticalValue};
use crate::decoherence::{self, EnvironmentKind};
use crate::error::{Error, Result};
use crate::states::{input_state, DensityMatrix, PureStateAngles};
use crate::teleport::{self, ChannelKind, Scenario};

/// Number of significant digits in every numeric CSV cell.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Formats `x` with `sig` significant digits in plain decimal notation
/// ('.' separator, no exponent) for the magnitude range this crate emits;
/// falls back to scientific notation outside [1e−4, 1e15). `0` renders as
/// `0.` followed by `sig − 1` zeros.
pub fn format_significant(x: f64, sig: usize) -> String {
    assert!(sig >= 1, "at least one significant digit");
    assert!(x.is_finite(), "CSV cells must be finite");
    if x == 0.0 {
        return format!("{:.*}", sig - 1, 0.0);
    }
    let magnitude = {
        let mut m = x.abs().log10().floor() as i32;
        // log10+floor can misplace the decade right at powers of ten;
        // correct by direct comparison.
        if x.abs() / 10f64.powi(m) >= 10.0 {
            m += 1;
        } else if x.abs() / 10f64.powi(m) < 1.0 {
            m -= 1;
        }
        m
    };
    if !(-4..15).contains(&magnitude) {
        return format!("{:.*e}", sig - 1, x);
    }
    let decimals = (sig as i32 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// A rectangular table rendered as CSV.
#[derive(Debug, Clone)]
pub struct CsvTable {
    /// Column names, in order.
    pub header: Vec<String>,
    /// Data rows; every row has exactly `header.len()` cells.
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push_row(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len(), "rows must be rectangular");
        self.rows.push(row);
    }

    /// Renders the table: header line, then one line per row, each
    /// terminated by '\n'.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Which computation route(s) a sweep reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMethod {
    /// Closed-form catalog only.
    Closed,
    /// Numerical route only (quadrature for averages, RK4 pipeline for
    /// θ-resolved values).
    Sim,
    /// Both routes side by side.
    Both,
}

impl SweepMethod {
    /// CLI token ("closed", "sim", "both").
    pub fn token(&self) -> &'static str {
        match self {
            SweepMethod::Closed => "closed",
            SweepMethod::Sim => "sim",
            SweepMethod::Both => "both",
        }
    }
}

/// Parameters of an average-fidelity (or fixed-θ fidelity) versus γt sweep.
#[derive(Debug, Clone, Copy)]
pub struct TimeSweepSpec {
    /// Which subsystem decoheres.
    pub scenario: Scenario,
    /// Environment.
    pub env: EnvironmentKind,
    /// Channel; required unless the scenario is input-decoheres.
    pub channel: Option<ChannelKind>,
    /// Upper end of the γt grid (lower end is 0).
    pub gt_max: f64,
    /// Number of grid points, ≥ 2, endpoints included.
    pub points: usize,
    /// When set, sweep the θ-resolved fidelity at this fixed θ/π (φ = 0)
    /// instead of the angular average.
    pub theta_over_pi: Option<f64>,
    /// Route selection.
    pub method: SweepMethod,
    /// Integrator settings for simulated columns.
    pub settings: analysis::SimSettings,
}

/// Parameters of a fidelity-versus-θ sweep at fixed γt.
#[derive(Debug, Clone, Copy)]
pub struct ThetaSweepSpec {
    /// Which subsystem decoheres. The channel-decoheres (and both-decohere)
    /// sweeps report both channels side by side; input-decoheres is
    /// channel-independent.
    pub scenario: Scenario,
    /// Environment.
    pub env: EnvironmentKind,
    /// Fixed dimensionless time.
    pub gt: f64,
    /// Number of θ/π grid points on [0, 1], ≥ 2, endpoints included.
    pub points: usize,
    /// Route selection.
    pub method: SweepMethod,
    /// Integrator settings for simulated columns.
    pub settings: analysis::SimSettings,
}

/// A rendered sweep plus an optional advisory notice (printed to stderr by
/// the CLI, never mixed into the CSV).
#[derive(Debug, Clone)]
pub struct SweepOutput {
    /// The CSV table.
    pub table: CsvTable,
    /// Advisory message, e.g. that the both-decohere scenario has no
    /// closed-form reference.
    pub notice: Option<String>,
}

const BOTH_DECOHERE_NOTICE: &str =
    "note: no closed-form reference exists for scenario=both; values are simulated only";

fn usage(message: impl Into<String>) -> Error {
    Error::UnsupportedConfiguration(message.into())
}

fn check_points(points: usize) -> Result<()> {
    if points < 2 {
        return Err(usage(format!("points must be at least 2, got {points}")));
    }
    Ok(())
}

fn check_scenario_channel(scenario: Scenario, channel: Option<ChannelKind>) -> Result<()> {
    match scenario {
        Scenario::InputDecoheres => {
            if channel.is_some() {
                return Err(usage(
                    "scenario=input is channel-independent; omit --channel",
                ));
            }
        }
        Scenario::ChannelDecoheres | Scenario::BothDecohere => {
            if channel.is_none() {
                return Err(usage(format!(
                    "scenario={} requires --channel (ghz or w)",
                    scenario.token()
                )));
            }
        }
    }
    Ok(())
}

fn check_both_method(scenario: Scenario, method: SweepMethod) -> Result<()> {
    if scenario == Scenario::BothDecohere && method != SweepMethod::Sim {
        return Err(usage(format!(
            "scenario=both supports only --method sim (no closed form exists), got --method {}",
            method.token()
        )));
    }
    Ok(())
}

fn time_grid(gt_max: f64, points: usize) -> Vec<f64> {
    (0..points)
        .map(|i| gt_max * i as f64 / (points - 1) as f64)
        .collect()
}

// θ-resolved fidelities along a γt grid via one continuous RK4 run per
// decohering subsystem (checkpointed, so the cost is a single integration).
fn pipeline_fidelities_over_time(
    scenario: Scenario,
    env: EnvironmentKind,
    channel: Option<ChannelKind>,
    angles: PureStateAngles,
    times: &[f64],
    settings: analysis::SimSettings,
) -> Result<Vec<f64>> {
    let resolved = match scenario {
        Scenario::InputDecoheres => channel.unwrap_or(ChannelKind::Ghz),
        _ => channel.expect("validated: channel present"),
    };
    let protocol = teleport::protocol_for(resolved);
    let psi = input_state(angles);
    let rho_in_pure = DensityMatrix::from_pure(&psi);
    let pristine = teleport::pristine_channel(resolved);

    let channel_states: Option<Vec<DensityMatrix>> = match scenario {
        Scenario::InputDecoheres => None,
        Scenario::ChannelDecoheres | Scenario::BothDecohere => Some(
            decoherence::evolve_rk4_checkpoints(&pristine, env, 1.0, times, settings.gamma_dt)?,
        ),
    };
    let input_states: Option<Vec<DensityMatrix>> = match scenario {
        Scenario::ChannelDecoheres => None,
        Scenario::InputDecoheres | Scenario::BothDecohere => Some(
            decoherence::evolve_rk4_checkpoints(
                &rho_in_pure,
                env,
                1.0,
                times,
                settings.gamma_dt,
            )?,
        ),
    };

    times
        .iter()
        .enumerate()
        .map(|(i, _)| {
            let rho_in = input_states.as_ref().map_or(&rho_in_pure, |s| &s[i]);
            let rho_channel = channel_states.as_ref().map_or(&pristine, |s| &s[i]);
            let out = teleport::teleport_output(rho_in, rho_channel, &protocol)?;
            Ok(crate::states::fidelity_against_pure(&psi, &out))
        })
        .collect()
}

// Angular-average fidelities along a γt grid for the both-decohere
// scenario: checkpointed RK4 for the channel and for each quadrature input.
fn simulated_averages_over_time(
    env: EnvironmentKind,
    channel: ChannelKind,
    times: &[f64],
    settings: analysis::SimSettings,
) -> Result<Vec<f64>> {
    let protocol = teleport::protocol_for(channel);
    let channel_states = decoherence::evolve_rk4_checkpoints(
        &teleport::pristine_channel(channel),
        env,
        1.0,
        times,
        settings.gamma_dt,
    )?;
    let mut totals = vec![0.0; times.len()];
    let mut weight_total = 0.0;
    for (u, w) in crate::numerics::gauss_legendre_nodes(analysis::DEFAULT_QUADRATURE_NODES) {
        for phi in analysis::PHI_SAMPLES {
            let angles = PureStateAngles::new(u.acos(), phi)?;
            let psi = input_state(angles);
            let input_states = decoherence::evolve_rk4_checkpoints(
                &DensityMatrix::from_pure(&psi),
                env,
                1.0,
                times,
                settings.gamma_dt,
            )?;
            for (i, rho_in) in input_states.iter().enumerate() {
                let out = teleport::teleport_output(rho_in, &channel_states[i], &protocol)?;
                totals[i] += w * crate::states::fidelity_against_pure(&psi, &out);
            }
            weight_total += w;
        }
    }
    Ok(totals.into_iter().map(|t| t / weight_total).collect())
}

/// Average-fidelity (or fixed-θ fidelity) versus γt sweep.
///
/// The γt grid spans [0, `gt_max`] with `points` equally spaced values;
/// the first CSV column is γt, strictly increasing.
pub fn sweep_time(spec: &TimeSweepSpec) -> Result<SweepOutput> {
    check_points(spec.points)?;
    check_scenario_channel(spec.scenario, spec.channel)?;
    check_both_method(spec.scenario, spec.method)?;
    if !spec.gt_max.is_finite() || spec.gt_max <= 0.0 {
        return Err(usage(format!(
            "gt-max must be positive and finite, got {}",
            spec.gt_max
        )));
    }
    if let Some(t) = spec.theta_over_pi {
        if !t.is_finite() || !(0.0..=1.0).contains(&t) {
            return Err(usage(format!("theta-over-pi must lie in [0, 1], got {t}")));
        }
    }

    let times = time_grid(spec.gt_max, spec.points);
    let notice = (spec.scenario == Scenario::BothDecohere).then(|| BOTH_DECOHERE_NOTICE.to_string());

    let mut table = match (spec.theta_over_pi, spec.scenario, spec.method) {
        // Fixed-θ mode.
        (Some(_), Scenario::BothDecohere, _) => CsvTable::new(&["gt", "f_sim"]),
        (Some(_), _, SweepMethod::Closed) => CsvTable::new(&["gt", "f_closed"]),
        (Some(_), _, SweepMethod::Sim) => CsvTable::new(&["gt", "f_sim"]),
        (Some(_), _, SweepMethod::Both) => CsvTable::new(&["gt", "f_closed", "f_sim"]),
        // Angular-average mode.
        (None, Scenario::BothDecohere, _) => CsvTable::new(&["gt", "f_av_sim"]),
        (None, _, SweepMethod::Closed) => CsvTable::new(&["gt", "f_av_closed"]),
        (None, _, SweepMethod::Sim) => CsvTable::new(&["gt", "f_av_quadrature"]),
        (None, _, SweepMethod::Both) => {
            CsvTable::new(&["gt", "f_av_closed", "f_av_quadrature"])
        }
    };

    if let Some(theta_over_pi) = spec.theta_over_pi {
        let theta = theta_over_pi * std::f64::consts::PI;
        let angles = PureStateAngles::new(theta, 0.0)?;
        let closed: Option<Vec<f64>> = match (spec.scenario, spec.method) {
            (Scenario::BothDecohere, _) | (_, SweepMethod::Sim) => None,
            _ => Some(
                times
                    .iter()
                    .map(|&gt| {
                        analysis::fidelity_closed(
                            spec.scenario,
                            spec.env,
                            spec.channel,
                            theta,
                            gt,
                        )
                    })
                    .collect::<Result<_>>()?,
            ),
        };
        let simulated: Option<Vec<f64>> = match (spec.scenario, spec.method) {
            (Scenario::BothDecohere, _) | (_, SweepMethod::Sim) | (_, SweepMethod::Both) => {
                Some(pipeline_fidelities_over_time(
                    spec.scenario,
                    spec.env,
                    spec.channel,
                    angles,
                    &times,
                    spec.settings,
                )?)
            }
            _ => None,
        };
        for (i, &gt) in times.iter().enumerate() {
            let mut row = vec![format_significant(gt, SIGNIFICANT_DIGITS)];
            if let Some(c) = &closed {
                row.push(format_significant(c[i], SIGNIFICANT_DIGITS));
            }
            if let Some(s) = &simulated {
                row.push(format_significant(s[i], SIGNIFICANT_DIGITS));
            }
            table.push_row(row);
        }
    } else {
        let averages_sim: Option<Vec<f64>> = if spec.scenario == Scenario::BothDecohere {
            Some(simulated_averages_over_time(
                spec.env,
                spec.channel.expect("validated: channel present"),
                &times,
                spec.settings,
            )?)
        } else {
            None
        };
        for (i, &gt) in times.iter().enumerate() {
            let mut row = vec![format_significant(gt, SIGNIFICANT_DIGITS)];
            if let Some(sim) = &averages_sim {
                row.push(format_significant(sim[i], SIGNIFICANT_DIGITS));
            } else {
                if matches!(spec.method, SweepMethod::Closed | SweepMethod::Both) {
                    let f = analysis::average_fidelity_closed(
                        spec.scenario,
                        spec.env,
                        spec.channel,
                        gt,
                    )?;
                    row.push(format_significant(f, SIGNIFICANT_DIGITS));
                }
                if matches!(spec.method, SweepMethod::Sim | SweepMethod::Both) {
                    let f = analysis::average_fidelity_quadrature(
                        spec.scenario,
                        spec.env,
                        spec.channel,
                        gt,
                        analysis::DEFAULT_QUADRATURE_NODES,
                    )?;
                    row.push(format_significant(f, SIGNIFICANT_DIGITS));
                }
            }
            table.push_row(row);
        }
    }

    Ok(SweepOutput { table, notice })
}

/// Fidelity versus θ/π sweep at fixed γt.
///
/// Channel-decoheres (and both-decohere) tables carry one column per
/// channel; input-decoheres is channel-independent and carries a single
/// fidelity column. φ is fixed to 0 for simulated cells (the fidelity is
/// φ-independent; the validation suite checks that).
pub fn sweep_theta(spec: &ThetaSweepSpec) -> Result<SweepOutput> {
    check_points(spec.points)?;
    check_both_method(spec.scenario, spec.method)?;
    if !spec.gt.is_finite() || spec.gt < 0.0 {
        return Err(usage(format!(
            "gt must be non-negative and finite, got {}",
            spec.gt
        )));
    }

    let fractions: Vec<f64> = (0..spec.points)
        .map(|i| i as f64 / (spec.points - 1) as f64)
        .collect();
    let notice = (spec.scenario == Scenario::BothDecohere).then(|| BOTH_DECOHERE_NOTICE.to_string());

    // Column plan: per reported channel, closed and/or sim series.
    let channels: Vec<Option<ChannelKind>> = match spec.scenario {
        Scenario::InputDecoheres => vec![None],
        Scenario::ChannelDecoheres | Scenario::BothDecohere => {
            vec![Some(ChannelKind::Ghz), Some(ChannelKind::W)]
        }
    };
    let want_closed =
        spec.scenario != Scenario::BothDecohere && spec.method != SweepMethod::Sim;
    let want_sim = spec.scenario == Scenario::BothDecohere || spec.method != SweepMethod::Closed;

    let mut header: Vec<String> = vec!["theta_over_pi".to_string()];
    for channel in &channels {
        let base = match channel {
            None => "f".to_string(),
            Some(c) => format!("f_{}", c.token()),
        };
        if want_closed && want_sim {
            header.push(format!("{base}_closed"));
            header.push(format!("{base}_sim"));
        } else {
            header.push(base);
        }
    }
    let mut table = CsvTable {
        header,
        rows: Vec::new(),
    };

    // Simulated series: evolve each decohering subsystem once per need.
    // The channel states do not depend on θ, so they are shared across rows.
    let mut sim_series: Vec<Vec<f64>> = Vec::new();
    if want_sim {
        for channel in &channels {
            let mut series = Vec::with_capacity(spec.points);
            let resolved = channel.unwrap_or(ChannelKind::Ghz);
            let protocol = teleport::protocol_for(resolved);
            let rho_channel = match spec.scenario {
                Scenario::InputDecoheres => teleport::pristine_channel(resolved),
                _ => analysis::simulated_channel_state(resolved, spec.env, spec.gt, spec.settings)?,
            };
            for &fraction in &fractions {
                let angles = PureStateAngles::new(fraction * std::f64::consts::PI, 0.0)?;
                let psi = input_state(angles);
                let rho_in = match spec.scenario {
                    Scenario::ChannelDecoheres => DensityMatrix::from_pure(&psi),
                    _ => analysis::simulated_input_state(angles, spec.env, spec.gt, spec.settings)?,
                };
                let out = teleport::teleport_output(&rho_in, &rho_channel, &protocol)?;
                series.push(crate::states::fidelity_against_pure(&psi, &out));
            }
            sim_series.push(series);
        }
    }

    for (i, &fraction) in fractions.iter().enumerate() {
        let theta = fraction * std::f64::consts::PI;
        let mut row = vec![format_significant(fraction, SIGNIFICANT_DIGITS)];
        for (c_idx, channel) in channels.iter().enumerate() {
            if want_closed {
                let f = analysis::fidelity_closed(
                    spec.scenario,
                    spec.env,
                    *channel,
                    theta,
                    spec.gt,
                )?;
                row.push(format_significant(f, SIGNIFICANT_DIGITS));
            }
            if want_sim {
                row.push(format_significant(sim_series[c_idx][i], SIGNIFICANT_DIGITS));
            }
        }
        table.push_row(row);
    }

    Ok(SweepOutput { table, notice })
}

// Exact-expression labels for the critical times that have one.
fn closed_form_label(
    scenario: Scenario,
    channel: Option<ChannelKind>,
    env: EnvironmentKind,
) -> &'static str {
    match (scenario, channel, env) {
        (Scenario::InputDecoheres, None, EnvironmentKind::ZeroTemperature) => "ln(3+2*sqrt(2))",
        (Scenario::InputDecoheres, None, EnvironmentKind::InfiniteTemperature) => "ln(1+sqrt(2))",
        (Scenario::ChannelDecoheres, Some(ChannelKind::Ghz), EnvironmentKind::ZeroTemperature) => {
            "ln((3+sqrt(5))/2)"
        }
        (Scenario::ChannelDecoheres, Some(ChannelKind::W), EnvironmentKind::ZeroTemperature) => {
            "ln(5/3)"
        }
        _ => "",
    }
}

/// The critical-time catalog as a CSV table: nine rows (input scenario plus
/// both channels, each under the three environments) with columns
/// `scenario, channel, env, gt_c, closed_form`. `gt_c` is `inf` for the
/// dephasing rows; `closed_form` is an exact-expression label where one
/// exists and empty otherwise.
pub fn critical_times_table() -> CsvTable {
    let mut table = CsvTable::new(&["scenario", "channel", "env", "gt_c", "closed_form"]);
    for row in analysis::all_critical_times() {
        let gt_c = match row.gt_c {
            CriticalValue::Finite(v) => format_significant(v, SIGNIFICANT_DIGITS),
            CriticalValue::Infinite => "inf".to_string(),
        };
        table.push_row(vec![
            row.scenario.token().to_string(),
            row.channel.map_or("-".to_string(), |c| c.token().to_string()),
            row.env.token().to_string(),
            gt_c,
            closed_form_label(row.scenario, row.channel, row.env).to_string(),
        ]);
    }
    table
}

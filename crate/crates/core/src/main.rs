// Copyright 2026 ghzw-teleport Contributors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end: CSV sweeps, the critical-time catalog, and the
//! validation suite. All computation lives in the library; this binary only
//! parses arguments, dispatches, and routes bytes.
//!
//! Exit codes: 0 success, 1 validation-suite failure or I/O error, 2 usage
//! error (bad flags or an unsupported flag combination).

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ghzw_teleport::analysis::{ChannelKind, Scenario, SimSettings};
use ghzw_teleport::decoherence::{EnvironmentKind, DEFAULT_GAMMA_DT};
use ghzw_teleport::tables::{
    self, SweepMethod, SweepOutput, ThetaSweepSpec, TimeSweepSpec,
};
use ghzw_teleport::validate::{self, ValidateOptions};
use ghzw_teleport::Error;

#[derive(Parser)]
#[command(
    name = "ghzw-teleport",
    version,
    about = "Teleportation fidelity toolkit for GHZ and W channels under Lindblad noise"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep fidelity (average, or θ-resolved via --theta-over-pi) over γt.
    SweepTime(SweepTimeArgs),
    /// Sweep fidelity over θ/π at fixed γt.
    SweepTheta(SweepThetaArgs),
    /// Print the catalog of critical times where the average crosses 2/3.
    CriticalTimes(CriticalTimesArgs),
    /// Run the self-validation suite.
    Validate(ValidateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ScenarioArg {
    /// Only the input qubit decoheres.
    Input,
    /// Only the three-qubit channel decoheres.
    Channel,
    /// Input and channel decohere together (simulation only).
    Both,
}

impl From<ScenarioArg> for Scenario {
    fn from(value: ScenarioArg) -> Self {
        match value {
            ScenarioArg::Input => Scenario::InputDecoheres,
            ScenarioArg::Channel => Scenario::ChannelDecoheres,
            ScenarioArg::Both => Scenario::BothDecohere,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ChannelArg {
    /// Three-qubit GHZ channel.
    Ghz,
    /// Three-qubit W channel.
    W,
}

impl From<ChannelArg> for ChannelKind {
    fn from(value: ChannelArg) -> Self {
        match value {
            ChannelArg::Ghz => ChannelKind::Ghz,
            ChannelArg::W => ChannelKind::W,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EnvArg {
    /// Zero-temperature amplitude damping.
    Zero,
    /// Infinite-temperature (symmetric raising/lowering) noise.
    Inf,
    /// Pure dephasing.
    Deph,
}

impl From<EnvArg> for EnvironmentKind {
    fn from(value: EnvArg) -> Self {
        match value {
            EnvArg::Zero => EnvironmentKind::ZeroTemperature,
            EnvArg::Inf => EnvironmentKind::InfiniteTemperature,
            EnvArg::Deph => EnvironmentKind::Dephasing,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    /// Closed-form catalog.
    Closed,
    /// Numerical route (quadrature averages; RK4 pipeline for θ-resolved values).
    Sim,
    /// Both routes side by side.
    Both,
}

impl From<MethodArg> for SweepMethod {
    fn from(value: MethodArg) -> Self {
        match value {
            MethodArg::Closed => SweepMethod::Closed,
            MethodArg::Sim => SweepMethod::Sim,
            MethodArg::Both => SweepMethod::Both,
        }
    }
}

#[derive(clap::Args)]
struct SweepTimeArgs {
    /// Which subsystem decoheres.
    #[arg(long)]
    scenario: ScenarioArg,
    /// Channel; required unless --scenario input.
    #[arg(long)]
    channel: Option<ChannelArg>,
    /// Environment.
    #[arg(long)]
    env: EnvArg,
    /// Upper end of the γt grid (lower end is 0).
    #[arg(long)]
    gt_max: f64,
    /// Number of grid points (≥ 2, endpoints included).
    #[arg(long)]
    points: usize,
    /// Fixed θ/π in [0, 1]; when omitted, the angular average is swept.
    #[arg(long)]
    theta_over_pi: Option<f64>,
    /// Computation route; defaults to closed (sim for --scenario both).
    #[arg(long)]
    method: Option<MethodArg>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Integrator step γ·Δt for simulated columns.
    #[arg(long, default_value_t = DEFAULT_GAMMA_DT)]
    gamma_dt: f64,
}

#[derive(clap::Args)]
struct SweepThetaArgs {
    /// Which subsystem decoheres; channel sweeps report both channels.
    #[arg(long)]
    scenario: ScenarioArg,
    /// Environment.
    #[arg(long)]
    env: EnvArg,
    /// Fixed dimensionless time γt.
    #[arg(long)]
    gt: f64,
    /// Number of θ/π grid points on [0, 1] (≥ 2, endpoints included).
    #[arg(long)]
    points: usize,
    /// Computation route; defaults to closed (sim for --scenario both).
    #[arg(long)]
    method: Option<MethodArg>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Integrator step γ·Δt for simulated columns.
    #[arg(long, default_value_t = DEFAULT_GAMMA_DT)]
    gamma_dt: f64,
}

#[derive(clap::Args)]
struct CriticalTimesArgs {
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct ValidateArgs {
    /// Tolerance for closed-form vs simulated agreement.
    #[arg(long, default_value_t = ghzw_teleport::tol::ORACLE)]
    tol_oracle: f64,
    /// Tolerance for quadrature vs closed-form averages.
    #[arg(long, default_value_t = ghzw_teleport::tol::AVERAGE)]
    tol_average: f64,
    /// Tolerance for root-finding targets with exact expressions.
    #[arg(long, default_value_t = ghzw_teleport::tol::ROOT)]
    tol_root: f64,
    /// Integrator step γ·Δt used throughout the suite.
    #[arg(long, default_value_t = DEFAULT_GAMMA_DT)]
    gamma_dt: f64,
}

/// Maps a library error to the documented exit code.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::UnsupportedConfiguration(_)
        | Error::AngleOutOfRange { .. }
        | Error::NonFinite(_) => 2,
        _ => 1,
    }
}

/// Writes rendered CSV to `--out` or stdout.
fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| format!("cannot write to stdout: {e}"))
        }
    }
}

fn emit_sweep(out: &Option<PathBuf>, output: &SweepOutput) -> Result<(), String> {
    if let Some(notice) = &output.notice {
        eprintln!("{notice}");
    }
    emit(out, &output.table.render())
}

/// Default route: closed forms, except the both-decohere scenario which has
/// no closed-form reference and therefore defaults to simulation.
fn default_method(scenario: Scenario) -> SweepMethod {
    match scenario {
        Scenario::BothDecohere => SweepMethod::Sim,
        _ => SweepMethod::Closed,
    }
}

fn run(cli: Cli) -> Result<u8, (u8, String)> {
    match cli.command {
        Command::SweepTime(args) => {
            let scenario = Scenario::from(args.scenario);
            let spec = TimeSweepSpec {
                scenario,
                env: args.env.into(),
                channel: args.channel.map(ChannelKind::from),
                gt_max: args.gt_max,
                points: args.points,
                theta_over_pi: args.theta_over_pi,
                method: args
                    .method
                    .map(SweepMethod::from)
                    .unwrap_or_else(|| default_method(scenario)),
                settings: SimSettings {
                    gamma_dt: args.gamma_dt,
                },
            };
            let output = tables::sweep_time(&spec)
                .map_err(|e| (exit_code_for(&e), e.to_string()))?;
            emit_sweep(&args.out, &output).map_err(|msg| (1, msg))?;
            Ok(0)
        }
        Command::SweepTheta(args) => {
            let scenario = Scenario::from(args.scenario);
            let spec = ThetaSweepSpec {
                scenario,
                env: args.env.into(),
                gt: args.gt,
                points: args.points,
                method: args
                    .method
                    .map(SweepMethod::from)
                    .unwrap_or_else(|| default_method(scenario)),
                settings: SimSettings {
                    gamma_dt: args.gamma_dt,
                },
            };
            let output = tables::sweep_theta(&spec)
                .map_err(|e| (exit_code_for(&e), e.to_string()))?;
            emit_sweep(&args.out, &output).map_err(|msg| (1, msg))?;
            Ok(0)
        }
        Command::CriticalTimes(args) => {
            emit(&args.out, &tables::critical_times_table().render())
                .map_err(|msg| (1, msg))?;
            Ok(0)
        }
        Command::Validate(args) => {
            let options = ValidateOptions {
                tol_oracle: args.tol_oracle,
                tol_average: args.tol_average,
                tol_root: args.tol_root,
                gamma_dt: args.gamma_dt,
            };
            let report = validate::run(&options);
            emit(&None, &report.render()).map_err(|msg| (1, msg))?;
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

// Copyright 2026 ghzw-teleport Contributors
// SPDX-License-Identifier: Apache-2.0

//! Critical times: where the average fidelity crosses the classical 2/3.
//!
//! Prints every (scenario, channel, environment) configuration with the
//! dimensionless time γt_c at which the angular-average fidelity drops to
//! the classical benchmark, alongside the exact expression where one
//! exists. Dephasing never crosses (the average stays above 2/3 forever),
//! reported as `inf`.
//!
//! Run with: `cargo run --example critical_times`

use ghzw_teleport::analysis::{all_critical_times, CriticalValue};

fn main() {
    println!(
        "{:<10} {:<8} {:<6} {:>16}   exact expression",
        "scenario", "channel", "env", "gt_c"
    );
    for entry in all_critical_times() {
        let channel = entry
            .channel
            .map(|c| c.token().to_string())
            .unwrap_or_else(|| "-".to_string());
        let value = match entry.gt_c {
            CriticalValue::Finite(gt) => format!("{gt:>16.12}"),
            CriticalValue::Infinite => format!("{:>16}", "inf"),
        };
        let exact = match (entry.scenario.token(), channel.as_str(), entry.env.token()) {
            ("input", _, "zero") => "ln(3+2*sqrt(2))",
            ("input", _, "inf") => "ln(1+sqrt(2))",
            ("channel", "ghz", "zero") => "ln((3+sqrt(5))/2)",
            ("channel", "w", "zero") => "ln(5/3)",
            _ => "",
        };
        println!(
            "{:<10} {:<8} {:<6} {value}   {exact}",
            entry.scenario.token(),
            channel,
            entry.env.token()
        );
    }
}

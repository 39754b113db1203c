// Copyright 2026 ghzw-teleport Contributors
// SPDX-License-Identifier: Apache-2.0

//! Which channel is more robust, and for which input states?
//!
//! For each environment and a range of γt, computes the θ-band where the
//! W channel beats the GHZ channel (closed forms, channel-decoheres scenario).
//! At zero temperature the band is empty — GHZ wins for every input state
//! at every γt > 0 — while the other environments always leave W a band
//! around the equator.
//!
//! Run with: `cargo run --example robustness_crossover`

use ghzw_teleport::analysis::{robustness_crossover, CrossoverKind};
use ghzw_teleport::decoherence::EnvironmentKind;

fn main() {
    for env in EnvironmentKind::ALL {
        println!("environment: {env}");
        println!("{:>6}   W-favored theta band", "gt");
        for gt in [0.1, 0.25, 0.5, 1.0, 2.0] {
            let crossover = robustness_crossover(env, gt).expect("closed forms");
            let band = match crossover.kind {
                CrossoverKind::Empty => "none (GHZ leads everywhere)".to_string(),
                CrossoverKind::Full => "all theta (W leads everywhere)".to_string(),
                CrossoverKind::Interval {
                    theta_low_over_pi,
                    theta_high_over_pi,
                } => format!(
                    "({theta_low_over_pi:.4}, {theta_high_over_pi:.4}) x pi"
                ),
            };
            println!("{gt:>6.2}   {band}");
        }
        println!();
    }
}

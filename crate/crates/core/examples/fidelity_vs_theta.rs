// Copyright 2026 ghzw-teleport Contributors
// SPDX-License-Identifier: Apache-2.0

//! Fidelity versus input-state latitude θ at fixed γt.
//!
//! At γt = 0.5 the GHZ and W channels trade places depending on θ and the
//! environment: at zero temperature GHZ wins for every θ, while at infinite
//! temperature (and under dephasing) W wins on a band around the equator.
//! This example prints the closed-form fidelities side by side.
//!
//! Run with: `cargo run --example fidelity_vs_theta`

use ghzw_teleport::analysis::{fidelity_closed, ChannelKind, Scenario};
use ghzw_teleport::decoherence::EnvironmentKind;

const PI: f64 = std::f64::consts::PI;

fn main() {
    let gt = 0.5;
    for env in EnvironmentKind::ALL {
        println!("environment: {env}, gt = {gt}");
        println!("{:>10} {:>14} {:>14} {:>9}", "theta/pi", "F (GHZ)", "F (W)", "leader");
        for j in 0..=10 {
            let theta = PI * j as f64 / 10.0;
            let f = |channel| {
                fidelity_closed(Scenario::ChannelDecoheres, env, Some(channel), theta, gt)
                    .expect("closed form")
            };
            let (f_ghz, f_w) = (f(ChannelKind::Ghz), f(ChannelKind::W));
            let leader = if f_ghz >= f_w { "GHZ" } else { "W" };
            println!(
                "{:>10.2} {f_ghz:>14.9} {f_w:>14.9} {leader:>9}",
                theta / PI
            );
        }
        println!();
    }
}

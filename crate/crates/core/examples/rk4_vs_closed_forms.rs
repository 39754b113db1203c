// Copyright 2026 ghzw-teleport Contributors
// SPDX-License-Identifier: Apache-2.0

//! Integrator cross-check: RK4 evolution versus closed-form states.
//!
//! Evolves a single qubit, the GHZ channel, and the W channel under each
//! of the three environments and reports the largest entrywise deviation
//! from the closed-form density matrices over γt ∈ [0.1, 2].
//!
//! Run with: `cargo run --example rk4_vs_closed_forms`

use ghzw_teleport::analysis::ChannelKind;
use ghzw_teleport::decoherence::{self, EnvironmentKind, DEFAULT_GAMMA_DT};
use ghzw_teleport::linalg;
use ghzw_teleport::states::{input_state, DensityMatrix, PureStateAngles};
use ghzw_teleport::teleport;

const PI: f64 = std::f64::consts::PI;

fn main() {
    let times: Vec<f64> = (1..=20).map(|i| i as f64 * 0.1).collect();

    println!(
        "{:<14} {:>8} {:>8} {:>8}",
        "state family", "zero", "inf", "deph"
    );

    // Single qubit with both population imbalance and coherence.
    let angles = PureStateAngles::new(PI / 3.0, 0.9).expect("angles in range");
    let rho0 = DensityMatrix::from_pure(&input_state(angles));
    let mut row = format!("{:<14}", "single qubit");
    for env in EnvironmentKind::ALL {
        let evolved = decoherence::evolve_rk4_checkpoints(&rho0, env, 1.0, &times, DEFAULT_GAMMA_DT)
            .expect("evolution");
        let mut worst: f64 = 0.0;
        for (rho, &gt) in evolved.iter().zip(&times) {
            let closed = decoherence::closed_single_qubit(&rho0, env, gt).expect("dim 2");
            worst = worst.max(linalg::max_abs_diff(rho.matrix(), closed.matrix()));
        }
        row.push_str(&format!(" {worst:>8.1e}"));
    }
    println!("{row}");

    for channel in ChannelKind::ALL {
        let rho0 = teleport::pristine_channel(channel);
        let mut row = format!("{:<14}", format!("{channel} channel"));
        for env in EnvironmentKind::ALL {
            let evolved =
                decoherence::evolve_rk4_checkpoints(&rho0, env, 1.0, &times, DEFAULT_GAMMA_DT)
                    .expect("evolution");
            let mut worst: f64 = 0.0;
            for (rho, &gt) in evolved.iter().zip(&times) {
                let closed = match channel {
                    ChannelKind::Ghz => decoherence::closed_ghz(env, gt),
                    ChannelKind::W => decoherence::closed_w(env, gt),
                };
                worst = worst.max(linalg::max_abs_diff(rho.matrix(), closed.matrix()));
            }
            row.push_str(&format!(" {worst:>8.1e}"));
        }
        println!("{row}");
    }

    println!("\nmax |RK4 − closed| over 20 checkpoints, step gamma*dt = {DEFAULT_GAMMA_DT:.0e}");
}

// Copyright 2026 ghzw-teleport Contributors
// SPDX-License-Identifier: Apache-2.0

//! Exact teleportation through pristine channels.
//!
//! Sends a handful of input states |φ⟩ = cos(θ/2)e^{iφ/2}|0⟩ +
//! sin(θ/2)e^{−iφ/2}|1⟩ through the noiseless GHZ and W protocols and
//! prints the output fidelity, which is 1 to machine precision for every
//! input.
//!
//! Run with: `cargo run --example noiseless_teleportation`

use ghzw_teleport::analysis::ChannelKind;
use ghzw_teleport::states::PureStateAngles;
use ghzw_teleport::teleport;

const PI: f64 = std::f64::consts::PI;

fn main() {
    let samples = [
        (0.0, 0.0),
        (PI / 4.0, 0.3),
        (PI / 2.0, 0.0),
        (PI / 2.0, PI / 2.0),
        (2.0 * PI / 3.0, 4.0),
        (PI, 0.0),
    ];

    println!("{:>10} {:>10} {:>22} {:>22}", "theta/pi", "phi", "F (GHZ)", "F (W)");
    for (theta, phi) in samples {
        let angles = PureStateAngles::new(theta, phi).expect("angles in range");
        let mut row = format!("{:>10.4} {:>10.4}", theta / PI, phi);
        for channel in ChannelKind::ALL {
            let protocol = teleport::protocol_for(channel);
            let rho_channel = teleport::pristine_channel(channel);
            let f = teleport::teleport_fidelity(angles, &rho_channel, &protocol)
                .expect("pristine pipeline");
            row.push_str(&format!(" {f:>22.16}"));
        }
        println!("{row}");
    }
}

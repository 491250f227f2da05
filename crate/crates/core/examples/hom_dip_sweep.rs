// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Coincidence probability as the photons become distinguishable.
//!
//!     cargo run --release --example hom_dip_sweep [-- out.csv]

use boson_jw::hom::{sweep_dip, SweepParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = sweep_dip(SweepParams::default())?;
    match std::env::args().nth(1) {
        Some(path) => {
            std::fs::write(&path, curve.to_csv())?;
            println!("wrote {} points to {path}", curve.len());
        }
        None => {
            // coarse text plot
            for p in curve.points.iter().step_by(10) {
                let bar = "#".repeat((p.coincidence * 100.0).round() as usize);
                println!("{:+.3} {:.4} {bar}", p.theta, p.coincidence);
            }
        }
    }
    Ok(())
}

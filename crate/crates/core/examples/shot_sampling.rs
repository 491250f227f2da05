// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Finite-shot histograms drawn from exact outcome probabilities.
//!
//!     cargo run --example shot_sampling

use boson_jw::hom::{run_hom_dip, sample_shots, GivensParams};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> boson_jw::Result<()> {
    let mut rng = StdRng::seed_from_u64(1);
    let shots = 8192;
    for theta in [0.0, std::f64::consts::FRAC_PI_2, std::f64::consts::PI] {
        let run = run_hom_dip(GivensParams::new(theta, 0.0, 0.0))?;
        let counts = sample_shots(&run.outcomes, shots, &mut rng);
        println!("theta = {theta:.4}");
        for (o, k) in run.outcomes.iter().zip(&counts) {
            println!("  {:?}: {k:>5} shots (expected {:.1})", o.occupation, o.probability * shots as f64);
        }
    }
    Ok(())
}

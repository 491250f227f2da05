// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Builds an experiment description, writes it as JSON and runs it the way
//! the `scatter` subcommand does.
//!
//!     cargo run --example experiment_file [-- experiment.json]

use boson_jw::cli::{hom_spec, scatter_report, ParticleSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // partially distinguishable photons: 60% overlap of internal states
    let mut spec = hom_spec();
    spec.layout.internal_states = 2;
    spec.particles[1] = ParticleSpec { mode: 2, internal: Some(vec![[0.6, 0.0], [0.8, 0.0]]) };
    spec.outputs.amplitudes = true;

    let json = serde_json::to_string_pretty(&spec)?;
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, &json)?;
        eprintln!("wrote {path}");
    }
    let report = scatter_report(&spec.validate()?)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}

// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Effective-boson states, their two-particle preparation circuit, and
//! decoding back to mode occupations.
//!
//!     cargo run --example boson_encoding

use boson_jw::encoding::{
    antisymmetrize_circuit_n2, antisymmetrized_state, decode_outcomes, ParticleAssignment, QubitLayout,
};
use boson_jw::StateVector;

fn show(layout: &QubitLayout, state: &StateVector) {
    for (k, a) in state.amplitudes().iter().enumerate().filter(|(_, a)| a.norm() > 1e-12) {
        println!("  {:+.4}{:+.4}i |{}>", a.re, a.im, layout.ket_label(k));
    }
}

fn main() -> boson_jw::Result<()> {
    let layout = QubitLayout::new(3, 2, 1)?;
    for modes in [[1, 2], [1, 1]] {
        let assignment = ParticleAssignment::ideal(&modes, 1);
        let state = antisymmetrized_state(&layout, &assignment)?;
        println!("particles in modes {modes:?}:");
        show(&layout, &state);
        for o in decode_outcomes(&state, &layout)?.iter().filter(|o| o.probability > 0.0) {
            println!("  occupation {:?}: {}", o.occupation, o.probability);
        }
    }

    let pair = ParticleAssignment::ideal(&[1, 2], 1);
    let circuit = antisymmetrize_circuit_n2(&layout, &pair)?;
    println!("preparation circuit ({} gates):", circuit.len());
    for gate in &circuit.gates {
        println!("  {gate}");
    }
    let prepared = circuit.run()?;
    let injected = antisymmetrized_state(&layout, &pair)?;
    println!("max deviation from injected state: {:e}", prepared.max_abs_diff(&injected)?);
    Ok(())
}

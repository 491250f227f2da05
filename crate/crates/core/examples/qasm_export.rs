// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! OpenQASM 2.0 for the beamsplitter experiment, checked by re-simulating the
//! emitted gates.
//!
//!     cargo run --example qasm_export [-- hom.qasm]

use boson_jw::cli::{export_qasm, hom_spec};
use boson_jw::encoding::antisymmetrized_state;
use boson_jw::evolve::evolve_exact;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let exp = hom_spec().validate()?;
    let export = export_qasm(&exp)?;
    match std::env::args().nth(1) {
        Some(path) => std::fs::write(path, &export.text)?,
        None => print!("{}", export.text),
    }
    let mut expected = antisymmetrized_state(&exp.layout, &exp.assignment)?;
    evolve_exact(&mut expected, &exp.hamiltonian, &exp.layout)?;
    let err = export.circuit.run()?.max_abs_diff_up_to_phase(&expected)?;
    eprintln!("{} gates, re-simulation error {err:.2e}", export.circuit.len());
    Ok(())
}

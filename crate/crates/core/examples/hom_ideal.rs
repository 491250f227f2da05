// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Two indistinguishable photons on a balanced beamsplitter always leave
//! together.
//!
//!     cargo run --example hom_ideal

use boson_jw::cli::format_outcomes;
use boson_jw::hom::run_hom_ideal;

fn main() -> boson_jw::Result<()> {
    let run = run_hom_ideal()?;
    print!("{}", format_outcomes(&run.outcomes));
    println!("final state:");
    for (k, a) in run.final_state.amplitudes().iter().enumerate().filter(|(_, a)| a.norm() > 1e-12) {
        println!("  {:+.6}{:+.6}i |{}>", a.re, a.im, run.layout.ket_label(k));
    }
    Ok(())
}

// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Ladder operators and hopping terms as Pauli strings.
//!
//!     cargo run --example jordan_wigner

use boson_jw::jw::{hopping_terms, ladder_to_pauli_pair, number_term, LadderOperator};
use num_complex::Complex64;

fn main() -> boson_jw::Result<()> {
    for q in 0..3 {
        let (a, b) = ladder_to_pauli_pair(LadderOperator::create(q, 3))?;
        println!("b+_{q} = {a}  {b}");
    }
    for (j, k, g) in [(0, 2, Complex64::new(1.0, 0.0)), (0, 1, Complex64::new(0.0, 1.0))] {
        let terms: Vec<String> = hopping_terms(j, k, g, 4)?.iter().map(|p| p.to_string()).collect();
        println!("hop({j},{k}) with {g}: {}", terms.join("  "));
    }
    let n: Vec<String> = number_term(1, 3)?.iter().map(|p| p.to_string()).collect();
    println!("n_1 = {}", n.join("  "));
    Ok(())
}

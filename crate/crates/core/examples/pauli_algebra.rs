// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Pauli-string products, commutation checks and exact rotations.
//!
//!     cargo run --example pauli_algebra

use std::f64::consts::PI;

use boson_jw::{commutes, pauli_mul, PauliString, StateVector};

fn main() -> boson_jw::Result<()> {
    let xz: PauliString = "XZ".parse()?;
    let zz: PauliString = "ZZ".parse()?;
    println!("({xz}) * ({zz}) = {}", pauli_mul(&xz, &zz)?);

    let hops = ["XZXI", "YZYI", "IXZX", "IYZY"].map(|s| PauliString::from_letters(s).unwrap());
    for (i, p) in hops.iter().enumerate() {
        for q in &hops[i + 1..] {
            println!("{} and {} commute: {}", p.letters_string(), q.letters_string(), commutes(p, q)?);
        }
    }

    // two photons on a balanced beamsplitter, one rotation at a time
    let mut state = StateVector::null(4);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    state.amplitudes_mut()[0b1001] = num_complex::Complex64::new(h, 0.0);
    state.amplitudes_mut()[0b0110] = num_complex::Complex64::new(-h, 0.0);
    for p in &hops {
        state.apply_pauli_rotation(p, PI / 8.0)?;
    }
    for (k, a) in state.amplitudes().iter().enumerate().filter(|(_, a)| a.norm() > 1e-12) {
        println!("|{}>  {:+.6}{:+.6}i", boson_jw::pauli::ket_label(4, k, 2), a.re, a.im);
    }
    Ok(())
}

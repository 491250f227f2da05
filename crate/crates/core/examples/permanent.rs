// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Matrix permanents by Ryser's formula.
//!
//!     cargo run --example permanent

use boson_jw::cli::format_complex;
use boson_jw::oracle::permanent;
use nalgebra::DMatrix;
use num_complex::Complex64;

fn main() -> boson_jw::Result<()> {
    let ones = DMatrix::from_element(5, 5, Complex64::new(1.0, 0.0));
    println!("perm(J_5) = {}", format_complex(permanent(&ones)?));

    let h = std::f64::consts::FRAC_1_SQRT_2;
    let bs = DMatrix::from_row_slice(2, 2, &[h, 0.0, 0.0, h].map(|x| Complex64::new(x, 0.0)))
        + DMatrix::from_row_slice(2, 2, &[0.0, h, h, 0.0].map(|x| Complex64::new(0.0, x)));
    println!("perm(beamsplitter) = {}", format_complex(permanent(&bs)?));

    let fourier =
        DMatrix::from_fn(4, 4, |r, c| Complex64::from_polar(0.5, std::f64::consts::TAU * (r * c) as f64 / 4.0));
    println!("perm(F_4) = {}", format_complex(permanent(&fourier)?));
    Ok(())
}

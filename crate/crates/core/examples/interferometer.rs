// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! A random three-mode network: mesh factorization of the single-particle
//! unitary, simulation on qubits, and comparison with permanents.
//!
//!     cargo run --example interferometer

use boson_jw::encoding::{antisymmetrized_state, decode_outcomes, ParticleAssignment, QubitLayout};
use boson_jw::evolve::{decompose_mesh, evolve_exact, mesh_unitary, single_particle_unitary, OpticalHamiltonian};
use boson_jw::oracle::{scatter_probability, ScatteringInstance};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn main() -> boson_jw::Result<()> {
    let mut rng = StdRng::seed_from_u64(7);
    let m = 3;
    let a = DMatrix::from_fn(m, m, |_, _| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    let phi = (&a + a.adjoint()) * Complex64::new(0.5, 0.0);
    let h = OpticalHamiltonian::new(phi, 1.0)?;

    let u = single_particle_unitary(&h);
    let layers = decompose_mesh(&u)?;
    let rebuilt = mesh_unitary(&layers, m);
    println!("{} mesh layers, reconstruction error {:.2e}", layers.len(), (rebuilt - &u).norm());

    let layout = QubitLayout::new(m, 2, 1)?;
    let assignment = ParticleAssignment::ideal(&[1, 2], 1);
    let mut state = antisymmetrized_state(&layout, &assignment)?;
    let path = evolve_exact(&mut state, &h, &layout)?;
    println!("evolved on {} qubits via {path:?}", layout.n_qubits());

    let input = assignment.occupation(m);
    println!("occupation   simulated        permanent");
    for o in decode_outcomes(&state, &layout)?.iter() {
        let oracle = scatter_probability(&ScatteringInstance::new(u.clone(), input.clone(), o.occupation.clone())?)?;
        println!("{:<12} {:.12}  {:.12}", format!("{:?}", o.occupation), o.probability, oracle);
    }
    Ok(())
}

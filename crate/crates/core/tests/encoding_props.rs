// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

mod common;

use boson_jw::encoding::{
    antisymmetrize_circuit_n2, antisymmetrized_state, decode_outcomes, preparation_circuit, Particle,
    ParticleAssignment, QubitLayout,
};
use boson_jw::evolve::{evolve_exact, OpticalHamiltonian};
use boson_jw::{Error, StateVector};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_internal<R: Rng>(rng: &mut R, s: usize) -> Vec<C> {
    let v: Vec<C> = (0..s).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

fn random_assignment<R: Rng>(rng: &mut R, layout: &QubitLayout) -> ParticleAssignment {
    let particles = (0..layout.n_particles)
        .map(|_| Particle {
            mode: rng.random_range(1..=layout.n_modes),
            internal: random_internal(rng, layout.n_internal),
        })
        .collect();
    ParticleAssignment::new(particles)
}

/// All permutations of `0..n`, with signs, by Heap-free brute force.
fn permutations(n: usize) -> Vec<(Vec<usize>, f64)> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    fn rec(k: usize, idx: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, f64)>) {
        if k == idx.len() {
            let inversions =
                (0..idx.len()).flat_map(|i| (i + 1..idx.len()).map(move |j| (i, j))).filter(|&(i, j)| idx[i] > idx[j]);
            let sign = if inversions.count() % 2 == 0 { 1.0 } else { -1.0 };
            out.push((idx.clone(), sign));
            return;
        }
        for j in k..idx.len() {
            idx.swap(k, j);
            rec(k + 1, idx, out);
            idx.swap(k, j);
        }
    }
    rec(0, &mut idx, &mut out);
    out
}

/// `Σ_σ sgn σ Π_α (Σ_s r_αs b†_(i_α, σ(α), s)) |0>` with bit-level ladders,
/// operator product in ascending particle order.
fn oracle_state(layout: &QubitLayout, a: &ParticleAssignment) -> Vec<C> {
    let n = layout.n_qubits();
    let (np, s_dim) = (layout.n_particles, layout.n_internal);
    let qubit = |mode: usize, label: usize, s: usize| (mode - 1) * np * s_dim + label * s_dim + s;
    let mut total = vec![c(0.0, 0.0); 1 << n];
    for (perm, sign) in permutations(np) {
        let mut v = vec![c(0.0, 0.0); 1 << n];
        v[0] = c(1.0, 0.0);
        for alpha in (0..np).rev() {
            let p = &a.particles[alpha];
            let mut next = vec![c(0.0, 0.0); 1 << n];
            for (s, amp) in p.internal.iter().enumerate() {
                let moved = bit_ladder(&v, qubit(p.mode, perm[alpha], s), n, true);
                next.iter_mut().zip(moved).for_each(|(x, m)| *x += amp * m);
            }
            v = next;
        }
        total.iter_mut().zip(v).for_each(|(t, x)| *t += x * sign);
    }
    let norm = total.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    total.into_iter().map(|z| z / norm).collect()
}

#[test]
fn matches_bit_level_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for (m, np, s) in [(2, 2, 1), (3, 2, 1), (2, 2, 2), (3, 2, 2), (3, 3, 1), (2, 3, 2)] {
        let layout = QubitLayout::new(m, np, s).unwrap();
        for _ in 0..5 {
            let a = random_assignment(&mut rng, &layout);
            let got = antisymmetrized_state(&layout, &a).unwrap();
            let expected = StateVector::from_amplitudes(oracle_state(&layout, &a)).unwrap();
            assert!(got.max_abs_diff(&expected).unwrap() < 1e-12, "{m} {np} {s}");
        }
    }
}

#[test]
fn exchange_symmetry_two_particles() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for s in 1..=2 {
        let layout = QubitLayout::new(4, 2, s).unwrap();
        for i1 in 1..=4 {
            for i2 in 1..=4 {
                let (r1, r2) = (random_internal(&mut rng, s), random_internal(&mut rng, s));
                let a = ParticleAssignment::new(vec![
                    Particle { mode: i1, internal: r1.clone() },
                    Particle { mode: i2, internal: r2.clone() },
                ]);
                let swapped = ParticleAssignment::new(vec![
                    Particle { mode: i2, internal: r2 },
                    Particle { mode: i1, internal: r1 },
                ]);
                let (x, y) =
                    (antisymmetrized_state(&layout, &a).unwrap(), antisymmetrized_state(&layout, &swapped).unwrap());
                assert!(x.max_abs_diff(&y).unwrap() < 1e-12, "modes {i1} {i2}");
            }
        }
    }
}

#[test]
fn exchange_symmetry_three_particles() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for s in 1..=2 {
        let layout = QubitLayout::new(3, 3, s).unwrap();
        for _ in 0..4 {
            let base = random_assignment(&mut rng, &layout);
            let reference = antisymmetrized_state(&layout, &base).unwrap();
            for (perm, _) in permutations(3) {
                let permuted = ParticleAssignment::new(perm.iter().map(|&k| base.particles[k].clone()).collect());
                let state = antisymmetrized_state(&layout, &permuted).unwrap();
                assert!(state.max_abs_diff(&reference).unwrap() < 1e-12, "{perm:?}");
            }
        }
    }
}

#[test]
fn decoded_probabilities_sum_to_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for (m, np, s) in [(2, 2, 1), (3, 2, 1), (2, 2, 2), (2, 3, 1)] {
        let layout = QubitLayout::new(m, np, s).unwrap();
        for _ in 0..10 {
            let state = random_state(&mut rng, layout.n_qubits());
            let d = decode_outcomes(&state, &layout).unwrap();
            assert!((d.total() - 1.0).abs() < 1e-10);
        }
        let valid = antisymmetrized_state(&layout, &random_assignment(&mut rng, &layout)).unwrap();
        let d = decode_outcomes(&valid, &layout).unwrap();
        let boson: f64 = d.iter().map(|o| o.probability).sum();
        assert!((boson - 1.0).abs() < 1e-10);
        assert!(d.leakage < 1e-10);
    }
}

#[test]
fn no_leakage_after_evolution() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    for (m, np, s) in [(2, 2, 2), (3, 2, 1), (3, 3, 1), (4, 2, 1)] {
        let layout = QubitLayout::new(m, np, s).unwrap();
        for _ in 0..5 {
            let mut state = antisymmetrized_state(&layout, &random_assignment(&mut rng, &layout)).unwrap();
            let h = OpticalHamiltonian::new(random_hermitian(&mut rng, m), rng.random_range(0.1..3.0)).unwrap();
            evolve_exact(&mut state, &h, &layout).unwrap();
            assert!(decode_outcomes(&state, &layout).unwrap().leakage < 1e-10);
        }
    }
}

#[test]
fn two_particle_circuit_matches_injection() {
    for m in 2..=4 {
        for s in 1..=2 {
            let layout = QubitLayout::new(m, 2, s).unwrap();
            for i1 in 1..=m {
                for i2 in 1..=m {
                    for s2 in 0..s {
                        let a =
                            ParticleAssignment::new(vec![Particle::in_basis(i1, 0, s), Particle::in_basis(i2, s2, s)]);
                        let circuit = antisymmetrize_circuit_n2(&layout, &a).unwrap();
                        assert!(circuit.len() <= 10);
                        let expected = antisymmetrized_state(&layout, &a).unwrap();
                        let got = circuit.run().unwrap();
                        assert!(got.max_abs_diff(&expected).unwrap() < 1e-12, "M={m} S={s} {i1} {i2} {s2}");
                    }
                }
            }
        }
    }
}

#[test]
fn superpositions_are_not_gate_preparable() {
    let layout = QubitLayout::new(2, 2, 2).unwrap();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let a = ParticleAssignment::new(vec![
        Particle::in_basis(1, 0, 2),
        Particle { mode: 2, internal: vec![c(h, 0.0), c(h, 0.0)] },
    ]);
    assert!(matches!(preparation_circuit(&layout, &a), Err(Error::Unsupported(_))));
    let three = QubitLayout::new(3, 3, 1).unwrap();
    assert!(matches!(
        preparation_circuit(&three, &ParticleAssignment::ideal(&[1, 2, 3], 1)),
        Err(Error::Unsupported(_))
    ));
    // all particles in one mode is a single basis state
    let bunched = preparation_circuit(&three, &ParticleAssignment::ideal(&[2, 2, 2], 1)).unwrap();
    let expected = antisymmetrized_state(&three, &ParticleAssignment::ideal(&[2, 2, 2], 1)).unwrap();
    assert!(bunched.run().unwrap().max_abs_diff(&expected).unwrap() < 1e-12);
}

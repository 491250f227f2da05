// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

mod common;

use boson_jw::jw::{apply_ladder, hopping_terms, ladder_to_pauli_pair, number_term, LadderOperator};
use boson_jw::{commutes, PauliString};
use common::*;
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn anticommutator(a: &DMatrix<C>, b: &DMatrix<C>) -> DMatrix<C> {
    a * b + b * a
}

fn pauli_sum(terms: &[PauliString], dim: usize) -> DMatrix<C> {
    terms.iter().fold(DMatrix::zeros(dim, dim), |acc, p| acc + dense_pauli(p))
}

fn ladder_dense(op: LadderOperator) -> DMatrix<C> {
    let (a, b) = ladder_to_pauli_pair(op).unwrap();
    dense_pauli(&a) + dense_pauli(&b)
}

#[test]
fn pauli_images_satisfy_anticommutation() {
    for n in 1..=5 {
        let dim = 1 << n;
        let id = DMatrix::<C>::identity(dim, dim);
        for j in 0..n {
            for k in 0..n {
                let bj = ladder_dense(LadderOperator::annihilate(j, n));
                let bk = ladder_dense(LadderOperator::annihilate(k, n));
                let bk_dag = ladder_dense(LadderOperator::create(k, n));
                let expected = if j == k { id.clone() } else { DMatrix::zeros(dim, dim) };
                assert!(max_abs(&(anticommutator(&bj, &bk_dag) - expected)) < 1e-12, "{j} {k} on {n}");
                assert!(max_abs(&anticommutator(&bj, &bk)) < 1e-12);
                assert!(max_abs(&anticommutator(&bj.adjoint(), &bk_dag)) < 1e-12);
            }
        }
    }
}

#[test]
fn pauli_images_match_kronecker_ladders() {
    for n in 1..=5 {
        for q in 0..n {
            let diff = ladder_dense(LadderOperator::create(q, n)) - dense_create(q, n);
            assert!(max_abs(&diff) < 1e-15);
            let diff = ladder_dense(LadderOperator::annihilate(q, n)) - dense_annihilate(q, n);
            assert!(max_abs(&diff) < 1e-15);
        }
    }
}

#[test]
fn hopping_terms_commute_and_sum_to_bilinear() {
    let coeffs = [c(1.0, 0.0), c(0.0, 1.0), c(0.3, -1.7)];
    for n in 2..=5 {
        let dim = 1 << n;
        for j in 0..n {
            for k in 0..n {
                if j == k {
                    continue;
                }
                for g in coeffs {
                    let terms = hopping_terms(j, k, g, n).unwrap();
                    // real and imaginary parts commute separately; mixed ones do not
                    let pure = g.re == 0.0 || g.im == 0.0;
                    for (a, p) in terms.iter().enumerate().filter(|_| pure) {
                        for q in &terms[a + 1..] {
                            assert!(commutes(p, q).unwrap());
                        }
                    }
                    // g b†_j b_k + conj(g) b†_k b_j
                    let expected = dense_create(j, n) * dense_annihilate(k, n) * g
                        + dense_create(k, n) * dense_annihilate(j, n) * g.conj();
                    assert!(max_abs(&(pauli_sum(&terms, dim) - expected)) < 1e-12, "{j} {k} {g}");
                }
            }
        }
    }
}

#[test]
fn number_term_is_occupation() {
    for n in 1..=4 {
        for j in 0..n {
            let expected = dense_create(j, n) * dense_annihilate(j, n);
            let got = pauli_sum(&number_term(j, n).unwrap(), 1 << n);
            assert!(max_abs(&(got - expected)) < 1e-15);
        }
    }
}

#[test]
fn apply_ladder_matches_pauli_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let n = rng.random_range(1..=6);
        let q = rng.random_range(0..n);
        let op = if rng.random_bool(0.5) { LadderOperator::create(q, n) } else { LadderOperator::annihilate(q, n) };
        let s = random_state(&mut rng, n);
        let mut direct = s.clone();
        apply_ladder(&mut direct, op).unwrap();
        let (a, b) = ladder_to_pauli_pair(op).unwrap();
        let (mut sa, mut sb) = (s.clone(), s.clone());
        sa.apply_pauli(&a).unwrap();
        sb.apply_pauli(&b).unwrap();
        sa.add_scaled(c(1.0, 0.0), &sb).unwrap();
        assert!(direct.max_abs_diff(&sa).unwrap() < 1e-12);
    }
}

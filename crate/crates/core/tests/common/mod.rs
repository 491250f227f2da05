// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense and brute-force reference implementations shared by the
//! integration tests. Nothing here calls the library's algebra.

#![allow(dead_code)]

use boson_jw::encoding::QubitLayout;
use boson_jw::{Pauli, PauliString, StateVector};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

pub type C = Complex64;

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

pub fn single(p: Pauli) -> DMatrix<C> {
    let (o, z, i) = (c(1.0, 0.0), c(0.0, 0.0), c(0.0, 1.0));
    match p {
        Pauli::I => DMatrix::from_row_slice(2, 2, &[o, z, z, o]),
        Pauli::X => DMatrix::from_row_slice(2, 2, &[z, o, o, z]),
        Pauli::Y => DMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
        Pauli::Z => DMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
    }
}

/// `σ+ = |1><0|`.
pub fn raising() -> DMatrix<C> {
    DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
}

/// Kronecker product of 2x2 factors, first factor on the most significant bit.
pub fn kron_all(factors: &[DMatrix<C>]) -> DMatrix<C> {
    factors.iter().fold(DMatrix::from_element(1, 1, c(1.0, 0.0)), |acc, f| acc.kronecker(f))
}

pub fn dense_pauli(p: &PauliString) -> DMatrix<C> {
    let factors: Vec<_> = p.letters().iter().map(|&l| single(l)).collect();
    kron_all(&factors) * p.scalar()
}

/// `Z ⊗ .. ⊗ Z ⊗ σ+ ⊗ I ⊗ .. ⊗ I` with `σ+` at `q`.
pub fn dense_create(q: usize, n: usize) -> DMatrix<C> {
    let factors: Vec<_> = (0..n)
        .map(|k| match k.cmp(&q) {
            std::cmp::Ordering::Less => single(Pauli::Z),
            std::cmp::Ordering::Equal => raising(),
            std::cmp::Ordering::Greater => single(Pauli::I),
        })
        .collect();
    kron_all(&factors)
}

pub fn dense_annihilate(q: usize, n: usize) -> DMatrix<C> {
    dense_create(q, n).adjoint()
}

pub fn to_dvec(s: &StateVector) -> nalgebra::DVector<C> {
    nalgebra::DVector::from_column_slice(s.amplitudes())
}

pub fn dense_apply(m: &DMatrix<C>, s: &StateVector) -> StateVector {
    StateVector::from_amplitudes((m * to_dvec(s)).iter().copied().collect()).unwrap()
}

pub fn max_abs(m: &DMatrix<C>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn random_state<R: Rng>(rng: &mut R, n: usize) -> StateVector {
    let amps: Vec<C> = (0..1usize << n).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    StateVector::from_amplitudes(amps.into_iter().map(|a| a / norm).collect()).unwrap()
}

pub fn random_letters<R: Rng>(rng: &mut R, n: usize) -> String {
    (0..n).map(|_| ['I', 'X', 'Y', 'Z'][rng.random_range(0..4)]).collect()
}

pub fn random_hermitian<R: Rng>(rng: &mut R, m: usize) -> DMatrix<C> {
    let a = DMatrix::from_fn(m, m, |_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    (&a + a.adjoint()) * c(0.5, 0.0)
}

/// `exp(i t A)` for a small dense matrix, by Taylor series with scaling and
/// squaring.
pub fn dense_exp_i(a: &DMatrix<C>, t: f64) -> DMatrix<C> {
    let n = a.nrows();
    let norm1 = (0..n).map(|j| a.column(j).iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max) * t.abs();
    let squarings = if norm1 > 0.5 { (norm1 / 0.5).log2().ceil() as u32 } else { 0 };
    let x = a * c(0.0, t / f64::from(1u32 << squarings));
    let mut result = DMatrix::identity(n, n);
    let mut term = DMatrix::identity(n, n);
    for k in 1..40 {
        term = &term * &x / c(k as f64, 0.0);
        result += &term;
        if max_abs(&term) < 1e-20 {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

/// Flips bit `q` by the fermionic definition: occupation check plus the sign
/// `(-1)^(occupied qubits before q)`.
pub fn bit_ladder(v: &[C], q: usize, n: usize, create: bool) -> Vec<C> {
    let mask = 1usize << (n - 1 - q);
    let mut out = vec![c(0.0, 0.0); v.len()];
    for (x, &a) in v.iter().enumerate() {
        if (x & mask == 0) == create {
            let before = (x >> (n - q)).count_ones();
            let sign = if before.is_multiple_of(2) { 1.0 } else { -1.0 };
            out[x ^ mask] += a * sign;
        }
    }
    out
}

/// `H v` with `H = Σ_c Σ_ij Φ_ij b†_(i,c) b_(j,c)` over every channel `c`.
pub fn fermionic_h_apply(phi: &DMatrix<C>, layout: &QubitLayout, v: &[C]) -> Vec<C> {
    let n = layout.n_qubits();
    let bundle = layout.n_particles * layout.n_internal;
    let mut out = vec![c(0.0, 0.0); v.len()];
    for ch in 0..bundle {
        for i in 0..layout.n_modes {
            for j in 0..layout.n_modes {
                if phi[(i, j)].norm() == 0.0 {
                    continue;
                }
                let moved = bit_ladder(&bit_ladder(v, j * bundle + ch, n, false), i * bundle + ch, n, true);
                for (o, m) in out.iter_mut().zip(moved) {
                    *o += phi[(i, j)] * m;
                }
            }
        }
    }
    out
}

/// `exp(i t H) v` for a matrix-free `H` whose norm is at most `bound`.
pub fn exp_i_action(apply: impl Fn(&[C]) -> Vec<C>, bound: f64, t: f64, v: &[C]) -> Vec<C> {
    let steps = (bound * t.abs()).ceil().max(1.0) as usize;
    let h = t / steps as f64;
    let mut x = v.to_vec();
    for _ in 0..steps {
        let mut term = x.clone();
        for k in 1..80 {
            term = apply(&term).into_iter().map(|z| z * c(0.0, h) / k as f64).collect();
            x.iter_mut().zip(&term).for_each(|(a, b)| *a += b);
            if term.iter().map(|z| z.norm()).fold(0.0, f64::max) < 1e-18 {
                break;
            }
        }
    }
    x
}

/// Bound on the operator norm of the fermionic `H` for `layout`.
pub fn fermionic_norm_bound(phi: &DMatrix<C>, layout: &QubitLayout) -> f64 {
    let abs_sum: f64 = phi.iter().map(|z| z.norm()).sum();
    abs_sum * (layout.n_particles * layout.n_internal) as f64
}

/// Dense matrix of a linear map given by its action on vectors.
pub fn dense_from_action(n_qubits: usize, apply: impl Fn(&[C]) -> Vec<C>) -> DMatrix<C> {
    let dim = 1 << n_qubits;
    let mut m = DMatrix::zeros(dim, dim);
    for x in 0..dim {
        let mut e = vec![c(0.0, 0.0); dim];
        e[x] = c(1.0, 0.0);
        for (y, v) in apply(&e).into_iter().enumerate() {
            m[(y, x)] = v;
        }
    }
    m
}

/// `b†_i b_j` by the bit-level definition.
pub fn hop_action(v: &[C], i: usize, j: usize, n: usize) -> Vec<C> {
    bit_ladder(&bit_ladder(v, j, n, false), i, n, true)
}

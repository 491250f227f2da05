// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Reference boson statistics from matrix permanents, independent of the
//! qubit simulator.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::combinatorics::{factorial, signed_permutations};
use crate::error::{Error, Result};

/// Permanent by Ryser's formula, visiting column subsets in Gray-code order
/// so each step updates the row sums with a single column: `O(2^n n)`.
pub fn permanent(a: &DMatrix<Complex64>) -> Result<Complex64> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.nrows(), cols: a.ncols() });
    }
    let n = a.nrows();
    if n == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if n > 40 {
        return Err(Error::Unsupported(format!("permanent of a {n}x{n} matrix")));
    }
    let mut row_sums = vec![Complex64::new(0.0, 0.0); n];
    let mut total = Complex64::new(0.0, 0.0);
    let mut gray = 0u64;
    for k in 1u64..(1u64 << n) {
        let col = k.trailing_zeros() as usize;
        gray ^= 1 << col;
        if gray & (1 << col) != 0 {
            row_sums.iter_mut().enumerate().for_each(|(r, s)| *s += a[(r, col)]);
        } else {
            row_sums.iter_mut().enumerate().for_each(|(r, s)| *s -= a[(r, col)]);
        }
        let product: Complex64 = row_sums.iter().product();
        if gray.count_ones().is_multiple_of(2) {
            total += product;
        } else {
            total -= product;
        }
    }
    Ok(if n.is_multiple_of(2) { total } else { -total })
}

/// Unitary `u` with input and output occupations; `u[(out, in)]` is the
/// amplitude of a single particle entering mode `in` and leaving mode `out`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScatteringInstance {
    pub u: DMatrix<Complex64>,
    pub input: Vec<usize>,
    pub output: Vec<usize>,
}

impl ScatteringInstance {
    pub fn new(u: DMatrix<Complex64>, input: Vec<usize>, output: Vec<usize>) -> Result<Self> {
        if !u.is_square() {
            return Err(Error::NotSquare { rows: u.nrows(), cols: u.ncols() });
        }
        let m = u.nrows();
        for occ in [&input, &output] {
            if occ.len() != m {
                return Err(Error::SizeMismatch { expected: m, found: occ.len() });
            }
        }
        let (n_in, n_out) = (input.iter().sum::<usize>(), output.iter().sum::<usize>());
        if n_in != n_out {
            return Err(Error::ContractViolation(format!("input carries {n_in} particles, output {n_out}")));
        }
        Ok(ScatteringInstance { u, input, output })
    }

    pub fn n_particles(&self) -> usize {
        self.input.iter().sum()
    }

    /// `N × N` submatrix with output modes as rows and input modes as
    /// columns, each repeated by its occupation.
    pub fn submatrix(&self) -> DMatrix<Complex64> {
        let rows = expand(&self.output);
        let cols = expand(&self.input);
        DMatrix::from_fn(rows.len(), cols.len(), |r, c| self.u[(rows[r], cols[c])])
    }

    fn occupation_factorials(&self) -> f64 {
        self.input.iter().chain(&self.output).map(|&k| factorial(k)).product()
    }
}

fn expand(occupation: &[usize]) -> Vec<usize> {
    occupation.iter().enumerate().flat_map(|(mode, &k)| std::iter::repeat_n(mode, k)).collect()
}

/// `|perm(u_sub)|² / (Π in! Π out!)` for indistinguishable bosons.
pub fn scatter_probability(inst: &ScatteringInstance) -> Result<f64> {
    let perm = permanent(&inst.submatrix())?;
    Ok(perm.norm_sqr() / inst.occupation_factorials())
}

/// Output probability for bosons with internal states: particle `α` enters
/// the `α`-th input slot (input modes ascending) carrying `internal[α]`.
///
/// Sums `Π_α <r_σ(α)|r_α> perm(A ∘ conj(A_{:,σ}))` over permutations `σ`,
/// normalized by the squared norm of the input state. Reduces to
/// [`scatter_probability`] for identical internal states.
pub fn scatter_probability_with_internal(inst: &ScatteringInstance, internal: &[Vec<Complex64>]) -> Result<f64> {
    let n = inst.n_particles();
    if internal.len() != n {
        return Err(Error::SizeMismatch { expected: n, found: internal.len() });
    }
    let gram =
        |a: usize, b: usize| -> Complex64 { internal[a].iter().zip(&internal[b]).map(|(x, y)| x.conj() * y).sum() };
    let a = inst.submatrix();
    let cols = expand(&inst.input);
    let mut weight = Complex64::new(0.0, 0.0);
    let mut input_norm = Complex64::new(0.0, 0.0);
    for (sigma, _) in signed_permutations(n) {
        let overlap: Complex64 = (0..n).map(|alpha| gram(sigma[alpha], alpha)).product();
        if overlap.norm() == 0.0 {
            continue;
        }
        if (0..n).all(|alpha| cols[sigma[alpha]] == cols[alpha]) {
            input_norm += overlap;
        }
        let mixed = DMatrix::from_fn(n, n, |r, c| a[(r, c)] * a[(r, sigma[c])].conj());
        weight += overlap * permanent(&mixed)?;
    }
    let out_factorials: f64 = inst.output.iter().map(|&k| factorial(k)).product();
    Ok(weight.re / (out_factorials * input_norm.re))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::occupations;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Σ_σ Π_i a[i, σ(i)] over all n! permutations.
    fn naive_permanent(a: &DMatrix<Complex64>) -> Complex64 {
        signed_permutations(a.nrows())
            .into_iter()
            .map(|(p, _)| (0..a.nrows()).map(|i| a[(i, p[i])]).product::<Complex64>())
            .sum()
    }

    fn hom_u() -> DMatrix<Complex64> {
        let h = FRAC_1_SQRT_2;
        DMatrix::from_row_slice(2, 2, &[c(h, 0.0), c(0.0, h), c(0.0, h), c(h, 0.0)])
    }

    #[test]
    fn permanent_examples() {
        assert_eq!(permanent(&DMatrix::identity(2, 2)).unwrap(), c(1.0, 0.0));
        let ones = DMatrix::from_element(3, 3, c(1.0, 0.0));
        assert!((permanent(&ones).unwrap() - c(6.0, 0.0)).norm() < 1e-12);
        assert!(naive_permanent(&hom_u()).norm() < 1e-15);
        assert!(permanent(&hom_u()).unwrap().norm() < 1e-15);
        assert_eq!(permanent(&DMatrix::zeros(0, 0)).unwrap(), c(1.0, 0.0));
        assert!(matches!(permanent(&DMatrix::zeros(2, 3)), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn scattering_examples() {
        let id = ScatteringInstance::new(DMatrix::identity(2, 2), vec![1, 1], vec![1, 1]).unwrap();
        assert!((scatter_probability(&id).unwrap() - 1.0).abs() < 1e-15);

        let coincidence = ScatteringInstance::new(hom_u(), vec![1, 1], vec![1, 1]).unwrap();
        assert!(scatter_probability(&coincidence).unwrap() < 1e-30);

        for out in [vec![2, 0], vec![0, 2]] {
            let inst = ScatteringInstance::new(hom_u(), vec![1, 1], out).unwrap();
            assert!((scatter_probability(&inst).unwrap() - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn occupation_mismatch() {
        assert!(matches!(ScatteringInstance::new(hom_u(), vec![1, 1], vec![1, 0]), Err(Error::ContractViolation(_))));
        assert!(ScatteringInstance::new(hom_u(), vec![2], vec![2]).is_err());
    }

    #[test]
    fn internal_states_interpolate_hom() {
        // coincidence = (1 - |<s|r>|²) / 2
        for overlap in [1.0f64, 0.8, 0.3, 0.0] {
            let other = (1.0 - overlap * overlap).sqrt();
            let internal = vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(overlap, 0.0), c(0.0, other)]];
            let inst = ScatteringInstance::new(hom_u(), vec![1, 1], vec![1, 1]).unwrap();
            let p = scatter_probability_with_internal(&inst, &internal).unwrap();
            assert!((p - (1.0 - overlap * overlap) / 2.0).abs() < 1e-12, "{overlap}: {p}");
        }
    }

    #[test]
    fn internal_states_sum_to_one_when_bunched_input() {
        let internal = vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.6, 0.0), c(0.0, 0.8)]];
        let total: f64 = occupations(2, 2)
            .into_iter()
            .map(|out| {
                let inst = ScatteringInstance::new(hom_u(), vec![2, 0], out).unwrap();
                scatter_probability_with_internal(&inst, &internal).unwrap()
            })
            .sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    fn matrix(n: usize) -> impl Strategy<Value = DMatrix<Complex64>> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n * n)
            .prop_map(move |v| DMatrix::from_iterator(n, n, v.into_iter().map(|(re, im)| c(re, im))))
    }

    proptest! {
        #[test]
        fn ryser_matches_naive(a in (1usize..=6).prop_flat_map(matrix)) {
            let fast = permanent(&a).unwrap();
            let slow = naive_permanent(&a);
            let scale = slow.norm().max(1e-3);
            prop_assert!((fast - slow).norm() / scale < 1e-10, "{fast} vs {slow}");
        }
    }
}

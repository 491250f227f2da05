// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Jordan-Wigner images of fermionic ladder operators and bilinears.
//!
//! `b†_q = Z_0 ⊗ ... ⊗ Z_{q-1} ⊗ σ+_q` with `σ+ = |1><0|` and `σ- = |0><1|`,
//! which expands to `σ+ = (X - iY)/2` and `σ- = (X + iY)/2`.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::{pauli_mul, Pauli, PauliString, Phase, StateVector};

/// Coefficients below this magnitude are dropped when collecting terms.
const DROP_TOL: f64 = 1e-15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LadderKind {
    Create,
    Annihilate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LadderOperator {
    pub qubit: usize,
    pub kind: LadderKind,
    pub n_qubits: usize,
}

impl LadderOperator {
    pub fn create(qubit: usize, n_qubits: usize) -> Self {
        LadderOperator { qubit, kind: LadderKind::Create, n_qubits }
    }

    pub fn annihilate(qubit: usize, n_qubits: usize) -> Self {
        LadderOperator { qubit, kind: LadderKind::Annihilate, n_qubits }
    }

    pub fn adjoint(self) -> Self {
        let kind = match self.kind {
            LadderKind::Create => LadderKind::Annihilate,
            LadderKind::Annihilate => LadderKind::Create,
        };
        LadderOperator { kind, ..self }
    }

    fn check(&self) -> Result<()> {
        if self.qubit >= self.n_qubits {
            return Err(Error::IndexOutOfRange { index: self.qubit, len: self.n_qubits });
        }
        Ok(())
    }
}

/// The two Pauli strings summing to the ladder operator: `½ Z..Z X` and
/// `∓½i Z..Z Y` (minus for creation).
pub fn ladder_to_pauli_pair(op: LadderOperator) -> Result<(PauliString, PauliString)> {
    op.check()?;
    let string = |last: Pauli| {
        let mut letters = vec![Pauli::I; op.n_qubits];
        letters[..op.qubit].fill(Pauli::Z);
        letters[op.qubit] = last;
        letters
    };
    let y_phase = match op.kind {
        LadderKind::Create => Phase::MINUS_I,
        LadderKind::Annihilate => Phase::I,
    };
    Ok((PauliString::new(string(Pauli::X), Phase::ONE, 0.5)?, PauliString::new(string(Pauli::Y), y_phase, 0.5)?))
}

/// Applies the ladder operator directly on basis amplitudes, carrying the
/// parity sign of the occupied qubits before `op.qubit`. The result is
/// generally unnormalized.
pub fn apply_ladder(state: &mut StateVector, op: LadderOperator) -> Result<()> {
    op.check()?;
    let n = state.n_qubits();
    if n != op.n_qubits {
        return Err(Error::SizeMismatch { expected: op.n_qubits, found: n });
    }
    let bit = 1usize << (n - 1 - op.qubit);
    // every qubit left of op.qubit sits on a more significant bit
    let prefix = !((bit << 1) - 1) & ((1usize << n) - 1);
    let zero = Complex64::new(0.0, 0.0);
    let amps = state.amplitudes_mut();
    for x in 0..amps.len() {
        if x & bit != 0 {
            continue;
        }
        let y = x | bit;
        let sign = if (x & prefix).count_ones().is_multiple_of(2) { 1.0 } else { -1.0 };
        match op.kind {
            LadderKind::Create => {
                amps[y] = amps[x] * sign;
                amps[x] = zero;
            }
            LadderKind::Annihilate => {
                amps[x] = amps[y] * sign;
                amps[y] = zero;
            }
        }
    }
    Ok(())
}

/// Expands a product of ladder operators into collected Pauli strings,
/// returned as `(letters, coefficient)` in letter order.
pub fn ladder_product_terms(ops: &[LadderOperator]) -> Result<BTreeMap<Vec<Pauli>, Complex64>> {
    let n = ops.first().map(|op| op.n_qubits).ok_or_else(|| Error::InvalidArgument("empty ladder product".into()))?;
    let mut terms = vec![PauliString::identity(n)?];
    for &op in ops {
        let (x, y) = ladder_to_pauli_pair(op)?;
        let mut next = Vec::with_capacity(terms.len() * 2);
        for t in &terms {
            next.push(pauli_mul(t, &x)?);
            next.push(pauli_mul(t, &y)?);
        }
        terms = next;
    }
    let mut collected = BTreeMap::new();
    for t in terms {
        *collected.entry(t.letters().to_vec()).or_insert(Complex64::new(0.0, 0.0)) += t.scalar();
    }
    Ok(collected)
}

fn collect_hermitian(terms: BTreeMap<Vec<Pauli>, Complex64>) -> Result<Vec<PauliString>> {
    let mut out = Vec::new();
    for (letters, value) in terms {
        if value.norm() <= DROP_TOL {
            continue;
        }
        if value.im.abs() > DROP_TOL {
            return Err(Error::ContractViolation(format!(
                "non-Hermitian term {value} on {}",
                letters.iter().map(|p| p.symbol()).collect::<String>()
            )));
        }
        out.extend(PauliString::from_scalar(letters, Complex64::new(value.re, 0.0), DROP_TOL));
    }
    Ok(out)
}

/// Pauli strings of `coeff b†_j b_k + conj(coeff) b†_k b_j` for `j != k`.
///
/// A real coefficient gives `(coeff/2)(X Z..Z X + Y Z..Z Y)`; an imaginary part
/// adds the `XY`/`YX` cross terms. The returned strings mutually commute.
pub fn hopping_terms(j: usize, k: usize, coeff: Complex64, n_qubits: usize) -> Result<Vec<PauliString>> {
    if j == k {
        return Err(Error::InvalidArgument(format!("hopping between qubit {j} and itself; use number_term")));
    }
    for q in [j, k] {
        if q >= n_qubits {
            return Err(Error::IndexOutOfRange { index: q, len: n_qubits });
        }
    }
    let forward =
        ladder_product_terms(&[LadderOperator::create(j, n_qubits), LadderOperator::annihilate(k, n_qubits)])?;
    let backward =
        ladder_product_terms(&[LadderOperator::create(k, n_qubits), LadderOperator::annihilate(j, n_qubits)])?;
    let mut total: BTreeMap<Vec<Pauli>, Complex64> = BTreeMap::new();
    for (letters, v) in forward {
        *total.entry(letters).or_default() += coeff * v;
    }
    for (letters, v) in backward {
        *total.entry(letters).or_default() += coeff.conj() * v;
    }
    collect_hermitian(total)
}

/// `b†_j b_j = ½ I - ½ Z_j`.
pub fn number_term(j: usize, n_qubits: usize) -> Result<Vec<PauliString>> {
    if j >= n_qubits {
        return Err(Error::IndexOutOfRange { index: j, len: n_qubits });
    }
    Ok(vec![
        PauliString::identity(n_qubits)?.with_coefficient(0.5),
        PauliString::single(n_qubits, j, Pauli::Z)?.with_phase(Phase::MINUS_ONE).with_coefficient(0.5),
    ])
}

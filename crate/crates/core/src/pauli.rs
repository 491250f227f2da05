// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Pauli strings and a matrix-free statevector.
//!
//! Qubit 0 is the leftmost symbol of a ket label and the most significant bit
//! of the basis index, so the ket `|10,01>` is basis index `0b1001`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A single-qubit Pauli letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    fn flips(self) -> bool {
        matches!(self, Pauli::X | Pauli::Y)
    }

    fn signs(self) -> bool {
        matches!(self, Pauli::Y | Pauli::Z)
    }

    /// Letter-wise product `a * b = i^k c`, returned as `(k, c)`.
    fn mul(a: Pauli, b: Pauli) -> (u8, Pauli) {
        use Pauli::*;
        match (a, b) {
            (I, p) | (p, I) => (0, p),
            (X, X) | (Y, Y) | (Z, Z) => (0, I),
            (X, Y) => (1, Z),
            (Y, Z) => (1, X),
            (Z, X) => (1, Y),
            (Y, X) => (3, Z),
            (Z, Y) => (3, X),
            (X, Z) => (3, Y),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

impl TryFrom<char> for Pauli {
    type Error = Error;

    fn try_from(c: char) -> Result<Self> {
        match c {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            other => Err(Error::InvalidArgument(format!("not a Pauli letter: {other:?}"))),
        }
    }
}

/// Element of the phase group `{+1, +i, -1, -i}`, stored as the power of `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_power(k: u8) -> Phase {
        Phase(k % 4)
    }

    pub fn power(self) -> u8 {
        self.0
    }

    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// `+1.0` or `-1.0` for real phases.
    pub fn sign(self) -> Option<f64> {
        match self.0 {
            0 => Some(1.0),
            2 => Some(-1.0),
            _ => None,
        }
    }

    pub fn to_complex(self) -> Complex64 {
        match self.0 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }

    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

/// `phase * coefficient * P_0 ⊗ P_1 ⊗ ... ⊗ P_{n-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliString {
    letters: Vec<Pauli>,
    phase: Phase,
    coefficient: f64,
}

impl PauliString {
    pub fn new(letters: Vec<Pauli>, phase: Phase, coefficient: f64) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidArgument("a Pauli string needs at least one qubit".into()));
        }
        Ok(PauliString { letters, phase, coefficient })
    }

    /// Unit-coefficient string from letters such as `"XZXI"`.
    pub fn from_letters(letters: &str) -> Result<Self> {
        let letters = letters.chars().map(Pauli::try_from).collect::<Result<Vec<_>>>()?;
        PauliString::new(letters, Phase::ONE, 1.0)
    }

    pub fn identity(n_qubits: usize) -> Result<Self> {
        PauliString::new(vec![Pauli::I; n_qubits], Phase::ONE, 1.0)
    }

    /// `pauli` on `qubit`, identity elsewhere.
    pub fn single(n_qubits: usize, qubit: usize, pauli: Pauli) -> Result<Self> {
        if qubit >= n_qubits {
            return Err(Error::IndexOutOfRange { index: qubit, len: n_qubits });
        }
        let mut letters = vec![Pauli::I; n_qubits];
        letters[qubit] = pauli;
        PauliString::new(letters, Phase::ONE, 1.0)
    }

    /// Builds the string `phase * |value| * letters` for a value whose argument
    /// is a multiple of π/2. Returns `None` when the value is (numerically) zero
    /// or not aligned with the phase group.
    pub fn from_scalar(letters: Vec<Pauli>, value: Complex64, tol: f64) -> Option<Self> {
        let (phase, magnitude) = if value.im.abs() <= tol {
            (if value.re < 0.0 { Phase::MINUS_ONE } else { Phase::ONE }, value.re.abs())
        } else if value.re.abs() <= tol {
            (if value.im < 0.0 { Phase::MINUS_I } else { Phase::I }, value.im.abs())
        } else {
            return None;
        };
        if magnitude <= tol {
            return None;
        }
        PauliString::new(letters, phase, magnitude).ok()
    }

    pub fn n_qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.letters
    }

    pub fn letter(&self, qubit: usize) -> Pauli {
        self.letters[qubit]
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn coefficient(&self) -> f64 {
        self.coefficient
    }

    /// The full scalar prefactor `phase * coefficient`.
    pub fn scalar(&self) -> Complex64 {
        self.phase.to_complex() * self.coefficient
    }

    pub fn letters_string(&self) -> String {
        self.letters.iter().map(|p| p.symbol()).collect()
    }

    pub fn with_coefficient(mut self, coefficient: f64) -> Self {
        self.coefficient = coefficient;
        self
    }

    pub fn with_phase(mut self, phase: Phase) -> Self {
        self.phase = phase;
        self
    }

    /// Same letters, unit coefficient, phase `+1`.
    pub fn unit(&self) -> Self {
        PauliString { letters: self.letters.clone(), phase: Phase::ONE, coefficient: 1.0 }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|&p| p == Pauli::I)
    }

    /// Qubits carrying a non-identity letter, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.letters.iter().enumerate().filter(|(_, &p)| p != Pauli::I).map(|(q, _)| q).collect()
    }

    pub fn weight(&self) -> usize {
        self.letters.iter().filter(|&&p| p != Pauli::I).count()
    }

    /// Basis-index bits flipped by the string (X and Y letters).
    pub(crate) fn flip_mask(&self) -> usize {
        self.mask_where(Pauli::flips)
    }

    /// Basis-index bits that contribute a `(-1)^bit` sign (Y and Z letters).
    pub(crate) fn sign_mask(&self) -> usize {
        self.mask_where(Pauli::signs)
    }

    fn mask_where(&self, pred: impl Fn(Pauli) -> bool) -> usize {
        let n = self.letters.len();
        self.letters.iter().enumerate().filter(|(_, &p)| pred(p)).fold(0usize, |m, (q, _)| m | (1 << (n - 1 - q)))
    }

    fn y_count(&self) -> usize {
        self.letters.iter().filter(|&&p| p == Pauli::Y).count()
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.phase.power() >= 2 { '-' } else { '+' };
        let imag = if self.phase.is_real() { "" } else { "i" };
        write!(f, "{sign}{}{imag} {}", self.coefficient, self.letters_string())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Parses `XZXI` or the display form `+0.5 XZXI` / `-0.5i ZY`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some((head, letters)) = s.split_once(char::is_whitespace) else {
            return PauliString::from_letters(s);
        };
        let (negative, body) = match head.as_bytes().first() {
            Some(b'-') => (true, &head[1..]),
            Some(b'+') => (false, &head[1..]),
            _ => (false, head),
        };
        let (imaginary, body) = match body.strip_suffix('i') {
            Some(rest) => (true, rest),
            None => (false, body),
        };
        let coefficient = if body.is_empty() {
            1.0
        } else {
            body.parse::<f64>().map_err(|e| Error::InvalidArgument(format!("bad coefficient {head:?}: {e}")))?
        };
        let phase = Phase::from_power(u8::from(imaginary) + 2 * u8::from(negative));
        Ok(PauliString::from_letters(letters.trim())?.with_phase(phase).with_coefficient(coefficient))
    }
}

fn check_sizes(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::SizeMismatch { expected, found });
    }
    Ok(())
}

/// Operator product `p * q`.
pub fn pauli_mul(p: &PauliString, q: &PauliString) -> Result<PauliString> {
    check_sizes(p.n_qubits(), q.n_qubits())?;
    let mut power = 0u8;
    let letters = p
        .letters
        .iter()
        .zip(&q.letters)
        .map(|(&a, &b)| {
            let (k, c) = Pauli::mul(a, b);
            power += k;
            c
        })
        .collect();
    Ok(PauliString {
        letters,
        phase: p.phase * q.phase * Phase::from_power(power),
        coefficient: p.coefficient * q.coefficient,
    })
}

/// `true` iff `p q = q p`: an even number of positions where both letters are
/// non-identity and differ.
pub fn commutes(p: &PauliString, q: &PauliString) -> Result<bool> {
    check_sizes(p.n_qubits(), q.n_qubits())?;
    let clashes = p.letters.iter().zip(&q.letters).filter(|(&a, &b)| a != Pauli::I && b != Pauli::I && a != b).count();
    Ok(clashes % 2 == 0)
}

/// Dense amplitudes over `2^n` computational basis states.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// `|0...0>`.
    pub fn zero(n_qubits: usize) -> Self {
        StateVector::basis(n_qubits, 0)
    }

    pub fn basis(n_qubits: usize, index: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        StateVector { n_qubits, amplitudes }
    }

    /// All-zero (unnormalized) vector.
    pub fn null(n_qubits: usize) -> Self {
        StateVector { n_qubits, amplitudes: vec![Complex64::new(0.0, 0.0); 1 << n_qubits] }
    }

    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::InvalidArgument(format!("amplitude count {len} is not a positive power of two")));
        }
        Ok(StateVector { n_qubits: len.trailing_zeros() as usize, amplitudes })
    }

    /// Basis state from a ket label such as `"10,01"`; commas and spaces are
    /// ignored.
    pub fn from_ket(label: &str) -> Result<Self> {
        let (n, index) = ket_index(label)?;
        Ok(StateVector::basis(n, index))
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    /// Amplitude of the basis state named by a ket label.
    pub fn amplitude_of(&self, label: &str) -> Result<Complex64> {
        let (n, index) = ket_index(label)?;
        check_sizes(self.n_qubits, n)?;
        Ok(self.amplitudes[index])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        check_sizes(self.n_qubits, other.n_qubits)?;
        Ok(self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum())
    }

    pub fn scale(&mut self, factor: Complex64) {
        self.amplitudes.iter_mut().for_each(|a| *a *= factor);
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, factor: Complex64, other: &StateVector) -> Result<()> {
        check_sizes(self.n_qubits, other.n_qubits)?;
        for (a, b) in self.amplitudes.iter_mut().zip(&other.amplitudes) {
            *a += factor * b;
        }
        Ok(())
    }

    /// Largest entrywise `|a_i - b_i|`.
    pub fn max_abs_diff(&self, other: &StateVector) -> Result<f64> {
        check_sizes(self.n_qubits, other.n_qubits)?;
        Ok(self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
    }

    /// Largest entrywise difference after removing the global phase that best
    /// aligns `other` with `self`.
    pub fn max_abs_diff_up_to_phase(&self, other: &StateVector) -> Result<f64> {
        let overlap = other.inner(self)?;
        let phase = if overlap.norm() > 0.0 { overlap / overlap.norm() } else { Complex64::new(1.0, 0.0) };
        let mut aligned = other.clone();
        aligned.scale(phase);
        self.max_abs_diff(&aligned)
    }

    /// Applies `p` (including its phase and coefficient) in one sweep over the
    /// amplitudes.
    pub fn apply_pauli(&mut self, p: &PauliString) -> Result<()> {
        check_sizes(self.n_qubits, p.n_qubits())?;
        let flip = p.flip_mask();
        let signs = p.sign_mask();
        let factor = p.scalar() * Phase::from_power((p.y_count() % 4) as u8).to_complex();
        let parity = |x: usize| if (x & signs).count_ones().is_multiple_of(2) { 1.0 } else { -1.0 };
        if flip == 0 {
            for (x, a) in self.amplitudes.iter_mut().enumerate() {
                *a *= factor * parity(x);
            }
            return Ok(());
        }
        for x in 0..self.amplitudes.len() {
            let y = x ^ flip;
            if x < y {
                let (ax, ay) = (self.amplitudes[x], self.amplitudes[y]);
                self.amplitudes[y] = factor * parity(x) * ax;
                self.amplitudes[x] = factor * parity(y) * ay;
            }
        }
        Ok(())
    }

    /// Applies `exp(i * angle * P)` exactly, where `P` is the phase-carrying
    /// unit Pauli string `p` (phase ±1, coefficient 1).
    pub fn apply_pauli_rotation(&mut self, p: &PauliString, angle: f64) -> Result<()> {
        check_sizes(self.n_qubits, p.n_qubits())?;
        let Some(sign) = p.phase().sign() else {
            return Err(Error::ContractViolation(format!("rotation generator {p} must have phase +1 or -1")));
        };
        if (p.coefficient() - 1.0).abs() > 1e-12 {
            return Err(Error::ContractViolation(format!("rotation generator {p} must have unit coefficient")));
        }
        let flip = p.flip_mask();
        let signs = p.sign_mask();
        let (c, s) = (angle.cos(), angle.sin());
        // P|x> = y_phase * parity(x) |x ^ flip>
        let y_phase = Phase::from_power((p.y_count() % 4) as u8).to_complex() * sign;
        let parity = |x: usize| if (x & signs).count_ones().is_multiple_of(2) { 1.0 } else { -1.0 };
        let i_sin = Complex64::new(0.0, s);
        if flip == 0 {
            // diagonal: P has eigenvalue ±1 on every basis state
            let plus = Complex64::new(c, s);
            let minus = Complex64::new(c, -s);
            for (x, a) in self.amplitudes.iter_mut().enumerate() {
                let eig = y_phase.re * parity(x);
                *a *= if eig > 0.0 { plus } else { minus };
            }
            return Ok(());
        }
        for x in 0..self.amplitudes.len() {
            let y = x ^ flip;
            if x < y {
                let (ax, ay) = (self.amplitudes[x], self.amplitudes[y]);
                self.amplitudes[x] = c * ax + i_sin * y_phase * parity(y) * ay;
                self.amplitudes[y] = c * ay + i_sin * y_phase * parity(x) * ax;
            }
        }
        Ok(())
    }

    /// Bit value of `qubit` in basis index `index`.
    pub fn bit(&self, index: usize, qubit: usize) -> bool {
        index >> (self.n_qubits - 1 - qubit) & 1 == 1
    }
}

/// Parses a ket label into `(n_qubits, basis_index)`.
pub fn ket_index(label: &str) -> Result<(usize, usize)> {
    let mut n = 0;
    let mut index = 0usize;
    for c in label.chars() {
        match c {
            '0' | '1' => {
                index = (index << 1) | usize::from(c == '1');
                n += 1;
            }
            ',' | ' ' | '|' | '>' | '⟩' => {}
            other => return Err(Error::InvalidArgument(format!("unexpected {other:?} in ket {label:?}"))),
        }
    }
    if n == 0 {
        return Err(Error::InvalidArgument(format!("empty ket {label:?}")));
    }
    Ok((n, index))
}

/// Binary label of basis index `index`, split into groups of `group` qubits
/// (`group == 0` for no separators).
pub fn ket_label(n_qubits: usize, index: usize, group: usize) -> String {
    let mut out = String::with_capacity(n_qubits + n_qubits / group.max(1));
    for q in 0..n_qubits {
        if group > 0 && q > 0 && q % group == 0 {
            out.push(',');
        }
        out.push(if index >> (n_qubits - 1 - q) & 1 == 1 { '1' } else { '0' });
    }
    out
}

// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Standard gates and gate lists, executed on [`StateVector`].

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::StateVector;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Gate {
    H(usize),
    X(usize),
    Z(usize),
    S(usize),
    Sdg(usize),
    /// `Rz(θ) = diag(e^{-iθ/2}, e^{iθ/2})`.
    Rz(usize, f64),
    Cx {
        control: usize,
        target: usize,
    },
}

impl Gate {
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::H(q) | Gate::X(q) | Gate::Z(q) | Gate::S(q) | Gate::Sdg(q) | Gate::Rz(q, _) => vec![q],
            Gate::Cx { control, target } => vec![control, target],
        }
    }

    /// OpenQASM 2.0 statement for register `q`.
    pub fn to_qasm(&self) -> String {
        match *self {
            Gate::H(q) => format!("h q[{q}];"),
            Gate::X(q) => format!("x q[{q}];"),
            Gate::Z(q) => format!("z q[{q}];"),
            Gate::S(q) => format!("s q[{q}];"),
            Gate::Sdg(q) => format!("sdg q[{q}];"),
            Gate::Rz(q, theta) => format!("rz({theta:?}) q[{q}];"),
            Gate::Cx { control, target } => format!("cx q[{control}],q[{target}];"),
        }
    }

    fn single_qubit_matrix(&self) -> Option<(usize, [[Complex64; 2]; 2])> {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let i = Complex64::new(0.0, 1.0);
        Some(match *self {
            Gate::H(q) => (q, [[h, h], [h, -h]]),
            Gate::X(q) => (q, [[zero, one], [one, zero]]),
            Gate::Z(q) => (q, [[one, zero], [zero, -one]]),
            Gate::S(q) => (q, [[one, zero], [zero, i]]),
            Gate::Sdg(q) => (q, [[one, zero], [zero, -i]]),
            Gate::Rz(q, theta) => {
                (q, [[Complex64::from_polar(1.0, -theta / 2.0), zero], [zero, Complex64::from_polar(1.0, theta / 2.0)]])
            }
            Gate::Cx { .. } => return None,
        })
    }

    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        let n = state.n_qubits();
        for q in self.qubits() {
            if q >= n {
                return Err(Error::IndexOutOfRange { index: q, len: n });
            }
        }
        if let Some((q, m)) = self.single_qubit_matrix() {
            let mask = 1 << (n - 1 - q);
            let amps = state.amplitudes_mut();
            for x in 0..amps.len() {
                if x & mask == 0 {
                    let (a0, a1) = (amps[x], amps[x | mask]);
                    amps[x] = m[0][0] * a0 + m[0][1] * a1;
                    amps[x | mask] = m[1][0] * a0 + m[1][1] * a1;
                }
            }
            return Ok(());
        }
        let Gate::Cx { control, target } = *self else { unreachable!() };
        if control == target {
            return Err(Error::InvalidArgument("CNOT control equals target".into()));
        }
        let (cm, tm) = (1 << (n - 1 - control), 1 << (n - 1 - target));
        let amps = state.amplitudes_mut();
        for x in 0..amps.len() {
            if x & cm != 0 && x & tm == 0 {
                amps.swap(x, x | tm);
            }
        }
        Ok(())
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_qasm())
    }
}

/// An ordered gate list on a fixed register.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Circuit {
    pub n_qubits: usize,
    pub gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Self {
        Circuit { n_qubits, gates: Vec::new() }
    }

    pub fn push(&mut self, gate: Gate) {
        self.gates.push(gate);
    }

    pub fn extend(&mut self, other: &Circuit) {
        self.gates.extend_from_slice(&other.gates);
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        if state.n_qubits() != self.n_qubits {
            return Err(Error::SizeMismatch { expected: self.n_qubits, found: state.n_qubits() });
        }
        self.gates.iter().try_for_each(|g| g.apply(state))
    }

    /// Runs the circuit on `|0...0>`.
    pub fn run(&self) -> Result<StateVector> {
        let mut state = StateVector::zero(self.n_qubits);
        self.apply(&mut state)?;
        Ok(state)
    }
}

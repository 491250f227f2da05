// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Lowering of Pauli rotations to H/S/CNOT/Rz gates and OpenQASM 2.0 text.

use std::fmt::Write as _;

use crate::circuit::{Circuit, Gate};
use crate::encoding::{preparation_circuit, ParticleAssignment, QubitLayout};
use crate::error::{Error, Result};
use crate::evolve::{OpticalHamiltonian, PauliRotation, RotationProgram, Strategy};
use crate::pauli::Pauli;

/// Gates for `exp(i angle P)`: basis change onto Z, CNOT parity ladder,
/// `Rz(-2 angle)` on the last support qubit, then the inverse. Identity
/// generators only contribute a global phase and lower to nothing.
pub fn lower_rotation(rotation: &PauliRotation) -> Result<Vec<Gate>> {
    let p = &rotation.generator;
    let Some(sign) = p.phase().sign() else {
        return Err(Error::ContractViolation(format!("rotation generator {p} is not Hermitian")));
    };
    let support = p.support();
    let Some(&last) = support.last() else {
        return Ok(Vec::new());
    };
    let angle = sign * p.coefficient() * rotation.angle;

    let mut basis = Vec::new();
    let mut unbasis = Vec::new();
    for &q in &support {
        match p.letter(q) {
            Pauli::X => {
                basis.push(Gate::H(q));
                unbasis.push(Gate::H(q));
            }
            Pauli::Y => {
                basis.extend([Gate::Sdg(q), Gate::H(q)]);
                unbasis.extend([Gate::H(q), Gate::S(q)]);
            }
            Pauli::Z | Pauli::I => {}
        }
    }
    let ladder: Vec<Gate> = support.windows(2).map(|w| Gate::Cx { control: w[0], target: w[1] }).collect();

    let mut gates = basis;
    gates.extend(ladder.iter().copied());
    gates.push(Gate::Rz(last, -2.0 * angle));
    gates.extend(ladder.iter().rev().copied());
    gates.extend(unbasis);
    Ok(gates)
}

/// Preparation followed by the lowered evolution of `h`.
pub fn experiment_circuit(
    layout: &QubitLayout,
    assignment: &ParticleAssignment,
    h: &OpticalHamiltonian,
) -> Result<Circuit> {
    let mut circuit = preparation_circuit(layout, assignment)?;
    let program = RotationProgram::plan(h, layout, Strategy::Auto)?;
    for rotation in &program.rotations {
        for gate in lower_rotation(rotation)? {
            circuit.push(gate);
        }
    }
    Ok(circuit)
}

/// OpenQASM 2.0 program with a final measurement of every qubit.
pub fn to_qasm(circuit: &Circuit) -> String {
    let n = circuit.n_qubits;
    let mut out = String::from("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    writeln!(out, "qreg q[{n}];\ncreg c[{n}];").expect("writing to a String");
    for gate in &circuit.gates {
        out.push_str(&gate.to_qasm());
        out.push('\n');
    }
    out.push_str("measure q -> c;\n");
    out
}

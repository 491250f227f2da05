// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Bosons in linear-optical networks, simulated on qubits.
//!
//! Each boson is written as an antisymmetrized fermion with a private copy of
//! every mode, then mapped to qubits by the Jordan-Wigner transformation.
//! Number-conserving Hamiltonians become sums of Pauli strings that are
//! exponentiated exactly and applied matrix-free to a dense state vector.
//! Results are checked against matrix permanents.
//!
//! ```
//! let run = boson_jw::hom::run_hom_ideal().unwrap();
//! assert!(run.coincidence() < 1e-10);
//! ```

pub mod circuit;
pub mod cli;
mod combinatorics;
pub mod encoding;
pub mod error;
pub mod evolve;
pub mod hom;
pub mod jw;
pub mod oracle;
pub mod pauli;
pub mod qasm;

pub use combinatorics::occupations;
pub use error::{Error, Result};
pub use pauli::{commutes, pauli_mul, Pauli, PauliString, Phase, StateVector};

// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by the simulator modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for {len} entries")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error(
        "matrix is not Hermitian: entry ({row}, {col}) differs from the conjugate of ({col}, {row}) by {deviation:e}"
    )]
    NonHermitian { row: usize, col: usize, deviation: f64 },

    #[error("matrix is not unitary (max deviation of u u^dagger from identity: {0:e})")]
    NonUnitary(f64),

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("mode {mode} cannot hold another particle in internal slot (label {label}, state {internal})")]
    CapacityExceeded { mode: usize, label: usize, internal: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Linear-optical evolution on the qubit register.
//!
//! `T = exp(i t Σ_jk Φ_jk a†_j a_k)` maps `a†_i -> Σ_j u_ji a†_j` with
//! `u = exp(i t Φ)`, i.e. column `i` of `u` is the image of input mode `i`.
//! On qubits the same exponent acts on every `(label, internal)` channel.
//!
//! The evolution is applied exactly as a list of Pauli rotations. When every
//! Hamiltonian string commutes with every other, the rotations are the strings
//! themselves. Otherwise `u` is factored into two-mode blocks, each of which
//! splits into phase shifts and a real beamsplitter whose two hopping strings
//! commute.

use std::collections::HashMap;
use std::f64::consts::FRAC_PI_2;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::encoding::QubitLayout;
use crate::error::{Error, Result};
use crate::jw::{hopping_terms, number_term};
use crate::pauli::{commutes, Pauli, PauliString, StateVector};

/// Hermiticity tolerance for `Φ`.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Unitarity tolerance for mesh inputs.
pub const UNITARY_TOL: f64 = 1e-10;
/// Entries below this magnitude are treated as zero when synthesizing.
const ZERO_TOL: f64 = 1e-15;

/// Hermitian mode-coupling matrix `Φ` and evolution time `t` (ħ = 1).
#[derive(Clone, Debug, PartialEq)]
pub struct OpticalHamiltonian {
    phi: DMatrix<Complex64>,
    t: f64,
}

impl OpticalHamiltonian {
    pub fn new(phi: DMatrix<Complex64>, t: f64) -> Result<Self> {
        if !phi.is_square() {
            return Err(Error::NotSquare { rows: phi.nrows(), cols: phi.ncols() });
        }
        let m = phi.nrows();
        if m == 0 {
            return Err(Error::InvalidArgument("Φ must have at least one mode".into()));
        }
        for r in 0..m {
            for c in r..m {
                let deviation = (phi[(r, c)] - phi[(c, r)].conj()).norm();
                if deviation > HERMITIAN_TOL {
                    return Err(Error::NonHermitian { row: r, col: c, deviation });
                }
            }
        }
        Ok(OpticalHamiltonian { phi, t })
    }

    /// `t = π/4`, `Φ = [[0, 1], [1, 0]]`: a balanced beamsplitter.
    pub fn hom() -> Self {
        let (zero, one) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        OpticalHamiltonian {
            phi: DMatrix::from_row_slice(2, 2, &[zero, one, one, zero]),
            t: std::f64::consts::FRAC_PI_4,
        }
    }

    pub fn phi(&self) -> &DMatrix<Complex64> {
        &self.phi
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn n_modes(&self) -> usize {
        self.phi.nrows()
    }

    fn check_layout(&self, layout: &QubitLayout) -> Result<()> {
        if layout.n_modes != self.n_modes() {
            return Err(Error::SizeMismatch { expected: layout.n_modes, found: self.n_modes() });
        }
        Ok(())
    }
}

/// `u = exp(i t Φ)` via the Hermitian eigendecomposition of `Φ`.
pub fn single_particle_unitary(h: &OpticalHamiltonian) -> DMatrix<Complex64> {
    let eig = h.phi.clone().symmetric_eigen();
    let v = &eig.eigenvectors;
    let phases = DMatrix::from_diagonal(&eig.eigenvalues.map(|lambda| Complex64::from_polar(1.0, h.t * lambda)));
    v * phases * v.adjoint()
}

/// Largest entry of `|u u† - I|`.
pub fn unitarity_error(u: &DMatrix<Complex64>) -> f64 {
    let n = u.nrows();
    let prod = u * u.adjoint();
    let id = DMatrix::<Complex64>::identity(n, n);
    (prod - id).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn scaled(p: &PauliString, factor: f64) -> Option<PauliString> {
    PauliString::from_scalar(p.letters().to_vec(), p.scalar() * factor, ZERO_TOL)
}

/// Pauli strings of `t Σ_{μ,s} Σ_jk Φ_jk b†_{j,μ,s} b_{k,μ,s}`, with
/// coefficients of identical strings merged.
pub fn qubit_hamiltonian(h: &OpticalHamiltonian, layout: &QubitLayout) -> Result<Vec<PauliString>> {
    h.check_layout(layout)?;
    let n = layout.n_qubits();
    let m = layout.n_modes;
    let mut raw = Vec::new();
    for channel in 0..layout.n_channels() {
        for j in 0..m {
            let qj = layout.channel_qubit(j, channel);
            let diag = h.phi[(j, j)].re * h.t;
            if diag.abs() > ZERO_TOL {
                raw.extend(number_term(qj, n)?.iter().filter_map(|p| scaled(p, diag)));
            }
            for k in j + 1..m {
                let coupling = h.phi[(j, k)] * h.t;
                if coupling.norm() > ZERO_TOL {
                    let qk = layout.channel_qubit(k, channel);
                    raw.extend(hopping_terms(qj, qk, coupling, n)?);
                }
            }
        }
    }
    let mut index: HashMap<Vec<Pauli>, usize> = HashMap::new();
    let mut merged: Vec<(Vec<Pauli>, Complex64)> = Vec::new();
    for p in raw {
        match index.get(p.letters()) {
            Some(&i) => merged[i].1 += p.scalar(),
            None => {
                index.insert(p.letters().to_vec(), merged.len());
                merged.push((p.letters().to_vec(), p.scalar()));
            }
        }
    }
    Ok(merged.into_iter().filter_map(|(letters, v)| PauliString::from_scalar(letters, v, ZERO_TOL)).collect())
}

/// A two-mode block `D(phase_j, phase_k) · exp(iθ σx) · D(phi, 0)` acting on
/// modes `(j, k)`, where `D(a, b) = diag(e^{ia}, e^{ib})`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BeamsplitterLayer {
    pub modes: (usize, usize),
    pub theta: f64,
    pub phi: f64,
    pub phase_j: f64,
    pub phase_k: f64,
}

impl BeamsplitterLayer {
    pub fn block(&self) -> [[Complex64; 2]; 2] {
        let (c, s) = (self.theta.cos(), self.theta.sin());
        let e = |a: f64| Complex64::from_polar(1.0, a);
        let i = Complex64::new(0.0, 1.0);
        [
            [e(self.phase_j + self.phi) * c, e(self.phase_j) * i * s],
            [e(self.phase_k + self.phi) * i * s, e(self.phase_k) * c],
        ]
    }

    /// Parameters of a 2×2 unitary block on `modes`.
    pub fn from_block(modes: (usize, usize), b: [[Complex64; 2]; 2]) -> Self {
        let theta = b[0][1].norm().atan2(b[0][0].norm());
        let (phase_j, phase_k, phi) = if b[0][1].norm() <= ZERO_TOL {
            (b[0][0].arg(), b[1][1].arg(), 0.0)
        } else if b[0][0].norm() <= ZERO_TOL {
            (b[0][1].arg() - FRAC_PI_2, b[1][0].arg() - FRAC_PI_2, 0.0)
        } else {
            let phase_j = b[0][1].arg() - FRAC_PI_2;
            (phase_j, b[1][1].arg(), b[0][0].arg() - phase_j)
        };
        BeamsplitterLayer { modes, theta, phi, phase_j, phase_k }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MeshLayer {
    /// `e^{i angle}` on a single mode.
    Phase {
        mode: usize,
        angle: f64,
    },
    Beamsplitter(BeamsplitterLayer),
}

impl MeshLayer {
    /// The layer as an `m × m` matrix.
    pub fn embedded(&self, m: usize) -> DMatrix<Complex64> {
        let mut e = DMatrix::<Complex64>::identity(m, m);
        match *self {
            MeshLayer::Phase { mode, angle } => e[(mode, mode)] = Complex64::from_polar(1.0, angle),
            MeshLayer::Beamsplitter(bs) => {
                let (j, k) = bs.modes;
                let b = bs.block();
                e[(j, j)] = b[0][0];
                e[(j, k)] = b[0][1];
                e[(k, j)] = b[1][0];
                e[(k, k)] = b[1][1];
            }
        }
        e
    }
}

/// Factors `u` into phase shifts and nearest-neighbour two-mode blocks.
/// Applying the layers in order (each left-multiplying the previous product)
/// reconstructs `u`.
pub fn decompose_mesh(u: &DMatrix<Complex64>) -> Result<Vec<MeshLayer>> {
    if !u.is_square() {
        return Err(Error::NotSquare { rows: u.nrows(), cols: u.ncols() });
    }
    let err = unitarity_error(u);
    if err > UNITARY_TOL {
        return Err(Error::NonUnitary(err));
    }
    let m = u.nrows();
    let mut t = u.clone();
    // rotations G with G · t nulling t[(r, c)] against t[(r-1, c)]
    let mut nullers: Vec<(usize, [[Complex64; 2]; 2])> = Vec::new();
    for c in 0..m.saturating_sub(1) {
        for r in (c + 1..m).rev() {
            let (a, b) = (t[(r - 1, c)], t[(r, c)]);
            if b.norm() <= ZERO_TOL {
                continue;
            }
            let rho = (a.norm_sqr() + b.norm_sqr()).sqrt();
            let g = [[a.conj() / rho, b.conj() / rho], [-b / rho, a / rho]];
            for col in 0..m {
                let (x, y) = (t[(r - 1, col)], t[(r, col)]);
                t[(r - 1, col)] = g[0][0] * x + g[0][1] * y;
                t[(r, col)] = g[1][0] * x + g[1][1] * y;
            }
            nullers.push((r - 1, g));
        }
    }
    // u = G_1† ... G_n† D: D acts first, G_1† last
    let mut layers = Vec::with_capacity(m + nullers.len());
    for mode in 0..m {
        let angle = t[(mode, mode)].arg();
        if angle.abs() > ZERO_TOL || m == 1 {
            layers.push(MeshLayer::Phase { mode, angle });
        }
    }
    for (j, g) in nullers.into_iter().rev() {
        let dagger = [[g[0][0].conj(), g[1][0].conj()], [g[0][1].conj(), g[1][1].conj()]];
        layers.push(MeshLayer::Beamsplitter(BeamsplitterLayer::from_block((j, j + 1), dagger)));
    }
    Ok(layers)
}

/// Product of the embedded layers, first layer rightmost.
pub fn mesh_unitary(layers: &[MeshLayer], m: usize) -> DMatrix<Complex64> {
    layers.iter().fold(DMatrix::identity(m, m), |acc, layer| layer.embedded(m) * acc)
}

/// `exp(i angle P)` for a unit generator `P` with phase ±1.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliRotation {
    pub generator: PauliString,
    pub angle: f64,
}

impl PauliRotation {
    /// Rotation equal to `exp(i h)` for a Hermitian string `h`.
    pub fn from_hermitian(h: &PauliString) -> Result<Self> {
        let Some(sign) = h.phase().sign() else {
            return Err(Error::ContractViolation(format!("{h} is not Hermitian")));
        };
        Ok(PauliRotation { generator: h.unit(), angle: sign * h.coefficient() })
    }

    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        state.apply_pauli_rotation(&self.generator, self.angle)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Direct rotations when all strings commute, mesh otherwise.
    Auto,
    /// Mesh factorization regardless of commutation.
    Mesh,
}

/// Which route produced a rotation program.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvolutionPath {
    CommutingStrings,
    Mesh,
}

/// A sequence of rotations whose ordered product is `exp(i t H_qubit)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RotationProgram {
    pub path: EvolutionPath,
    pub n_qubits: usize,
    pub rotations: Vec<PauliRotation>,
}

impl RotationProgram {
    pub fn plan(h: &OpticalHamiltonian, layout: &QubitLayout, strategy: Strategy) -> Result<Self> {
        h.check_layout(layout)?;
        if strategy == Strategy::Auto {
            let strings = qubit_hamiltonian(h, layout)?;
            if all_commute(&strings)? {
                let rotations = strings.iter().map(PauliRotation::from_hermitian).collect::<Result<_>>()?;
                return Ok(RotationProgram {
                    path: EvolutionPath::CommutingStrings,
                    n_qubits: layout.n_qubits(),
                    rotations,
                });
            }
        }
        let u = single_particle_unitary(h);
        let layers = decompose_mesh(&u)?;
        Ok(RotationProgram {
            path: EvolutionPath::Mesh,
            n_qubits: layout.n_qubits(),
            rotations: mesh_rotations(&layers, layout)?,
        })
    }

    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        if state.n_qubits() != self.n_qubits {
            return Err(Error::SizeMismatch { expected: self.n_qubits, found: state.n_qubits() });
        }
        self.rotations.iter().try_for_each(|r| r.apply(state))
    }
}

fn all_commute(strings: &[PauliString]) -> Result<bool> {
    for (i, p) in strings.iter().enumerate() {
        for q in &strings[i + 1..] {
            if !commutes(p, q)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `exp(i angle n_q) = exp(i angle/2) exp(-i angle/2 Z_q)`.
fn phase_rotations(q: usize, angle: f64, n: usize, out: &mut Vec<PauliRotation>) -> Result<()> {
    if angle.abs() <= ZERO_TOL {
        return Ok(());
    }
    out.push(PauliRotation { generator: PauliString::identity(n)?, angle: angle / 2.0 });
    out.push(PauliRotation { generator: PauliString::single(n, q, Pauli::Z)?, angle: -angle / 2.0 });
    Ok(())
}

/// Rotations realizing each mesh layer on every channel of the layout.
pub fn mesh_rotations(layers: &[MeshLayer], layout: &QubitLayout) -> Result<Vec<PauliRotation>> {
    let n = layout.n_qubits();
    let mut out = Vec::new();
    for layer in layers {
        for channel in 0..layout.n_channels() {
            match *layer {
                MeshLayer::Phase { mode, angle } => {
                    phase_rotations(layout.channel_qubit(mode, channel), angle, n, &mut out)?
                }
                MeshLayer::Beamsplitter(bs) => {
                    let (j, k) = bs.modes;
                    let (qj, qk) = (layout.channel_qubit(j, channel), layout.channel_qubit(k, channel));
                    phase_rotations(qj, bs.phi, n, &mut out)?;
                    if bs.theta.abs() > ZERO_TOL {
                        for p in hopping_terms(qj, qk, Complex64::new(bs.theta, 0.0), n)? {
                            out.push(PauliRotation::from_hermitian(&p)?);
                        }
                    }
                    phase_rotations(qj, bs.phase_j, n, &mut out)?;
                    phase_rotations(qk, bs.phase_k, n, &mut out)?;
                }
            }
        }
    }
    Ok(out)
}

/// Applies `exp(i t H_qubit)` to `state` with no Trotter error.
pub fn evolve_exact(state: &mut StateVector, h: &OpticalHamiltonian, layout: &QubitLayout) -> Result<EvolutionPath> {
    evolve_with(state, h, layout, Strategy::Auto)
}

pub fn evolve_with(
    state: &mut StateVector,
    h: &OpticalHamiltonian,
    layout: &QubitLayout,
    strategy: Strategy,
) -> Result<EvolutionPath> {
    if state.n_qubits() != layout.n_qubits() {
        return Err(Error::SizeMismatch { expected: layout.n_qubits(), found: state.n_qubits() });
    }
    let program = RotationProgram::plan(h, layout, strategy)?;
    program.apply(state)?;
    Ok(program.path)
}

// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Qubit layout for effective bosons and the states built on it.
//!
//! Each spatial mode owns a bundle of `N * S` qubits: one per antisymmetrization
//! label `μ` (there are as many labels as particles, which also caps the number
//! of particles a mode can hold) times one per internal state `s`. Bundles are
//! mode-major, then label, then internal state.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::circuit::{Circuit, Gate};
use crate::combinatorics::{occupations, signed_permutations};
use crate::error::{Error, Result};
use crate::jw::{apply_ladder, LadderOperator};
use crate::pauli::StateVector;

const NORM_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QubitLayout {
    pub n_modes: usize,
    pub n_particles: usize,
    pub n_internal: usize,
}

impl QubitLayout {
    pub fn new(n_modes: usize, n_particles: usize, n_internal: usize) -> Result<Self> {
        if n_modes == 0 || n_particles == 0 || n_internal == 0 {
            return Err(Error::InvalidArgument(format!(
                "layout sizes must be positive (modes {n_modes}, particles {n_particles}, internal {n_internal})"
            )));
        }
        let layout = QubitLayout { n_modes, n_particles, n_internal };
        if layout.n_qubits() > 30 {
            return Err(Error::Unsupported(format!("{} qubits exceed the statevector limit", layout.n_qubits())));
        }
        Ok(layout)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_modes * self.n_particles * self.n_internal
    }

    /// Qubits per mode bundle.
    pub fn bundle_size(&self) -> usize {
        self.n_particles * self.n_internal
    }

    /// Number of `(label, internal)` channels, each a copy of the mode register.
    pub fn n_channels(&self) -> usize {
        self.bundle_size()
    }

    /// Qubit of `(mode, label, internal)`; `mode` and `label` are 1-based,
    /// `internal` is 0-based.
    pub fn qubit_index(&self, mode: usize, label: usize, internal: usize) -> Result<usize> {
        if !(1..=self.n_modes).contains(&mode) {
            return Err(Error::IndexOutOfRange { index: mode, len: self.n_modes });
        }
        if !(1..=self.n_particles).contains(&label) {
            return Err(Error::IndexOutOfRange { index: label, len: self.n_particles });
        }
        if internal >= self.n_internal {
            return Err(Error::IndexOutOfRange { index: internal, len: self.n_internal });
        }
        Ok((mode - 1) * self.bundle_size() + (label - 1) * self.n_internal + internal)
    }

    /// Inverse of [`qubit_index`](Self::qubit_index).
    pub fn coordinates(&self, qubit: usize) -> Result<(usize, usize, usize)> {
        if qubit >= self.n_qubits() {
            return Err(Error::IndexOutOfRange { index: qubit, len: self.n_qubits() });
        }
        let mode = qubit / self.bundle_size() + 1;
        let within = qubit % self.bundle_size();
        Ok((mode, within / self.n_internal + 1, within % self.n_internal))
    }

    /// Qubit of 0-based `mode` in channel `channel` (`channel = (μ-1) S + s`).
    pub(crate) fn channel_qubit(&self, mode: usize, channel: usize) -> usize {
        mode * self.bundle_size() + channel
    }

    /// Ket label of a basis index with one comma-separated group per mode.
    pub fn ket_label(&self, index: usize) -> String {
        crate::pauli::ket_label(self.n_qubits(), index, self.bundle_size())
    }

    fn check_state(&self, state: &StateVector) -> Result<()> {
        if state.n_qubits() != self.n_qubits() {
            return Err(Error::SizeMismatch { expected: self.n_qubits(), found: state.n_qubits() });
        }
        Ok(())
    }
}

/// One particle: its 1-based spatial mode and internal amplitude vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Particle {
    pub mode: usize,
    pub internal: Vec<Complex64>,
}

impl Particle {
    /// Particle in internal basis state `s`.
    pub fn in_basis(mode: usize, s: usize, n_internal: usize) -> Self {
        let mut internal = vec![Complex64::new(0.0, 0.0); n_internal];
        internal[s] = Complex64::new(1.0, 0.0);
        Particle { mode, internal }
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct ParticleAssignment {
    pub particles: Vec<Particle>,
}

impl ParticleAssignment {
    pub fn new(particles: Vec<Particle>) -> Self {
        ParticleAssignment { particles }
    }

    /// Indistinguishable particles (internal state 0) in the given 1-based modes.
    pub fn ideal(modes: &[usize], n_internal: usize) -> Self {
        ParticleAssignment { particles: modes.iter().map(|&m| Particle::in_basis(m, 0, n_internal)).collect() }
    }

    pub fn len(&self) -> usize {
        self.particles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.particles.is_empty()
    }

    /// Input occupation per mode.
    pub fn occupation(&self, n_modes: usize) -> Vec<usize> {
        let mut occ = vec![0; n_modes];
        for p in &self.particles {
            occ[p.mode - 1] += 1;
        }
        occ
    }

    pub fn validate(&self, layout: &QubitLayout) -> Result<()> {
        if self.particles.len() != layout.n_particles {
            return Err(Error::ContractViolation(format!(
                "layout expects {} particles, assignment has {}",
                layout.n_particles,
                self.particles.len()
            )));
        }
        for (alpha, p) in self.particles.iter().enumerate() {
            if !(1..=layout.n_modes).contains(&p.mode) {
                return Err(Error::ContractViolation(format!(
                    "particle {} sits in mode {}, outside 1..={}",
                    alpha + 1,
                    p.mode,
                    layout.n_modes
                )));
            }
            if p.internal.len() != layout.n_internal {
                return Err(Error::ContractViolation(format!(
                    "particle {} has {} internal amplitudes, layout expects {}",
                    alpha + 1,
                    p.internal.len(),
                    layout.n_internal
                )));
            }
            let norm: f64 = p.internal.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            if (norm - 1.0).abs() > NORM_TOL {
                return Err(Error::ContractViolation(format!(
                    "particle {} internal state has norm {norm}, expected 1",
                    alpha + 1
                )));
            }
        }
        Ok(())
    }
}

/// Effective-boson state `Σ_σ sgn(σ) Π_α b†^{σ(α)}_{i_α, r_α} |vac>`, scaled
/// to unit norm.
///
/// Each term is built by applying JW creation operators to the vacuum, last
/// particle first, so the operator product reads in ascending particle order.
/// Internal superpositions are expanded distributively.
pub fn antisymmetrized_state(layout: &QubitLayout, assignment: &ParticleAssignment) -> Result<StateVector> {
    assignment.validate(layout)?;
    let n = layout.n_qubits();
    let n_particles = layout.n_particles;
    let mut total = StateVector::null(n);

    // every internal basis choice (s_1, .., s_N) with a nonzero amplitude product
    let mut choices: Vec<(Vec<usize>, Complex64)> = vec![(Vec::new(), Complex64::new(1.0, 0.0))];
    for p in &assignment.particles {
        choices = choices
            .into_iter()
            .flat_map(|(prefix, amp)| {
                p.internal.iter().enumerate().filter(|(_, a)| a.norm() > 0.0).map(move |(s, a)| {
                    let mut next = prefix.clone();
                    next.push(s);
                    (next, amp * a)
                })
            })
            .collect();
    }

    for (perm, sign) in signed_permutations(n_particles) {
        for (internal, amp) in &choices {
            let mut term = StateVector::zero(n);
            for alpha in (0..n_particles).rev() {
                let mode = assignment.particles[alpha].mode;
                let label = perm[alpha] + 1;
                let s = internal[alpha];
                let q = layout.qubit_index(mode, label, s)?;
                apply_ladder(&mut term, LadderOperator::create(q, n))?;
                if term.norm_sqr() == 0.0 {
                    return Err(Error::CapacityExceeded { mode, label, internal: s });
                }
            }
            total.add_scaled(amp * sign, &term)?;
        }
    }

    let norm = total.norm();
    if norm <= NORM_TOL {
        return Err(Error::ContractViolation("antisymmetrized state vanishes".into()));
    }
    total.scale(Complex64::new(1.0 / norm, 0.0));
    Ok(total)
}

/// A gate sequence preparing the antisymmetrized state of two particles whose
/// internal states are basis states, starting from `|0...0>`.
///
/// Uses at most ten gates: a Hadamard splits the two antisymmetrized terms,
/// CNOTs copy the branch onto the remaining qubits, and `Z` / `(ZX)^2` fix the
/// relative and global signs.
pub fn antisymmetrize_circuit_n2(layout: &QubitLayout, assignment: &ParticleAssignment) -> Result<Circuit> {
    if layout.n_particles != 2 {
        return Err(Error::Unsupported(format!(
            "two-particle antisymmetrization circuit requested for {} particles",
            layout.n_particles
        )));
    }
    let target = antisymmetrized_state(layout, assignment)?;
    let mut terms = nonzero_terms(&target);
    let n = layout.n_qubits();
    let bits = |x: usize| (0..n).filter(move |&q| x >> (n - 1 - q) & 1 == 1).collect::<Vec<_>>();
    let mut circuit = Circuit::new(n);
    match terms.as_slice() {
        [(x, amp)] => {
            bits(*x).into_iter().for_each(|q| circuit.push(Gate::X(q)));
            push_sign(&mut circuit, *amp, bits(*x)[0])?;
        }
        [_, _] => {
            // put the positive term first so only the second may need a sign flip
            terms.sort_by(|a, b| b.1.re.total_cmp(&a.1.re));
            let (a, amp_a) = terms[0];
            let (b, amp_b) = terms[1];
            let (qa, qb) = (bits(a), bits(b));
            if qa.len() != 2 || qb.len() != 2 {
                return Err(Error::Unsupported("unexpected term structure".into()));
            }
            circuit.push(Gate::H(qa[0]));
            circuit.push(Gate::Cx { control: qa[0], target: qa[1] });
            circuit.push(Gate::X(qb[0]));
            circuit.push(Gate::Cx { control: qa[0], target: qb[0] });
            circuit.push(Gate::Cx { control: qb[0], target: qb[1] });
            let h = std::f64::consts::FRAC_1_SQRT_2;
            let rel = amp_b / amp_a;
            if (rel - Complex64::new(-1.0, 0.0)).norm() < 1e-12 {
                circuit.push(Gate::Z(qb[0]));
            } else if (rel - Complex64::new(1.0, 0.0)).norm() >= 1e-12 {
                return Err(Error::Unsupported(format!("relative amplitude {rel} is not ±1")));
            }
            push_sign(&mut circuit, amp_a / h, qa[0])?;
        }
        _ => return Err(Error::Unsupported("internal superpositions are not gate-preparable by this circuit".into())),
    }
    Ok(circuit)
}

/// Circuit for any initial state that is a single basis state, or a two-particle
/// antisymmetrized pair.
pub fn preparation_circuit(layout: &QubitLayout, assignment: &ParticleAssignment) -> Result<Circuit> {
    let target = antisymmetrized_state(layout, assignment)?;
    let terms = nonzero_terms(&target);
    if terms.len() == 1 {
        let n = layout.n_qubits();
        let (x, amp) = terms[0];
        let mut circuit = Circuit::new(n);
        let qubits: Vec<usize> = (0..n).filter(|&q| x >> (n - 1 - q) & 1 == 1).collect();
        qubits.iter().for_each(|&q| circuit.push(Gate::X(q)));
        push_sign(&mut circuit, amp, qubits[0])?;
        return Ok(circuit);
    }
    if layout.n_particles == 2 {
        return antisymmetrize_circuit_n2(layout, assignment);
    }
    Err(Error::Unsupported(format!(
        "no preparation circuit for a {}-particle state with {} terms",
        layout.n_particles,
        terms.len()
    )))
}

fn nonzero_terms(state: &StateVector) -> Vec<(usize, Complex64)> {
    state.amplitudes().iter().enumerate().filter(|(_, a)| a.norm() > 1e-12).map(|(i, a)| (i, *a)).collect()
}

/// Appends `-I` (as `(Z X)^2` on `qubit`) when `amp` is -1.
fn push_sign(circuit: &mut Circuit, amp: Complex64, qubit: usize) -> Result<()> {
    if (amp - Complex64::new(1.0, 0.0)).norm() < 1e-12 {
        return Ok(());
    }
    if (amp + Complex64::new(1.0, 0.0)).norm() < 1e-12 {
        for _ in 0..2 {
            circuit.push(Gate::Z(qubit));
            circuit.push(Gate::X(qubit));
        }
        return Ok(());
    }
    Err(Error::Unsupported(format!("amplitude {amp} needs a phase the circuit cannot produce")))
}

/// Per-mode occupation with its probability.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BosonOutcome {
    pub occupation: Vec<usize>,
    pub probability: f64,
}

/// Mode-occupation distribution decoded from a qubit state. Basis states whose
/// total excitation differs from the particle count are pooled as leakage.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutcomeDistribution {
    pub outcomes: Vec<BosonOutcome>,
    pub leakage: f64,
}

impl OutcomeDistribution {
    pub fn probability(&self, occupation: &[usize]) -> f64 {
        self.outcomes.iter().find(|o| o.occupation == occupation).map_or(0.0, |o| o.probability)
    }

    pub fn total(&self) -> f64 {
        self.outcomes.iter().map(|o| o.probability).sum::<f64>() + self.leakage
    }

    pub fn iter(&self) -> impl Iterator<Item = &BosonOutcome> {
        self.outcomes.iter()
    }
}

/// Counts excited qubits per mode bundle for each basis state (summing over
/// labels and internal states) and accumulates probabilities per occupation.
/// Every occupation of `N` particles over `M` modes is listed, zeros included.
pub fn decode_outcomes(state: &StateVector, layout: &QubitLayout) -> Result<OutcomeDistribution> {
    layout.check_state(state)?;
    let n = layout.n_qubits();
    let bundle = layout.bundle_size();
    let bundle_mask = (1usize << bundle) - 1;
    let mut table: BTreeMap<Vec<usize>, f64> =
        occupations(layout.n_modes, layout.n_particles).into_iter().map(|o| (o, 0.0)).collect();
    let mut leakage = 0.0;
    for (x, a) in state.amplitudes().iter().enumerate() {
        let p = a.norm_sqr();
        if p == 0.0 {
            continue;
        }
        let occupation: Vec<usize> = (0..layout.n_modes)
            .map(|mode| {
                let shift = n - (mode + 1) * bundle;
                ((x >> shift) & bundle_mask).count_ones() as usize
            })
            .collect();
        if occupation.iter().sum::<usize>() == layout.n_particles {
            *table.entry(occupation).or_insert(0.0) += p;
        } else {
            leakage += p;
        }
    }
    // descending order puts (N, 0, ..) first
    let outcomes =
        table.into_iter().rev().map(|(occupation, probability)| BosonOutcome { occupation, probability }).collect();
    Ok(OutcomeDistribution { outcomes, leakage })
}

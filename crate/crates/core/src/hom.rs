// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! Two-photon Hong-Ou-Mandel experiments: ideal bunching and the dip traced
//! out by partial distinguishability.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;

use crate::encoding::{
    antisymmetrized_state, decode_outcomes, OutcomeDistribution, Particle, ParticleAssignment, QubitLayout,
};
use crate::error::{Error, Result};
use crate::evolve::{evolve_exact, OpticalHamiltonian};
use crate::pauli::StateVector;

/// Gate angles of the excitation-preserving preparation gate.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct GivensParams {
    pub theta: f64,
    pub phi: f64,
    pub gamma: f64,
}

impl GivensParams {
    pub fn new(theta: f64, phi: f64, gamma: f64) -> Self {
        GivensParams { theta, phi, gamma }
    }

    /// `ζ = e^{iγ} cos(θ/2)`.
    pub fn zeta(&self) -> Complex64 {
        Complex64::from_polar((self.theta / 2.0).cos(), self.gamma)
    }

    /// `ξ = -e^{iφ} sin(θ/2)`.
    pub fn xi(&self) -> Complex64 {
        -Complex64::from_polar((self.theta / 2.0).sin(), self.phi)
    }

    /// Internal state `ζ|0> + ξ|1>` of the second photon.
    pub fn internal_state(&self) -> Vec<Complex64> {
        vec![self.zeta(), self.xi()]
    }
}

/// Applies the gate that is the identity on `|00>`, `|11>` of `(q_a, q_b)` and
/// `[[e^{iγ}c, -e^{iφ}s], [e^{-iφ}s, e^{-iγ}c]]` on `(|01>, |10>)`, with
/// `c = cos(θ/2)`, `s = sin(θ/2)`.
pub fn givens_gate(state: &mut StateVector, q_a: usize, q_b: usize, p: GivensParams) -> Result<()> {
    let n = state.n_qubits();
    if q_a == q_b {
        return Err(Error::InvalidArgument(format!("Givens gate on coincident qubit {q_a}")));
    }
    for q in [q_a, q_b] {
        if q >= n {
            return Err(Error::IndexOutOfRange { index: q, len: n });
        }
    }
    let (c, s) = ((p.theta / 2.0).cos(), (p.theta / 2.0).sin());
    let m00 = Complex64::from_polar(c, p.gamma);
    let m01 = -Complex64::from_polar(s, p.phi);
    let m10 = Complex64::from_polar(s, -p.phi);
    let m11 = Complex64::from_polar(c, -p.gamma);
    let (ma, mb) = (1usize << (n - 1 - q_a), 1usize << (n - 1 - q_b));
    let amps = state.amplitudes_mut();
    for x in 0..amps.len() {
        // x = |q_a q_b> = |01>
        if x & ma == 0 && x & mb != 0 {
            let y = (x | ma) & !mb;
            let (a01, a10) = (amps[x], amps[y]);
            amps[x] = m00 * a01 + m01 * a10;
            amps[y] = m10 * a01 + m11 * a10;
        }
    }
    Ok(())
}

/// Final state and decoded outcomes of an experiment.
#[derive(Clone, Debug, PartialEq)]
pub struct RunResult {
    pub layout: QubitLayout,
    pub final_state: StateVector,
    pub outcomes: OutcomeDistribution,
}

impl RunResult {
    /// Probability of one particle in each of the two modes.
    pub fn coincidence(&self) -> f64 {
        self.outcomes.probability(&[1, 1])
    }
}

/// Two indistinguishable photons entering a balanced beamsplitter.
pub fn run_hom_ideal() -> Result<RunResult> {
    let layout = QubitLayout::new(2, 2, 1)?;
    let mut state = antisymmetrized_state(&layout, &ParticleAssignment::ideal(&[1, 2], 1))?;
    evolve_exact(&mut state, &OpticalHamiltonian::hom(), &layout)?;
    let outcomes = decode_outcomes(&state, &layout)?;
    Ok(RunResult { layout, final_state: state, outcomes })
}

/// Layout and input of the dip: photon 1 in mode 1 with internal `|0>`,
/// photon 2 in mode 2 with internal `ζ|0> + ξ|1>`.
pub fn dip_input(p: GivensParams) -> Result<(QubitLayout, ParticleAssignment)> {
    let layout = QubitLayout::new(2, 2, 2)?;
    let assignment =
        ParticleAssignment::new(vec![Particle::in_basis(1, 0, 2), Particle { mode: 2, internal: p.internal_state() }]);
    Ok((layout, assignment))
}

/// Eight-qubit HOM run with partially distinguishable photons.
pub fn run_hom_dip(p: GivensParams) -> Result<RunResult> {
    let (layout, assignment) = dip_input(p)?;
    let mut state = antisymmetrized_state(&layout, &assignment)?;
    evolve_exact(&mut state, &OpticalHamiltonian::hom(), &layout)?;
    let outcomes = decode_outcomes(&state, &layout)?;
    Ok(RunResult { layout, final_state: state, outcomes })
}

#[derive(Clone, Debug, PartialEq)]
pub struct DipPoint {
    pub theta: f64,
    pub coincidence: f64,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct DipCurve {
    pub points: Vec<DipPoint>,
}

impl DipCurve {
    /// `theta,coincidence` header and one row per point, 16 decimals.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theta,coincidence\n");
        for p in &self.points {
            writeln!(out, "{:.16},{:.16}", p.theta, p.coincidence).expect("writing to a String");
        }
        out
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Sweep bounds matching a symmetric `-π..π` scan at `π/100`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepParams {
    pub theta_min: f64,
    pub theta_max: f64,
    pub step: f64,
    pub phi: f64,
    pub gamma: f64,
}

impl Default for SweepParams {
    fn default() -> Self {
        SweepParams { theta_min: -PI, theta_max: PI, step: PI / 100.0, phi: 0.0, gamma: 0.0 }
    }
}

/// Coincidence at `theta_min + k * step` for every `k` up to `theta_max`.
pub fn sweep_dip(params: SweepParams) -> Result<DipCurve> {
    if params.step.is_nan() || params.step <= 0.0 || params.step.is_infinite() {
        return Err(Error::InvalidArgument(format!("sweep step must be positive, got {}", params.step)));
    }
    if params.theta_max < params.theta_min {
        return Err(Error::InvalidArgument(format!(
            "theta_max {} is below theta_min {}",
            params.theta_max, params.theta_min
        )));
    }
    let span = (params.theta_max - params.theta_min) / params.step;
    // tolerate rounding so that an endpoint landing on the grid is included
    let count = (span + 1e-9).floor() as usize + 1;
    let points = (0..count)
        .into_par_iter()
        .map(|k| {
            let mut theta = params.theta_min + k as f64 * params.step;
            if theta.abs() < 1e-12 * params.step {
                theta = 0.0;
            }
            let run = run_hom_dip(GivensParams::new(theta, params.phi, params.gamma))?;
            Ok(DipPoint { theta, coincidence: run.coincidence() })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DipCurve { points })
}

/// Multinomial sample of `shots` draws from the outcome distribution, counts
/// in the same order as `outcomes.outcomes` (leakage last).
pub fn sample_shots<R: Rng + ?Sized>(outcomes: &OutcomeDistribution, shots: usize, rng: &mut R) -> Vec<usize> {
    let mut cumulative = Vec::with_capacity(outcomes.outcomes.len() + 1);
    let mut acc = 0.0;
    for o in &outcomes.outcomes {
        acc += o.probability;
        cumulative.push(acc);
    }
    acc += outcomes.leakage;
    cumulative.push(acc);
    let mut counts = vec![0; cumulative.len()];
    for _ in 0..shots {
        let r = rng.random::<f64>() * acc;
        let slot = cumulative.partition_point(|&c| c <= r).min(counts.len() - 1);
        counts[slot] += 1;
    }
    counts
}

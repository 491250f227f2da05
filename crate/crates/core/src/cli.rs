// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

//! JSON experiment files and the commands behind the `boson-jw` binary.
//!
//! Every command returns its stdout text so it can be driven from tests.
//! [`CliError::exit_code`] maps failures onto process exit codes: 2 for
//! malformed input, 3 for rejected preconditions, 1 for I/O.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::circuit::Circuit;
use crate::encoding::{
    antisymmetrized_state, decode_outcomes, OutcomeDistribution, Particle, ParticleAssignment, QubitLayout,
};
use crate::error::Error;
use crate::evolve::{evolve_exact, single_particle_unitary, EvolutionPath, OpticalHamiltonian};
use crate::hom::{run_hom_ideal, sweep_dip, SweepParams};
use crate::oracle::{permanent, scatter_probability_with_internal, ScatteringInstance};
use crate::pauli::StateVector;
use crate::qasm::{experiment_circuit, to_qasm};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}:{line}:{column}: {message}")]
    Malformed { path: String, line: usize, column: usize, message: String },

    #[error(transparent)]
    Precondition(#[from] Error),

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed { .. } => 2,
            CliError::Precondition(_) => 3,
            CliError::Io { .. } => 1,
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), message: e.to_string() }
    }
}

/// A complex number written as `[re, im]`.
pub type JsonComplex = [f64; 2];

fn to_complex(z: &JsonComplex) -> Complex64 {
    Complex64::new(z[0], z[1])
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LayoutSpec {
    pub modes: usize,
    pub particles: usize,
    #[serde(default = "one")]
    pub internal_states: usize,
}

fn one() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParticleSpec {
    /// 1-based spatial mode.
    pub mode: usize,
    /// Internal amplitudes; defaults to the first internal basis state.
    #[serde(default)]
    pub internal: Option<Vec<JsonComplex>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HamiltonianSpec {
    /// Row-major `M × M` matrix of `[re, im]` entries.
    pub phi: Vec<Vec<JsonComplex>>,
    pub t: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    #[serde(default = "yes")]
    pub outcomes: bool,
    #[serde(default)]
    pub amplitudes: bool,
    #[serde(default)]
    pub qasm: bool,
}

fn yes() -> bool {
    true
}

impl Default for OutputSpec {
    fn default() -> Self {
        OutputSpec { outcomes: true, amplitudes: false, qasm: false }
    }
}

/// Experiment file contents.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub layout: LayoutSpec,
    pub particles: Vec<ParticleSpec>,
    pub hamiltonian: HamiltonianSpec,
    #[serde(default)]
    pub outputs: OutputSpec,
}

/// A validated experiment ready to run.
#[derive(Clone, Debug, PartialEq)]
pub struct Experiment {
    pub layout: QubitLayout,
    pub assignment: ParticleAssignment,
    pub hamiltonian: OpticalHamiltonian,
    pub outputs: OutputSpec,
}

impl ExperimentSpec {
    pub fn from_json(text: &str, path: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Malformed {
            path: path.to_string(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_json(&text, &path.display().to_string())
    }

    /// Checks every precondition of the layout, particles and Hamiltonian.
    pub fn validate(&self) -> Result<Experiment, Error> {
        let l = &self.layout;
        let layout = QubitLayout::new(l.modes, l.particles, l.internal_states)?;
        let particles = self
            .particles
            .iter()
            .map(|p| match &p.internal {
                Some(v) => Particle { mode: p.mode, internal: v.iter().map(to_complex).collect() },
                None => Particle::in_basis(p.mode, 0, l.internal_states),
            })
            .collect();
        let assignment = ParticleAssignment::new(particles);
        assignment.validate(&layout)?;

        let m = self.hamiltonian.phi.len();
        if let Some(row) = self.hamiltonian.phi.iter().find(|row| row.len() != m) {
            return Err(Error::NotSquare { rows: m, cols: row.len() });
        }
        let phi = DMatrix::from_fn(m, m, |r, c| to_complex(&self.hamiltonian.phi[r][c]));
        if m != l.modes {
            return Err(Error::SizeMismatch { expected: l.modes, found: m });
        }
        let hamiltonian = OpticalHamiltonian::new(phi, self.hamiltonian.t)?;
        Ok(Experiment { layout, assignment, hamiltonian, outputs: self.outputs.clone() })
    }
}

impl Experiment {
    /// Internal states of the particles with their modes ascending, the
    /// order in which the oracle fills input slots.
    fn ordered_internal(&self) -> Vec<Vec<Complex64>> {
        let mut particles: Vec<&Particle> = self.assignment.particles.iter().collect();
        particles.sort_by_key(|p| p.mode);
        particles.into_iter().map(|p| p.internal.clone()).collect()
    }

    pub fn run(&self) -> Result<(StateVector, EvolutionPath, OutcomeDistribution), Error> {
        let mut state = antisymmetrized_state(&self.layout, &self.assignment)?;
        let path = evolve_exact(&mut state, &self.hamiltonian, &self.layout)?;
        let outcomes = decode_outcomes(&state, &self.layout)?;
        Ok((state, path, outcomes))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScatterRow {
    pub occupation: Vec<usize>,
    pub probability: f64,
    pub oracle: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AmplitudeRow {
    pub ket: String,
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScatterReport {
    pub n_qubits: usize,
    pub path: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcomes: Option<Vec<ScatterRow>>,
    pub leakage: f64,
    pub max_deviation: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub amplitudes: Option<Vec<AmplitudeRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qasm: Option<String>,
}

/// Simulates `exp` and compares each decoded outcome with the permanent
/// oracle.
pub fn scatter_report(exp: &Experiment) -> Result<ScatterReport, Error> {
    let (state, path, outcomes) = exp.run()?;
    let u = single_particle_unitary(&exp.hamiltonian);
    let input = exp.assignment.occupation(exp.layout.n_modes);
    let internal = exp.ordered_internal();
    let mut rows = Vec::with_capacity(outcomes.outcomes.len());
    let mut max_deviation: f64 = 0.0;
    for o in &outcomes.outcomes {
        let inst = ScatteringInstance::new(u.clone(), input.clone(), o.occupation.clone())?;
        let oracle = scatter_probability_with_internal(&inst, &internal)?;
        max_deviation = max_deviation.max((oracle - o.probability).abs());
        rows.push(ScatterRow { occupation: o.occupation.clone(), probability: o.probability, oracle });
    }
    let amplitudes = exp.outputs.amplitudes.then(|| {
        state
            .amplitudes()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > 1e-12)
            .map(|(k, a)| AmplitudeRow { ket: exp.layout.ket_label(k), re: a.re, im: a.im })
            .collect()
    });
    let qasm = if exp.outputs.qasm { Some(export_qasm(exp)?.text) } else { None };
    Ok(ScatterReport {
        n_qubits: exp.layout.n_qubits(),
        path: match path {
            EvolutionPath::CommutingStrings => "commuting-strings".into(),
            EvolutionPath::Mesh => "mesh".into(),
        },
        outcomes: exp.outputs.outcomes.then_some(rows),
        leakage: outcomes.leakage,
        max_deviation,
        amplitudes,
        qasm,
    })
}

/// Outcome table as aligned text, one occupation per line.
pub fn format_outcomes(outcomes: &OutcomeDistribution) -> String {
    let mut out = String::from("occupation  probability\n");
    for o in outcomes.iter() {
        let occ = o.occupation.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",");
        writeln!(out, "({occ}){:pad$}{:.12}", "", o.probability, pad = 12usize.saturating_sub(occ.len() + 2))
            .expect("writing to a String");
    }
    out
}

pub fn cmd_hom() -> Result<String, CliError> {
    let run = run_hom_ideal()?;
    Ok(format_outcomes(&run.outcomes))
}

#[derive(Clone, Debug, PartialEq)]
pub struct DipArgs {
    pub sweep: SweepParams,
    pub out: Option<PathBuf>,
}

/// Returns the CSV, also writing it to `args.out` when set.
pub fn cmd_dip(args: &DipArgs) -> Result<String, CliError> {
    let csv = sweep_dip(args.sweep)?.to_csv();
    if let Some(path) = &args.out {
        fs::write(path, &csv).map_err(|e| CliError::io(path, e))?;
    }
    Ok(csv)
}

pub fn cmd_scatter(spec_path: &Path) -> Result<String, CliError> {
    let exp = ExperimentSpec::load(spec_path)?.validate()?;
    let report = scatter_report(&exp)?;
    let mut json = serde_json::to_string_pretty(&report).expect("report serializes");
    json.push('\n');
    Ok(json)
}

/// Reads a square matrix from JSON (numbers or `[re, im]` pairs) or from
/// whitespace-separated text with one row per line (`1.5`, `2-1i`, ...).
pub fn read_matrix(text: &str, path: &str) -> Result<DMatrix<Complex64>, CliError> {
    let trimmed = text.trim_start();
    let rows: Vec<Vec<Complex64>> = if trimmed.starts_with('[') {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Entry {
            Real(f64),
            Complex(JsonComplex),
        }
        let parsed: Vec<Vec<Entry>> = serde_json::from_str(text).map_err(|e| CliError::Malformed {
            path: path.to_string(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        parsed
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|e| match e {
                        Entry::Real(x) => Complex64::new(x, 0.0),
                        Entry::Complex(z) => to_complex(&z),
                    })
                    .collect()
            })
            .collect()
    } else {
        let mut rows = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            let mut row = Vec::new();
            let mut column = 1;
            for token in line.split_whitespace() {
                column = line[column - 1..].find(token).map_or(column, |off| column + off);
                let z = token.parse::<Complex64>().map_err(|_| CliError::Malformed {
                    path: path.to_string(),
                    line: line_no + 1,
                    column,
                    message: format!("cannot parse {token:?} as a number"),
                })?;
                row.push(z);
                column += token.len();
            }
            if !row.is_empty() {
                rows.push(row);
            }
        }
        rows
    };
    let n = rows.len();
    if let Some(row) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare { rows: n, cols: row.len() }.into());
    }
    Ok(DMatrix::from_fn(n, n, |r, c| rows[r][c]))
}

/// Prints as `re+imi`, with negative zeros cleared.
pub fn format_complex(z: Complex64) -> String {
    format!("{}", Complex64::new(z.re + 0.0, z.im + 0.0))
}

pub fn cmd_permanent(matrix_path: &Path) -> Result<String, CliError> {
    let text = fs::read_to_string(matrix_path).map_err(|e| CliError::io(matrix_path, e))?;
    let a = read_matrix(&text, &matrix_path.display().to_string())?;
    Ok(format!("{}\n", format_complex(permanent(&a)?)))
}

/// Exported program and the gate list it was printed from.
#[derive(Clone, Debug, PartialEq)]
pub struct QasmExport {
    pub text: String,
    pub circuit: Circuit,
}

pub fn export_qasm(exp: &Experiment) -> Result<QasmExport, Error> {
    let circuit = experiment_circuit(&exp.layout, &exp.assignment, &exp.hamiltonian)?;
    Ok(QasmExport { text: to_qasm(&circuit), circuit })
}

/// Writes the QASM program for the experiment at `spec_path`, returning it.
pub fn cmd_qasm(spec_path: &Path, out: Option<&Path>) -> Result<String, CliError> {
    let exp = ExperimentSpec::load(spec_path)?.validate()?;
    let export = export_qasm(&exp)?;
    if let Some(path) = out {
        fs::write(path, &export.text).map_err(|e| CliError::io(path, e))?;
    }
    Ok(export.text)
}

/// The two-photon beamsplitter experiment as an experiment file.
pub fn hom_spec() -> ExperimentSpec {
    ExperimentSpec {
        layout: LayoutSpec { modes: 2, particles: 2, internal_states: 1 },
        particles: vec![ParticleSpec { mode: 1, internal: None }, ParticleSpec { mode: 2, internal: None }],
        hamiltonian: HamiltonianSpec {
            phi: vec![vec![[0.0, 0.0], [1.0, 0.0]], vec![[1.0, 0.0], [0.0, 0.0]]],
            t: std::f64::consts::FRAC_PI_4,
        },
        outputs: OutputSpec::default(),
    }
}

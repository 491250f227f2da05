// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

use boson_jw::cli::{self, CliError, DipArgs};
use boson_jw::hom::SweepParams;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "boson-jw", version, about = "Boson scattering simulated on qubits")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Outcome table of two photons on a balanced beamsplitter.
    Hom,
    /// Coincidence probability against distinguishability angle, as CSV.
    Dip {
        #[arg(long, default_value_t = -PI, allow_hyphen_values = true)]
        theta_min: f64,
        #[arg(long, default_value_t = PI, allow_hyphen_values = true)]
        theta_max: f64,
        #[arg(long, default_value_t = PI / 100.0)]
        step: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        phi: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        gamma: f64,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a JSON experiment and compare with the permanent oracle.
    Scatter { spec: PathBuf },
    /// Permanent of a matrix file (JSON or whitespace text).
    Permanent { matrix: PathBuf },
    /// Export an experiment as OpenQASM 2.0.
    Qasm {
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(command: Command) -> Result<Option<String>, CliError> {
    Ok(match command {
        Command::Hom => Some(cli::cmd_hom()?),
        Command::Dip { theta_min, theta_max, step, phi, gamma, out } => {
            let args = DipArgs { sweep: SweepParams { theta_min, theta_max, step, phi, gamma }, out };
            let csv = cli::cmd_dip(&args)?;
            args.out.is_none().then_some(csv)
        }
        Command::Scatter { spec } => Some(cli::cmd_scatter(&spec)?),
        Command::Permanent { matrix } => Some(cli::cmd_permanent(&matrix)?),
        Command::Qasm { spec, out } => {
            let text = cli::cmd_qasm(&spec, out.as_deref())?;
            out.is_none().then_some(text)
        }
    })
}

fn main() -> ExitCode {
    match run(Args::parse().command) {
        Ok(Some(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use quandle_cli::commands;
use quandle_cli::formats::{self, load_quandle};
use quandle_cli::verify::{self, Scope};
use quandle_cli::CliError;
use quandle_core::chain::ComplexKind;
use quandle_core::Coeffs;
use serde_json::Value;

/// Quandle homology and cocycle invariants of virtual links.
///
/// Quandles are given as T<m>, R<k>, QS5, S4, Z<n>[T]/(h) or a JSON file
/// {"size", "table", "label"}.
#[derive(Parser)]
#[command(name = "quandle", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the operation table of a quandle as JSON.
    Make {
        quandle: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Orbits under inner automorphisms.
    Orbits { quandle: String },
    /// Boundary matrix d_n as `row col value` triplets.
    Boundary {
        quandle: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "R")]
        kind: ComplexKind,
        #[arg(long)]
        cap: Option<u128>,
    },
    /// H_n (or H^n with --cohomology) as {"free_rank", "torsion"}.
    Homology {
        quandle: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "Q")]
        kind: ComplexKind,
        #[arg(long, default_value = "Z")]
        coeffs: Coeffs,
        #[arg(long)]
        cohomology: bool,
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Generator counts, Betti numbers and lower bounds for degrees 1..=n.
    Betti {
        quandle: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Index S: the least degree where H_n^Q -> H_{n-1}^D is nonzero.
    Sx {
        quandle: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Cokernel of the projection onto the orbit quandle in degree n.
    Coker {
        quandle: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "R")]
        kind: ComplexKind,
    },
    /// H^2_Q(X; G) with generating 2-cocycles.
    Cocycles {
        quandle: String,
        #[arg(long, default_value = "Z2")]
        coeffs: Coeffs,
    },
    /// Cocycle state-sum of a diagram.
    Invariant {
        #[arg(long)]
        diagram: PathBuf,
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        cocycle: PathBuf,
        #[arg(long)]
        coeffs: Option<Coeffs>,
    },
    /// Shadow cycles of a closed classical braid and their classes in H_3^R(X; Z_p).
    Shadow {
        #[arg(long)]
        diagram: PathBuf,
        #[arg(long)]
        quandle: String,
        #[arg(long, default_value_t = 3)]
        p: u64,
    },
    /// Run the verification suite and print the report.
    Verify {
        #[arg(long, value_enum, default_value = "fast")]
        scope: Scope,
        /// Write the JSON report here and print the summary instead.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Output {
    Json(Value),
    Text(String),
    Report(verify::RunReport, Option<PathBuf>),
}

fn run(cmd: Command) -> Result<Output, CliError> {
    use Output::*;
    Ok(match cmd {
        Command::Make { quandle, out } => {
            let v = commands::make(&load_quandle(&quandle)?);
            if let Some(p) = out {
                formats::write_file(&p, &serde_json::to_string_pretty(&v)?)?;
            }
            Json(v)
        }
        Command::Orbits { quandle } => Json(commands::orbits(&load_quandle(&quandle)?)),
        Command::Boundary { quandle, n, kind, cap } => Text(commands::boundary(&load_quandle(&quandle)?, n, kind, cap)?),
        Command::Homology { quandle, n, kind, coeffs, cohomology, cap } => {
            Json(commands::homology(&load_quandle(&quandle)?, n, kind, coeffs, cohomology, cap)?)
        }
        Command::Betti { quandle, n, cap } => Json(commands::betti(&load_quandle(&quandle)?, n, cap)?),
        Command::Sx { quandle, max_n } => Json(commands::sx(&load_quandle(&quandle)?, max_n)?),
        Command::Coker { quandle, n, kind } => Json(commands::coker(&load_quandle(&quandle)?, n, kind)?),
        Command::Cocycles { quandle, coeffs } => Json(commands::cocycles(&load_quandle(&quandle)?, coeffs)?),
        Command::Invariant { diagram, quandle, cocycle, coeffs } => {
            let x = load_quandle(&quandle)?;
            let d = formats::load_diagram(&diagram, &x)?;
            let phi = formats::load_cocycle(&cocycle, &x, coeffs)?;
            Json(commands::invariant(&d, &x, &phi)?)
        }
        Command::Shadow { diagram, quandle, p } => {
            let x = load_quandle(&quandle)?;
            let d = formats::load_diagram(&diagram, &x)?;
            Json(commands::shadow(&d, &x, p)?)
        }
        Command::Verify { scope, out } => Report(verify::run(scope), out),
    })
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(Output::Json(v)) => {
            emit(&(serde_json::to_string_pretty(&v).expect("serializable") + "\n"));
            ExitCode::SUCCESS
        }
        Ok(Output::Text(s)) => {
            emit(&s);
            ExitCode::SUCCESS
        }
        Ok(Output::Report(r, out)) => {
            let json = serde_json::to_string_pretty(&r).expect("serializable");
            match out {
                Some(p) => {
                    if let Err(e) = formats::write_file(&p, &json) {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                    emit(&r.summary());
                }
                None => emit(&(json + "\n")),
            }
            ExitCode::from(if r.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

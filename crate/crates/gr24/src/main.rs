use clap::{Parser, Subcommand};
use gr24::cli::{self, CliError, Outcome};
use gr24::io::{read_adjoint, to_sorted_json};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gr24", version, about = "Residual arrangements, adjoints and canonical-form certificates in Gr(2,4)")]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Residual arrangement with its incidence graph
    Residual {
        spec: String,
        /// Write the incidence graph in Graphviz format
        #[arg(long)]
        dot: Option<String>,
    },
    /// Adjoint interpolation space
    Adjoint { spec: String },
    /// Closed-form adjoint of a pentahedron
    Pentahedron { spec: String },
    /// Boundary skeleton, canonical adjoint and residue certificate
    Verify {
        spec: String,
        /// Certify this adjoint instead of selecting one
        #[arg(long)]
        adjoint: Option<String>,
    },
    /// Random hexahedra by signature, adjoint dimension and verdict (CSV on stdout)
    Census {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the summary JSON here instead of stderr
        #[arg(long)]
        summary: Option<String>,
    },
    /// Combinatorial equivalence and signatures of two hexahedra
    Compare { a: String, b: String },
}

fn run(cmd: Cmd) -> Result<Outcome, CliError> {
    match cmd {
        Cmd::Residual { spec, dot } => cli::cmd_residual(&cli::load(&spec)?, dot.as_deref()),
        Cmd::Adjoint { spec } => cli::cmd_adjoint(&cli::load(&spec)?),
        Cmd::Pentahedron { spec } => cli::cmd_pentahedron(&cli::load(&spec)?),
        Cmd::Verify { spec, adjoint } => {
            let a = adjoint.map(|p| read_adjoint(&p)).transpose()?;
            cli::cmd_verify(&cli::load(&spec)?, a.as_ref())
        }
        Cmd::Census { samples, seed, summary } => {
            let (csv, s) = cli::cmd_census(samples, seed);
            match summary {
                Some(p) => std::fs::write(&p, to_sorted_json(&s)).map_err(|e| CliError::Write(p, e.to_string()))?,
                None => eprint!("{}", to_sorted_json(&s)),
            }
            Ok(Outcome { output: csv, code: 0 })
        }
        Cmd::Compare { a, b } => cli::cmd_compare(&cli::load(&a)?, &cli::load(&b)?),
    }
}

fn main() -> ExitCode {
    match run(Args::parse().cmd) {
        Ok(o) => {
            print!("{}", o.output);
            ExitCode::from(o.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

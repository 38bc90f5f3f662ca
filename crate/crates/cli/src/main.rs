use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cubeseq_cli::document::Payload;
use cubeseq_cli::reproduce::published_fixture;
use cubeseq_cli::{
    generate, render, run_fixtures, verify_text, CertificateDocument, CliError, GenerateArgs, FIXTURE_ENV,
};

#[derive(Parser)]
#[command(name = "cubeseq", version, about = "Elliptic curves with five consecutive-cube points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute every published constant and print a PASS/FAIL table.
    Reproduce,
    /// Write one family_member certificate per multiplier j.
    Generate {
        #[arg(long, default_value = "3", allow_hyphen_values = true)]
        c0: String,
        #[arg(long, default_value = "3094/5795", allow_hyphen_values = true)]
        v0: String,
        #[arg(long, allow_hyphen_values = true)]
        u0: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        t0: Option<String>,
        /// Repeatable; defaults to 1.
        #[arg(long, allow_hyphen_values = true)]
        j: Vec<i64>,
        /// Coefficient bound of the relation search; 0 skips it.
        #[arg(long, default_value_t = 2)]
        bound: u32,
        /// Output directory; files are named member_j<j>.json.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Re-run every exact check carried by a certificate.
    Verify { path: PathBuf },
}

fn reproduce() -> Result<String, CliError> {
    let fixture = match std::env::var_os(FIXTURE_ENV) {
        None => published_fixture(),
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CliError::Input(format!("{}: {e}", PathBuf::from(&path).display())))?;
            match CertificateDocument::from_json(&text)?.body {
                Payload::ReproductionReport(p) => *p,
                _ => return Err(CliError::Input("fixture file must be a reproduction_report".into())),
            }
        }
    };
    let rows = run_fixtures(&fixture)?;
    let table = render(&rows);
    if rows.iter().all(|r| r.passed()) {
        Ok(table)
    } else {
        Err(CliError::Invalid(table))
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Reproduce => reproduce(),
        Command::Generate { c0, v0, u0, t0, j, bound, out } => {
            let args = GenerateArgs { c0: Some(c0), v0: Some(v0), u0, t0, j, bound, out };
            let paths = generate(&args)?;
            Ok(paths.iter().map(|p| format!("wrote {}\n", p.display())).collect())
        }
        Command::Verify { path } => {
            let text =
                std::fs::read_to_string(&path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            verify_text(&text).map(|s| if s.ends_with('\n') { s } else { s + "\n" })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Invalid(report)) => {
            println!("{}", report.trim_end());
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

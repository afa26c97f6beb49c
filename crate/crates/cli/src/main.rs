mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::Report;

#[derive(Debug, Parser)]
#[command(name = "pisano-lab", version, about = "Fibonacci numbers modulo m and the mod-10 subsequence diagrams")]
struct Cli {
    /// Output format on stdout.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Pisano period of a modulus.
    Period {
        #[arg(value_name = "M", required_unless_present = "m", conflicts_with = "m")]
        modulus: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify the subsequence F(k + r j) mod 10.
    Classify {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify every (k, r) with 0 <= k <= 59, 1 <= r <= 59.
    Sweep {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every self-check; exits 1 on the first failure.
    Verify {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the SVG diagram of a subsequence.
    Diagram {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
        /// Draw only the first STEPS edges.
        #[arg(long, conflicts_with = "frames")]
        steps: Option<u32>,
        /// Write one file per construction step, suffixed -00.svg, -01.svg, ...
        #[arg(long)]
        frames: bool,
        /// Output SVG path (default diagram-k<K>-r<R>.svg).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    VerificationFailed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

fn emit(report: &Report, format: Format, json_out: Option<&PathBuf>) -> Result<(), CliError> {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    if let Some(path) = json_out {
        std::fs::write(path, report.to_json())
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let format = cli.format;
    match cli.command {
        Command::Period { modulus, m, out } => {
            let m = modulus.or(m).expect("clap requires one of the two");
            emit(&commands::period(m)?, format, out.as_ref())
        }
        Command::Classify { k, r, out } => emit(&commands::classify(k, r)?, format, out.as_ref()),
        Command::Sweep { out } => emit(&commands::sweep(), format, out.as_ref()),
        Command::Verify { out } => {
            let (report, failure) = commands::verify();
            emit(&report, format, out.as_ref())?;
            match failure {
                Some(msg) => Err(CliError::VerificationFailed(msg)),
                None => Ok(()),
            }
        }
        Command::Diagram {
            k,
            r,
            steps,
            frames,
            out,
        } => emit(&commands::diagram(k, r, steps, frames, out)?, format, None),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let msg = match &err {
                CliError::Usage(m) => format!("error: {m}"),
                CliError::Io(m) => format!("error: cannot write {m}"),
                CliError::VerificationFailed(m) => format!("verification failed: {m}"),
            };
            eprintln!("{msg}");
            ExitCode::from(err.exit_code())
        }
    }
}

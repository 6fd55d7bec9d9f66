mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{CliError, Report, Status};

#[derive(Parser, Debug)]
#[command(
    name = "knotgroup",
    version,
    about = "Exact knot-group presentations, Alexander ideals and distinctness certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Wirtinger,
    Standard,
    Gamma,
    GammaTab,
    Double,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a presentation file
    Present {
        #[arg(long)]
        p: i64,
        #[arg(long, value_enum, default_value_t = Form::Gamma)]
        form: Form,
    },
    /// Canonical Alexander polynomial of a presentation file, as t^0.. coefficients
    Alexander {
        #[arg(long)]
        file: PathBuf,
    },
    /// Presentations, p-polynomial, order ideal and Fox ideals of Gamma_p
    Gamma {
        #[arg(long)]
        p: i64,
    },
    /// Certificate that Gamma_p and Gamma_k are not isomorphic
    Distinct {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        json: bool,
    },
    /// Certificates for all pairs min <= p < k <= max
    DistinctRange {
        #[arg(long)]
        min: i64,
        #[arg(long)]
        max: i64,
    },
    /// Consequences of killing tau in the T(p,p+1) group
    VerifyTau {
        #[arg(long)]
        p: i64,
    },
    /// Check the fold map from Gamma_p onto the T(p,p+1) group
    Fold {
        #[arg(long)]
        p: i64,
    },
    /// Normal form of a word in <x, y | x^p = y^q>
    Wp {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Run the full acceptance suite
    Selftest,
}

fn dispatch(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Present { p, form } => commands::present(p, form),
        Command::Alexander { file } => commands::alexander(&file),
        Command::Gamma { p } => commands::gamma(p),
        Command::Distinct { p, k, json } => commands::distinct(p, k, json),
        Command::DistinctRange { min, max } => commands::distinct_range(min, max),
        Command::VerifyTau { p } => commands::verify_tau(p),
        Command::Fold { p } => commands::fold(p),
        Command::Wp { p, q, word } => commands::wp(p, q, &word),
        Command::Selftest => Ok(commands::selftest()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.command) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.text.as_bytes());
            let _ = out.flush();
            if report.status == Status::Refuted {
                eprintln!("error: a check was refuted");
            }
            ExitCode::from(report.status.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

//! The `equimult` command-line tool: parses polynomial arguments, runs the
//! `equimult-core` computations and prints a deterministic report.

pub mod commands;
pub mod parse;
pub mod report;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use commands::Translation;

#[derive(Debug, Parser)]
#[command(name = "equimult", version, about = "Invariants of equimultiple deformations of plane curve germs")]
struct Cli {
    /// Print a single JSON object instead of aligned text.
    #[arg(long, global = true)]
    json: bool,

    /// Analyze the curve at the point (X, Y) instead of the origin.
    #[arg(long, global = true, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true)]
    at: Option<Vec<String>>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiplicity, tangent cone, unitangentiality, deg(Z) and section ambiguity of f.
    Analyze {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Whether f + eps*g is equimultiple, along a given section or along some section.
    Deform {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        /// Check the section (x, y) -> (x + eps*A, y + eps*B).
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true)]
        section: Option<Vec<String>>,
    },
    /// All admissible section constants (a0, b0) for f + eps*g.
    Sections {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Dimensions of the m-fold point stratum for a plane curve of degree d.
    P2 {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long, short, allow_negative_numbers = true)]
        degree: i64,
    },
}

/// What the process should print and exit with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: 0,
                },
                _ => Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: 1,
                },
            };
        }
    };

    let at = Translation {
        source: cli.at.map(|v| (v[0].clone(), v[1].clone())),
    };
    let report = match &cli.command {
        Command::Analyze { f } => commands::analyze(f, &at),
        Command::Deform { f, g, section } => {
            let section = section.as_ref().map(|s| (s[0].as_str(), s[1].as_str()));
            commands::deform(f, g, section, &at)
        }
        Command::Sections { f, g } => commands::sections(f, g, &at),
        Command::P2 { f, degree } => commands::p2(f, *degree, &at),
    };
    Outcome {
        stdout: if cli.json { report.to_json() } else { report.to_text() },
        stderr: String::new(),
        code: report.status.exit_code(),
    }
}

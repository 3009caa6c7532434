mod files;
mod render;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use augcheck_core::augcheck::{decide, CheckOptions, Final};
use augcheck_core::exactlin::FieldTag;
use augcheck_core::tmon::{GreenData, MonoidData};
use augcheck_core::Error;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use files::{read_json, MonoidFile, StructureFile};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Parse(String),
    Invalid(String),
    SizeBound(String),
    Disagreement(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 10,
            CliError::Parse(_) => 11,
            CliError::Invalid(_) => 12,
            CliError::Disagreement(_) => 13,
            CliError::SizeBound(_) => 14,
            CliError::Internal(_) => 15,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m)
            | CliError::Io(m)
            | CliError::Parse(m)
            | CliError::Invalid(m)
            | CliError::SizeBound(m)
            | CliError::Disagreement(m)
            | CliError::Internal(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeBound(_) | Error::BoundExceeded { .. } => CliError::SizeBound(e.to_string()),
            Error::Inconsistent(_) => CliError::Internal(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(name = "augcheck", version, about = "Decide simplicity of augmentation modules of transformation monoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a monoid from a structure file and write its generators.
    Construct {
        structure: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether the augmentation module is simple.
    Check {
        monoid: PathBuf,
        /// gf:<p>, q, r or c
        #[arg(long, default_value = "q")]
        field: String,
        /// Also run the irreducibility oracle and compare.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report Green's relations.
    Green {
        monoid: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Serialize)]
pub struct JClassSummary {
    pub id: usize,
    pub rank: usize,
    pub size: usize,
    pub regular: bool,
    pub idempotents: usize,
    pub r_classes: usize,
    pub l_classes: usize,
}

#[derive(Serialize)]
pub struct GreenReport {
    pub degree: usize,
    pub size: usize,
    pub j_classes: Vec<JClassSummary>,
    pub minimal_ideal: usize,
    pub minimal_nonzero: Vec<usize>,
}

fn green_report(m: &MonoidData) -> GreenReport {
    let g = GreenData::new(m);
    let j_classes = g
        .j_classes()
        .iter()
        .enumerate()
        .map(|(id, members)| JClassSummary {
            id,
            rank: g.j_rank(id),
            size: members.len(),
            regular: g.is_regular(id),
            idempotents: g.idempotents_in(id).len(),
            r_classes: members.iter().map(|&x| g.r_class(x)).collect::<BTreeSet<_>>().len(),
            l_classes: members.iter().map(|&x| g.l_class(x)).collect::<BTreeSet<_>>().len(),
        })
        .collect();
    GreenReport {
        degree: m.degree(),
        size: m.len(),
        j_classes,
        minimal_ideal: g.minimal_ideal(),
        minimal_nonzero: g.minimal_nonzero(),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Construct { structure, output } => {
            let s: StructureFile = read_json(&structure)?;
            let (m, partial) = s.build()?;
            emit(&render::json(&MonoidFile::from_monoid(&m, partial)), output.as_deref())?;
            Ok(0)
        }
        Command::Check { monoid, field, oracle, format, output } => {
            let field: FieldTag = field.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
            let file: MonoidFile = read_json(&monoid)?;
            let m = file.to_monoid()?;
            let mut report = decide(&m, field, CheckOptions { oracle })?;
            if file.partial_with_sink {
                report.notes.push("verdict for the partial module on points 1..degree-1".into());
            }
            let text = match format {
                Format::Json => render::json(&report),
                Format::Text => render::check_text(&report),
            };
            emit(&text, output.as_deref())?;
            if report.agreement == Some(false) {
                return Err(CliError::Disagreement(format!(
                    "checker says {:?} but the oracle disagrees",
                    report.final_verdict
                )));
            }
            Ok(match report.final_verdict {
                Final::Simple => 0,
                Final::NotSimple => 1,
                Final::Undecidable => 2,
            })
        }
        Command::Green { monoid, format } => {
            let file: MonoidFile = read_json(&monoid)?;
            let report = green_report(&file.to_monoid()?);
            let text = match format {
                Format::Json => render::json(&report),
                Format::Text => render::green_text(&report),
            };
            emit(&text, None)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(CliError::Usage(String::new()).code());
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

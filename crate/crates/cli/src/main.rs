use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use homf::linalg::parse_scalar;
use homf_cli::commands::{self, DeformAction, Input, Options, Outcome};
use homf_cli::corpus::corpus;
use homf_cli::{CliError, Result};

/// Exact checks, constructions, cohomology and deformations of
/// Hom-F-manifold algebras given by structure constants.
#[derive(Parser)]
#[command(name = "homf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format on standard output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Counterexamples kept per check.
    #[arg(long, global = true, default_value_t = homf::report::DEFAULT_MAX_WITNESSES)]
    max_witnesses: usize,
    /// Seed for randomly sampled cochains.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run one named check on a structure file.
    Check {
        /// Check name, e.g. hom-f-manifold or rep-f-manifold; an unknown name lists the valid ones.
        check: String,
        /// Structure file (JSON).
        #[arg(long)]
        input: PathBuf,
        /// Also write the JSON report here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build a structure from one or two input files and recheck it.
    Construct {
        /// Construction name, e.g. direct-sum or induced-pre-f.
        construction: String,
        /// Input structure file; repeat for two-input constructions.
        #[arg(long, required = true)]
        input: Vec<PathBuf>,
        /// Where to write the constructed structure file.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Coefficient of x·y in the derivation constructions.
        #[arg(long, default_value = "0")]
        lambda: String,
    },
    /// Cohomology dimensions in one degree, with a sampled ∂∂ = 0 check.
    Cohomology {
        /// Hom-pre-Lie algebra file, or a representation file carrying a product.
        #[arg(long)]
        input: PathBuf,
        /// Cochain degree, at least 1.
        #[arg(long)]
        degree: usize,
        /// Random cochains tested for ∂∂ = 0.
        #[arg(long, default_value_t = 16)]
        samples: usize,
        /// Also write the JSON report here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check, take the limit of, find the obstruction of, or extend a deformation.
    Deform {
        #[arg(value_enum)]
        action: Action,
        /// Deformation file.
        #[arg(long)]
        input: PathBuf,
        /// For `limit`, `theta` and `extend`: where to write the result.
        /// For `check`: the JSON report.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List the fixture corpus, or write it to a directory.
    Fixtures {
        /// Directory to write the fixture files into.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Action {
    Check,
    Limit,
    Theta,
    Extend,
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

enum Written<'a> {
    Report(Option<&'a Path>),
    Artifact(Option<&'a Path>),
}

fn emit(outcome: &Outcome, format: Format, written: Written) -> Result<u8> {
    match written {
        Written::Report(Some(p)) => write(p, &outcome.report.to_json())?,
        Written::Artifact(Some(p)) => {
            if let Some(a) = &outcome.artifact {
                write(p, &a.to_text())?;
            }
        }
        _ => {}
    }
    match format {
        Format::Human => print!("{}", outcome.report.to_human()),
        Format::Json => print!("{}", outcome.report.to_json()),
    }
    Ok(outcome.report.exit_code() as u8)
}

fn run(cli: Cli) -> Result<u8> {
    let opts = Options { max_witnesses: cli.max_witnesses, seed: cli.seed };
    match &cli.command {
        Command::Check { check, input, output } => {
            let out = commands::check(check, &Input::load(input)?, opts)?;
            emit(&out, cli.format, Written::Report(output.as_deref()))
        }
        Command::Construct { construction, input, output, lambda } => {
            let inputs = input.iter().map(|p| Input::load(p)).collect::<Result<Vec<_>>>()?;
            let out = commands::construct(construction, &inputs, &parse_scalar(lambda)?, opts)?;
            emit(&out, cli.format, Written::Artifact(output.as_deref()))
        }
        Command::Cohomology { input, degree, samples, output } => {
            let out = commands::cohomology(&Input::load(input)?, *degree, *samples, opts)?;
            emit(&out, cli.format, Written::Report(output.as_deref()))
        }
        Command::Deform { action, input, output } => {
            let action = match action {
                Action::Check => DeformAction::Check,
                Action::Limit => DeformAction::Limit,
                Action::Theta => DeformAction::Theta,
                Action::Extend => DeformAction::Extend,
            };
            let out = commands::deform(action, &Input::load(input)?, opts)?;
            let written = if action == DeformAction::Check { Written::Report(output.as_deref()) } else { Written::Artifact(output.as_deref()) };
            emit(&out, cli.format, written)
        }
        Command::Fixtures { output } => {
            if let Some(dir) = output {
                std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.display().to_string(), source })?;
            }
            for (file, contents) in corpus() {
                if let Some(dir) = output {
                    write(&dir.join(&file), &contents.to_text())?;
                }
                println!("{file}: {}", contents.description.as_deref().unwrap_or(""));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

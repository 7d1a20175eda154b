use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use xmodlie::cli::{run, Report, Workspace, CORPUS};
use xmodlie::Category;

#[derive(Parser)]
#[command(
    name = "xmodlie",
    version,
    about = "Check and construct braided crossed modules of Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Definition files, repeatable or comma-separated; the built-in corpus
    /// is used when none are given.
    #[arg(
        long,
        short,
        global = true,
        value_name = "FILES",
        value_delimiter = ','
    )]
    input: Vec<PathBuf>,

    /// Load the built-in corpus before any `--input` files.
    #[arg(long, global = true)]
    with_corpus: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Treat warnings (skipped or degenerate checks) as failures.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Re-run the axiom checks of the named objects (all when none given).
    Verify { names: Vec<String> },
    /// Centers, commutators and perfectness of an object.
    Analyze { name: String },
    /// Non-abelian tensor product `M ⊗ N`, optionally with the two actions.
    Tensor {
        left: String,
        right: Option<String>,
        actions: Vec<String>,
    },
    /// Universal central extension of a braided crossed module.
    Uce { name: String },
    /// Classify a braided morphism as an extension.
    Classify { name: String },
    /// Worked examples: k2k3, sl2-uce, sl2-corollary.
    Demo { id: String },
}

fn load(cli: &Cli) -> xmodlie::Result<Workspace> {
    if cli.input.is_empty() {
        return Workspace::builtin();
    }
    let mut sources: Vec<(String, String)> = Vec::new();
    if cli.with_corpus {
        sources.extend(CORPUS.iter().map(|(a, b)| (a.to_string(), b.to_string())));
    }
    for p in &cli.input {
        let text = std::fs::read_to_string(p).map_err(|source| xmodlie::Error::Io {
            path: p.display().to_string(),
            source,
        })?;
        sources.push((p.display().to_string(), text));
    }
    Workspace::from_sources(&sources)
}

fn execute(cli: &Cli) -> xmodlie::Result<Report> {
    let (name, args): (&str, Vec<String>) = match &cli.command {
        Command::Verify { names } => ("verify", names.clone()),
        Command::Analyze { name } => ("analyze", vec![name.clone()]),
        Command::Tensor {
            left,
            right,
            actions,
        } => {
            let mut a = vec![left.clone()];
            a.extend(right.clone());
            a.extend(actions.iter().cloned());
            ("tensor", a)
        }
        Command::Uce { name } => ("uce", vec![name.clone()]),
        Command::Classify { name } => ("classify", vec![name.clone()]),
        Command::Demo { id } => ("demo", vec![id.clone()]),
    };
    let ws = load(cli)?;
    run(&ws, name, &args)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                Category::Usage as u8
            } else {
                0
            });
        }
    };
    match execute(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Human => print!("{}", report.to_human()),
                Format::Machine => print!("{}", report.to_machine()),
            }
            for w in report.warnings.iter().filter(|_| cli.strict) {
                eprintln!("strict: {w}");
            }
            ExitCode::from(report.exit_code(cli.strict) as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.category() as u8)
        }
    }
}

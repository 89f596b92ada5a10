use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use equisig::algebra::{connect_sum, mirror};
use equisig::diagram::{load, serialize, SymmetricDiagram};
use equisig::invariant::analyze;
use equisig::{catalog, report, Error};

#[derive(Parser)]
#[command(name = "equisig", version, about = "Equivariant signatures of strongly invertible knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a diagram file and report the first violated invariant.
    Validate { file: PathBuf },
    /// Compute the invariant report for a diagram (stdin when no file).
    Compute {
        file: Option<PathBuf>,
        /// Also print faces, shading, matrices and eigenspace bases.
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        json: bool,
    },
    /// Built-in diagrams.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Equivariant connected sum of two diagrams.
    ConnectSum {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Mirror image with the direction kept.
    Mirror {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    Emit {
        key: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Io(String),
    Pipeline(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Pipeline(e)
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn read_diagram(path: &Path) -> Result<SymmetricDiagram, Failure> {
    Ok(load(&read_input(Some(path))?)?)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("stdout: {e}"))),
    }
}

fn emit_checked(d: &SymmetricDiagram, output: Option<&Path>) -> Result<(), Failure> {
    analyze(d)?;
    write_output(output, &serialize(d))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { file } => {
            let d = read_diagram(&file)?;
            analyze(&d)?;
            println!("ok: {} ({} crossings)", d.name(), d.n());
        }
        Command::Compute { file, explain, json } => {
            let d = load(&read_input(file.as_deref())?)?;
            let a = analyze(&d)?;
            let text = if json {
                report::to_json(&a.report)
            } else if explain {
                report::to_explained_text(&a)
            } else {
                report::to_text(&a.report)
            };
            write_output(None, &text)?;
        }
        Command::Catalog { action } => match action {
            CatalogCommand::List => {
                let mut out = String::new();
                for e in catalog::ENTRIES {
                    let param = if e.takes_n { " [--n N]" } else { "" };
                    out.push_str(&format!("{}{param}\t{}\n", e.key, e.description));
                }
                write_output(None, &out)?;
            }
            CatalogCommand::Emit { key, n, output } => {
                let d = catalog::build(&key, n)?;
                emit_checked(&d, output.as_deref())?;
            }
        },
        Command::ConnectSum {
            first,
            second,
            output,
        } => {
            let sum = connect_sum(&read_diagram(&first)?, &read_diagram(&second)?)?;
            emit_checked(&sum, output.as_deref())?;
        }
        Command::Mirror { file, output } => {
            let m = mirror(&read_diagram(&file)?);
            emit_checked(&m, output.as_deref())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(msg)) => {
            eprintln!("error[io]: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Pipeline(e)) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use clap::{Parser, Subcommand, ValueEnum};
use staut::profunctors::parse_vcat;
use staut::quantale::{builtin, parse_description};
use staut::report::SuiteReport;
use staut::strictify::Window;
use staut::suites::{self, Options};
use staut::StautError;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "staut", version, about = "Exact coherence checks for finite cyclic star-autonomous models")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Z-string window [-N, N] for strictification checks.
    #[arg(long, global = true, default_value_t = 3)]
    window: i64,
    /// Dual-iteration depth of probe universes.
    #[arg(long, global = true, default_value_t = 1)]
    depth: usize,
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Cmd {
    /// Quantale laws, thin staut suite and cyclicity.
    Quantale {
        #[command(subcommand)]
        action: QuantaleCmd,
    },
    /// Vec scalar cycles.
    Vec {
        #[command(subcommand)]
        action: VecCmd,
    },
    /// Thin enriched profunctors.
    Prof {
        #[command(subcommand)]
        action: ProfCmd,
    },
    /// Braided suite on D(Z2)-modules.
    Braided {
        #[command(subcommand)]
        action: BraidedCmd,
    },
    /// Strictification over a backend.
    Zang {
        #[command(subcommand)]
        action: ZangCmd,
    },
    /// Full acceptance run.
    Paper {
        #[command(subcommand)]
        action: PaperCmd,
    },
}

#[derive(Subcommand)]
enum QuantaleCmd {
    /// A description file, or a builtin such as rel:3, s3:t01, luk:3.
    Check { model: String },
}

#[derive(Subcommand)]
enum VecCmd {
    ScalarTable,
}

#[derive(Subcommand)]
enum ProfCmd {
    Check { vcat: PathBuf },
}

#[derive(Subcommand)]
enum BraidedCmd {
    D2Suite,
}

#[derive(Subcommand)]
enum ZangCmd {
    /// thin, vec, or a cyclic quantale builtin.
    Suite { backend: String },
}

#[derive(Subcommand)]
enum PaperCmd {
    All,
}

fn read(path: &Path) -> Result<String, StautError> {
    std::fs::read_to_string(path).map_err(|e| StautError::Parse { line: 0, col: 0, msg: format!("cannot read {}: {e}", path.display()) })
}

fn run(cli: &Cli) -> Result<SuiteReport, StautError> {
    let window = Window::new(-cli.window, cli.window)?;
    let opts = Options { seed: cli.seed, depth: cli.depth, window };
    match &cli.cmd {
        Cmd::Quantale { action: QuantaleCmd::Check { model } } => {
            let path = Path::new(model);
            let q = if path.is_file() { parse_description(&read(path)?)? } else { builtin(model)? };
            Ok(suites::quantale_report(q, opts))
        }
        Cmd::Vec { action: VecCmd::ScalarTable } => Ok(suites::scalar_table_report(opts)),
        Cmd::Prof { action: ProfCmd::Check { vcat } } => Ok(suites::prof_report(&parse_vcat(&read(vcat)?)?, opts)),
        Cmd::Braided { action: BraidedCmd::D2Suite } => Ok(suites::braided_report(opts)),
        Cmd::Zang { action: ZangCmd::Suite { backend } } => suites::zang_report(backend, opts),
        Cmd::Paper { action: PaperCmd::All } => Ok(suites::paper_all(opts)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let rep = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let out = match cli.format {
        Format::Text => rep.to_text(Some(start.elapsed())),
        Format::Structured => rep.to_json() + "\n",
    };
    print!("{out}");
    if let Some(path) = &cli.report {
        if let Err(e) = std::fs::write(path, &out) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if rep.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

//! The `omega-lsa` command line: axiom checks, perfectness, the commutator
//! functor, the admissibility decider and the built-in catalog, each
//! producing a JSON [`ReportDocument`] on standard output.
//!
//! Exit codes: 0 success (or the expected verdict), 1 verdict violation,
//! 2 input error, 3 UNKNOWN.

mod commands;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

pub use report::{without_timing, ReportDocument, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "omega-lsa", version, about = "Exact workbench for omega-Lie and omega-left-symmetric algebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum ModeArg {
    Full,
    ModuleOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum KindArg {
    Lie,
    Lsa,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of an algebra file (`-` reads standard input).
    Check { file: PathBuf },
    /// Decide whether an omega-Lie algebra is perfect.
    Perfect { file: PathBuf },
    /// Emit the commutator omega-Lie algebra of an omega-LSA file.
    Commutator {
        file: PathBuf,
        /// Write the algebra file here instead of embedding it only in the report.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Decide whether a compatible omega-left-symmetric product exists.
    Admissible {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Full)]
        mode: ModeArg,
        #[arg(long, default_value_t = omega_core::admissibility::DEFAULT_DEGREE_CAP)]
        degree_cap: u32,
        /// Re-decide at a rational alpha and require the same verdict.
        #[arg(long = "sample", value_name = "alpha=VALUE")]
        samples: Vec<String>,
    },
    /// Built-in families.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Decide every perfect catalog instance and require INADMISSIBLE.
    #[command(name = "verify-theorem1")]
    VerifyTheorem1 {
        #[arg(long, default_value_t = omega_core::admissibility::DEFAULT_DEGREE_CAP)]
        degree_cap: u32,
        #[arg(long = "sample", value_name = "alpha=VALUE")]
        samples: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// List the families.
    List {
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Instantiate a family as an algebra file.
    Emit {
        #[arg(long)]
        family: String,
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        /// `Q` or `Q(alpha)`; defaults to `Q(alpha)` when alpha is left formal.
        #[arg(long)]
        field: Option<String>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// A command's result before the envelope is filled in.
pub(crate) struct Outcome {
    pub verdict: serde_json::Value,
    pub exit_code: i32,
    pub payload: serde_json::Value,
    pub input: Option<report::InputDigest>,
    pub diagnostics: Vec<String>,
    /// Human rendering for `--format text`.
    pub text: String,
}

/// A failure attributable to the input or arguments (exit 2).
#[derive(Debug)]
pub(crate) struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

/// Run with `argv` (including the program name), writing the report to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            if informational {
                let _ = write!(out, "{rendered}");
                return EXIT_OK;
            }
            let _ = write!(err, "{rendered}");
            return EXIT_INPUT;
        }
    };
    let start = Instant::now();
    let name = command_name(&cli.command);
    let result = match cli.command {
        Command::Check { file } => commands::check(&file),
        Command::Perfect { file } => commands::perfect(&file),
        Command::Commutator { file, output } => commands::commutator(&file, output.as_deref()),
        Command::Admissible {
            file,
            mode,
            degree_cap,
            samples,
        } => commands::admissible(&file, mode, degree_cap, &samples),
        Command::Catalog {
            action: CatalogCommand::List { kind, dim },
        } => commands::catalog_list(kind, dim),
        Command::Catalog {
            action: CatalogCommand::Emit {
                family,
                params,
                field,
                output,
            },
        } => commands::catalog_emit(&family, &params, field.as_deref(), output.as_deref()),
        Command::VerifyTheorem1 { degree_cap, samples } => commands::verify_theorem1(degree_cap, &samples),
    };
    let mut doc = ReportDocument::new(name);
    let text = match result {
        Ok(o) => {
            doc.verdict = o.verdict;
            doc.exit_code = o.exit_code;
            doc.payload = o.payload;
            doc.input = o.input;
            doc.diagnostics = o.diagnostics;
            o.text
        }
        Err(InputError(msg)) => {
            doc.verdict = serde_json::Value::String("INPUT_ERROR".into());
            doc.exit_code = EXIT_INPUT;
            doc.diagnostics = vec![msg.clone()];
            format!("input error: {msg}\n")
        }
    };
    for d in &doc.diagnostics {
        let _ = writeln!(err, "omega-lsa {name}: {d}");
    }
    doc.timing.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let _ = match cli.format {
        Format::Json => writeln!(out, "{}", doc.to_json()),
        Format::Text => write!(out, "{text}"),
    };
    doc.exit_code
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Perfect { .. } => "perfect",
        Command::Commutator { .. } => "commutator",
        Command::Admissible { .. } => "admissible",
        Command::Catalog {
            action: CatalogCommand::List { .. },
        } => "catalog list",
        Command::Catalog {
            action: CatalogCommand::Emit { .. },
        } => "catalog emit",
        Command::VerifyTheorem1 { .. } => "verify-theorem1",
    }
}

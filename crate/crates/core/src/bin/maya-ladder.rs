use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use maya_ladder::cli::{run_with, Command, CommandRequest, Format, EXIT_USAGE};
use maya_ladder::{parse_multiset, Cancellation};

#[derive(Parser)]
#[command(
    name = "maya-ladder",
    version,
    about = "Rational extensions of the harmonic oscillator from Maya diagrams"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Sub {
    /// Draw the diagram as a row of filled and empty boxes.
    Render {
        diagram: String,
        #[arg(long, allow_hyphen_values = true)]
        from: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<i64>,
        /// Use `#` and `.` instead of filled and empty circles.
        #[arg(long)]
        ascii_safe: bool,
    },
    /// Block coordinates, genus, index and Frobenius symbol.
    Info { diagram: String },
    /// The Wronskian polynomial and its normalized form.
    Hm { diagram: String },
    /// The extension potential and Hamiltonian.
    Potential { diagram: String },
    /// Check the eigenvalue relation for a range of states.
    Eigencheck {
        diagram: String,
        /// A single state label; overrides --from/--to.
        #[arg(short, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long, allow_hyphen_values = true, default_value_t = -4)]
        from: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 6)]
        to: i64,
    },
    /// The intertwiner for a flip multiset such as "{0,0,1}".
    Intertwiner { diagram: String, flips: String },
    /// The ladder operator with shift n.
    Ladder {
        diagram: String,
        #[arg(short, allow_hyphen_values = true)]
        n: i64,
    },
    /// The syzygy between the n-th power of the elementary ladder and the n-ladder.
    Syzygy {
        diagram: String,
        #[arg(short)]
        n: i64,
    },
    /// Compare block-parity regularity with the Sturm count of real zeros.
    Regular { diagram: String },
    /// Run the invariant suite over the bounded family.
    VerifyAll {
        /// Give up after this many seconds.
        #[arg(long)]
        timeout: Option<u64>,
    },
    /// Write the golden JSON fixtures.
    SeedCorpus {
        #[arg(long, default_value = "corpus")]
        dir: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
    };
    let mut cancel = Cancellation::new();
    let (command, diagram) = match cli.command {
        Sub::Render {
            diagram,
            from,
            to,
            ascii_safe,
        } => (
            Command::Render {
                from,
                to,
                ascii: ascii_safe,
            },
            Some(diagram),
        ),
        Sub::Info { diagram } => (Command::Info, Some(diagram)),
        Sub::Hm { diagram } => (Command::Hm, Some(diagram)),
        Sub::Potential { diagram } => (Command::Potential, Some(diagram)),
        Sub::Eigencheck {
            diagram,
            k,
            from,
            to,
        } => {
            let (from, to) = k.map_or((from, to), |k| (k, k));
            (Command::Eigencheck { from, to }, Some(diagram))
        }
        Sub::Intertwiner { diagram, flips } => match parse_multiset(&flips) {
            Ok(flips) => (Command::Intertwiner { flips }, Some(diagram)),
            Err(e) => {
                eprintln!("error: cannot parse flips {flips:?}: {e}");
                return ExitCode::from(EXIT_USAGE as u8);
            }
        },
        Sub::Ladder { diagram, n } => (Command::Ladder { n }, Some(diagram)),
        Sub::Syzygy { diagram, n } => (Command::Syzygy { n }, Some(diagram)),
        Sub::Regular { diagram } => (Command::Regular, Some(diagram)),
        Sub::VerifyAll { timeout } => {
            if let Some(secs) = timeout {
                cancel = Cancellation::with_deadline(Instant::now() + Duration::from_secs(secs));
            }
            (Command::VerifyAll, None)
        }
        Sub::SeedCorpus { dir } => (Command::SeedCorpus { dir }, None),
    };
    let outcome = run_with(
        &CommandRequest {
            command,
            diagram,
            format,
        },
        &cancel,
    );
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.status as u8)
}

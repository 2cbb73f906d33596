use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cubicff::cli::{run, run_batch, Command, FieldSpec, Options, Outcome, Request};

#[derive(Parser)]
#[command(
    name = "cubicff",
    version,
    about = "Genus, ramification and integral bases of cubic function fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduce the cubic to its canonical form.
    Classify(Args),
    /// Ramified places and genus.
    Genus(Args),
    /// Integral basis of the finite maximal order.
    Basis(Args),
    /// Run the independent cross-checks on the input.
    Verify(Args),
    /// Everything.
    All(Args),
}

#[derive(clap::Args)]
struct Args {
    /// The cubic, e.g. "y^3 - 3*y - (x^2+1)/(x+3)".
    #[arg(required_unless_present = "batch")]
    cubic: Option<String>,
    /// Field order q = p^n.
    #[arg(long)]
    q: Option<u64>,
    /// Characteristic, as an alternative to --q.
    #[arg(long)]
    p: Option<u64>,
    /// Extension degree over F_p (default 1).
    #[arg(long)]
    n: Option<u32>,
    /// Defining polynomial of F_q over F_p, in x.
    #[arg(long)]
    modulus: Option<String>,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Seed for randomized factoring and the verify checks.
    #[arg(long, env = "CUBICFF_SEED", default_value_t = 0)]
    seed: u64,
    /// Print intermediate steps to stderr.
    #[arg(long)]
    trace: bool,
    /// Report constant field extensions instead of rejecting them.
    #[arg(long)]
    allow_constant: bool,
    /// File with one "q=<order>; <cubic>" per line.
    #[arg(long, conflicts_with = "cubic")]
    batch: Option<PathBuf>,
    /// Worker threads for --batch (0: one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = match cli.command {
        Cmd::Classify(a) => (Command::Classify, a),
        Cmd::Genus(a) => (Command::Genus, a),
        Cmd::Basis(a) => (Command::Basis, a),
        Cmd::Verify(a) => (Command::Verify, a),
        Cmd::All(a) => (Command::All, a),
    };
    let options = Options {
        json: args.json,
        seed: args.seed,
        trace: args.trace,
        allow_constant: args.allow_constant,
    };
    let outcome = match &args.batch {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => run_batch(command, &text, &options, args.jobs),
            Err(e) => Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {}: {e}\n", path.display()),
            },
        },
        None => run(&Request {
            command,
            field: FieldSpec {
                q: args.q,
                p: args.p,
                n: args.n,
                modulus: args.modulus,
            },
            cubic: args.cubic.unwrap_or_default(),
            options,
        }),
    };
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}

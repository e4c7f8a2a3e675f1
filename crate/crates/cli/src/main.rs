//! `ut-orbits`: diagrams, permutations, candidate invariants and
//! verification campaigns for quotients of the strictly lower-triangular
//! nilpotent matrix algebra by regular root ideals.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ut_orbits::diagram::Diagram;
use ut_orbits::modp::DEFAULT_PRIME;
use ut_orbits::poisson::OracleConfig;
use ut_orbits::roots::Root;
use ut_orbits_cli::{
    build_ideal, parse_ideal_spec, report_exit_code, run_batch_in_memory, run_batch_to_file,
    run_pipeline, summary_exit_code, BatchConfig, Families, IdealInput, EXIT_INPUT_ERROR, EXIT_OK,
    MAX_BATCH_N,
};

#[derive(Parser)]
#[command(
    name = "ut-orbits",
    about = "Symbol diagrams, index and orbit dimensions, associated permutations and candidate \
             invariants for quotients of the unitriangular nilpotent algebra by regular root ideals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct OracleArgs {
    /// Seed for the random-point oracles (recorded in reports)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Prime modulus for the oracles; must be prime and above 2^40
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Random points per oracle question
    #[arg(long, default_value_t = 5)]
    trials: u32,
}

impl From<OracleArgs> for OracleConfig {
    fn from(a: OracleArgs) -> OracleConfig {
        OracleConfig { trials: a.trials, prime: a.prime, seed: a.seed }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline on one ideal: diagram, permutation, checks,
    /// candidates, oracles. JSON report to stdout (or --out), diagram
    /// rendering to stderr (or --diagram-out).
    Run {
        /// JSON input file: {"n": 7, "ideal": [[5,1],[6,1],[7,1],[7,2]]}
        #[arg(long, conflicts_with_all = ["n", "ideal"])]
        input: Option<PathBuf>,
        /// Matrix size
        #[arg(long)]
        n: Option<usize>,
        /// Killed roots as "row,col;row,col;..." (default: none)
        #[arg(long)]
        ideal: Option<String>,
        /// Close the given roots into the smallest regular ideal instead
        /// of rejecting a non-closed set
        #[arg(long)]
        closure: bool,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the diagram rendering here instead of stderr
        #[arg(long)]
        diagram_out: Option<PathBuf>,
        /// Render the diagram with ASCII symbols (x + - *)
        #[arg(long)]
        ascii: bool,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Sweep every regular ideal of size n, one JSON report per line.
    /// Selected check families default to --theorems when none is given.
    Batch {
        /// Matrix size (every regular ideal of this size is processed)
        #[arg(long)]
        n: usize,
        /// Run the structural identity checks
        #[arg(long)]
        theorems: bool,
        /// Run the numeric rank oracle against the diagram counts
        #[arg(long)]
        oracle: bool,
        /// Run the symbolic invariance and independence harness
        #[arg(long)]
        conjecture: bool,
        /// Results file (JSONL), written sorted by threshold key
        #[arg(long, conflicts_with = "resume")]
        out: Option<PathBuf>,
        /// Resume into an existing results file, computing only missing
        /// ideals
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Worker threads (0 = default pool)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        oracle_args: OracleArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Run { input, n, ideal, closure, out, diagram_out, ascii, oracle } => {
            run_command(input, n, ideal, closure, out, diagram_out, ascii, oracle.into())
        }
        Command::Batch { n, theorems, oracle, conjecture, out, resume, jobs, oracle_args } => {
            batch_command(
                n,
                Families { theorems, oracle, conjecture },
                out,
                resume,
                jobs,
                oracle_args.into(),
            )
        }
    };
    ExitCode::from(u8::try_from(code).unwrap_or(1))
}

fn fail(message: impl std::fmt::Display) -> i32 {
    eprintln!("error: {message}");
    EXIT_INPUT_ERROR
}

#[allow(clippy::too_many_arguments)]
fn run_command(
    input: Option<PathBuf>,
    n: Option<usize>,
    ideal_spec: Option<String>,
    closure: bool,
    out: Option<PathBuf>,
    diagram_out: Option<PathBuf>,
    ascii: bool,
    cfg: OracleConfig,
) -> i32 {
    let (size, roots): (usize, Vec<Root>) = if let Some(path) = input {
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) => return fail(format_args!("cannot read {}: {e}", path.display())),
        };
        let parsed: IdealInput = match serde_json::from_str(&text) {
            Ok(p) => p,
            Err(e) => return fail(format_args!("cannot parse {}: {e}", path.display())),
        };
        match parsed.roots() {
            Ok(roots) => (parsed.n, roots),
            Err(e) => return fail(e),
        }
    } else {
        let Some(size) = n else {
            return fail("either --input or --n is required");
        };
        match parse_ideal_spec(ideal_spec.as_deref().unwrap_or("")) {
            Ok(roots) => (size, roots),
            Err(e) => return fail(e),
        }
    };

    let ideal = match build_ideal(size, &roots, closure) {
        Ok(i) => i,
        Err(e) => return fail(e),
    };

    let rendering = Diagram::build(&ideal).render(ascii);
    match diagram_out {
        Some(path) => {
            if let Err(e) = fs::write(&path, &rendering) {
                return fail(format_args!("cannot write {}: {e}", path.display()));
            }
        }
        None => eprint!("{rendering}"),
    }

    let report = match run_pipeline(&ideal, Families::all(), &cfg) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    match out {
        Some(path) => {
            if let Err(e) = fs::write(&path, json + "\n") {
                return fail(format_args!("cannot write {}: {e}", path.display()));
            }
        }
        None => println!("{json}"),
    }
    report_exit_code(&report)
}

fn batch_command(
    n: usize,
    mut families: Families,
    out: Option<PathBuf>,
    resume: Option<PathBuf>,
    jobs: usize,
    cfg: OracleConfig,
) -> i32 {
    if n == 0 || n > MAX_BATCH_N {
        return fail(format_args!("--n must be between 1 and {MAX_BATCH_N}"));
    }
    if families.none_selected() {
        families.theorems = true;
    }
    let batch = BatchConfig { n, families, oracle: cfg, jobs };
    let summary = match (out, resume) {
        (Some(path), None) => run_batch_to_file(&batch, &path, false),
        (None, Some(path)) => run_batch_to_file(&batch, &path, true),
        (None, None) => match run_batch_in_memory(&batch) {
            Ok((lines, summary)) => {
                for line in lines {
                    println!("{line}");
                }
                Ok(summary)
            }
            Err(e) => Err(e),
        },
        (Some(_), Some(_)) => unreachable!("clap forbids --out with --resume"),
    };
    match summary {
        Ok(summary) => {
            println!("{}", serde_json::to_string(&summary).expect("summary serializes"));
            if summary_exit_code(&summary) == EXIT_OK {
                eprintln!(
                    "batch n={n}: {} ideals, all selected checks pass",
                    summary.ideals
                );
            } else {
                eprintln!(
                    "batch n={n}: {} ideals, {} theorem failures, {} oracle mismatches, {} conjecture counterexamples",
                    summary.ideals,
                    summary.theorem_failures,
                    summary.oracle_mismatches,
                    summary.conjecture_counterexamples
                );
            }
            summary_exit_code(&summary)
        }
        Err(e) => fail(e),
    }
}

//! `isolation`: greedy isolating sets, exact isolation numbers, LP weight
//! certificates and gadget chains from the command line.
//!
//! Exit status: 0 on success, 1 on a domain error or failed verification,
//! 2 on a usage error.

mod commands;
mod io;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand};
use isolation_core::exact::DEFAULT_NODE_BUDGET;
use isolation_core::Variant;

use commands::{Family, GenSpec, GreedyArgs, RandomKind};
use io::{write_json, GraphFormat};
use report::{RunReport, Timing};

#[derive(Parser)]
#[command(name = "isolation", version, about = "Isolation-number experiments")]
struct Cli {
    /// Print the JSON run report to stdout instead of the text summary.
    #[arg(long, global = true)]
    json: bool,

    /// Also write the JSON run report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    report: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the weighted greedy and check |S| against floor(omega·n).
    Greedy {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        variant: Variant,
        /// Weight vector or lp-weights output; defaults to the LP optimum.
        #[arg(long, value_name = "FILE")]
        weights: Option<PathBuf>,
        /// Write the step trace as JSON.
        #[arg(long, value_name = "FILE")]
        trace_out: Option<PathBuf>,
    },
    /// Exact isolation number and a minimum witness.
    Exact {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Only search sets of at most this size.
        #[arg(long)]
        cap: Option<usize>,
        /// Search node budget.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Minimum-omega weights for a constraint system.
    LpWeights {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        variant: Variant,
        /// Write the solution as JSON (usable as a weights file).
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Check a weight vector against a constraint system.
    CheckWeights {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        variant: Variant,
        #[arg(long, value_name = "FILE")]
        weights: PathBuf,
    },
    /// Generate a gadget chain or a seeded random graph.
    #[command(group(ArgGroup::new("source").required(true).args(["family", "random"])))]
    Gen {
        #[arg(long, requires = "s")]
        family: Option<Family>,
        /// Number of gadget copies.
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, requires_all = ["n", "param", "seed"])]
        random: Option<RandomKind>,
        #[arg(long)]
        n: Option<usize>,
        /// Minimum degree for min-degree, degree for regular.
        #[arg(long)]
        param: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output file; the graph goes to stdout when omitted.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Exact isolation numbers of F, F - x, F - y and F - x - y.
    CertifyEdge {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
        #[arg(long)]
        b: usize,
    },
    /// Replay a greedy trace against a graph and weights.
    VerifyBound {
        #[arg(long, value_name = "FILE")]
        trace: PathBuf,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        weights: PathBuf,
    },
}

fn run(command: Command) -> io::CliResult<report::Outcome> {
    match command {
        Command::Greedy { input, delta, variant, weights, trace_out } => commands::greedy(GreedyArgs {
            input: &input,
            delta,
            variant,
            weights: weights.as_deref(),
            trace_out: trace_out.as_deref(),
        }),
        Command::Exact { input, cap, budget } => commands::exact(&input, cap, budget),
        Command::LpWeights { delta, variant, out } => commands::lp_weights(delta, variant, out.as_deref()),
        Command::CheckWeights { delta, variant, weights } => {
            commands::check_weights(delta, variant, &weights)
        }
        Command::Gen { family, s, random, n, param, seed, out, format } => {
            let spec = match (family, random) {
                (Some(family), _) => GenSpec::Family { family, s: s.expect("clap enforces --s") },
                (None, Some(kind)) => GenSpec::Random {
                    kind,
                    n: n.expect("clap enforces --n"),
                    param: param.expect("clap enforces --param"),
                    seed: seed.expect("clap enforces --seed"),
                },
                (None, None) => unreachable!("clap enforces --family or --random"),
            };
            commands::gen(spec, out.as_deref(), format)
        }
        Command::CertifyEdge { input, x, y, b } => commands::certify_edge(&input, x, y, b),
        Command::VerifyBound { trace, input, weights } => commands::verify_bound(&trace, &input, &weights),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let outcome = match run(cli.command) {
        Ok(outcome) => outcome,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(1);
        }
    };
    let report = RunReport {
        command: argv,
        input: outcome.input,
        results: outcome.results,
        ok: outcome.ok,
        timing: Timing { elapsed_ms: start.elapsed().as_secs_f64() * 1000.0 },
        version: env!("CARGO_PKG_VERSION"),
    };
    if let Some(path) = &cli.report {
        if let Err(err) = write_json(path, &report) {
            eprintln!("error: {err}");
            return ExitCode::from(1);
        }
    }
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
    } else {
        print!("{}", outcome.text);
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

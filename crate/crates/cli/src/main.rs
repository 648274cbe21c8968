//! `dichroma`: generate the shift-digraph constructions, check their
//! properties, compute exact invariants, search for patterns and run the
//! broom-free colourer. Every run prints a JSON report.
//!
//! Exit codes: 0 when every check passes, 1 when one fails, 2 for unreadable
//! input or bad arguments, 3 when a search runs out of budget (the report
//! then holds the checks completed so far).

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dichroma::budget::DEFAULT_MAX_NODES;
use dichroma::Budget;

use report::{Run, Stop};

#[derive(Parser)]
#[command(name = "dichroma", version, about = "Dichromatic numbers of digraphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Node limit for each exact search.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_NODES)]
    max_nodes: u64,
    /// Wall-clock limit for each exact search. Unlimited by default.
    #[arg(long, global = true)]
    time_limit_ms: Option<u64>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Record every elapsed time as 0, making reports byte-reproducible.
    #[arg(long, global = true)]
    no_timings: bool,
}

impl Global {
    fn budget(&self) -> Budget {
        let budget = Budget::nodes(self.max_nodes);
        match self.time_limit_ms {
            Some(ms) => budget.with_time_limit(Duration::from_millis(ms)),
            None => budget,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write a construction, random digraph or named pattern as an edge list.
    Gen {
        #[command(subcommand)]
        target: GenTarget,
    },
    /// Check a construction suite or a certificate.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Compute one exact invariant.
    Exact {
        what: Quantity,
        #[arg(long = "in")]
        input: PathBuf,
        /// Fail unless the value equals this.
        #[arg(long)]
        expect: Option<usize>,
    },
    /// Search for a pattern.
    Pattern {
        #[arg(long = "in")]
        input: PathBuf,
        /// Pattern tag, e.g. `delta:1,1,1` or `broom:r=2,v12=fwd,v23=bwd,leaf=out`.
        #[arg(long)]
        find: String,
        /// Non-induced search.
        #[arg(long, conflicts_with = "induced")]
        subgraph: bool,
        /// Induced search (the default).
        #[arg(long)]
        induced: bool,
        #[arg(long, value_enum, default_value_t = Expect::Absent)]
        expect: Expect,
    },
    /// Dicolour a digraph.
    Color {
        #[command(subcommand)]
        algorithm: ColorAlgorithm,
    },
    /// Find a path-minimizing closed tournament.
    Pmct {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenTarget {
    F7(ConstructionArgs),
    F5(ConstructionArgs),
    /// The bare shift digraph on increasing `k`-tuples.
    Shift {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Each pair adjacent with probability `p`, oriented by a fair coin.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// A named pattern.
    Pattern {
        #[arg(long)]
        tag: String,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct ConstructionArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    order: OrderArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct OrderArgs {
    /// Vertex order used to orient the `Z` arcs.
    #[arg(long, value_enum, default_value_t = OrderKind::Lex)]
    order: OrderKind,
    /// Seed for `--order random`.
    #[arg(long, required_if_eq("order", "random"))]
    seed: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderKind {
    Lex,
    Random,
}

#[derive(Args)]
struct OutArgs {
    #[arg(long)]
    out: PathBuf,
    /// Also write a Graphviz rendering.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifyTarget {
    F7(SuiteArgs),
    F5(SuiteArgs),
    /// Check a nice-set certificate (`{"s1": [...], "s2": [...], "k": K}`).
    NiceSet {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Check a bag chain (`{"bags": [[...], ...], "c": C, "beta": B}`).
    BagChain {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        chain: PathBuf,
        #[arg(long, value_enum, default_value_t = BagModeArg::Exact)]
        mode: BagModeArg,
    },
    /// Check a dicolouring (`{"colors": [...], "k": K}`).
    Coloring {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
}

#[derive(Args)]
struct SuiteArgs {
    /// Build the construction in memory.
    #[arg(long, required_unless_present = "input", conflicts_with = "input")]
    n: Option<usize>,
    /// Load a labelled edge list written by `gen`.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[command(flatten)]
    order: OrderArgs,
    /// Run every check of the suite (the default).
    #[arg(long, conflicts_with = "check")]
    all: bool,
    #[arg(long, value_enum)]
    check: Vec<SuiteCheck>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteCheck {
    Rules,
    NoCyclicTriangle,
    TriangleProfile,
    Tournaments,
    StarFree,
    InTriangleFree,
    LowerBound,
}

#[derive(Clone, Copy, ValueEnum)]
enum BagModeArg {
    Exact,
    AtLeast,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Quantity {
    ChiDir,
    Chi,
    Omega,
    Alpha,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    Absent,
    Found,
}

#[derive(Subcommand)]
enum ColorAlgorithm {
    /// The constructive colourer for digraphs with two forbidden brooms.
    Broomfree {
        #[arg(long)]
        b: String,
        #[arg(long)]
        bprime: String,
        /// Also check `TT_t`-freeness and report the class bound `b(t - 1)`.
        #[arg(long)]
        t: Option<usize>,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// An optimal dicolouring by exhaustive search.
    Exact {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn configure_threads() -> Result<(), Stop> {
    let Ok(value) = std::env::var("DICHROMA_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| Stop::input(format!("DICHROMA_THREADS must be a thread count, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Stop::input(format!("cannot start {threads} threads: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let mut run = Run::new(!cli.global.no_timings);
    let result = configure_threads().and_then(|()| commands::dispatch(&cli, &mut run));
    let exhausted = match result {
        Ok(()) => false,
        Err(Stop::Budget(_)) => true,
        Err(Stop::Input(e)) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let report = run.finish(echo, exhausted);
    let mut text = serde_json::to_string_pretty(&report).expect("reports serialize");
    text.push('\n');
    let written = match &cli.global.report {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write the report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.exit_code() as u8)
}

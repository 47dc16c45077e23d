//! Command-line interface: instance generation, bound reports, the exact
//! solver, verification sweeps, and the bound-comparison reproduction
//! checks.
//!
//! Exit codes: 0 success, 1 invariant violation or failed check, 2 usage or
//! parse errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hibound::bounds::{compute_report, BoundSelection};
use hibound::exact::{alpha_exact, SolverConfig};
use hibound::hypergraph::Hypergraph;
use hibound::io::{
    alpha_json, parse_hypergraph_opts, report_csv, report_json, report_table, serialize_hypergraph,
    sweep_csv, sweep_json,
};
use hibound::verify::{reproduce_paper_examples, run_sweep, MPolicy, SweepSpec};

#[derive(Parser)]
#[command(
    name = "hibound",
    version,
    about = "Independence-number lower bounds for k-uniform hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance from a named family and write it as a .khg file
    Gen(GenArgs),
    /// Compute bound reports for an instance file
    Bound(BoundArgs),
    /// Compute the exact independence number of an instance file
    Exact(ExactArgs),
    /// Run a verification sweep over an instance grid
    Verify(VerifyArgs),
    /// Run the built-in bound-comparison reproduction checks
    Examples(ExamplesArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Empty,
    CompleteMinusOneEdge,
    RandomUniform,
    RandomRegular,
}

#[derive(Args)]
struct GenArgs {
    /// Instance family
    #[arg(value_enum)]
    family: Family,
    /// Vertex count
    #[arg(short = 'n', long)]
    n: usize,
    /// Edge uniformity
    #[arg(short = 'k', long)]
    k: usize,
    /// Edge count (random-uniform only)
    #[arg(short = 'm', long)]
    m: Option<u64>,
    /// Vertex degree (random-regular only)
    #[arg(short = 'd', long)]
    degree: Option<u64>,
    /// Restarts before the regular sampler gives up
    #[arg(long, default_value_t = 100)]
    max_attempts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Table,
}

#[derive(Args)]
struct BoundArgs {
    /// Instance file in the .khg text format
    #[arg(long)]
    input: PathBuf,
    /// Comma-separated bound names: ell,turan,ts,ct,cps (default: all)
    #[arg(long)]
    bounds: Option<String>,
    /// Also compute the exact independence number
    #[arg(long)]
    alpha: bool,
    /// Node budget for the exact solver
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Treat vertex indices in the input as 1-based
    #[arg(long)]
    one_based: bool,
}

#[derive(Args)]
struct ExactArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    #[arg(long)]
    one_based: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 4)]
    n_min: usize,
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    #[arg(long, default_value_t = 3)]
    k_min: usize,
    #[arg(long, default_value_t = 3)]
    k_max: usize,
    #[arg(long, value_enum, default_value_t = MPolicyArg::ExhaustiveAllM)]
    m_policy: MPolicyArg,
    #[arg(long, default_value_t = 1)]
    instances_per_cell: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Check every bound against the exact independence number
    #[arg(long)]
    with_alpha: bool,
    #[arg(long, default_value_t = 100_000_000)]
    alpha_budget: u64,
    #[arg(long, value_enum, default_value_t = SweepFormat::Json)]
    format: SweepFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum MPolicyArg {
    ExhaustiveAllM,
    RandomSample,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExamplesFormat {
    Table,
    Json,
}

#[derive(Args)]
struct ExamplesArgs {
    #[arg(long, value_enum, default_value_t = ExamplesFormat::Table)]
    format: ExamplesFormat,
}

const EXIT_FAILED_CHECK: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen(args) => gen(args),
        Command::Bound(args) => bound(args),
        Command::Exact(args) => exact(args),
        Command::Verify(args) => verify(args),
        Command::Examples(args) => examples(args),
    }
}

fn gen(args: GenArgs) -> ExitCode {
    let built = match args.family {
        Family::Complete => Hypergraph::complete(args.n, args.k),
        Family::Empty => Hypergraph::empty(args.n, args.k),
        Family::CompleteMinusOneEdge => Hypergraph::complete_minus_one_edge(args.n, args.k),
        Family::RandomUniform => {
            let Some(m) = args.m else {
                eprintln!("error: random-uniform requires -m");
                return ExitCode::from(EXIT_USAGE);
            };
            Hypergraph::random_uniform(args.n, args.k, m, args.seed)
        }
        Family::RandomRegular => {
            let Some(d) = args.degree else {
                eprintln!("error: random-regular requires -d");
                return ExitCode::from(EXIT_USAGE);
            };
            Hypergraph::random_regular(args.n, args.k, d, args.seed, args.max_attempts)
        }
    };
    let h = match built {
        Ok(h) => h,
        Err(e @ hibound::HypergraphError::AttemptsExhausted { .. }) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAILED_CHECK);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let text = serialize_hypergraph(&h);
    match args.out {
        Some(path) => {
            if let Err(e) = fs::write(&path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}

fn load_instance(path: &PathBuf, one_based: bool) -> Result<Hypergraph, ExitCode> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(EXIT_USAGE)
    })?;
    parse_hypergraph_opts(&text, one_based).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        ExitCode::from(EXIT_USAGE)
    })
}

fn bound(args: BoundArgs) -> ExitCode {
    let h = match load_instance(&args.input, args.one_based) {
        Ok(h) => h,
        Err(code) => return code,
    };
    let selection = match &args.bounds {
        None => BoundSelection::default(),
        Some(list) => match BoundSelection::parse_list(list) {
            Ok(sel) => sel,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
        },
    };
    let cfg = SolverConfig {
        node_budget: args.budget,
        use_ell_pruning: true,
    };
    let report = compute_report(&h, &selection, args.alpha, &cfg);
    match args.format {
        ReportFormat::Json => print!("{}", report_json(&report)),
        ReportFormat::Csv => print!("{}", report_csv(&report)),
        ReportFormat::Table => print!("{}", report_table(&report)),
    }
    ExitCode::SUCCESS
}

fn exact(args: ExactArgs) -> ExitCode {
    let h = match load_instance(&args.input, args.one_based) {
        Ok(h) => h,
        Err(code) => return code,
    };
    let cfg = SolverConfig {
        node_budget: args.budget,
        use_ell_pruning: true,
    };
    let result = alpha_exact(&h, &cfg);
    print!("{}", alpha_json(&result));
    ExitCode::SUCCESS
}

fn verify(args: VerifyArgs) -> ExitCode {
    let spec = SweepSpec {
        n_min: args.n_min,
        n_max: args.n_max,
        k_min: args.k_min,
        k_max: args.k_max,
        m_policy: match args.m_policy {
            MPolicyArg::ExhaustiveAllM => MPolicy::ExhaustiveAllM,
            MPolicyArg::RandomSample => MPolicy::RandomSample,
        },
        instances_per_cell: args.instances_per_cell,
        seed: args.seed,
        with_alpha: args.with_alpha,
        alpha_budget: args.alpha_budget,
    };
    let result = match run_sweep(&spec) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match args.format {
        SweepFormat::Json => print!("{}", sweep_json(&result)),
        SweepFormat::Csv => print!("{}", sweep_csv(&result)),
    }
    if result.passed() {
        ExitCode::SUCCESS
    } else {
        eprintln!(
            "error: {} bound violation(s) against the exact independence number",
            result.violations.len()
        );
        ExitCode::from(EXIT_FAILED_CHECK)
    }
}

fn examples(args: ExamplesArgs) -> ExitCode {
    let report = reproduce_paper_examples();
    match args.format {
        ExamplesFormat::Table => {
            for check in &report.checks {
                println!(
                    "{} {:35} {}",
                    if check.pass { "PASS" } else { "FAIL" },
                    check.name,
                    check.details
                );
            }
        }
        ExamplesFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
        }
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED_CHECK)
    }
}

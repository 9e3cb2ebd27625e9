//! `rrg`: counting, series tables, bijection traces and verification suites.
//!
//! Exit codes: 0 ok, 1 a verification check failed, 2 usage error,
//! 3 invalid partition or triple on input.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rrg_core::bijection::TripleDocument;
use rrg_core::parallel::default_threads;
use rrg_core::verify::{self, Suite, VerifyOptions};
use rrg_core::{
    andrews_sum_k3, count_table_with_threads, from_triple, product_side, t_series, to_triple, BijectionError,
    MoveTriple, Partition, Side, XQSeries,
};
use serde_json::json;

const OK: u8 = 0;
const CHECK_FAILED: u8 = 1;
const USAGE: u8 = 2;
const BAD_INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rrg",
    version,
    about = "Rogers-Ramanujan-Gordon partitions at k=3: counts, series and the move bijection"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Brute-force count table, per weight (or per weight and number of parts).
    Count(CountArgs),
    /// Truncated series coefficient table.
    Series(SeriesArgs),
    /// Run the bijection in one direction.
    Bijection(BijectionArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Same as `verify --suite bijection`.
    Roundtrip(Bounds),
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Difference,
    Modulus,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, value_enum)]
    side: SideArg,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    a: u32,
    #[arg(long)]
    max_n: u32,
    /// Emit `n, m, count` rows instead of per-weight totals.
    #[arg(long)]
    by_parts: bool,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    T1,
    T2,
    T3,
    Andrews3,
    Product,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    which: Which,
    /// Residue for `product`; optional (and checked) for the t-series.
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    qmax: usize,
    /// Highest power of x kept; defaults to qmax.
    #[arg(long)]
    xmax: Option<usize>,
    /// Substitute x=1 before printing.
    #[arg(long)]
    at_x_one: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Forward,
    Backward,
}

#[derive(Args)]
struct BijectionArgs {
    #[arg(value_enum)]
    direction: DirectionArg,
    #[arg(long)]
    a: u32,
    /// Comma-separated descending parts (backward).
    #[arg(long)]
    partition: Option<String>,
    #[arg(long)]
    pairs: Option<u32>,
    #[arg(long)]
    singletons: Option<u32>,
    /// Comma-separated pair move counts (forward).
    #[arg(long)]
    mu: Option<String>,
    /// Comma-separated singleton move counts (forward).
    #[arg(long)]
    nu: Option<String>,
    /// Include every intermediate partition.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct Bounds {
    #[arg(long)]
    a: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    max_weight: Option<u32>,
    #[arg(long)]
    json: bool,
    /// Worker threads; defaults to the machine's parallelism.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    suite: Suite,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    qmax: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    max_shape: Option<u32>,
    #[command(flatten)]
    bounds: Bounds,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Count(args) => count(args),
        Command::Series(args) => series(args),
        Command::Bijection(args) => bijection(args),
        Command::Verify(args) => run_verify(args.suite, args.qmax, args.max_shape, args.bounds),
        Command::Roundtrip(bounds) => run_verify(Suite::Bijection, None, None, bounds),
    };
    ExitCode::from(code)
}

fn usage(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    USAGE
}

fn count(args: CountArgs) -> u8 {
    if args.k < 2 || args.a < 1 || args.a > args.k {
        return usage(format!("need k >= 2 and 1 <= a <= k, got k={} a={}", args.k, args.a));
    }
    let side = match args.side {
        SideArg::Difference => Side::Difference,
        SideArg::Modulus => Side::Modulus,
    };
    let threads = args.threads.unwrap_or_else(default_threads);
    let table = match count_table_with_threads(args.k, args.a, side, args.max_n, threads) {
        Ok(t) => t,
        Err(e) => return usage(e),
    };
    print!("{}", if args.by_parts { table.to_tsv() } else { table.totals_tsv() });
    OK
}

fn series(args: SeriesArgs) -> u8 {
    let fixed = match args.which {
        Which::T1 => Some(1),
        Which::T2 => Some(2),
        Which::T3 => Some(3),
        Which::Andrews3 => Some(3),
        Which::Product => None,
    };
    let a = match (fixed, args.a) {
        (Some(f), Some(a)) if f != a => return usage(format!("this series has a={f}, got --a {a}")),
        (Some(f), _) => f,
        (None, Some(a)) if (1..=3).contains(&a) => a,
        (None, Some(a)) => return usage(format!("a must be 1, 2 or 3 for k=3, got {a}")),
        (None, None) => return usage("--which product needs --a"),
    };
    let out = match args.which {
        Which::Product => XQSeries::from_q(product_side(3, a, args.qmax)),
        Which::Andrews3 => XQSeries::from_q(andrews_sum_k3(args.qmax)),
        _ => {
            let s = t_series(a, args.qmax, args.xmax.unwrap_or(args.qmax));
            if args.at_x_one {
                XQSeries::from_q(s.at_x_one())
            } else {
                s
            }
        }
    };
    if args.json {
        println!("{}", out.to_json());
    } else {
        print!("{}", out.to_tsv());
    }
    OK
}

fn bad_input(err: impl std::fmt::Display) -> u8 {
    println!("{}", json!({ "error": "invalid input", "message": err.to_string() }));
    BAD_INPUT
}

fn parse_counts(flag: &str, text: &str) -> Result<Vec<u32>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| t.trim().parse::<u32>().map_err(|_| format!("--{flag}: cannot parse {t:?}"))).collect()
}

fn bijection(args: BijectionArgs) -> u8 {
    if !(1..=3).contains(&args.a) {
        return usage(format!("a must be 1, 2 or 3 for k=3, got {}", args.a));
    }
    let doc = match args.direction {
        DirectionArg::Backward => {
            let Some(text) = args.partition else {
                return usage("backward needs --partition");
            };
            let lam: Partition = match text.parse() {
                Ok(p) => p,
                Err(e) => return bad_input(e),
            };
            match to_triple(args.a, &lam) {
                Ok((t, trace)) => TripleDocument::new(&t, lam, args.trace.then_some(trace)),
                Err(e) => return bijection_failure(e),
            }
        }
        DirectionArg::Forward => {
            let (Some(pairs), Some(singletons)) = (args.pairs, args.singletons) else {
                return usage("forward needs --pairs and --singletons");
            };
            let mu = match parse_counts("mu", args.mu.as_deref().unwrap_or("")) {
                Ok(v) => v,
                Err(e) => return bad_input(e),
            };
            let nu = match parse_counts("nu", args.nu.as_deref().unwrap_or("")) {
                Ok(v) => v,
                Err(e) => return bad_input(e),
            };
            let t = MoveTriple { a: args.a, pairs, singletons, mu, nu };
            match from_triple(&t) {
                Ok((lam, trace)) => TripleDocument::new(&t, lam, args.trace.then_some(trace)),
                Err(e) => return bijection_failure(e),
            }
        }
    };
    println!("{}", doc.to_json());
    OK
}

fn bijection_failure(e: BijectionError) -> u8 {
    match e {
        BijectionError::BadResidue(_) => usage(e),
        BijectionError::InvalidPartition(_) | BijectionError::MalformedTriple(_) | BijectionError::Partition(_) => {
            bad_input(e)
        }
        BijectionError::MoveInapplicable { .. } | BijectionError::Stuck { .. } => {
            eprintln!("error: {e}");
            CHECK_FAILED
        }
    }
}

fn run_verify(suite: Suite, qmax: Option<u64>, max_shape: Option<u32>, bounds: Bounds) -> u8 {
    let opts = VerifyOptions {
        a: bounds.a,
        qmax: qmax.map(|q| q as usize),
        max_weight: bounds.max_weight,
        max_shape,
        threads: bounds.threads.map_or_else(default_threads, |t| t as usize),
    };
    eprintln!("running suite {} on {} threads", suite.name(), opts.threads);
    let report = match verify::run(suite, &opts) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    for r in &report.records {
        eprintln!("{:>8} ms  {} {} [{}]", r.elapsed_ms, r.status.label(), r.name, r.params);
    }
    if bounds.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.passed() {
        OK
    } else {
        CHECK_FAILED
    }
}

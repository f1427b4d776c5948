//! `dpkit`: command-line front end over the solver library.
//!
//! Five subcommands: `solve` runs one algorithm on one instance file,
//! `compare` runs every applicable algorithm and checks they agree,
//! `gen` emits instance files, `count` reports subproblem statistics for
//! one instance under a chosen evaluation order, and `bench` tabulates
//! those statistics across a generated family at a range of sizes.
//!
//! Exit codes: 0 success, 1 comparison disagreement, 2 unusable input
//! (unreadable or malformed file, bad usage), 3 violated algorithm
//! precondition, 4 a size cap refused the computation. Output formats
//! are plain text, stable token for token.

use clap::{Parser, Subcommand, ValueEnum};
use dpkit_core::instances::{
    gen_fig1, gen_fig2, gen_random_graph, gen_random_is, gen_random_ks, parse_graph, parse_is,
    parse_ks, serialize_graph, serialize_is, serialize_ks, ParseError,
};
use dpkit_core::shortest_paths::{
    bellman_ford, dijkstra, oracle_distances, ExtLength, ORACLE_MAX_VERTICES,
};
use dpkit_core::subproblems::{count_scaling, memo_solve, scaling_csv, Family, OrderChoice};
use dpkit_core::{interval, knapsack, Digraph, IntervalInstance, KnapsackInstance};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dpkit",
    about = "Interval scheduling, knapsack, and shortest paths: exact solvers, \
             greedy counterparts, oracles, and subproblem counting",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance file with one algorithm
    Solve {
        /// Problem kind the input file encodes
        problem: Problem,
        /// Algorithm to run (is: dp|greedy|brute; ks: dp|greedy|greedy-linear|brute;
        /// sp: bf|dijkstra|brute)
        #[arg(long)]
        algo: Algo,
        /// Instance file to read
        #[arg(long)]
        input: PathBuf,
    },
    /// Run all applicable algorithms on one instance and check agreement
    Compare {
        /// Problem kind the input file encodes
        problem: Problem,
        /// Instance file to read
        #[arg(long)]
        input: PathBuf,
    },
    /// Generate an instance file
    Gen {
        #[command(subcommand)]
        family: GenCommand,
    },
    /// Count distinct subproblems and calls for one interval instance
    Count {
        /// Evaluation order for the memoized recursion
        #[arg(long)]
        order: OrderArg,
        /// Interval instance file to read
        #[arg(long)]
        input: PathBuf,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate subproblem counts across a generated family of sizes
    Bench {
        /// Instance family to generate
        #[arg(long)]
        family: FamilyArg,
        /// Evaluation order for the memoized recursion
        #[arg(long)]
        order: OrderArg,
        /// Size or inclusive size range, e.g. `10` or `5..40`
        #[arg(long)]
        m: MRange,
        /// File to write instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// m disjoint pairs of overlapping intervals, unit values
    Fig1 {
        #[arg(long)]
        m: usize,
        /// File to write instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// m disjoint short intervals plus m mutually overlapping long ones
    Fig2 {
        #[arg(long)]
        m: usize,
        /// File to write instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Seeded random interval instance
    RandomIs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Give every component value 1 instead of a random value
        #[arg(long)]
        unit: bool,
        /// File to write instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Seeded random knapsack instance
    RandomKs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        capacity: u64,
        #[arg(long)]
        seed: u64,
        /// Give every item value 1 instead of a random value
        #[arg(long)]
        unit: bool,
        /// File to write instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Seeded random directed graph with integer lengths, source 0
    RandomGraph {
        #[arg(long)]
        n: usize,
        /// Number of edges
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: u64,
        /// Smallest edge length
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        min_len: i64,
        /// Largest edge length
        #[arg(long, default_value_t = 9, allow_hyphen_values = true)]
        max_len: i64,
        /// File to write instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Problem {
    Is,
    Ks,
    Sp,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Is => "is",
            Problem::Ks => "ks",
            Problem::Sp => "sp",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Dp,
    Greedy,
    GreedyLinear,
    Brute,
    Bf,
    Dijkstra,
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algo::Dp => "dp",
            Algo::Greedy => "greedy",
            Algo::GreedyLinear => "greedy-linear",
            Algo::Brute => "brute",
            Algo::Bf => "bf",
            Algo::Dijkstra => "dijkstra",
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    /// Earliest start time first
    Start,
    /// Earliest finish time first
    Finish,
    /// The order components appear in the input
    Input,
}

impl OrderArg {
    fn choice(self) -> OrderChoice {
        match self {
            OrderArg::Start => OrderChoice::EarliestStart,
            OrderArg::Finish => OrderChoice::EarliestFinish,
            OrderArg::Input => OrderChoice::Identity,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Fig1,
    Fig2,
}

impl FamilyArg {
    fn family(self) -> Family {
        match self {
            FamilyArg::Fig1 => Family::Fig1,
            FamilyArg::Fig2 => Family::Fig2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
}

/// Inclusive size range parsed from `7` or `5..40`.
#[derive(Clone)]
struct MRange(Vec<usize>);

impl std::str::FromStr for MRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_end = |part: &str| {
            part.parse::<usize>()
                .map_err(|_| format!("expected a size, got `{part}`"))
        };
        if let Some((lo, hi)) = s.split_once("..") {
            let (lo, hi) = (parse_end(lo)?, parse_end(hi)?);
            if lo > hi {
                return Err(format!("empty range `{s}`"));
            }
            Ok(MRange((lo..=hi).collect()))
        } else {
            Ok(MRange(vec![parse_end(s)?]))
        }
    }
}

/// Anything that aborts a command, mapped onto the exit-code contract.
enum Failure {
    Io(PathBuf, std::io::Error),
    Parse(PathBuf, ParseError),
    Core(dpkit_core::Error),
    Usage(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(..) | Failure::Parse(..) | Failure::Usage(_) => 2,
            Failure::Core(dpkit_core::Error::Precondition(_)) => 3,
            Failure::Core(dpkit_core::Error::Capacity(_)) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Io(path, e) => write!(f, "{}: {e}", path.display()),
            Failure::Parse(path, e) => write!(f, "{}: {e}", path.display()),
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<dpkit_core::Error> for Failure {
    fn from(e: dpkit_core::Error) -> Self {
        Failure::Core(e)
    }
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`dpkit ... | head`) like other unix
    // tools, instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Solve {
            problem,
            algo,
            input,
        } => run_solve(problem, algo, &input).map(|()| 0),
        Command::Compare { problem, input } => run_compare(problem, &input),
        Command::Gen { family } => run_gen(family).map(|()| 0),
        Command::Count {
            order,
            input,
            format,
        } => run_count(order, &input, format).map(|()| 0),
        Command::Bench {
            family,
            order,
            m,
            output,
            format,
        } => run_bench(family, order, &m.0, output.as_deref(), format).map(|()| 0),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn read_is(path: &Path) -> Result<IntervalInstance, Failure> {
    parse_is(&read_file(path)?).map_err(|e| Failure::Parse(path.to_path_buf(), e))
}

fn read_ks(path: &Path) -> Result<KnapsackInstance, Failure> {
    parse_ks(&read_file(path)?).map_err(|e| Failure::Parse(path.to_path_buf(), e))
}

fn read_graph(path: &Path) -> Result<Digraph, Failure> {
    parse_graph(&read_file(path)?).map_err(|e| Failure::Parse(path.to_path_buf(), e))
}

fn selected_line(selected: &[usize]) -> String {
    let mut line = String::from("selected");
    for i in selected {
        line.push_str(&format!(" {i}"));
    }
    line
}

fn print_is_solution(sol: &interval::Solution) {
    println!("value {}", sol.value);
    println!("{}", selected_line(&sol.selected));
}

fn print_ks_solution(sol: &knapsack::Solution) {
    println!("value {}", sol.total_value);
    println!("weight {}", sol.total_weight);
    println!("{}", selected_line(&sol.selected));
}

/// One line per vertex: `t d p`, with `d` a decimal, `inf`, or `-inf`,
/// and `p` the predecessor vertex or `-`.
fn print_sp_table(dists: &[ExtLength], pred_of: impl Fn(usize) -> Option<usize>) {
    for (t, d) in dists.iter().enumerate() {
        match pred_of(t) {
            Some(p) => println!("{t} {d} {p}"),
            None => println!("{t} {d} -"),
        }
    }
}

fn run_solve(problem: Problem, algo: Algo, input: &Path) -> Result<(), Failure> {
    match (problem, algo) {
        (Problem::Is, Algo::Dp) => {
            let inst = read_is(input)?;
            let table = interval::dp_value(&inst);
            print_is_solution(&interval::dp_retrieve(&inst, &table));
        }
        (Problem::Is, Algo::Greedy) => {
            let inst = read_is(input)?;
            print_is_solution(&interval::greedy_unit(&inst)?);
        }
        (Problem::Is, Algo::Brute) => {
            let inst = read_is(input)?;
            print_is_solution(&interval::brute_force(&inst)?);
        }
        (Problem::Ks, Algo::Dp) => {
            let inst = read_ks(input)?;
            let table = knapsack::dp_table(&inst)?;
            print_ks_solution(&knapsack::dp_retrieve(&inst, &table));
        }
        (Problem::Ks, Algo::Greedy) => {
            let inst = read_ks(input)?;
            print_ks_solution(&knapsack::greedy_unit(&inst)?);
        }
        (Problem::Ks, Algo::GreedyLinear) => {
            let inst = read_ks(input)?;
            print_ks_solution(&knapsack::greedy_unit_linear(&inst)?);
        }
        (Problem::Ks, Algo::Brute) => {
            let inst = read_ks(input)?;
            print_ks_solution(&knapsack::brute_force(&inst)?);
        }
        (Problem::Sp, Algo::Bf) => {
            let g = read_graph(input)?;
            let tree = bellman_ford(&g);
            print_sp_table(tree.dists(), |t| tree.pred(t));
        }
        (Problem::Sp, Algo::Dijkstra) => {
            let g = read_graph(input)?;
            let (tree, _) = dijkstra(&g)?;
            print_sp_table(tree.dists(), |t| tree.pred(t));
        }
        (Problem::Sp, Algo::Brute) => {
            let g = read_graph(input)?;
            let dists = oracle_distances(&g)?;
            print_sp_table(&dists, |_| None);
        }
        (problem, algo) => {
            return Err(Failure::Usage(format!(
                "algorithm `{algo}` does not apply to problem `{problem}`"
            )));
        }
    }
    Ok(())
}

/// Tracks agreement across the algorithms `compare` managed to run.
struct Agreement {
    mismatch: bool,
}

impl Agreement {
    fn new() -> Self {
        Agreement { mismatch: false }
    }

    fn check(&mut self, ok: bool) {
        if !ok {
            self.mismatch = true;
        }
    }

    fn finish(self) -> u8 {
        if self.mismatch {
            println!("disagree");
            1
        } else {
            println!("agree");
            0
        }
    }
}

fn run_compare(problem: Problem, input: &Path) -> Result<u8, Failure> {
    match problem {
        Problem::Is => compare_is(&read_is(input)?),
        Problem::Ks => compare_ks(&read_ks(input)?),
        Problem::Sp => compare_sp(&read_graph(input)?),
    }
}

fn compare_is(inst: &IntervalInstance) -> Result<u8, Failure> {
    let mut agreement = Agreement::new();
    let table = interval::dp_value(inst);
    let reference = table.optimum();
    let retrieved = interval::dp_retrieve(inst, &table);
    println!("dp value={reference}");
    if let Err(msg) = retrieved.validate(inst) {
        println!("dp witness invalid: {msg}");
        agreement.check(false);
    }
    agreement.check(retrieved.value == reference);

    if inst.has_unit_values() {
        let sol = interval::greedy_unit(inst)?;
        println!("greedy value={}", sol.value);
        if let Err(msg) = sol.validate(inst) {
            println!("greedy witness invalid: {msg}");
            agreement.check(false);
        }
        agreement.check(sol.value == reference);
    } else {
        println!("greedy skipped: requires unit values");
    }

    if inst.len() <= interval::BRUTE_FORCE_MAX {
        let sol = interval::brute_force(inst)?;
        println!("brute value={}", sol.value);
        if let Err(msg) = sol.validate(inst) {
            println!("brute witness invalid: {msg}");
            agreement.check(false);
        }
        agreement.check(sol.value == reference);
    } else {
        println!(
            "brute skipped: more than {} components",
            interval::BRUTE_FORCE_MAX
        );
    }
    Ok(agreement.finish())
}

fn compare_ks(inst: &KnapsackInstance) -> Result<u8, Failure> {
    let mut agreement = Agreement::new();
    let table = knapsack::dp_table(inst)?;
    let reference = table.optimum();
    let retrieved = knapsack::dp_retrieve(inst, &table);
    println!("dp value={reference}");
    if let Err(msg) = retrieved.validate(inst) {
        println!("dp witness invalid: {msg}");
        agreement.check(false);
    }
    agreement.check(retrieved.total_value == reference);

    if inst.has_unit_values() {
        let sorted = knapsack::greedy_unit(inst)?;
        println!("greedy value={}", sorted.total_value);
        if let Err(msg) = sorted.validate(inst) {
            println!("greedy witness invalid: {msg}");
            agreement.check(false);
        }
        agreement.check(sorted.total_value == reference);

        let linear = knapsack::greedy_unit_linear(inst)?;
        println!("greedy-linear value={}", linear.total_value);
        if let Err(msg) = linear.validate(inst) {
            println!("greedy-linear witness invalid: {msg}");
            agreement.check(false);
        }
        agreement.check(linear.selected.len() == sorted.selected.len());
    } else {
        println!("greedy skipped: requires unit values");
        println!("greedy-linear skipped: requires unit values");
    }

    if inst.len() <= knapsack::BRUTE_FORCE_MAX {
        let sol = knapsack::brute_force(inst)?;
        println!("brute value={}", sol.total_value);
        if let Err(msg) = sol.validate(inst) {
            println!("brute witness invalid: {msg}");
            agreement.check(false);
        }
        agreement.check(sol.total_value == reference);
    } else {
        println!("brute skipped: more than {} items", knapsack::BRUTE_FORCE_MAX);
    }
    Ok(agreement.finish())
}

fn fmt_dists(dists: &[ExtLength]) -> String {
    let parts: Vec<String> = dists.iter().map(|d| d.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn dists_equal(a: &[ExtLength], b: &[ExtLength]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.total_cmp(y).is_eq())
}

fn compare_sp(g: &Digraph) -> Result<u8, Failure> {
    let mut agreement = Agreement::new();
    let bf = bellman_ford(g);
    println!("bf dist={}", fmt_dists(bf.dists()));
    if let Err(msg) = bf.validate(g) {
        println!("bf witness invalid: {msg}");
        agreement.check(false);
    }

    let nonnegative = g.min_edge_length().is_none_or(|l| l >= 0.0);
    if nonnegative {
        let (dj, _) = dijkstra(g)?;
        println!("dijkstra dist={}", fmt_dists(dj.dists()));
        if let Err(msg) = dj.validate(g) {
            println!("dijkstra witness invalid: {msg}");
            agreement.check(false);
        }
        agreement.check(dists_equal(bf.dists(), dj.dists()));
    } else {
        println!("dijkstra skipped: requires nonnegative lengths");
    }

    if g.vertex_count() <= ORACLE_MAX_VERTICES {
        let reference = oracle_distances(g)?;
        println!("brute dist={}", fmt_dists(&reference));
        agreement.check(dists_equal(bf.dists(), &reference));
    } else {
        println!(
            "brute skipped: more than {ORACLE_MAX_VERTICES} vertices"
        );
    }
    Ok(agreement.finish())
}

fn write_out(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(path.to_path_buf(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_gen(family: GenCommand) -> Result<(), Failure> {
    let (text, output) = match family {
        GenCommand::Fig1 { m, output } => (serialize_is(&gen_fig1(m)), output),
        GenCommand::Fig2 { m, output } => (serialize_is(&gen_fig2(m)), output),
        GenCommand::RandomIs {
            n,
            seed,
            unit,
            output,
        } => (serialize_is(&gen_random_is(n, seed, unit)), output),
        GenCommand::RandomKs {
            n,
            capacity,
            seed,
            unit,
            output,
        } => (
            serialize_ks(&gen_random_ks(n, capacity, seed, unit)),
            output,
        ),
        GenCommand::RandomGraph {
            n,
            m,
            seed,
            min_len,
            max_len,
            output,
        } => {
            if n == 0 {
                return Err(Failure::Usage("graphs need at least one vertex".into()));
            }
            if min_len > max_len {
                return Err(Failure::Usage(format!(
                    "empty length range {min_len}..{max_len}"
                )));
            }
            (
                serialize_graph(&gen_random_graph(n, m, seed, min_len, max_len)),
                output,
            )
        }
    };
    write_out(output.as_deref(), &text)
}

fn run_count(order: OrderArg, input: &Path, format: Format) -> Result<(), Failure> {
    let inst = read_is(input)?;
    let report = memo_solve(&inst, &order.choice().policy_for(inst.len()))?;
    match format {
        Format::Text => println!(
            "distinct={} calls={} value={}",
            report.distinct_subproblems, report.recursive_calls, report.optimal_value
        ),
        Format::Csv => {
            println!("n,distinct,calls,value");
            println!(
                "{},{},{},{}",
                inst.len(),
                report.distinct_subproblems,
                report.recursive_calls,
                report.optimal_value
            );
        }
    }
    Ok(())
}

fn run_bench(
    family: FamilyArg,
    order: OrderArg,
    sizes: &[usize],
    output: Option<&Path>,
    format: Format,
) -> Result<(), Failure> {
    let rows = count_scaling(family.family(), order.choice(), sizes)?;
    let text = match format {
        Format::Csv => scaling_csv(&rows),
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                out.push_str(&format!(
                    "m={} n={} distinct={} calls={}\n",
                    r.m, r.n, r.distinct, r.calls
                ));
            }
            out
        }
    };
    write_out(output, &text)
}

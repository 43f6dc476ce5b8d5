//! Command-line harness behind the `gapsort` binary.
//!
//! Subcommands: `sort`, `bench`, `census`, `urn`, `fit`. Everything is driven
//! by flags. Exit codes: 0 on success, 2 when output cannot be written (or
//! input cannot be read), 64 for invalid flags.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde::Serialize;

use crate::analysis::{self, CensusConfig};
use crate::baselines::{binary_insertion_sort, insertion_sort};
use crate::library_sort::{self, SortParams};
use crate::rng::{self, GENERATOR_ID};
use crate::SortMetrics;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Library,
    Insertion,
    BinaryInsertion,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Library, Algorithm::Insertion, Algorithm::BinaryInsertion];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Library => "library",
            Algorithm::Insertion => "insertion",
            Algorithm::BinaryInsertion => "binary-insertion",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Distribution {
    Random,
    Sorted,
    Reversed,
    FewDistinct,
    NearlySorted,
}

impl Distribution {
    pub const ALL: [Distribution; 5] = [
        Distribution::Random,
        Distribution::Sorted,
        Distribution::Reversed,
        Distribution::FewDistinct,
        Distribution::NearlySorted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Distribution::Random => "random",
            Distribution::Sorted => "sorted",
            Distribution::Reversed => "reversed",
            Distribution::FewDistinct => "few-distinct",
            Distribution::NearlySorted => "nearly-sorted",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Deterministic input of length `n` for the given distribution.
pub fn generate(distribution: Distribution, n: usize, seed: u64) -> Vec<u64> {
    let mut rng = rng::stream(seed, rng::INPUT_STREAM);
    match distribution {
        Distribution::Random => (0..n).map(|_| rng.random()).collect(),
        Distribution::Sorted => (0..n as u64).collect(),
        Distribution::Reversed => (0..n as u64).rev().collect(),
        Distribution::FewDistinct => (0..n).map(|_| rng.random_range(0..16)).collect(),
        Distribution::NearlySorted => {
            let mut v: Vec<u64> = (0..n as u64).collect();
            if n >= 2 {
                for _ in 0..n.div_ceil(100) {
                    let i = rng.random_range(0..n - 1);
                    v.swap(i, i + 1);
                }
            }
            v
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub algorithms: Vec<Algorithm>,
    pub sizes: Vec<usize>,
    pub epsilon: f64,
    pub c: f64,
    pub seed: u64,
    pub trials: usize,
    pub distribution: Distribution,
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            algorithms: vec![Algorithm::Library],
            sizes: vec![1024],
            epsilon: 1.0,
            c: 4.0,
            seed: 0,
            trials: 1,
            distribution: Distribution::Random,
            jobs: 0,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.algorithms.is_empty() {
            return Err("at least one algorithm is required".into());
        }
        if self.sizes.is_empty() || self.sizes.contains(&0) {
            return Err("every n must be at least 1".into());
        }
        if self.trials == 0 {
            return Err("trials must be at least 1".into());
        }
        SortParams { epsilon: self.epsilon, c: self.c, ..SortParams::default() }.validate().map_err(|e| e.to_string())
    }
}

/// One benchmark row. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub algorithm: &'static str,
    pub n: usize,
    pub epsilon: f64,
    pub c: f64,
    pub seed: u64,
    pub distribution: &'static str,
    pub comparisons: u64,
    pub shift_moves: u64,
    pub rebalance_moves: u64,
    pub max_shift: u64,
    pub emergency_rebalances: u64,
    pub wall_time_ns: u64,
    pub generator: &'static str,
}

impl BenchRecord {
    pub fn total_moves(&self) -> u64 {
        self.shift_moves + self.rebalance_moves
    }
}

/// Runs one trial; `seed` drives both input generation and shuffling.
pub fn run_trial(
    algorithm: Algorithm,
    n: usize,
    distribution: Distribution,
    epsilon: f64,
    c: f64,
    seed: u64,
) -> crate::Result<BenchRecord> {
    let input = generate(distribution, n, seed);
    let start = Instant::now();
    let metrics: SortMetrics = match algorithm {
        Algorithm::Library => {
            let params = SortParams { epsilon, c, seed, shuffle: true, capture_labelings: false };
            library_sort::sort(&input, &params)?.metrics
        }
        Algorithm::Insertion => insertion_sort(&input).1,
        Algorithm::BinaryInsertion => binary_insertion_sort(&input).1,
    };
    let wall_time_ns = start.elapsed().as_nanos() as u64;
    Ok(BenchRecord {
        algorithm: algorithm.name(),
        n,
        epsilon,
        c,
        seed,
        distribution: distribution.name(),
        comparisons: metrics.comparisons,
        shift_moves: metrics.shift_moves,
        rebalance_moves: metrics.rebalance_moves,
        max_shift: metrics.max_shift,
        emergency_rebalances: metrics.emergency_rebalances,
        wall_time_ns,
        generator: GENERATOR_ID,
    })
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Runs every (algorithm, n, trial) combination. Records come back in that
/// nesting order whatever the thread count. Trial `t` uses seed
/// `trial_seed(config.seed, t)` for every algorithm and size.
pub fn run_bench(config: &BenchConfig) -> crate::Result<Vec<BenchRecord>> {
    use rayon::prelude::*;

    config.validate().map_err(crate::Error::InvalidArgument)?;
    let mut tasks = Vec::new();
    for &algorithm in &config.algorithms {
        for &n in &config.sizes {
            for t in 0..config.trials as u64 {
                tasks.push((algorithm, n, rng::trial_seed(config.seed, t)));
            }
        }
    }
    with_pool(config.jobs, || {
        tasks
            .par_iter()
            .map(|&(a, n, seed)| run_trial(a, n, config.distribution, config.epsilon, config.c, seed))
            .collect()
    })
}

pub fn write_records<W: Write>(records: &[BenchRecord], format: Format, out: W) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
            for r in records {
                w.serialize(r)?;
            }
            w.flush()
        }
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, records)?;
            writeln!(out)
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "gapsort", version, about = "Instrumented gapped insertion sort")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sort whitespace-separated integers from a file or stdin.
    Sort(SortArgs),
    /// Run benchmark trials and emit one record per (algorithm, n, seed).
    Bench(BenchArgs),
    /// Window census of support/intercalated elements over seeded runs.
    Census(CensusArgs),
    /// Monte Carlo runs of the two-urn process.
    Urn(UrnArgs),
    /// Fit growth exponents of total moves and comparisons.
    Fit(FitArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file (stdout when absent).
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SortArgs {
    #[arg(long, value_enum, default_value = "library")]
    pub algo: Algorithm,
    /// Input file (stdin when absent).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Gap parameter; the array holds (2 + 2*epsilon) slots per key
    #[arg(long, default_value_t = 1.0)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Keep the input order instead of shuffling first
    #[arg(long)]
    pub no_shuffle: bool,
    /// Print metrics as JSON on stderr.
    #[arg(long)]
    pub metrics: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated algorithms
    #[arg(long = "algo", value_enum, value_delimiter = ',', default_value = "library")]
    pub algorithms: Vec<Algorithm>,
    /// Comma-separated input sizes
    #[arg(long = "n", value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    /// Gap parameter; the array holds (2 + 2*epsilon) slots per key
    #[arg(long, default_value_t = 1.0)]
    pub epsilon: f64,
    /// Window constant, recorded in each row
    #[arg(long, default_value_t = 4.0)]
    pub c: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    #[arg(long = "dist", value_enum, default_value = "random")]
    pub distribution: Distribution,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Worker threads (0 uses all cores)
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long, default_value_t = 65536)]
    pub n: usize,
    /// Gap parameter; the array holds (2 + 2*epsilon) slots per key
    #[arg(long, default_value_t = 1.0)]
    pub epsilon: f64,
    /// Window constant for the census
    #[arg(long, default_value_t = 4.0)]
    pub c: f64,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Smallest support count included in the overall violation rate.
    #[arg(long, default_value_t = 256)]
    pub min_m: usize,
    /// Worker threads (0 uses all cores)
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct UrnArgs {
    #[arg(long, default_value_t = 1024)]
    pub m: usize,
    /// The urn starts with c * log2(m) A balls
    #[arg(long, default_value_t = 4.0)]
    pub c: f64,
    /// Balls thrown per trial (defaults to m).
    #[arg(long)]
    pub throws: Option<usize>,
    #[arg(long, default_value_t = 100_000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (0 uses all cores)
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Comma-separated algorithms
    #[arg(long = "algo", value_enum, value_delimiter = ',', default_value = "library,insertion")]
    pub algorithms: Vec<Algorithm>,
    /// Comma-separated input sizes
    #[arg(long = "n", value_delimiter = ',', default_value = "1024,2048,4096,8192,16384")]
    pub sizes: Vec<usize>,
    /// Gap parameter; the array holds (2 + 2*epsilon) slots per key
    #[arg(long, default_value_t = 1.0)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "dist", value_enum, default_value = "random")]
    pub distribution: Distribution,
    /// Worker threads (0 uses all cores)
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Serialize)]
pub struct FitReport {
    pub algorithm: &'static str,
    pub distribution: &'static str,
    pub seed: u64,
    pub generator: &'static str,
    /// `(n, mean total moves, mean comparisons)`.
    pub points: Vec<(usize, f64, f64)>,
    pub moves: analysis::GrowthFit,
    pub comparisons: analysis::GrowthFit,
}

/// Groups bench records by algorithm and fits `total moves ~ n^k` and
/// `comparisons ~ n^k` on the per-size means.
pub fn fit_records(records: &[BenchRecord], seed: u64) -> crate::Result<Vec<FitReport>> {
    let mut reports = Vec::new();
    let mut algos: Vec<&'static str> = records.iter().map(|r| r.algorithm).collect();
    algos.dedup();
    for algo in algos {
        let rows: Vec<&BenchRecord> = records.iter().filter(|r| r.algorithm == algo).collect();
        let mut sizes: Vec<usize> = rows.iter().map(|r| r.n).collect();
        sizes.sort_unstable();
        sizes.dedup();
        let points: Vec<(usize, f64, f64)> = sizes
            .iter()
            .map(|&n| {
                let at: Vec<&&BenchRecord> = rows.iter().filter(|r| r.n == n).collect();
                let k = at.len() as f64;
                (
                    n,
                    at.iter().map(|r| r.total_moves() as f64).sum::<f64>() / k,
                    at.iter().map(|r| r.comparisons as f64).sum::<f64>() / k,
                )
            })
            .collect();
        let moves: Vec<(f64, f64)> = points.iter().map(|p| (p.0 as f64, p.1)).collect();
        let comps: Vec<(f64, f64)> = points.iter().map(|p| (p.0 as f64, p.2)).collect();
        reports.push(FitReport {
            algorithm: algo,
            distribution: rows[0].distribution,
            seed,
            generator: GENERATOR_ID,
            moves: analysis::growth_fit(&moves)?,
            comparisons: analysis::growth_fit(&comps)?,
            points,
        });
    }
    Ok(reports)
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn open_output(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    match out {
        None => Ok(Box::new(BufWriter::new(io::stdout()))),
        Some(path) => File::create(path)
            .map(|f| Box::new(BufWriter::new(f)) as Box<dyn Write>)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
    }
}

fn io_failure(e: io::Error) -> Failure {
    Failure::Io(e.to_string())
}

fn write_json<T: Serialize>(value: &T, out: &Option<PathBuf>) -> Result<(), Failure> {
    let mut w = open_output(out)?;
    serde_json::to_writer_pretty(&mut w, value).map_err(|e| Failure::Io(e.to_string()))?;
    writeln!(w).and_then(|_| w.flush()).map_err(io_failure)
}

fn run_sort(args: SortArgs) -> Result<(), Failure> {
    let mut text = String::new();
    match &args.input {
        Some(path) => File::open(path)
            .and_then(|mut f| f.read_to_string(&mut text))
            .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?,
        None => io::stdin().read_to_string(&mut text).map_err(io_failure)?,
    };
    let keys: Vec<i64> = text
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Failure::Usage(format!("not an integer: {t:?}"))))
        .collect::<Result<_, _>>()?;
    let (sorted, metrics) = match args.algo {
        Algorithm::Library => {
            let params = SortParams {
                epsilon: args.epsilon,
                seed: args.seed,
                shuffle: !args.no_shuffle,
                capture_labelings: false,
                ..SortParams::default()
            };
            let out = library_sort::sort(&keys, &params)?;
            (out.sorted, out.metrics)
        }
        Algorithm::Insertion => insertion_sort(&keys),
        Algorithm::BinaryInsertion => binary_insertion_sort(&keys),
    };
    let mut w = open_output(&args.output.out)?;
    for k in &sorted {
        writeln!(w, "{k}").map_err(io_failure)?;
    }
    w.flush().map_err(io_failure)?;
    if args.metrics {
        #[derive(Serialize)]
        struct Report<'a> {
            algorithm: &'static str,
            seed: u64,
            generator: &'static str,
            metrics: &'a SortMetrics,
        }
        let report =
            Report { algorithm: args.algo.name(), seed: args.seed, generator: GENERATOR_ID, metrics: &metrics };
        let json = serde_json::to_string_pretty(&report).map_err(|e| Failure::Io(e.to_string()))?;
        eprintln!("{json}");
    }
    Ok(())
}

fn run_bench_cmd(args: BenchArgs) -> Result<(), Failure> {
    let config = BenchConfig {
        algorithms: args.algorithms,
        sizes: args.sizes,
        epsilon: args.epsilon,
        c: args.c,
        seed: args.seed,
        trials: args.trials,
        distribution: args.distribution,
        jobs: args.jobs,
    };
    config.validate().map_err(Failure::Usage)?;
    let mut w = open_output(&args.output.out)?;
    let records = run_bench(&config)?;
    write_records(&records, args.format, &mut w).map_err(io_failure)?;
    w.flush().map_err(io_failure)
}

fn run_census_cmd(args: CensusArgs) -> Result<(), Failure> {
    SortParams { epsilon: args.epsilon, c: args.c, ..SortParams::default() }.validate()?;
    let config = CensusConfig {
        n: args.n,
        epsilon: args.epsilon,
        c: args.c,
        trials: args.trials,
        seed: args.seed,
        min_m: args.min_m,
        keep_support_counts: false,
    };
    let report = with_pool(args.jobs, || analysis::run_census(&config))?;
    write_json(&report, &args.output.out)
}

fn run_urn_cmd(args: UrnArgs) -> Result<(), Failure> {
    let throws = args.throws.unwrap_or(args.m);
    let report = with_pool(args.jobs, || analysis::run_urn_trials(args.m, args.c, throws, args.trials, args.seed))?;
    write_json(&report, &args.output.out)
}

fn run_fit_cmd(args: FitArgs) -> Result<(), Failure> {
    let config = BenchConfig {
        algorithms: args.algorithms,
        sizes: args.sizes,
        epsilon: args.epsilon,
        c: 4.0,
        seed: args.seed,
        trials: args.trials,
        distribution: args.distribution,
        jobs: args.jobs,
    };
    config.validate().map_err(Failure::Usage)?;
    let records = run_bench(&config)?;
    let reports = fit_records(&records, args.seed)?;
    write_json(&reports, &args.output.out)
}

/// Parses `args` (program name first) and runs the subcommand. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            if !e.use_stderr() {
                return EXIT_OK;
            }
            if !e.to_string().contains("Usage:") {
                eprintln!("\n{}", Cli::command().render_usage());
            }
            return EXIT_USAGE;
        }
    };
    let result = match cli.command {
        Command::Sort(a) => run_sort(a),
        Command::Bench(a) => run_bench_cmd(a),
        Command::Census(a) => run_census_cmd(a),
        Command::Urn(a) => run_urn_cmd(a),
        Command::Fit(a) => run_fit_cmd(a),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("\n{}", Cli::command().render_usage());
            EXIT_USAGE
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            EXIT_IO
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_shapes() {
        let s = generate(Distribution::Sorted, 5, 1);
        assert!(s.windows(2).all(|w| w[0] <= w[1]) && s.len() == 5);
        let r = generate(Distribution::Reversed, 5, 1);
        assert!(r.windows(2).all(|w| w[0] >= w[1]) && r.len() == 5);
        assert_eq!(generate(Distribution::Random, 10_000, 4), generate(Distribution::Random, 10_000, 4));
        assert_ne!(generate(Distribution::Random, 100, 4), generate(Distribution::Random, 100, 5));
        assert!(generate(Distribution::FewDistinct, 1000, 2).iter().all(|&k| k < 16));
        assert!(generate(Distribution::Random, 0, 2).is_empty());
    }

    #[test]
    fn nearly_sorted_is_close_to_sorted() {
        let v = generate(Distribution::NearlySorted, 1000, 3);
        let mut sorted = v.clone();
        sorted.sort();
        assert_eq!(sorted, (0..1000).collect::<Vec<u64>>());
        let displaced = v.iter().enumerate().filter(|(i, &k)| *i as u64 != k).count();
        assert!(displaced > 0 && displaced <= 20, "{displaced}");
        assert_eq!(generate(Distribution::NearlySorted, 1, 3), vec![0]);
    }

    #[test]
    fn reversed_insertion_closed_form() {
        let r = run_trial(Algorithm::Insertion, 1024, Distribution::Reversed, 1.0, 4.0, 0).unwrap();
        assert_eq!(r.shift_moves, 1024 * 1023 / 2);
        assert_eq!(r.shift_moves, 523_776);
    }

    #[test]
    fn bench_records_do_not_depend_on_jobs() {
        let mut cfg = BenchConfig {
            algorithms: vec![Algorithm::Library, Algorithm::BinaryInsertion],
            sizes: vec![100, 300],
            trials: 3,
            seed: 9,
            jobs: 1,
            ..BenchConfig::default()
        };
        let strip =
            |v: Vec<BenchRecord>| v.into_iter().map(|r| BenchRecord { wall_time_ns: 0, ..r }).collect::<Vec<_>>();
        let one = strip(run_bench(&cfg).unwrap());
        cfg.jobs = 4;
        let four = strip(run_bench(&cfg).unwrap());
        assert_eq!(one, four);
        assert_eq!(one.len(), 12);
        assert_eq!(one[0].algorithm, "library");
        assert_eq!(one[11].algorithm, "binary-insertion");
    }

    #[test]
    fn config_validation() {
        assert!(BenchConfig::default().validate().is_ok());
        assert!(BenchConfig { sizes: vec![0], ..BenchConfig::default() }.validate().is_err());
        assert!(BenchConfig { trials: 0, ..BenchConfig::default() }.validate().is_err());
        assert!(BenchConfig { epsilon: 0.0, ..BenchConfig::default() }.validate().is_err());
    }
}

//! Write benchmark records as CSV, the same format `gapsort bench` produces.
//!
//!     cargo run --release --example bench_csv > bench.csv

use std::io;

use gapsort::cli::{run_bench, write_records, Algorithm, BenchConfig, Format};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = BenchConfig {
        algorithms: vec![Algorithm::Library, Algorithm::BinaryInsertion],
        sizes: vec![1 << 10, 1 << 12, 1 << 14],
        trials: 4,
        seed: 2024,
        ..BenchConfig::default()
    };
    let records = run_bench(&config)?;
    write_records(&records, Format::Csv, io::stdout().lock())?;
    Ok(())
}

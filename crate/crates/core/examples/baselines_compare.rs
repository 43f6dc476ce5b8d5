//! Gapped sort against linear and binary insertion sort on the same inputs.
//!
//!     cargo run --release --example baselines_compare

use gapsort::cli::{run_bench, Algorithm, BenchConfig, Distribution};

fn main() -> Result<(), gapsort::Error> {
    for dist in Distribution::ALL {
        let config = BenchConfig {
            algorithms: Algorithm::ALL.to_vec(),
            sizes: vec![20_000],
            distribution: dist,
            trials: 3,
            seed: 42,
            ..BenchConfig::default()
        };
        let records = run_bench(&config)?;
        println!("{}", dist.name());
        for algo in Algorithm::ALL {
            let rows: Vec<_> = records.iter().filter(|r| r.algorithm == algo.name()).collect();
            let k = rows.len() as f64;
            let cmp = rows.iter().map(|r| r.comparisons as f64).sum::<f64>() / k;
            let moves = rows.iter().map(|r| r.total_moves() as f64).sum::<f64>() / k;
            let ms = rows.iter().map(|r| r.wall_time_ns as f64).sum::<f64>() / k / 1e6;
            println!("  {:<17} comparisons {:>14.0}  moves {:>14.0}  {:>9.2} ms", algo.name(), cmp, moves, ms);
        }
    }
    Ok(())
}

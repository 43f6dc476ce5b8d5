//! How the cost of gapped insertion sort grows with n.
//!
//! For each size, sorts a few random inputs and prints per-element shift and
//! rebalance moves, comparisons per insertion, and the largest single shift.
//! Ends with power-law fits of total moves for gapped and plain insertion sort.
//!
//!     cargo run --release --example cost_scaling

use gapsort::analysis::growth_fit;
use gapsort::cli::{run_bench, Algorithm, BenchConfig};

fn main() -> Result<(), gapsort::Error> {
    let sizes: Vec<usize> = (10..=20).map(|k| 1usize << k).collect();
    let config = BenchConfig { sizes: sizes.clone(), trials: 5, seed: 1, ..BenchConfig::default() };
    let records = run_bench(&config)?;

    println!("{:>9} {:>12} {:>12} {:>12} {:>10} {:>10}", "n", "shift/n", "rebal/n", "cmp/n", "max_shift", "emergency");
    let mut points = Vec::new();
    for &n in &sizes {
        let rows: Vec<_> = records.iter().filter(|r| r.n == n).collect();
        let k = rows.len() as f64 * n as f64;
        let shift = rows.iter().map(|r| r.shift_moves as f64).sum::<f64>() / k;
        let rebal = rows.iter().map(|r| r.rebalance_moves as f64).sum::<f64>() / k;
        let cmp = rows.iter().map(|r| r.comparisons as f64).sum::<f64>() / k;
        let max_shift = rows.iter().map(|r| r.max_shift).max().unwrap_or(0);
        let emergency: u64 = rows.iter().map(|r| r.emergency_rebalances).sum();
        println!("{n:>9} {shift:>12.4} {rebal:>12.4} {cmp:>12.3} {max_shift:>10} {emergency:>10}");
        points.push((n as f64, (shift + rebal) * n as f64));
    }
    let fit = growth_fit(&points)?;
    println!("library sort total moves ~ n^{:.4} (r^2 = {:.5})", fit.exponent, fit.r_squared);

    let small: Vec<usize> = (10..=14).map(|k| 1usize << k).collect();
    let config = BenchConfig {
        algorithms: vec![Algorithm::Insertion],
        sizes: small.clone(),
        trials: 2,
        seed: 1,
        ..BenchConfig::default()
    };
    let records = run_bench(&config)?;
    let points: Vec<(f64, f64)> = small
        .iter()
        .map(|&n| {
            let rows: Vec<_> = records.iter().filter(|r| r.n == n).collect();
            (n as f64, rows.iter().map(|r| r.total_moves() as f64).sum::<f64>() / rows.len() as f64)
        })
        .collect();
    let fit = growth_fit(&points)?;
    println!("insertion sort total moves ~ n^{:.4} (r^2 = {:.5})", fit.exponent, fit.r_squared);
    Ok(())
}

//! Cut the final round of one sort into windows and count support keys in each.
//!
//! Prints the window size, the low-support threshold, a histogram of support
//! counts and the exact per-window violation probability for comparison.
//!
//!     cargo run --release --example window_census

use gapsort::analysis::{window_census, window_violation_probability};
use gapsort::{sort, SortParams};

fn main() -> Result<(), gapsort::Error> {
    let (epsilon, c) = (1.0, 4.0);
    let input: Vec<u32> = (0..1 << 16).collect();
    let params = SortParams { epsilon, c, ..SortParams::with_seed(3) };
    let out = sort(&input, &params)?;

    for labeling in out.labelings.iter().filter(|l| l.m >= 1024) {
        let census = window_census(labeling, epsilon, c)?;
        let model = window_violation_probability(labeling.m, census.window_size, census.threshold)?;
        println!(
            "round {:>2}  m {:>6}  w {:>3}  threshold {:>2}  windows {:>5}  violations {}  model p {:.2e}  mean support {:.2}",
            labeling.round,
            labeling.m,
            census.window_size,
            census.threshold,
            census.windows.len(),
            census.violations,
            model,
            census.mean_support()
        );
    }

    let last = out.labelings.last().expect("n > 1");
    let census = window_census(last, epsilon, c)?;
    let mut hist = vec![0usize; census.window_size + 1];
    for &(support, _) in &census.windows {
        hist[support] += 1;
    }
    let peak = *hist.iter().max().unwrap_or(&1);
    println!("\nsupport counts in the last round (w = {}):", census.window_size);
    for (k, &count) in hist.iter().enumerate().filter(|(_, &h)| h > 0) {
        println!("{k:>4} {:<60} {count}", "#".repeat(count * 60 / peak));
    }
    Ok(())
}

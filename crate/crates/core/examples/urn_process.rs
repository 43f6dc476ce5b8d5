//! The two-colour urn: each throw adds a ball of the colour drawn.
//!
//! The share of A balls is a martingale, so the mean final count should sit
//! on `a0 * (m + throws) / m` whatever the throw count.
//!
//!     cargo run --release --example urn_process

use gapsort::analysis::run_urn_trials;

fn main() -> Result<(), gapsort::Error> {
    let (m, c) = (1024, 4.0);
    println!("{:>7} {:>10} {:>10} {:>8} {:>7}", "throws", "expected", "mean", "se", "z");
    for throws in [0, 16, 256, 1024, 4096] {
        let r = run_urn_trials(m, c, throws, 20_000, 9)?;
        println!(
            "{:>7} {:>10.3} {:>10.3} {:>8.4} {:>7.2}",
            throws, r.expected_final_a, r.mean_final_a, r.std_error, r.z_score
        );
    }
    Ok(())
}

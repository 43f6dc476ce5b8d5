//! Tail quantities used by the window analysis.
//!
//! Tabulates the per-window tail factor over a grid of spreading parameters,
//! then compares the exact hypergeometric lower tail with its factor-based
//! bound for growing support counts.
//!
//!     cargo run --example tail_bounds

use gapsort::analysis::{hypergeometric_tail, tail_bound_factor, window_parameters};

fn main() -> Result<(), gapsort::Error> {
    println!("{:>6} {:>10}", "eps", "factor");
    for eps in [0.1, 0.25, 0.5, 1.0, 2.0, 4.0] {
        println!("{eps:>6} {:>10.5}", tail_bound_factor(eps)?);
    }

    let (eps, c) = (1.0, 4.0);
    let factor = tail_bound_factor(eps)?;
    println!("\n{:>7} {:>4} {:>4} {:>12} {:>12}", "m", "w", "thr", "exact tail", "factor^(c lg m)");
    for k in [6, 8, 10, 12, 14] {
        let m = 1usize << k;
        let (w, thr) = window_parameters(m, eps, c);
        let exact = hypergeometric_tail(2 * m, m, w, thr)?;
        let bound = factor.powf(c * k as f64);
        println!("{m:>7} {w:>4} {thr:>4} {exact:>12.3e} {bound:>12.3e}");
    }
    Ok(())
}

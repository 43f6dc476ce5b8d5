//! Sort a handful of keys and look at what the counters recorded.
//!
//!     cargo run --example basic_sort

use gapsort::{sort, SortParams};

fn main() -> Result<(), gapsort::Error> {
    let words = ["pear", "fig", "apple", "kiwi", "plum", "date", "lime", "fig", "quince", "banana"];
    let out = sort(&words, &SortParams::with_seed(7))?;
    println!("{}", out.sorted.join(" "));

    let m = &out.metrics;
    println!(
        "comparisons {}  shifts {}  rebalance moves {}  max shift {}",
        m.comparisons, m.shift_moves, m.rebalance_moves, m.max_shift
    );
    for r in &m.per_round {
        println!("  round {:>2}: {:>2} inserted, {:>3} comparisons", r.round, r.insertions, r.comparisons);
    }
    Ok(())
}

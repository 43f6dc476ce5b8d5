//! Drive a `GappedArray` by hand: spread keys out, search, insert into a gap.
//!
//!     cargo run --example gapped_array

use gapsort::{GappedArray, SortMetrics};

fn show(a: &GappedArray<u32>) {
    let cells: Vec<String> = a.slots().iter().map(|s| s.map_or("_".into(), |k| k.to_string())).collect();
    println!("[{}]", cells.join(" "));
}

fn main() -> Result<(), gapsort::Error> {
    let mut metrics = SortMetrics::default();
    let mut a = GappedArray::new(12)?;
    a.set_prefix_len(4)?;
    for (slot, key) in [10, 20, 30, 40].into_iter().enumerate() {
        a.insert_at(slot, key, &mut metrics)?;
    }
    show(&a);

    a.rebalance(8, &mut metrics)?;
    show(&a);

    for key in [25, 26, 5] {
        let slot = a.locate(&key, &mut metrics);
        let shift = a.insert_at(slot, key, &mut metrics)?;
        print!("insert {key:>2} at slot {slot} (shift {shift}): ");
        show(&a);
    }
    println!("{metrics:?}");
    Ok(())
}

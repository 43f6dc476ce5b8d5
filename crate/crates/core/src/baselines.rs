//! Classic insertion sorts, instrumented with the same counters as the
//! gapped sort. Both insert a key after any equal keys already in place.

use crate::SortMetrics;

/// Insertion sort with a right-to-left linear scan.
///
/// Every one-position slide counts as a shift move, so `shift_moves` equals
/// the number of inversions in `input`.
pub fn insertion_sort<K: Ord + Clone>(input: &[K]) -> (Vec<K>, SortMetrics) {
    let mut out = input.to_vec();
    let mut metrics = SortMetrics::default();
    for i in 1..out.len() {
        let mut j = i;
        while j > 0 {
            metrics.comparisons += 1;
            if out[j - 1] <= out[i] {
                break;
            }
            j -= 1;
        }
        out[j..=i].rotate_right(1);
        metrics.record_shift((i - j) as u64);
    }
    (out, metrics)
}

/// Insertion sort that finds each target with an upper-bound binary search.
pub fn binary_insertion_sort<K: Ord + Clone>(input: &[K]) -> (Vec<K>, SortMetrics) {
    let mut out = input.to_vec();
    let mut metrics = SortMetrics::default();
    for i in 1..out.len() {
        let (mut lo, mut hi) = (0, i);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            metrics.comparisons += 1;
            if out[mid] <= out[i] {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        out[lo..=i].rotate_right(1);
        metrics.record_shift((i - lo) as u64);
    }
    (out, metrics)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;
    use rand::seq::SliceRandom;
    use rand::Rng;

    #[test]
    fn reversed_three() {
        let (s, m) = insertion_sort(&[3, 2, 1]);
        assert_eq!(s, vec![1, 2, 3]);
        assert_eq!(m.shift_moves, 3);
        assert_eq!(m.max_shift, 2);
    }

    #[test]
    fn sorted_input_does_not_slide() {
        let v: Vec<u32> = (1..=50).collect();
        assert_eq!(insertion_sort(&v).1.shift_moves, 0);
        assert_eq!(binary_insertion_sort(&v).1.shift_moves, 0);
        assert_eq!(insertion_sort(&v).1.comparisons, 49);
    }

    #[test]
    fn binary_two_elements() {
        let (s, m) = binary_insertion_sort(&[2, 1]);
        assert_eq!(s, vec![1, 2]);
        assert_eq!((m.comparisons, m.shift_moves), (1, 1));
    }

    // Comparisons of an upper-bound search over `len` keys that always moves right.
    fn rightmost_path(len: usize) -> u64 {
        if len == 0 {
            0
        } else {
            1 + rightmost_path(len - len / 2 - 1)
        }
    }

    #[test]
    fn binary_comparisons_on_sorted_input() {
        let expected: u64 = (1..100).map(rightmost_path).sum();
        // Frozen from the recurrence above.
        assert_eq!(expected, 480);
        let v: Vec<u32> = (1..=100).collect();
        assert_eq!(binary_insertion_sort(&v).1.comparisons, expected);
    }

    #[test]
    fn binary_comparison_bound_per_insertion() {
        let mut r = rng::stream(1, 5);
        for _ in 0..200 {
            let n = r.random_range(1..200);
            let v: Vec<u8> = (0..n).map(|_| r.random()).collect();
            // bound summed over insertions i = 1..n with prefix length i
            let bound: u64 = (1..n as u64).map(|i| (i as f64).log2().ceil() as u64 + 1).sum();
            assert!(binary_insertion_sort(&v).1.comparisons <= bound);
        }
    }

    #[test]
    fn mean_shifts_match_expected_inversions() {
        let base: Vec<u32> = (1..=100).collect();
        let mut total = 0u64;
        for seed in 0..1000 {
            let mut v = base.clone();
            v.shuffle(&mut rng::stream(seed, 0));
            total += insertion_sort(&v).1.shift_moves;
        }
        let mean = total as f64 / 1000.0;
        assert!((mean - 2475.0).abs() <= 0.05 * 2475.0, "mean {mean}");
    }

    #[test]
    fn baselines_agree() {
        let mut r = rng::stream(2, 5);
        for _ in 0..1000 {
            let n = r.random_range(0..120);
            let v: Vec<i16> = (0..n).map(|_| r.random_range(-30..30)).collect();
            let (a, ma) = insertion_sort(&v);
            let (b, mb) = binary_insertion_sort(&v);
            let mut want = v.clone();
            want.sort();
            assert_eq!(a, want);
            assert_eq!(b, want);
            assert_eq!(ma.shift_moves, mb.shift_moves);
            assert_eq!(ma.max_shift, mb.max_shift);
        }
    }
}

#![allow(dead_code)]

/// Number of pairs `i < j` with `v[i] > v[j]`, by merge sort.
pub fn count_inversions<T: Ord + Clone>(v: &[T]) -> u64 {
    fn go<T: Ord + Clone>(v: &mut [T], buf: &mut Vec<T>) -> u64 {
        let n = v.len();
        if n < 2 {
            return 0;
        }
        let mid = n / 2;
        let mut inv = go(&mut v[..mid], buf) + go(&mut v[mid..], buf);
        buf.clear();
        let (mut i, mut j) = (0, mid);
        while i < mid && j < n {
            if v[j] < v[i] {
                inv += (mid - i) as u64;
                buf.push(v[j].clone());
                j += 1;
            } else {
                buf.push(v[i].clone());
                i += 1;
            }
        }
        buf.extend_from_slice(&v[i..mid]);
        buf.extend_from_slice(&v[j..n]);
        v.clone_from_slice(buf);
        inv
    }
    let mut buf = Vec::with_capacity(v.len());
    go(&mut v.to_vec(), &mut buf)
}

pub fn quadratic_inversions<T: Ord>(v: &[T]) -> u64 {
    let mut inv = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inv += 1;
            }
        }
    }
    inv
}

pub fn mean(xs: impl IntoIterator<Item = f64>) -> f64 {
    let (s, k) = xs.into_iter().fold((0.0, 0usize), |(s, k), x| (s + x, k + 1));
    s / k as f64
}

pub fn spread_ratio(xs: &[f64]) -> f64 {
    let max = xs.iter().cloned().fold(f64::MIN, f64::max);
    let min = xs.iter().cloned().fold(f64::MAX, f64::min);
    max / min
}

//! The sorting array: a fixed-capacity sparse ordered array.
//!
//! Keys live in a prefix of `prefix_len` slots; the remaining slots of the
//! prefix are gaps. Reading the occupied slots left to right always yields a
//! nondecreasing sequence. Insertions shift a run of occupied slots one step
//! to the right into the nearest gap, and [`GappedArray::rebalance`] spreads
//! the keys evenly over a (usually larger) prefix.

use crate::{Error, Result, SortMetrics};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GappedArray<K> {
    slots: Vec<Option<K>>,
    count: usize,
    prefix_len: usize,
}

impl<K: Ord> GappedArray<K> {
    pub fn new(capacity: usize) -> Result<Self> {
        if capacity == 0 {
            return Err(Error::InvalidArgument("capacity must be at least 1".into()));
        }
        let mut slots = Vec::with_capacity(capacity);
        slots.resize_with(capacity, || None);
        Ok(Self { slots, count: 0, prefix_len: 0 })
    }

    pub fn capacity(&self) -> usize {
        self.slots.len()
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix_len
    }

    /// Raw view of the slots, gaps included.
    pub fn slots(&self) -> &[Option<K>] {
        &self.slots
    }

    pub fn get(&self, slot: usize) -> Option<&K> {
        self.slots.get(slot).and_then(Option::as_ref)
    }

    /// Occupied keys in order.
    pub fn iter(&self) -> impl Iterator<Item = &K> + '_ {
        self.slots[..self.prefix_len].iter().filter_map(Option::as_ref)
    }

    /// Grows or shrinks the live prefix without moving any key.
    ///
    /// Used to give the very first insertion room before any rebalance has run.
    pub fn set_prefix_len(&mut self, prefix_len: usize) -> Result<()> {
        if prefix_len > self.capacity() {
            return Err(Error::CapacityExceeded { requested: prefix_len, capacity: self.capacity() });
        }
        if self.slots[prefix_len.min(self.prefix_len)..self.prefix_len].iter().any(Option::is_some) {
            return Err(Error::InvalidArgument(format!("prefix {prefix_len} would cut off occupied slots")));
        }
        self.prefix_len = prefix_len;
        Ok(())
    }

    /// Spreads the keys over the first `target_prefix` slots; key `j` (by rank)
    /// goes to slot `floor(j * target_prefix / count)`.
    ///
    /// Returns the number of keys whose slot changed, which is also added to
    /// `metrics.rebalance_moves`.
    pub fn rebalance(&mut self, target_prefix: usize, metrics: &mut SortMetrics) -> Result<usize> {
        if target_prefix < self.count {
            return Err(Error::InvalidArgument(format!(
                "target prefix {target_prefix} is smaller than element count {}",
                self.count
            )));
        }
        if target_prefix > self.capacity() {
            return Err(Error::CapacityExceeded { requested: target_prefix, capacity: self.capacity() });
        }

        let m = self.count;
        let mut moved = 0;
        if m > 0 {
            let keys: Vec<(usize, K)> = self.slots[..self.prefix_len]
                .iter_mut()
                .enumerate()
                .filter_map(|(i, s)| s.take().map(|k| (i, k)))
                .collect();
            debug_assert_eq!(keys.len(), m);
            for (j, (old, key)) in keys.into_iter().enumerate() {
                let slot = spread_slot(j, target_prefix, m);
                if slot != old {
                    moved += 1;
                }
                self.slots[slot] = Some(key);
            }
        }
        self.prefix_len = target_prefix;
        metrics.rebalance_moves += moved as u64;
        Ok(moved)
    }

    /// Finds the insertion slot for `key`: one past the last occupied slot
    /// holding a key `<= key`, or 0 if there is none.
    ///
    /// Binary search over the gapped prefix. An empty midpoint is resolved by
    /// scanning left to the nearest occupied slot of the current segment; when
    /// that part of the segment is empty the search continues to the right.
    pub fn locate(&self, key: &K, metrics: &mut SortMetrics) -> usize {
        // Occupied slots in [0, lo) hold keys <= key; occupied slots in
        // [hi, prefix_len) hold keys > key.
        let mut lo = 0;
        let mut hi = self.prefix_len;
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            let probe = (lo..=mid).rev().find(|&i| self.slots[i].is_some());
            match probe {
                None => lo = mid + 1,
                Some(p) => {
                    metrics.comparisons += 1;
                    if self.slots[p].as_ref().is_some_and(|k| k <= key) {
                        lo = mid + 1;
                    } else {
                        hi = p;
                    }
                }
            }
        }
        while lo > 0 && self.slots[lo - 1].is_none() {
            lo -= 1;
        }
        lo
    }

    /// Puts `key` at `slot`, shifting the run of occupied slots that starts
    /// there one position right into the nearest gap. Returns the run length.
    ///
    /// `slot` must be the position reported by [`locate`](Self::locate) for
    /// `key`, otherwise the order invariant is broken.
    pub fn insert_at(&mut self, slot: usize, key: K, metrics: &mut SortMetrics) -> Result<usize> {
        if slot > self.prefix_len {
            return Err(Error::InvalidArgument(format!("slot {slot} is beyond prefix {}", self.prefix_len)));
        }
        let gap = self.next_gap(slot).ok_or(Error::GapExhausted { slot, prefix_len: self.prefix_len })?;
        Ok(self.shift_into_gap(slot, gap, key, metrics))
    }

    /// First empty slot at or after `slot` inside the live prefix.
    pub fn next_gap(&self, slot: usize) -> Option<usize> {
        (slot..self.prefix_len).find(|&i| self.slots[i].is_none())
    }

    // slots[slot..gap] are occupied and slots[gap] is empty.
    pub(crate) fn shift_into_gap(&mut self, slot: usize, gap: usize, key: K, metrics: &mut SortMetrics) -> usize {
        self.slots[slot..=gap].rotate_right(1);
        self.slots[slot] = Some(key);
        self.count += 1;
        let shift = gap - slot;
        metrics.record_shift(shift as u64);
        shift
    }

    /// Occupied keys, left to right.
    pub fn compact(&self) -> Vec<K>
    where
        K: Clone,
    {
        self.iter().cloned().collect()
    }

    pub fn into_sorted(self) -> Vec<K> {
        self.slots.into_iter().flatten().collect()
    }
}

#[inline]
pub(crate) fn spread_slot(rank: usize, prefix: usize, count: usize) -> usize {
    ((rank as u128 * prefix as u128) / count as u128) as usize
}

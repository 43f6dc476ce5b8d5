use serde::Serialize;

/// Operation counters collected while sorting.
///
/// `per_round` partitions the global counters: summing any counter over the
/// rounds gives the global value (`max_shift` takes the maximum instead).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SortMetrics {
    pub comparisons: u64,
    pub shift_moves: u64,
    pub rebalance_moves: u64,
    pub max_shift: u64,
    pub emergency_rebalances: u64,
    /// Insertions whose shift ran past the end of the live prefix and claimed
    /// an empty slot beyond it.
    pub prefix_extensions: u64,
    pub per_round: Vec<RoundMetrics>,
    /// Cost of the first `ceil(sqrt(n))` insertions.
    pub early: EarlyInsertions,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RoundMetrics {
    pub round: u32,
    /// Elements in the array when the round ended.
    pub elements: usize,
    pub insertions: usize,
    pub comparisons: u64,
    pub shift_moves: u64,
    pub rebalance_moves: u64,
    pub max_shift: u64,
    pub emergency_rebalances: u64,
    pub prefix_extensions: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EarlyInsertions {
    pub insertions: usize,
    pub comparisons: u64,
    pub shift_moves: u64,
}

impl SortMetrics {
    pub fn total_moves(&self) -> u64 {
        self.shift_moves + self.rebalance_moves
    }

    pub(crate) fn record_shift(&mut self, shift: u64) {
        self.shift_moves += shift;
        self.max_shift = self.max_shift.max(shift);
    }
}

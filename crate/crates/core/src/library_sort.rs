//! Round-based gapped insertion sort.
//!
//! The input is shuffled and inserted one element at a time into a
//! [`GappedArray`]. Rounds double the element count: once `2^i` elements are
//! present (and more remain) the array is rebalanced into the first
//! `floor((2 + 2ε) · 2^i)` slots. Elements present at the start of a round are
//! its *support* elements; those inserted during the round are *intercalated*.

use rand::seq::SliceRandom;
use serde::Serialize;

use crate::gapped_array::GappedArray;
use crate::rng::{self, GENERATOR_ID};
use crate::{Error, Result, RoundMetrics, SortMetrics};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SortParams {
    /// Space slack; the spreading factor is `2 + 2 * epsilon`.
    pub epsilon: f64,
    /// Window constant used by the census tools.
    pub c: f64,
    pub seed: u64,
    pub shuffle: bool,
    /// Keep a [`RoundLabeling`] snapshot for every round. Costs one copy of
    /// the keys per round; benchmarks turn it off.
    pub capture_labelings: bool,
}

impl Default for SortParams {
    fn default() -> Self {
        Self { epsilon: 1.0, c: 4.0, seed: 0, shuffle: true, capture_labelings: true }
    }
}

impl SortParams {
    pub fn with_seed(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }

    pub fn spreading_factor(&self) -> f64 {
        2.0 + 2.0 * self.epsilon
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return Err(Error::InvalidArgument(format!("epsilon must be positive, got {}", self.epsilon)));
        }
        if !(self.c.is_finite() && self.c > 0.0) {
            return Err(Error::InvalidArgument(format!("c must be positive, got {}", self.c)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Role {
    Support,
    Intercalated,
}

/// End-of-round snapshot, taken before the boundary rebalance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RoundLabeling<K> {
    pub round: u32,
    /// Support elements in the round, `2^(round-1)`.
    pub m: usize,
    /// Keys in sorted order.
    pub keys: Vec<K>,
    pub roles: Vec<Role>,
    /// False for a final round that stopped before doubling the count.
    pub complete: bool,
}

impl<K> RoundLabeling<K> {
    pub fn support_count(&self) -> usize {
        self.roles.iter().filter(|r| **r == Role::Support).count()
    }

    pub fn intercalated_count(&self) -> usize {
        self.roles.len() - self.support_count()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SortOutput<K> {
    pub sorted: Vec<K>,
    pub metrics: SortMetrics,
    pub labelings: Vec<RoundLabeling<K>>,
    pub seed: u64,
    pub generator: &'static str,
}

/// Seeded uniform permutation of `input`.
pub fn shuffle<K: Clone>(input: &[K], seed: u64) -> Vec<K> {
    let mut out = input.to_vec();
    out.shuffle(&mut rng::stream(seed, rng::SHUFFLE_STREAM));
    out
}

/// Element counts after which a rebalance fires: every power of two below `n`.
pub fn round_boundaries(n: usize) -> Vec<usize> {
    std::iter::successors(Some(1usize), |b| b.checked_mul(2)).take_while(|&b| b < n).collect()
}

/// Sorts `input` with gapped insertion sort.
///
/// Only invalid parameters produce an error.
pub fn sort<K: Ord + Clone>(input: &[K], params: &SortParams) -> Result<SortOutput<K>> {
    params.validate()?;
    let n = input.len();
    let mut out = SortOutput {
        sorted: Vec::new(),
        metrics: SortMetrics::default(),
        labelings: Vec::new(),
        seed: params.seed,
        generator: GENERATOR_ID,
    };
    if n == 0 {
        return Ok(out);
    }

    let arrivals = if params.shuffle { shuffle(input, params.seed) } else { input.to_vec() };
    let spread = params.spreading_factor();
    let prefix_for = |count: usize| (spread * count as f64).floor() as usize;
    let capacity = prefix_for(n) + 1;

    // Entries order by (key, arrival). Arrival indices only grow, so a new
    // entry always lands after existing equal keys.
    let mut arr: GappedArray<(K, usize)> = GappedArray::new(capacity)?;
    arr.set_prefix_len(prefix_for(1).clamp(1, capacity))?;

    let metrics = &mut out.metrics;
    let early_limit = (n as f64).sqrt().ceil() as usize;
    let mut round: u32 = 0;
    let mut round_start = metrics.clone();
    let mut round_max_shift = 0u64;
    let mut round_insertions = 0usize;
    let mut next_boundary = 1usize;

    for (arrival, key) in arrivals.into_iter().enumerate() {
        let before = (metrics.comparisons, metrics.shift_moves);
        let entry = (key, arrival);
        let mut slot = arr.locate(&entry, metrics);
        let gap = match arr.next_gap(slot) {
            Some(gap) => gap,
            None => match arr.slots()[arr.prefix_len()..].iter().position(Option::is_none) {
                // The run reaches the end of the prefix: continue into the
                // untouched tail of the array.
                Some(offset) => {
                    let gap = arr.prefix_len() + offset;
                    arr.set_prefix_len(gap + 1)?;
                    metrics.prefix_extensions += 1;
                    gap
                }
                None => {
                    let target = prefix_for(arr.len()).max(arr.prefix_len() + 1).min(capacity);
                    arr.rebalance(target, metrics)?;
                    metrics.emergency_rebalances += 1;
                    slot = arr.locate(&entry, metrics);
                    arr.next_gap(slot).ok_or(Error::GapExhausted { slot, prefix_len: arr.prefix_len() })?
                }
            },
        };
        let shift = arr.shift_into_gap(slot, gap, entry, metrics) as u64;
        round_max_shift = round_max_shift.max(shift);
        round_insertions += 1;

        if arrival < early_limit {
            metrics.early.insertions += 1;
            metrics.early.comparisons += metrics.comparisons - before.0;
            metrics.early.shift_moves += metrics.shift_moves - before.1;
        }

        let count = arrival + 1;
        let at_boundary = count == next_boundary && count < n;
        if !(at_boundary || count == n) {
            continue;
        }
        if round >= 1 && params.capture_labelings {
            let m = 1usize << (round - 1);
            let (keys, roles) =
                arr.iter().map(|(k, a)| (k.clone(), if *a < m { Role::Support } else { Role::Intercalated })).unzip();
            out.labelings.push(RoundLabeling { round, m, keys, roles, complete: count == 2 * m });
        }
        if at_boundary {
            arr.rebalance(prefix_for(count), metrics)?;
        }
        metrics.per_round.push(RoundMetrics {
            round,
            elements: count,
            insertions: round_insertions,
            comparisons: metrics.comparisons - round_start.comparisons,
            shift_moves: metrics.shift_moves - round_start.shift_moves,
            rebalance_moves: metrics.rebalance_moves - round_start.rebalance_moves,
            max_shift: round_max_shift,
            emergency_rebalances: metrics.emergency_rebalances - round_start.emergency_rebalances,
            prefix_extensions: metrics.prefix_extensions - round_start.prefix_extensions,
        });
        round += 1;
        next_boundary = next_boundary.saturating_mul(2);
        round_start = SortMetrics { per_round: Vec::new(), ..metrics.clone() };
        round_max_shift = 0;
        round_insertions = 0;
    }

    out.sorted = arr.into_sorted().into_iter().map(|(k, _)| k).collect();
    Ok(out)
}

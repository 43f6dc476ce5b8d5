//! Tools for checking the cost behaviour of gapped insertion sort.
//!
//! * [`window_census`] counts support and intercalated elements in
//!   nonoverlapping windows of an end-of-round snapshot.
//! * [`hypergeometric_tail`] is the exact distribution of a window's support
//!   count when the arrival order is a uniform permutation.
//! * [`urn_simulate`] runs the two-urn (Pólya) process where each new ball goes
//!   to an urn with probability proportional to its size.
//! * [`tail_bound_factor`] is the per-`c log m` decay base of the window bound.
//! * [`growth_fit`] fits a power law to `(n, cost)` measurements.

use rand::Rng;
use serde::Serialize;

use crate::library_sort::{Role, RoundLabeling};
use crate::rng;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowCensus {
    pub window_size: usize,
    /// A window violates when either count is below this.
    pub threshold: usize,
    /// `(support_count, intercalated_count)` per window.
    pub windows: Vec<(usize, usize)>,
    pub violations: usize,
    /// Elements after the last full window; not counted.
    pub leftover: usize,
}

impl WindowCensus {
    /// Splits `roles` into consecutive windows of `window_size` and counts
    /// each role per window.
    pub fn from_roles(roles: &[Role], window_size: usize, threshold: usize) -> Result<Self> {
        if window_size == 0 {
            return Err(Error::InvalidArgument("window size must be at least 1".into()));
        }
        if window_size > roles.len() {
            return Err(Error::WindowTooLarge { window: window_size, elements: roles.len() });
        }
        let windows: Vec<(usize, usize)> = roles
            .chunks_exact(window_size)
            .map(|w| {
                let s = w.iter().filter(|r| **r == Role::Support).count();
                (s, window_size - s)
            })
            .collect();
        let violations = windows.iter().filter(|(s, i)| *s < threshold || *i < threshold).count();
        Ok(Self { window_size, threshold, leftover: roles.len() % window_size, windows, violations })
    }

    pub fn violation_rate(&self) -> f64 {
        if self.windows.is_empty() {
            0.0
        } else {
            self.violations as f64 / self.windows.len() as f64
        }
    }

    pub fn mean_support(&self) -> f64 {
        self.windows.iter().map(|w| w.0 as f64).sum::<f64>() / self.windows.len() as f64
    }
}

/// Window length `ceil((2 + ε) c log2 m)` and violation threshold `floor(c log2 m)`.
pub fn window_parameters(m: usize, epsilon: f64, c: f64) -> (usize, usize) {
    let lg = (m as f64).log2();
    (((2.0 + epsilon) * c * lg).ceil() as usize, (c * lg).floor() as usize)
}

/// Census of a complete round's snapshot with windows sized from `epsilon` and `c`.
pub fn window_census<K>(labeling: &RoundLabeling<K>, epsilon: f64, c: f64) -> Result<WindowCensus> {
    let m = labeling.m;
    if !labeling.complete || labeling.support_count() != m || labeling.intercalated_count() != m {
        return Err(Error::InvalidArgument(format!("round {} is not a complete round", labeling.round)));
    }
    let (w, threshold) = window_parameters(m, epsilon, c);
    if w == 0 {
        return Err(Error::InvalidArgument(format!("window size is zero for m = {m}")));
    }
    if w > 2 * m {
        return Err(Error::WindowTooLarge { window: w, elements: 2 * m });
    }
    WindowCensus::from_roles(&labeling.roles, w, threshold)
}

/// Ball counts of the two-urn process.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UrnState {
    pub a: usize,
    pub b: usize,
    pub throws_remaining: usize,
}

impl UrnState {
    /// Urn A starts with `ceil(c log2 m)` balls, urn B with the rest of `m`.
    pub fn new(m: usize, c: f64, throws: usize) -> Result<Self> {
        if m == 0 || !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidArgument(format!("need m >= 1 and c > 0, got m = {m}, c = {c}")));
        }
        let a = (c * (m as f64).log2()).ceil() as usize;
        if a > m {
            return Err(Error::InvalidArgument(format!("c log2 m = {a} exceeds m = {m}")));
        }
        Ok(Self { a, b: m - a, throws_remaining: throws })
    }

    /// Throws one ball; returns true when it lands in urn A.
    pub fn step<R: Rng + ?Sized>(&mut self, rng: &mut R) -> bool {
        debug_assert!(self.throws_remaining > 0);
        self.throws_remaining -= 1;
        let hit = rng.random_range(0..self.a + self.b) < self.a;
        if hit {
            self.a += 1;
        } else {
            self.b += 1;
        }
        hit
    }

    pub fn run<R: Rng + ?Sized>(&mut self, rng: &mut R) {
        while self.throws_remaining > 0 {
            self.step(rng);
        }
    }
}

/// Final size of urn A after `throws` balls.
pub fn urn_simulate(m: usize, c: f64, throws: usize, seed: u64) -> Result<usize> {
    let mut urn = UrnState::new(m, c, throws)?;
    urn.run(&mut rng::stream(seed, rng::URN_STREAM));
    Ok(urn.a)
}

/// `(2+ε)^(2+ε) / (2^(2+ε) (1+ε)^(1+ε))`, evaluated in log space.
pub fn tail_bound_factor(epsilon: f64) -> Result<f64> {
    if !epsilon.is_finite() || epsilon < 0.0 {
        return Err(Error::InvalidArgument(format!("epsilon must be >= 0, got {epsilon}")));
    }
    let x = 2.0 + epsilon;
    let y = 1.0 + epsilon;
    Ok((x * x.ln() - x * std::f64::consts::LN_2 - y * y.ln()).exp())
}

/// Exact hypergeometric probability mass, indexed by the number of successes.
///
/// Population `total` with `draws` successes, sample of size `window`. Entries
/// outside the support are zero. Terms are built from the mode outwards with
/// the ratio `p(k+1)/p(k)` and normalised at the end, so nothing overflows and
/// far tails underflow gracefully to zero.
pub fn hypergeometric_pmf(total: usize, draws: usize, window: usize) -> Result<Vec<f64>> {
    if window > total || draws > total {
        return Err(Error::InvalidArgument(format!(
            "need window <= total and draws <= total (total {total}, draws {draws}, window {window})"
        )));
    }
    let lo = (window + draws).saturating_sub(total);
    let hi = window.min(draws);
    let mode = (((window + 1) as u128 * (draws + 1) as u128 / (total + 2) as u128) as usize).clamp(lo, hi);
    let (nd, nw, nf) = (draws as f64, window as f64, (total - draws) as f64);
    // p(k+1) / p(k)
    let ratio = |k: usize| {
        let k = k as f64;
        (nd - k) * (nw - k) / ((k + 1.0) * (nf - nw + k + 1.0))
    };
    let mut pmf = vec![0.0; window + 1];
    pmf[mode] = 1.0;
    for k in mode..hi {
        pmf[k + 1] = pmf[k] * ratio(k);
    }
    for k in (lo..mode).rev() {
        pmf[k] = pmf[k + 1] / ratio(k);
    }
    let sum: f64 = pmf.iter().sum();
    pmf.iter_mut().for_each(|p| *p /= sum);
    Ok(pmf)
}

/// `P(X <= threshold)` for `X` hypergeometric: `window` elements drawn without
/// replacement from `total`, of which `draws` are successes.
pub fn hypergeometric_tail(total: usize, draws: usize, window: usize, threshold: usize) -> Result<f64> {
    let pmf = hypergeometric_pmf(total, draws, window)?;
    if threshold >= window.min(draws) {
        return Ok(1.0);
    }
    Ok(pmf[..=threshold].iter().sum::<f64>().min(1.0))
}

/// Exact probability that a window of `window` elements out of `2m` (half of
/// them supports) has fewer than `threshold` of either kind.
pub fn window_violation_probability(m: usize, window: usize, threshold: usize) -> Result<f64> {
    let pmf = hypergeometric_pmf(2 * m, m, window)?;
    let ok: f64 =
        pmf.iter().enumerate().filter(|(s, _)| *s >= threshold && window - *s >= threshold).map(|(_, p)| p).sum();
    Ok((1.0 - ok).max(0.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

/// Ordinary least squares `y = slope * x + intercept`.
pub fn linear_fit(points: &[(f64, f64)]) -> Result<LinearFit> {
    if points.len() < 2 {
        return Err(Error::InvalidArgument("need at least two points".into()));
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - my).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidArgument("x values are all equal".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = points.iter().map(|p| (p.1 - slope * p.0 - intercept).powi(2)).sum();
    let r_squared = if syy == 0.0 { 1.0 } else { 1.0 - ss_res / syy };
    Ok(LinearFit { slope, intercept, r_squared })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthFit {
    pub exponent: f64,
    pub r_squared: f64,
}

/// Slope of `ln(cost)` against `ln(n)`.
pub fn growth_fit(points: &[(f64, f64)]) -> Result<GrowthFit> {
    if points.len() < 3 {
        return Err(Error::InvalidArgument("need at least three points".into()));
    }
    if points.iter().any(|&(n, c)| !(n > 0.0 && c > 0.0)) {
        return Err(Error::InvalidArgument("n and cost must be positive".into()));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(n, c)| (n.ln(), c.ln())).collect();
    let fit = linear_fit(&logs)?;
    Ok(GrowthFit { exponent: fit.slope, r_squared: fit.r_squared })
}

/// Per-round aggregate of [`window_census`] over many seeded sorts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RoundCensus {
    pub round: u32,
    pub m: usize,
    pub window_size: usize,
    pub threshold: usize,
    pub windows: usize,
    pub violations: usize,
    pub violation_rate: f64,
    /// Exact violation probability of a single window.
    pub model_violation_probability: f64,
    pub mean_support: f64,
    /// Standard error of `mean_support` across windows.
    pub support_std_error: f64,
    pub leftover_per_trial: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub epsilon: f64,
    pub c: f64,
    pub trials: usize,
    pub seed: u64,
    pub generator: &'static str,
    /// Only rounds with at least this many supports enter `overall_*`.
    pub min_m: usize,
    pub rounds: Vec<RoundCensus>,
    pub overall_windows: usize,
    pub overall_violations: usize,
    pub overall_violation_rate: f64,
    /// Support counts of every window, per round, when requested.
    #[serde(skip)]
    pub support_counts: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub n: usize,
    pub epsilon: f64,
    pub c: f64,
    pub trials: usize,
    pub seed: u64,
    pub min_m: usize,
    pub keep_support_counts: bool,
}

impl Default for CensusConfig {
    fn default() -> Self {
        Self { n: 1 << 16, epsilon: 1.0, c: 4.0, trials: 100, seed: 0, min_m: 256, keep_support_counts: false }
    }
}

/// Sorts `trials` shuffles of `0..n` and runs the window census on every
/// complete round whose windows fit.
///
/// Trial `t` uses seed [`rng::trial_seed`]`(seed, t)`. Trials run on the
/// current rayon pool; the report does not depend on the thread count.
pub fn run_census(config: &CensusConfig) -> Result<CensusReport> {
    use rayon::prelude::*;

    if config.n == 0 || config.trials == 0 {
        return Err(Error::InvalidArgument("n and trials must be at least 1".into()));
    }
    let input: Vec<u32> = (0..config.n as u32).collect();
    let per_trial: Vec<Vec<(u32, usize, WindowCensus)>> = (0..config.trials as u64)
        .into_par_iter()
        .map(|t| {
            let params = crate::SortParams {
                epsilon: config.epsilon,
                c: config.c,
                seed: rng::trial_seed(config.seed, t),
                shuffle: true,
                capture_labelings: true,
            };
            let out = crate::library_sort::sort(&input, &params)?;
            let mut rows = Vec::new();
            for l in out.labelings.iter().filter(|l| l.complete) {
                match window_census(l, config.epsilon, config.c) {
                    Ok(census) => rows.push((l.round, l.m, census)),
                    Err(Error::WindowTooLarge { .. }) | Err(Error::InvalidArgument(_)) => {}
                    Err(e) => return Err(e),
                }
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;

    let mut rounds: Vec<RoundCensus> = Vec::new();
    let mut support_counts: Vec<Vec<usize>> = Vec::new();
    for (round, m, census) in per_trial.iter().flatten() {
        let idx = match rounds.iter().position(|r| r.round == *round) {
            Some(i) => i,
            None => {
                rounds.push(RoundCensus {
                    round: *round,
                    m: *m,
                    window_size: census.window_size,
                    threshold: census.threshold,
                    windows: 0,
                    violations: 0,
                    violation_rate: 0.0,
                    model_violation_probability: window_violation_probability(
                        *m,
                        census.window_size,
                        census.threshold,
                    )?,
                    mean_support: 0.0,
                    support_std_error: 0.0,
                    leftover_per_trial: census.leftover,
                });
                support_counts.push(Vec::new());
                rounds.len() - 1
            }
        };
        rounds[idx].windows += census.windows.len();
        rounds[idx].violations += census.violations;
        support_counts[idx].extend(census.windows.iter().map(|w| w.0));
    }
    for (r, counts) in rounds.iter_mut().zip(&support_counts) {
        let k = counts.len() as f64;
        r.violation_rate = r.violations as f64 / k;
        r.mean_support = counts.iter().sum::<usize>() as f64 / k;
        let var = counts.iter().map(|&s| (s as f64 - r.mean_support).powi(2)).sum::<f64>() / (k - 1.0).max(1.0);
        r.support_std_error = (var / k).sqrt();
    }
    let (overall_windows, overall_violations) =
        rounds.iter().filter(|r| r.m >= config.min_m).fold((0, 0), |(w, v), r| (w + r.windows, v + r.violations));
    Ok(CensusReport {
        n: config.n,
        epsilon: config.epsilon,
        c: config.c,
        trials: config.trials,
        seed: config.seed,
        generator: rng::GENERATOR_ID,
        min_m: config.min_m,
        rounds,
        overall_windows,
        overall_violations,
        overall_violation_rate: if overall_windows == 0 {
            0.0
        } else {
            overall_violations as f64 / overall_windows as f64
        },
        support_counts: if config.keep_support_counts { support_counts } else { Vec::new() },
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UrnReport {
    pub m: usize,
    pub c: f64,
    pub throws: usize,
    pub trials: usize,
    pub seed: u64,
    pub generator: &'static str,
    pub initial_a: usize,
    /// Martingale expectation `initial_a * (m + throws) / m`.
    pub expected_final_a: f64,
    pub mean_final_a: f64,
    pub std_error: f64,
    /// `(mean - expected) / std_error`.
    pub z_score: f64,
}

/// Repeats [`urn_simulate`] with per-trial seeds derived from `seed`.
pub fn run_urn_trials(m: usize, c: f64, throws: usize, trials: usize, seed: u64) -> Result<UrnReport> {
    use rayon::prelude::*;

    if trials < 2 {
        return Err(Error::InvalidArgument("need at least two trials".into()));
    }
    let initial_a = UrnState::new(m, c, throws)?.a;
    let finals: Vec<usize> = (0..trials as u64)
        .into_par_iter()
        .map(|t| urn_simulate(m, c, throws, rng::trial_seed(seed, t)))
        .collect::<Result<_>>()?;
    let k = trials as f64;
    let mean = finals.iter().sum::<usize>() as f64 / k;
    let var = finals.iter().map(|&a| (a as f64 - mean).powi(2)).sum::<f64>() / (k - 1.0);
    let std_error = (var / k).sqrt();
    let expected = initial_a as f64 * (m + throws) as f64 / m as f64;
    Ok(UrnReport {
        m,
        c,
        throws,
        trials,
        seed,
        generator: rng::GENERATOR_ID,
        initial_a,
        expected_final_a: expected,
        mean_final_a: mean,
        std_error,
        z_score: if std_error > 0.0 { (mean - expected) / std_error } else { 0.0 },
    })
}

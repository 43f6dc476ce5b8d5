//! Gapped insertion sort ("library sort") with instrumentation.
//!
//! The crate is organised around the sorting array ([`GappedArray`]), the
//! round-based driver ([`library_sort::sort`]), two classic baselines
//! ([`baselines`]) and a set of statistical tools ([`analysis`]) used to check
//! the algorithm's cost behaviour empirically. The [`cli`] module backs the
//! `gapsort` binary.

pub mod analysis;
pub mod baselines;
pub mod cli;
mod error;
pub mod gapped_array;
pub mod library_sort;
mod metrics;
pub mod rng;

pub use error::{Error, Result};
pub use gapped_array::GappedArray;
pub use library_sort::{sort, Role, RoundLabeling, SortOutput, SortParams};
pub use metrics::{EarlyInsertions, RoundMetrics, SortMetrics};

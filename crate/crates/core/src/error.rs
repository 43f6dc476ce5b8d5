use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("capacity exceeded: requested prefix {requested}, capacity {capacity}")]
    CapacityExceeded { requested: usize, capacity: usize },

    /// No empty slot at or to the right of `slot` inside the live prefix.
    #[error("no gap at or after slot {slot} within prefix {prefix_len}")]
    GapExhausted { slot: usize, prefix_len: usize },

    #[error("window of {window} elements does not fit in {elements} elements")]
    WindowTooLarge { window: usize, elements: usize },
}

use thiserror::Error;

use crate::covering::CoverSearchResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,

    #[error("symbol {symbol} at index {index} is outside the alphabet of size {q}")]
    SymbolOutOfRange { symbol: u32, index: usize, q: u32 },

    #[error("coloring {coloring} is empty")]
    EmptyColoring { coloring: usize },

    #[error("symbol {symbol} appears twice in coloring {coloring}")]
    DuplicateSymbol { symbol: u32, coloring: usize },

    #[error("a coloring profile needs at least one coloring")]
    EmptyProfile,

    #[error("colorings {first} and {second} are the same set")]
    DuplicateColoring { first: usize, second: usize },

    #[error("coloring {index} has size {found}, expected {expected}")]
    SizeMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{required} states exceed the cap of {cap}")]
    CapExceeded { required: u128, cap: u64 },

    #[error("search budget of {budget} nodes exhausted; best cover has {} blocks", .incumbent.t_found)]
    BudgetExceeded {
        budget: u64,
        incumbent: Box<CoverSearchResult>,
    },

    #[error("profile is not a 2-cover: pair {{{}, {}}} is uncovered", .pair.0, .pair.1)]
    NotACover { pair: (u32, u32) },

    #[error("output has {found} streams but the profile has {expected} colorings")]
    StreamCountMismatch { expected: usize, found: usize },

    #[error("stream {stream} holds symbol {symbol} at position {position}, which its coloring does not contain")]
    ForeignSymbol {
        stream: usize,
        position: usize,
        symbol: u32,
    },

    #[error("inconsistent output: decoding stalled after {emitted} symbols")]
    InconsistentOutput { emitted: usize },
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

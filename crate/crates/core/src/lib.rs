//! Coloring channels over a `q`-ary alphabet.
//!
//! A *coloring* is a subset of the alphabet; passing a sequence through it
//! keeps only the symbols in the subset. A *profile* is a tuple of distinct
//! colorings of one size, and its output is the tuple of colored
//! subsequences. The crate covers
//!
//! - simulating the channel ([`apply_profile`]),
//! - counting distinct outputs exactly, by closed form or enumeration
//!   ([`counting`]),
//! - information rates and capacities ([`counting::rate`]),
//! - pair coverage, which decides whether inputs can be recovered, with
//!   bounds and a search for small covers ([`covering`]),
//! - decoding ([`reconstruct()`]).
//!
//! ```
//! use colorkit::{apply_profile, make_profile, reconstruct, Alphabet, Sequence};
//!
//! let q3 = Alphabet::new(3)?;
//! let triangle = make_profile(q3, &[[0, 1], [1, 2], [0, 2]])?;
//! let x = Sequence::from_symbols(&[1, 2, 0, 0, 2, 0, 1, 1, 0]);
//! let out = apply_profile(&x, &triangle)?;
//! assert_eq!(out.streams()[0].to_string(), "1,0,0,0,1,1,0");
//! assert_eq!(reconstruct(&out)?, x);
//! # Ok::<(), colorkit::Error>(())
//! ```

pub mod alphabet;
pub mod channel;
pub mod coloring;
pub mod combinatorics;
pub mod counting;
pub mod covering;
mod error;
pub mod reconstruct;

pub use alphabet::{Alphabet, Sequence, Symbol};
pub use channel::{apply_coloring, apply_profile, symbol_histogram, ColoredOutput};
pub use coloring::{all_colorings, make_profile, profile_is_disjoint, Coloring, ColoringProfile};
pub use counting::{CountMethod, CountReport};
pub use covering::{is_2_cover, pair_coverage, PairCoverageMap};
pub use error::{Error, Result};
pub use reconstruct::{
    collision_witnesses, is_reconstructible, reconstruct, round_trip_check, DecoderState, RoundTrip,
};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/channel.md")]
    mod channel {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/capacity.md")]
    mod capacity {}
    #[doc = include_str!("../../../book/src/covering.md")]
    mod covering {}
    #[doc = include_str!("../../../book/src/reconstruction.md")]
    mod reconstruction {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

//! The error-free coloring channel.
//!
//! Passing a sequence through a coloring deletes every entry outside the
//! coloring and keeps the rest in order. A profile applies each of its
//! colorings to the same input and returns the tuple of results.

use crate::alphabet::{Alphabet, Sequence};
use crate::coloring::{Coloring, ColoringProfile};
use crate::error::{Error, Result};

/// The tuple of colored subsequences produced by a profile, one stream per
/// coloring and in profile order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredOutput<'p> {
    profile: &'p ColoringProfile,
    streams: Vec<Sequence>,
}

impl<'p> ColoredOutput<'p> {
    /// Wraps externally supplied streams. Checks the stream count and that
    /// every symbol of stream `j` belongs to coloring `j`; it does not check
    /// that the tuple is an actual channel output.
    pub fn new(profile: &'p ColoringProfile, streams: Vec<Sequence>) -> Result<Self> {
        if streams.len() != profile.t() {
            return Err(Error::StreamCountMismatch {
                expected: profile.t(),
                found: streams.len(),
            });
        }
        for (stream, (seq, col)) in streams.iter().zip(profile.iter()).enumerate() {
            profile.alphabet().validate(seq)?;
            if let Some(position) = seq.iter().position(|&s| !col.contains(s)) {
                return Err(Error::ForeignSymbol {
                    stream,
                    position,
                    symbol: seq[position].0,
                });
            }
        }
        Ok(ColoredOutput { profile, streams })
    }

    pub fn profile(&self) -> &'p ColoringProfile {
        self.profile
    }

    pub fn streams(&self) -> &[Sequence] {
        &self.streams
    }

    pub fn into_streams(self) -> Vec<Sequence> {
        self.streams
    }

    /// Total number of symbols across all streams.
    pub fn total_len(&self) -> usize {
        self.streams.iter().map(|s| s.len()).sum()
    }
}

/// The `I`-colored subsequence of `x`.
pub fn apply_coloring(x: &Sequence, coloring: &Coloring) -> Result<Sequence> {
    coloring.alphabet().validate(x)?;
    Ok(filter(x, coloring))
}

#[inline]
fn filter(x: &Sequence, coloring: &Coloring) -> Sequence {
    x.iter()
        .copied()
        .filter(|&s| coloring.contains(s))
        .collect()
}

/// Applies every coloring of `profile` to `x`.
pub fn apply_profile<'p>(x: &Sequence, profile: &'p ColoringProfile) -> Result<ColoredOutput<'p>> {
    profile.alphabet().validate(x)?;
    Ok(apply_unchecked(x, profile))
}

/// `apply_profile` without the alphabet check; `x` must already be valid.
pub(crate) fn apply_unchecked<'p>(x: &Sequence, profile: &'p ColoringProfile) -> ColoredOutput<'p> {
    let streams = profile.iter().map(|c| filter(x, c)).collect();
    ColoredOutput { profile, streams }
}

/// Counts of each symbol in `x`, indexed by symbol value.
pub fn symbol_histogram(alphabet: Alphabet, x: &Sequence) -> Vec<usize> {
    let mut h = vec![0; alphabet.size() as usize];
    for s in x {
        h[s.index()] += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::make_profile;
    use proptest::prelude::*;

    fn seq(v: &[u32]) -> Sequence {
        Sequence::from_symbols(v)
    }

    fn a(q: u32) -> Alphabet {
        Alphabet::new(q).unwrap()
    }

    #[test]
    fn intro_example() {
        let x = seq(&[0, 1, 2, 2, 2, 1, 0, 0, 1]);
        let i = Coloring::new(a(3), &[0, 1]).unwrap();
        assert_eq!(apply_coloring(&x, &i).unwrap(), seq(&[0, 1, 1, 0, 0, 1]));
    }

    #[test]
    fn worked_example_streams() {
        let x = seq(&[1, 2, 0, 0, 2, 0, 1, 1, 0]);
        let i2 = Coloring::new(a(3), &[1, 2]).unwrap();
        assert_eq!(apply_coloring(&x, &i2).unwrap(), seq(&[1, 2, 2, 1, 1]));

        let p = make_profile(a(3), &[vec![0, 1], vec![1, 2]]).unwrap();
        let out = apply_profile(&x, &p).unwrap();
        assert_eq!(
            out.streams(),
            &[seq(&[1, 0, 0, 0, 1, 1, 0]), seq(&[1, 2, 2, 1, 1])]
        );
    }

    #[test]
    fn third_stream_matches_independent_filter() {
        let x = seq(&[1, 2, 0, 0, 2, 0, 1, 1, 0]);
        let p = make_profile(a(3), &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let out = apply_profile(&x, &p).unwrap();
        assert_eq!(out.streams()[2], seq(&[2, 0, 0, 2, 0, 0]));
        for (stream, col) in out.streams().iter().zip(p.iter()) {
            assert_eq!(stream, &apply_coloring(&x, col).unwrap());
        }
    }

    #[test]
    fn nothing_survives() {
        let i = Coloring::new(a(3), &[0, 1]).unwrap();
        assert!(apply_coloring(&seq(&[2, 2, 2]), &i).unwrap().is_empty());
    }

    #[test]
    fn empty_input_gives_empty_streams() {
        let p = make_profile(a(3), &[vec![0, 1], vec![1, 2]]).unwrap();
        let out = apply_profile(&Sequence::new(), &p).unwrap();
        assert_eq!(out.streams().len(), 2);
        assert!(out.streams().iter().all(|s| s.is_empty()));
    }

    #[test]
    fn out_of_range_input() {
        let p = make_profile(a(3), &[vec![0, 1]]).unwrap();
        assert_eq!(
            apply_profile(&seq(&[1, 2, 3]), &p).unwrap_err(),
            Error::SymbolOutOfRange {
                symbol: 3,
                index: 2,
                q: 3
            }
        );
    }

    #[test]
    fn wrapping_foreign_streams_fails() {
        let p = make_profile(a(3), &[vec![0, 1], vec![1, 2]]).unwrap();
        assert!(matches!(
            ColoredOutput::new(&p, vec![seq(&[0]), seq(&[0])]),
            Err(Error::ForeignSymbol {
                stream: 1,
                position: 0,
                symbol: 0
            })
        ));
        assert!(matches!(
            ColoredOutput::new(&p, vec![seq(&[0])]),
            Err(Error::StreamCountMismatch {
                expected: 2,
                found: 1
            })
        ));
    }

    fn input(q: u32) -> impl Strategy<Value = Vec<u32>> {
        prop::collection::vec(0..q, 0..40)
    }

    proptest! {
        #[test]
        fn coloring_laws(
            (q, x, members) in (2u32..9).prop_flat_map(|q| (
                Just(q),
                input(q),
                prop::collection::btree_set(0..q, 1..=q as usize),
            ))
        ) {
            let alphabet = a(q);
            let x = Sequence::from(x);
            let members: Vec<u32> = members.into_iter().collect();
            let col = Coloring::new(alphabet, &members).unwrap();
            let y = apply_coloring(&x, &col).unwrap();

            prop_assert!(y.is_subsequence_of(&x));
            prop_assert!(y.iter().all(|&s| col.contains(s)));
            let hist = symbol_histogram(alphabet, &x);
            let kept: usize = members.iter().map(|&s| hist[s as usize]).sum();
            prop_assert_eq!(y.len(), kept);
            prop_assert_eq!(apply_coloring(&y, &col).unwrap(), y.clone());
            prop_assert_eq!(apply_coloring(&x, &Coloring::full(alphabet)).unwrap(), x);
        }
    }
}

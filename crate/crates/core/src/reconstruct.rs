//! Recovering the input from its colored subsequences.
//!
//! Under a 2-cover the next input symbol is the one symbol `a` that sits at
//! the head of every stream whose coloring contains `a`. Two symbols can never
//! qualify together: some coloring holds both, and its stream has a single
//! head. Emitting `a` and advancing those streams repeats the argument on the
//! rest of the input.

use crate::alphabet::{Sequence, Symbol};
use crate::channel::{apply_profile, ColoredOutput};
use crate::coloring::ColoringProfile;
use crate::covering::{is_2_cover, pair_coverage};
use crate::error::{Error, Result};

/// Incremental head-merge decoder over one [`ColoredOutput`].
#[derive(Debug, Clone)]
pub struct DecoderState<'a> {
    streams: &'a [Sequence],
    cursors: Vec<usize>,
    /// For each symbol, the streams whose coloring contains it.
    streams_of: Vec<Vec<usize>>,
    /// For each symbol, how many of its streams currently show it at the head.
    at_head: Vec<usize>,
    ready: Option<Symbol>,
    emitted: Sequence,
}

impl<'a> DecoderState<'a> {
    /// Fails with [`Error::NotACover`] unless the profile is a 2-cover.
    pub fn new(out: &'a ColoredOutput<'_>) -> Result<Self> {
        let profile = out.profile();
        if let Some(&pair) = pair_coverage(profile).uncovered_pairs().first() {
            return Err(Error::NotACover { pair });
        }
        let streams = out.streams();
        let mut state = DecoderState {
            streams,
            cursors: vec![0; streams.len()],
            streams_of: profile.streams_by_symbol(),
            at_head: vec![0; profile.q() as usize],
            ready: None,
            emitted: Sequence::with_capacity(out.total_len()),
        };
        for s in streams.iter().filter_map(|s| s.first()) {
            state.at_head[s.index()] += 1;
        }
        let initial: Vec<usize> = (0..state.at_head.len()).collect();
        state.ready = state.find_ready(initial.into_iter());
        Ok(state)
    }

    fn head(&self, stream: usize) -> Option<Symbol> {
        self.streams[stream].get(self.cursors[stream]).copied()
    }

    fn is_ready(&self, a: usize) -> bool {
        !self.streams_of[a].is_empty() && self.at_head[a] == self.streams_of[a].len()
    }

    /// The qualifying symbol among `candidates`, asserting there is at most one.
    fn find_ready(&self, candidates: impl Iterator<Item = usize>) -> Option<Symbol> {
        let mut found: Option<usize> = None;
        for a in candidates {
            if self.is_ready(a) && found != Some(a) {
                assert!(
                    found.is_none(),
                    "symbols {} and {} both qualify under a 2-cover",
                    found.unwrap(),
                    a
                );
                found = Some(a);
            }
        }
        found.map(|a| Symbol(a as u32))
    }

    /// Emits the next symbol, or returns `None` once every stream is
    /// consumed.
    pub fn step(&mut self) -> Result<Option<Symbol>> {
        let Some(a) = self.ready else {
            if self.is_finished() {
                return Ok(None);
            }
            return Err(Error::InconsistentOutput {
                emitted: self.emitted.len(),
            });
        };
        self.emitted.push(a);
        let touched = std::mem::take(&mut self.streams_of[a.index()]);
        let mut new_heads = Vec::with_capacity(touched.len());
        for &j in &touched {
            self.cursors[j] += 1;
            if let Some(h) = self.head(j) {
                new_heads.push(h.index());
            }
        }
        self.at_head[a.index()] = 0;
        for &h in &new_heads {
            self.at_head[h] += 1;
        }
        self.streams_of[a.index()] = touched;
        self.ready = self.find_ready(new_heads.into_iter());
        Ok(Some(a))
    }

    pub fn is_finished(&self) -> bool {
        self.cursors
            .iter()
            .zip(self.streams)
            .all(|(&c, s)| c == s.len())
    }

    pub fn cursors(&self) -> &[usize] {
        &self.cursors
    }

    pub fn emitted(&self) -> &Sequence {
        &self.emitted
    }

    pub fn into_emitted(self) -> Sequence {
        self.emitted
    }
}

/// The unique input that produced `out`.
///
/// Errors with [`Error::NotACover`] if the profile misses a pair, and with
/// [`Error::InconsistentOutput`] if the streams are not the output of any
/// input.
pub fn reconstruct(out: &ColoredOutput<'_>) -> Result<Sequence> {
    let mut state = DecoderState::new(out)?;
    while state.step()?.is_some() {}
    Ok(state.into_emitted())
}

/// Whether every input of every length can be recovered from its output.
pub fn is_reconstructible(profile: &ColoringProfile) -> bool {
    is_2_cover(profile)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RoundTrip {
    Ok,
    NotACover { pair: (u32, u32) },
    Mismatch { decoded: Sequence },
    Failed(Error),
}

impl RoundTrip {
    pub fn is_ok(&self) -> bool {
        matches!(self, RoundTrip::Ok)
    }
}

/// Applies `profile` to `x`, decodes, and compares with `x`.
pub fn round_trip_check(x: &Sequence, profile: &ColoringProfile) -> RoundTrip {
    let out = match apply_profile(x, profile) {
        Ok(out) => out,
        Err(e) => return RoundTrip::Failed(e),
    };
    match reconstruct(&out) {
        Ok(decoded) if &decoded == x => RoundTrip::Ok,
        Ok(decoded) => RoundTrip::Mismatch { decoded },
        Err(Error::NotACover { pair }) => RoundTrip::NotACover { pair },
        Err(e) => RoundTrip::Failed(e),
    }
}

/// For each uncovered pair `{a, b}`, the inputs `(a, b)` and `(b, a)`,
/// which no coloring can tell apart.
pub fn collision_witnesses(profile: &ColoringProfile) -> Vec<(Sequence, Sequence)> {
    pair_coverage(profile)
        .uncovered_pairs()
        .into_iter()
        .map(|(a, b)| {
            (
                Sequence::from_symbols(&[a, b]),
                Sequence::from_symbols(&[b, a]),
            )
        })
        .collect()
}

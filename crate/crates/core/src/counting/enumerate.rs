//! Brute-force enumeration of the output space.
//!
//! This is the reference every closed form is checked against, so it does
//! nothing clever: it runs every `x ∈ A_q^n` through the channel and
//! collects the distinct output tuples.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::alphabet::{Sequence, Symbol};
use crate::channel::ColoredOutput;
use crate::coloring::ColoringProfile;
use crate::counting::{CountMethod, CountReport};
use crate::error::{Error, Result};

/// Default cap on `q^n` for exhaustive enumeration.
pub const DEFAULT_MAX_STATES: u64 = 10_000_000;

/// Number of input sequences, or `None` if it does not fit in `u128`.
fn state_count(q: u32, n: usize) -> Option<u128> {
    (q as u128).checked_pow(u32::try_from(n).ok()?)
}

fn check_cap(q: u32, n: usize, cap: u64) -> Result<u128> {
    match state_count(q, n) {
        Some(s) if s <= cap as u128 => Ok(s),
        other => Err(Error::CapExceeded {
            required: other.unwrap_or(u128::MAX),
            cap,
        }),
    }
}

/// Flat, injective byte encoding of an output tuple: for each stream a
/// little-endian `u32` length followed by its symbols (one byte each when
/// `q <= 256`, otherwise four).
struct Encoder {
    membership: Vec<Vec<bool>>,
    wide: bool,
}

impl Encoder {
    fn new(profile: &ColoringProfile) -> Self {
        let q = profile.q() as usize;
        let membership = profile
            .iter()
            .map(|c| (0..q).map(|s| c.contains(Symbol(s as u32))).collect())
            .collect();
        Encoder {
            membership,
            wide: q > 256,
        }
    }

    fn push_symbol(&self, buf: &mut Vec<u8>, s: u32) {
        if self.wide {
            buf.extend_from_slice(&s.to_le_bytes());
        } else {
            buf.push(s as u8);
        }
    }

    fn encode_input(&self, x: &[u32], buf: &mut Vec<u8>) {
        buf.clear();
        for member in &self.membership {
            let at = buf.len();
            buf.extend_from_slice(&[0; 4]);
            let mut len = 0u32;
            for &s in x {
                if member[s as usize] {
                    self.push_symbol(buf, s);
                    len += 1;
                }
            }
            buf[at..at + 4].copy_from_slice(&len.to_le_bytes());
        }
    }

    fn encode_streams(&self, streams: &[Sequence], buf: &mut Vec<u8>) {
        buf.clear();
        for s in streams {
            buf.extend_from_slice(&(s.len() as u32).to_le_bytes());
            for sym in s.iter() {
                self.push_symbol(buf, sym.0);
            }
        }
    }

    fn decode(&self, t: usize, bytes: &[u8]) -> Vec<Sequence> {
        let mut pos = 0;
        let mut out = Vec::with_capacity(t);
        for _ in 0..t {
            let len = u32::from_le_bytes(bytes[pos..pos + 4].try_into().unwrap()) as usize;
            pos += 4;
            let mut seq = Sequence::with_capacity(len);
            for _ in 0..len {
                let s = if self.wide {
                    let v = u32::from_le_bytes(bytes[pos..pos + 4].try_into().unwrap());
                    pos += 4;
                    v
                } else {
                    pos += 1;
                    bytes[pos - 1] as u32
                };
                seq.push(Symbol(s));
            }
            out.push(seq);
        }
        out
    }
}

/// Advances `digits` as a base-`q` odometer. Returns false after the last
/// word.
fn advance(digits: &mut [u32], q: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < q {
            return true;
        }
        *d = 0;
    }
    false
}

/// The set `S_q^(n)(I)` of distinct output tuples.
pub struct OutputSpace {
    n: usize,
    encoder: Encoder,
    t: usize,
    keys: HashSet<Box<[u8]>>,
}

impl OutputSpace {
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, out: &ColoredOutput<'_>) -> bool {
        let mut buf = Vec::new();
        self.encoder.encode_streams(out.streams(), &mut buf);
        self.keys.contains(buf.as_slice())
    }

    /// All output tuples, in unspecified order.
    pub fn tuples(&self) -> impl Iterator<Item = Vec<Sequence>> + '_ {
        self.keys.iter().map(|k| self.encoder.decode(self.t, k))
    }
}

/// Enumerates `S_q^(n)(profile)` by running every input through the channel.
///
/// The input space is split by prefix and the partitions are processed on
/// the rayon pool; per-worker sets are merged by union.
pub fn enumerate_outputs(
    n: usize,
    profile: &ColoringProfile,
    max_states: u64,
) -> Result<OutputSpace> {
    let q = profile.q();
    check_cap(q, n, max_states)?;
    let encoder = Encoder::new(profile);

    // Enough prefixes to keep the pool busy.
    let mut prefix_len = 0;
    while prefix_len < n && state_count(q, prefix_len).is_some_and(|s| s < 256) {
        prefix_len += 1;
    }
    let partitions = state_count(q, prefix_len).unwrap() as u64;

    let keys = (0..partitions)
        .into_par_iter()
        .fold(HashSet::new, |mut set: HashSet<Box<[u8]>>, part| {
            let mut x = vec![0u32; n];
            let mut rest = part;
            for d in x[..prefix_len].iter_mut().rev() {
                *d = (rest % q as u64) as u32;
                rest /= q as u64;
            }
            let mut buf = Vec::new();
            loop {
                encoder.encode_input(&x, &mut buf);
                if !set.contains(buf.as_slice()) {
                    set.insert(buf.as_slice().into());
                }
                if !advance(&mut x[prefix_len..], q) {
                    break;
                }
            }
            set
        })
        .reduce(HashSet::new, |a, b| {
            let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
            big.extend(small);
            big
        });

    Ok(OutputSpace {
        n,
        encoder,
        t: profile.t(),
        keys,
    })
}

/// `|S_q^(n)(profile)|` by enumeration, wrapped as a report.
pub fn count_brute(n: usize, profile: &ColoringProfile, max_states: u64) -> Result<CountReport> {
    let space = enumerate_outputs(n, profile, max_states)?;
    Ok(CountReport {
        q: profile.q(),
        c: profile.c(),
        t: profile.t(),
        n,
        method: CountMethod::BruteForce,
        count: BigUint::from(space.len()),
        within_hypothesis: true,
    })
}

/// First pair of distinct inputs of length `n` with identical outputs, in
/// lexicographic order of discovery; `None` if the channel is injective on
/// `A_q^n`.
pub fn find_collision(
    n: usize,
    profile: &ColoringProfile,
    max_states: u64,
) -> Result<Option<(Sequence, Sequence)>> {
    let q = profile.q();
    check_cap(q, n, max_states)?;
    let encoder = Encoder::new(profile);
    let mut seen: HashMap<Box<[u8]>, Vec<u32>> = HashMap::new();
    let mut x = vec![0u32; n];
    let mut buf = Vec::new();
    loop {
        encoder.encode_input(&x, &mut buf);
        if let Some(prev) = seen.get(buf.as_slice()) {
            return Ok(Some((Sequence::from(prev.clone()), Sequence::from(x))));
        }
        seen.insert(buf.as_slice().into(), x.clone());
        if !advance(&mut x, q) {
            return Ok(None);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::channel::apply_profile;
    use crate::coloring::make_profile;

    fn profile(q: u32, sets: &[&[u32]]) -> ColoringProfile {
        make_profile(Alphabet::new(q).unwrap(), sets).unwrap()
    }

    #[test]
    fn one_symbol_inputs() {
        let p = profile(3, &[&[1, 2], &[0, 2]]);
        let space = enumerate_outputs(1, &p, DEFAULT_MAX_STATES).unwrap();
        assert_eq!(space.len(), 3);
        let mut tuples: Vec<_> = space.tuples().collect();
        tuples.sort();
        let s = Sequence::from_symbols;
        assert_eq!(
            tuples,
            vec![
                vec![s(&[]), s(&[0])],
                vec![s(&[1]), s(&[])],
                vec![s(&[2]), s(&[2])],
            ]
        );
    }

    #[test]
    fn two_symbol_inputs_collide_once() {
        let p = profile(3, &[&[1, 2], &[0, 2]]);
        assert_eq!(
            enumerate_outputs(2, &p, DEFAULT_MAX_STATES).unwrap().len(),
            8
        );
        let (x, y) = find_collision(2, &p, DEFAULT_MAX_STATES).unwrap().unwrap();
        assert_eq!(x, Sequence::from_symbols(&[0, 1]));
        assert_eq!(y, Sequence::from_symbols(&[1, 0]));
    }

    #[test]
    fn empty_input_has_one_output() {
        let p = profile(4, &[&[0, 1], &[2, 3]]);
        let space = enumerate_outputs(0, &p, DEFAULT_MAX_STATES).unwrap();
        assert_eq!(space.len(), 1);
        let out = apply_profile(&Sequence::new(), &p).unwrap();
        assert!(space.contains(&out));
    }

    #[test]
    fn cap_is_enforced() {
        let p = profile(4, &[&[0, 1]]);
        assert_eq!(
            enumerate_outputs(12, &p, 1000).err(),
            Some(Error::CapExceeded {
                required: 4u128.pow(12),
                cap: 1000
            })
        );
        assert!(matches!(
            enumerate_outputs(200, &p, DEFAULT_MAX_STATES),
            Err(Error::CapExceeded {
                required: u128::MAX,
                ..
            })
        ));
    }

    #[test]
    fn every_channel_output_is_in_the_space() {
        let p = profile(4, &[&[0, 1, 2], &[1, 2, 3]]);
        let space = enumerate_outputs(5, &p, DEFAULT_MAX_STATES).unwrap();
        let mut x = vec![0u32; 5];
        loop {
            let out = apply_profile(&Sequence::from(x.clone()), &p).unwrap();
            assert!(space.contains(&out));
            if !advance(&mut x, 4) {
                break;
            }
        }
    }

    #[test]
    fn wide_alphabet_round_trips() {
        let p = profile(300, &[&[0, 299], &[5, 299]]);
        let space = enumerate_outputs(2, &p, DEFAULT_MAX_STATES).unwrap();
        let x = Sequence::from_symbols(&[299, 5]);
        assert!(space.contains(&apply_profile(&x, &p).unwrap()));
        assert!(space.tuples().any(|t| t
            == vec![
                Sequence::from_symbols(&[299]),
                Sequence::from_symbols(&[299, 5])
            ]));
    }
}

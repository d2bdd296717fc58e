//! 2-covering designs.
//!
//! A profile lets every input be reconstructed exactly when each unordered
//! pair of distinct symbols lies together in at least one of its colorings,
//! i.e. when its colorings are the blocks of a `(q, c, 2)` covering design.
//! This module checks that property, bounds and searches for small covers,
//! and certifies the size at which *every* profile becomes a cover.

mod bounds;
mod search;
mod tmin;

use crate::alphabet::Symbol;
use crate::coloring::{Coloring, ColoringProfile};

pub use bounds::{schonheim_bound, schonheim_tightness, t_capital_min};
pub use search::{search_min_cover, CoverSearchResult, DEFAULT_NODE_BUDGET, MAX_CANDIDATE_BLOCKS};
pub use tmin::{verify_t_capital_min, TminCertificate, MAX_SCAN_PROFILES, MAX_VERIFY_BLOCKS};

/// Number of unordered pairs of distinct symbols, `C(q, 2)`.
#[inline]
pub fn pair_count(q: u32) -> usize {
    let q = q as usize;
    q * q.saturating_sub(1) / 2
}

/// Position of the pair `{a, b}` (`a < b`) in the row-major upper triangle.
#[inline]
pub(crate) fn pair_index(q: u32, a: u32, b: u32) -> usize {
    debug_assert!(a < b && b < q);
    let (q, a, b) = (q as usize, a as usize, b as usize);
    a * (2 * q - a - 1) / 2 + (b - a - 1)
}

/// Bitset over the `C(q, 2)` symbol pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct PairSet {
    words: Vec<u64>,
}

impl PairSet {
    pub(crate) fn empty(pairs: usize) -> Self {
        PairSet {
            words: vec![0; pairs.div_ceil(64)],
        }
    }

    pub(crate) fn of_coloring(q: u32, coloring: &Coloring) -> Self {
        let mut set = Self::empty(pair_count(q));
        let m = coloring.members();
        for (i, a) in m.iter().enumerate() {
            for b in &m[i + 1..] {
                set.insert(pair_index(q, a.0, b.0));
            }
        }
        set
    }

    #[inline]
    pub(crate) fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub(crate) fn contains(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub(crate) fn union_with(&mut self, other: &PairSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `|other \ self|`
    #[inline]
    pub(crate) fn gain(&self, other: &PairSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(w, o)| (o & !w).count_ones() as usize)
            .sum()
    }
}

/// Which symbol pairs a profile covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCoverageMap {
    q: u32,
    covered: PairSet,
    uncovered_count: usize,
}

impl PairCoverageMap {
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Whether the distinct symbols `a` and `b` lie together in some
    /// coloring. Symmetric; `false` when `a == b`.
    pub fn is_covered(&self, a: Symbol, b: Symbol) -> bool {
        let (lo, hi) = if a <= b { (a.0, b.0) } else { (b.0, a.0) };
        if hi >= self.q || lo == hi {
            return false;
        }
        self.covered.contains(pair_index(self.q, lo, hi))
    }

    pub fn uncovered_count(&self) -> usize {
        self.uncovered_count
    }

    pub fn is_complete(&self) -> bool {
        self.uncovered_count == 0
    }

    /// Uncovered pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn uncovered_pairs(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.uncovered_count);
        for a in 0..self.q {
            for b in a + 1..self.q {
                if !self.covered.contains(pair_index(self.q, a, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

pub fn pair_coverage(profile: &ColoringProfile) -> PairCoverageMap {
    let q = profile.q();
    let total = pair_count(q);
    let mut covered = PairSet::empty(total);
    for c in profile.iter() {
        covered.union_with(&PairSet::of_coloring(q, c));
    }
    let uncovered_count = total - covered.len();
    PairCoverageMap {
        q,
        covered,
        uncovered_count,
    }
}

/// True iff every pair of distinct symbols shares a coloring.
pub fn is_2_cover(profile: &ColoringProfile) -> bool {
    pair_coverage(profile).is_complete()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::coloring::{all_colorings, make_profile};

    fn profile(q: u32, sets: &[&[u32]]) -> ColoringProfile {
        make_profile(Alphabet::new(q).unwrap(), sets).unwrap()
    }

    #[test]
    fn pair_index_is_a_bijection() {
        for q in 2..12u32 {
            let mut seen = vec![false; pair_count(q)];
            for a in 0..q {
                for b in a + 1..q {
                    let i = pair_index(q, a, b);
                    assert!(!seen[i]);
                    seen[i] = true;
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn triangle_is_a_cover() {
        assert!(is_2_cover(&profile(3, &[&[0, 1], &[1, 2], &[0, 2]])));
    }

    #[test]
    fn path_misses_one_pair() {
        let map = pair_coverage(&profile(3, &[&[0, 1], &[1, 2]]));
        assert!(!map.is_complete());
        assert_eq!(map.uncovered_pairs(), vec![(0, 2)]);
        assert_eq!(map.uncovered_count(), 1);
        assert!(!map.is_covered(Symbol(2), Symbol(0)));
        assert!(map.is_covered(Symbol(1), Symbol(0)));
    }

    #[test]
    fn fano_plane() {
        let lines: [&[u32]; 7] = [
            &[0, 1, 3],
            &[1, 2, 4],
            &[2, 3, 5],
            &[3, 4, 6],
            &[4, 5, 0],
            &[5, 6, 1],
            &[6, 0, 2],
        ];
        let p = profile(7, &lines);
        let map = pair_coverage(&p);
        assert!(map.is_complete());
        for a in 0..7 {
            for b in 0..7 {
                if a != b {
                    let together = lines.iter().any(|l| l.contains(&a) && l.contains(&b));
                    assert_eq!(map.is_covered(Symbol(a), Symbol(b)), together);
                }
            }
        }
    }

    #[test]
    fn degenerate_profiles() {
        let a = Alphabet::new(4).unwrap();
        let full = ColoringProfile::new(a, vec![Coloring::full(a)]).unwrap();
        assert!(is_2_cover(&full));
        let singles = ColoringProfile::new(a, all_colorings(a, 1).collect()).unwrap();
        assert!(!is_2_cover(&singles));
        assert_eq!(pair_coverage(&singles).uncovered_count(), 6);
        let one = Alphabet::new(1).unwrap();
        assert!(is_2_cover(
            &ColoringProfile::new(one, vec![Coloring::full(one)]).unwrap()
        ));
    }
}

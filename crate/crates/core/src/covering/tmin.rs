//! Exhaustive certification of `T_min`.

use crate::alphabet::{Alphabet, Symbol};
use crate::coloring::{all_colorings, Coloring, ColoringProfile};
use crate::combinatorics::{binomial_u128, ColexSubsets};
use crate::covering::{pair_count, pair_coverage, t_capital_min, PairSet};
use crate::error::{Error, Result};

/// Largest `C(q, c)` accepted by [`verify_t_capital_min`].
pub const MAX_VERIFY_BLOCKS: u128 = 25;

/// Largest number of profiles either scan may visit.
pub const MAX_SCAN_PROFILES: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TminCertificate {
    pub q: u32,
    pub c: usize,
    pub t_capital_min: u128,
    /// A non-cover with `T_min - 1` colorings.
    pub witness: ColoringProfile,
    pub witness_uncovered: Vec<(u32, u32)>,
    /// Profiles of size `T_min - 1` examined, and how many were not covers.
    pub below_checked: u64,
    pub below_non_covers: u64,
    /// Profiles of size `T_min` examined before the scan ended.
    pub at_checked: u64,
    pub at_all_cover: bool,
    pub certified: bool,
}

/// Colorings that do not contain both `alpha` and `beta`, in lex order.
fn avoiding_pair(alphabet: Alphabet, c: usize, alpha: u32, beta: u32) -> Vec<Coloring> {
    all_colorings(alphabet, c)
        .filter(|col| !(col.contains(Symbol(alpha)) && col.contains(Symbol(beta))))
        .collect()
}

/// Checks `T_min(q, c)` by brute force: builds a non-cover of size
/// `T_min - 1`, and confirms that every set of `T_min` distinct colorings is a
/// cover.
///
/// Unordered sets suffice since coverage ignores order.
pub fn verify_t_capital_min(q: u32, c: usize) -> Result<TminCertificate> {
    let t_min = t_capital_min(q, c)?;
    let blocks_total = binomial_u128(q as u64, c as u64);
    if blocks_total > MAX_VERIFY_BLOCKS {
        return Err(Error::CapExceeded {
            required: blocks_total,
            cap: MAX_VERIFY_BLOCKS as u64,
        });
    }
    let n = blocks_total as u64;
    let below = binomial_u128(n, t_min as u64 - 1);
    let at = binomial_u128(n, t_min as u64);
    let scan = below.max(at);
    if scan > MAX_SCAN_PROFILES {
        return Err(Error::CapExceeded {
            required: scan,
            cap: MAX_SCAN_PROFILES as u64,
        });
    }

    let alphabet = Alphabet::new(q)?;
    let witness = ColoringProfile::new(alphabet, avoiding_pair(alphabet, c, q - 1, 0))?;
    let witness_uncovered = pair_coverage(&witness).uncovered_pairs();

    let pairs = pair_count(q);
    let blocks: Vec<PairSet> = all_colorings(alphabet, c)
        .map(|col| PairSet::of_coloring(q, &col))
        .collect();
    let covers = |subset: &[usize]| {
        let mut acc = PairSet::empty(pairs);
        for &b in subset {
            acc.union_with(&blocks[b]);
        }
        acc.len() == pairs
    };

    let mut below_checked = 0u64;
    let mut below_non_covers = 0u64;
    for subset in ColexSubsets::new(blocks.len(), t_min as usize - 1) {
        below_checked += 1;
        if !covers(&subset) {
            below_non_covers += 1;
        }
    }

    let mut at_checked = 0u64;
    let mut at_all_cover = true;
    for subset in ColexSubsets::new(blocks.len(), t_min as usize) {
        at_checked += 1;
        if !covers(&subset) {
            at_all_cover = false;
            break;
        }
    }

    let certified = witness.t() as u128 == t_min - 1
        && witness_uncovered.len() == 1
        && below_non_covers > 0
        && at_all_cover;
    Ok(TminCertificate {
        q,
        c,
        t_capital_min: t_min,
        witness,
        witness_uncovered,
        below_checked,
        below_non_covers,
        at_checked,
        at_all_cover,
        certified,
    })
}

//! Minimum 2-covering profiles by branch and bound.
//!
//! Blocks are all `c`-subsets of the alphabet; the search picks blocks until
//! every pair is covered. At each node it branches on the uncovered pair
//! with the fewest remaining candidate blocks. Children are ordered by the
//! number of newly covered pairs (descending, ties by the block's sorted
//! members), and once a child has been explored its block is forbidden in
//! later siblings. A node is pruned when
//! `chosen + ⌈uncovered / C(c, 2)⌉` cannot beat the incumbent. The search
//! stops as soon as the incumbent meets the Schönheim bound.

use crate::alphabet::Alphabet;
use crate::coloring::{all_colorings, Coloring, ColoringProfile};
use crate::combinatorics::binomial_u128;
use crate::covering::{pair_count, schonheim_bound, PairSet};
use crate::error::{domain, Error, Result};

/// Largest number of candidate blocks `C(q, c)` the search accepts.
pub const MAX_CANDIDATE_BLOCKS: u128 = 100_000;

/// Default node limit for [`search_min_cover`].
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSearchResult {
    pub q: u32,
    pub c: usize,
    pub t_found: usize,
    pub witness: ColoringProfile,
    /// Schönheim bound for `(q, c, 2)`.
    pub lower_bound: u128,
    /// The search proved no smaller cover exists.
    pub optimal: bool,
    pub nodes: u64,
}

struct Search {
    blocks: Vec<PairSet>,
    /// Blocks containing each pair, in block order.
    blocks_of_pair: Vec<Vec<usize>>,
    pairs: usize,
    per_block: usize,
    lower_bound: usize,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    best: Vec<usize>,
    chosen: Vec<usize>,
    forbidden: Vec<bool>,
}

impl Search {
    fn greedy(&self) -> Vec<usize> {
        let mut covered = PairSet::empty(self.pairs);
        let mut picked = Vec::new();
        while covered.len() < self.pairs {
            // max gain, lowest index on ties
            let (b, _) = self
                .blocks
                .iter()
                .enumerate()
                .map(|(i, blk)| (i, covered.gain(blk)))
                .fold(
                    (usize::MAX, 0),
                    |acc, (i, g)| if g > acc.1 { (i, g) } else { acc },
                );
            covered.union_with(&self.blocks[b]);
            picked.push(b);
        }
        picked
    }

    fn lower(&self, uncovered: usize) -> usize {
        uncovered.div_ceil(self.per_block)
    }

    fn done(&self) -> bool {
        self.exhausted || self.best.len() <= self.lower_bound
    }

    fn descend(&mut self, covered: &PairSet) {
        if self.done() {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let uncovered = self.pairs - covered.len();
        if uncovered == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        if self.chosen.len() + self.lower(uncovered) >= self.best.len() {
            return;
        }

        // Most constrained uncovered pair.
        let mut target: Option<(usize, usize)> = None;
        for p in 0..self.pairs {
            if covered.contains(p) {
                continue;
            }
            let options = self.blocks_of_pair[p]
                .iter()
                .filter(|&&b| !self.forbidden[b])
                .count();
            if target.is_none_or(|(_, o)| options < o) {
                target = Some((p, options));
                if options <= 1 {
                    break;
                }
            }
        }
        let (pair, options) = target.expect("uncovered pair exists");
        if options == 0 {
            return;
        }

        let mut children: Vec<(usize, usize)> = self.blocks_of_pair[pair]
            .iter()
            .filter(|&&b| !self.forbidden[b])
            .map(|&b| (covered.gain(&self.blocks[b]), b))
            .collect();
        children.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));

        let mut banned = Vec::with_capacity(children.len());
        for (gain, b) in children {
            if self.chosen.len() + 1 + self.lower(uncovered - gain) >= self.best.len() {
                // later children gain no more
                break;
            }
            let mut next = covered.clone();
            next.union_with(&self.blocks[b]);
            self.chosen.push(b);
            self.descend(&next);
            self.chosen.pop();
            if self.done() {
                break;
            }
            self.forbidden[b] = true;
            banned.push(b);
        }
        for b in banned {
            self.forbidden[b] = false;
        }
    }
}

/// Searches for a smallest `(q, c, 2)` covering profile.
///
/// Returns the best cover found. If the node budget runs out before
/// optimality is settled the result is returned inside
/// [`Error::BudgetExceeded`] with `optimal = false`.
pub fn search_min_cover(q: u32, c: usize, budget: u64) -> Result<CoverSearchResult> {
    if !(2 <= c && c < q as usize) {
        return Err(domain(format!(
            "cover search needs 2 <= c < q, got q={q}, c={c}"
        )));
    }
    let candidates = binomial_u128(q as u64, c as u64);
    if candidates > MAX_CANDIDATE_BLOCKS {
        return Err(Error::CapExceeded {
            required: candidates,
            cap: MAX_CANDIDATE_BLOCKS as u64,
        });
    }
    let alphabet = Alphabet::new(q)?;
    let colorings: Vec<Coloring> = all_colorings(alphabet, c).collect();
    let blocks: Vec<PairSet> = colorings
        .iter()
        .map(|b| PairSet::of_coloring(q, b))
        .collect();
    let pairs = pair_count(q);
    let mut blocks_of_pair = vec![Vec::new(); pairs];
    for (i, blk) in blocks.iter().enumerate() {
        for (p, list) in blocks_of_pair.iter_mut().enumerate() {
            if blk.contains(p) {
                list.push(i);
            }
        }
    }
    let lower_bound = schonheim_bound(q as u64, c as u64, 2)?;

    let mut search = Search {
        per_block: c * (c - 1) / 2,
        lower_bound: lower_bound as usize,
        budget,
        nodes: 0,
        exhausted: false,
        best: Vec::new(),
        chosen: Vec::new(),
        forbidden: vec![false; blocks.len()],
        blocks,
        blocks_of_pair,
        pairs,
    };
    search.best = search.greedy();
    let empty = PairSet::empty(pairs);
    search.descend(&empty);

    let mut picked = search.best.clone();
    picked.sort_unstable();
    let witness = ColoringProfile::new(
        alphabet,
        picked.iter().map(|&i| colorings[i].clone()).collect(),
    )?;
    let optimal = search.best.len() <= search.lower_bound || !search.exhausted;
    let result = CoverSearchResult {
        q,
        c,
        t_found: witness.t(),
        witness,
        lower_bound,
        optimal,
        nodes: search.nodes,
    };
    if optimal {
        Ok(result)
    } else {
        Err(Error::BudgetExceeded {
            budget,
            incumbent: Box::new(result),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::is_2_cover;

    fn found(q: u32, c: usize) -> CoverSearchResult {
        search_min_cover(q, c, DEFAULT_NODE_BUDGET).unwrap()
    }

    #[test]
    fn pairs_need_every_pair() {
        let r = found(4, 2);
        assert_eq!(r.t_found, 6);
        assert!(r.optimal && is_2_cover(&r.witness));
    }

    #[test]
    fn fano_plane_is_found() {
        let r = found(7, 3);
        assert_eq!((r.t_found, r.lower_bound), (7, 7));
        assert!(r.optimal && is_2_cover(&r.witness));
    }

    #[test]
    fn three_blocks_of_size_q_minus_1() {
        let r = found(4, 3);
        assert_eq!(r.t_found, 3);
        assert!(r.optimal);
        assert_eq!(r.lower_bound, 3);
    }

    #[test]
    fn witness_is_deterministic() {
        assert_eq!(found(6, 3).witness, found(6, 3).witness);
    }

    #[test]
    fn tiny_budget_returns_incumbent() {
        match search_min_cover(12, 4, 3) {
            Err(Error::BudgetExceeded { incumbent, .. }) => {
                assert!(!incumbent.optimal);
                assert!(is_2_cover(&incumbent.witness));
                assert!(incumbent.t_found as u128 >= incumbent.lower_bound);
            }
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn domain_checks() {
        assert!(search_min_cover(4, 4, 10).is_err());
        assert!(search_min_cover(4, 1, 10).is_err());
        assert!(matches!(
            search_min_cover(40, 10, 10),
            Err(Error::CapExceeded { .. })
        ));
    }
}

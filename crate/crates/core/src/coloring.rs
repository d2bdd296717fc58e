//! Colorings and coloring profiles.
//!
//! A *c-coloring* is a `c`-element subset of the alphabet. A *coloring
//! profile* is an ordered tuple of pairwise distinct colorings that all have
//! the same size. Colorings are stored sorted; profiles keep the order the
//! caller gave, because the channel output is matched to the profile
//! position by position.

use std::fmt;

use crate::alphabet::{Alphabet, Symbol};
use crate::combinatorics::Combinations;
use crate::error::{Error, Result};

/// Membership bitmask. One word covers every alphabet with `q <= 64`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum SymbolMask {
    Word(u64),
    Words(Box<[u64]>),
}

impl SymbolMask {
    fn from_members(q: u32, members: &[Symbol]) -> Self {
        if q <= 64 {
            SymbolMask::Word(members.iter().fold(0u64, |m, s| m | 1 << s.0))
        } else {
            let mut words = vec![0u64; (q as usize).div_ceil(64)];
            for s in members {
                words[s.index() / 64] |= 1 << (s.0 % 64);
            }
            SymbolMask::Words(words.into_boxed_slice())
        }
    }

    #[inline]
    fn contains(&self, s: Symbol) -> bool {
        match self {
            SymbolMask::Word(w) => s.0 < 64 && (w >> s.0) & 1 == 1,
            SymbolMask::Words(ws) => ws
                .get(s.index() / 64)
                .is_some_and(|w| (w >> (s.0 % 64)) & 1 == 1),
        }
    }
}

/// A nonempty subset of the alphabet, kept in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    alphabet: Alphabet,
    members: Vec<Symbol>,
    mask: SymbolMask,
}

impl Coloring {
    /// Builds a coloring from an arbitrary list of symbols. The list is
    /// sorted; repeated symbols are an error rather than silently merged.
    pub fn new(alphabet: Alphabet, symbols: &[u32]) -> Result<Self> {
        Self::build(alphabet, symbols, 0)
    }

    fn build(alphabet: Alphabet, symbols: &[u32], position: usize) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyColoring { coloring: position });
        }
        if let Some(index) = symbols.iter().position(|&s| s >= alphabet.size()) {
            return Err(Error::SymbolOutOfRange {
                symbol: symbols[index],
                index,
                q: alphabet.size(),
            });
        }
        let mut members: Vec<Symbol> = symbols.iter().copied().map(Symbol).collect();
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateSymbol {
                symbol: w[0].0,
                coloring: position,
            });
        }
        Ok(Self::from_sorted(alphabet, members))
    }

    /// `members` must be strictly increasing and inside the alphabet.
    pub(crate) fn from_sorted(alphabet: Alphabet, members: Vec<Symbol>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let mask = SymbolMask::from_members(alphabet.size(), &members);
        Coloring {
            alphabet,
            members,
            mask,
        }
    }

    /// The whole alphabet as a single coloring.
    pub fn full(alphabet: Alphabet) -> Self {
        Self::from_sorted(alphabet, alphabet.symbols().collect())
    }

    #[inline]
    pub fn contains(&self, s: Symbol) -> bool {
        self.mask.contains(s)
    }

    pub fn members(&self) -> &[Symbol] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_disjoint(&self, other: &Coloring) -> bool {
        !self.members.iter().any(|&s| other.contains(s))
    }

    pub fn to_u32s(&self) -> Vec<u32> {
        self.members.iter().map(|s| s.0).collect()
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Every `c`-coloring of the alphabet, in lexicographic order of the sorted
/// member lists.
pub fn all_colorings(alphabet: Alphabet, c: usize) -> impl Iterator<Item = Coloring> {
    Combinations::new(alphabet.size() as usize, c).map(move |idx| {
        Coloring::from_sorted(alphabet, idx.iter().map(|&i| Symbol(i as u32)).collect())
    })
}

/// An ordered tuple `(I_1, …, I_t)` of pairwise distinct colorings of equal
/// size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoringProfile {
    alphabet: Alphabet,
    colorings: Vec<Coloring>,
}

impl ColoringProfile {
    pub fn new(alphabet: Alphabet, colorings: Vec<Coloring>) -> Result<Self> {
        let first = colorings.first().ok_or(Error::EmptyProfile)?;
        let c = first.size();
        for (index, col) in colorings.iter().enumerate() {
            if col.alphabet() != alphabet {
                return Err(Error::Domain(format!(
                    "coloring {index} is over an alphabet of size {}, not {}",
                    col.alphabet().size(),
                    alphabet.size()
                )));
            }
            if col.size() != c {
                return Err(Error::SizeMismatch {
                    index,
                    expected: c,
                    found: col.size(),
                });
            }
        }
        for second in 1..colorings.len() {
            if let Some(first) = colorings[..second]
                .iter()
                .position(|c| c.members == colorings[second].members)
            {
                return Err(Error::DuplicateColoring { first, second });
            }
        }
        Ok(ColoringProfile {
            alphabet,
            colorings,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn q(&self) -> u32 {
        self.alphabet.size()
    }

    /// Common size of the colorings.
    pub fn c(&self) -> usize {
        self.colorings[0].size()
    }

    /// Number of colorings.
    pub fn t(&self) -> usize {
        self.colorings.len()
    }

    pub fn colorings(&self) -> &[Coloring] {
        &self.colorings
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Coloring> {
        self.colorings.iter()
    }

    /// The colorings as plain symbol lists, in profile order.
    pub fn to_sets(&self) -> Vec<Vec<u32>> {
        self.colorings.iter().map(Coloring::to_u32s).collect()
    }

    /// True iff no two colorings share a symbol.
    pub fn is_disjoint(&self) -> bool {
        self.colorings
            .iter()
            .enumerate()
            .all(|(i, a)| self.colorings[i + 1..].iter().all(|b| a.is_disjoint(b)))
    }

    /// For each symbol, the indices of the colorings that contain it.
    pub fn streams_by_symbol(&self) -> Vec<Vec<usize>> {
        let mut index = vec![Vec::new(); self.q() as usize];
        for (j, col) in self.colorings.iter().enumerate() {
            for s in col.members() {
                index[s.index()].push(j);
            }
        }
        index
    }
}

/// Semicolon-separated colorings, e.g. `0,1;1,2`.
impl fmt::Display for ColoringProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.colorings.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Validates and canonicalizes a list of symbol sets into a profile.
///
/// Each set is sorted internally; the order of the sets is preserved.
pub fn make_profile<S: AsRef<[u32]>>(alphabet: Alphabet, sets: &[S]) -> Result<ColoringProfile> {
    let colorings = sets
        .iter()
        .enumerate()
        .map(|(i, s)| Coloring::build(alphabet, s.as_ref(), i))
        .collect::<Result<Vec<_>>>()?;
    ColoringProfile::new(alphabet, colorings)
}

pub fn profile_is_disjoint(profile: &ColoringProfile) -> bool {
    profile.is_disjoint()
}

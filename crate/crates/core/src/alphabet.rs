//! Alphabets, symbols and sequences.

use std::fmt;

use crate::error::{Error, Result};

/// The symbol universe `{0, …, q-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    q: u32,
}

impl Alphabet {
    pub fn new(q: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Self { q })
    }

    #[inline]
    pub fn size(self) -> u32 {
        self.q
    }

    #[inline]
    pub fn contains(self, symbol: Symbol) -> bool {
        symbol.0 < self.q
    }

    pub fn symbols(self) -> impl Iterator<Item = Symbol> {
        (0..self.q).map(Symbol)
    }

    /// Checks that every entry of `seq` lies in the alphabet.
    pub fn validate(self, seq: &Sequence) -> Result<()> {
        match seq.iter().position(|&s| !self.contains(s)) {
            None => Ok(()),
            Some(index) => Err(Error::SymbolOutOfRange {
                symbol: seq[index].0,
                index,
                q: self.q,
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(transparent)]
pub struct Symbol(pub u32);

impl Symbol {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for Symbol {
    fn from(v: u32) -> Self {
        Symbol(v)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A finite, possibly empty, word over an alphabet.
///
/// A `Sequence` does not carry its alphabet; operations that care check the
/// entries against the alphabet they are given.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence(Vec<Symbol>);

impl Sequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        Sequence(Vec::with_capacity(n))
    }

    pub fn from_symbols(symbols: &[u32]) -> Self {
        Sequence(symbols.iter().copied().map(Symbol).collect())
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s)
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn to_u32s(&self) -> Vec<u32> {
        self.0.iter().map(|s| s.0).collect()
    }

    /// True if `self` occurs in `other` as a (not necessarily contiguous)
    /// subsequence.
    pub fn is_subsequence_of(&self, other: &Sequence) -> bool {
        let mut it = other.iter();
        self.iter().all(|s| it.any(|o| o == s))
    }
}

impl std::ops::Deref for Sequence {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Sequence {
    fn from(v: Vec<Symbol>) -> Self {
        Sequence(v)
    }
}

impl From<Vec<u32>> for Sequence {
    fn from(v: Vec<u32>) -> Self {
        Sequence(v.into_iter().map(Symbol).collect())
    }
}

impl FromIterator<Symbol> for Sequence {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Sequence(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Sequence {
    type Item = &'a Symbol;
    type IntoIter = std::slice::Iter<'a, Symbol>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Comma-separated decimal symbols; the empty sequence renders as "".
impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_alphabet_rejected() {
        assert_eq!(Alphabet::new(0), Err(Error::EmptyAlphabet));
    }

    #[test]
    fn validate_reports_first_bad_index() {
        let a = Alphabet::new(3).unwrap();
        let x = Sequence::from_symbols(&[1, 2, 3, 4]);
        assert_eq!(
            a.validate(&x),
            Err(Error::SymbolOutOfRange {
                symbol: 3,
                index: 2,
                q: 3
            })
        );
        assert!(a.validate(&Sequence::new()).is_ok());
    }

    #[test]
    fn subsequence_check() {
        let x = Sequence::from_symbols(&[0, 1, 2, 2, 2, 1, 0, 0, 1]);
        assert!(Sequence::from_symbols(&[0, 1, 1, 0, 0, 1]).is_subsequence_of(&x));
        assert!(Sequence::new().is_subsequence_of(&x));
        assert!(!Sequence::from_symbols(&[2, 2, 2, 2]).is_subsequence_of(&x));
    }

    #[test]
    fn display_is_comma_separated() {
        assert_eq!(Sequence::from_symbols(&[10, 0, 3]).to_string(), "10,0,3");
        assert_eq!(Sequence::new().to_string(), "");
    }
}

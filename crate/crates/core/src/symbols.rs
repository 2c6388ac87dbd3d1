//! Integer-coded alphabets, texts and patterns, the prev-encoding of a
//! pattern, and the parameterized-equivalence predicate.
//!
//! Symbols are unsigned codes `0..σ`. Positions are 0-based everywhere in
//! this crate except inside [`PrevEncoding`], whose entries are 1-based
//! positions so that the "no earlier occurrence" marker is the position
//! itself (`A[i] = i`).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A single symbol code.
pub type Symbol = u16;

/// Largest supported alphabet: every code fits in a [`Symbol`].
pub const MAX_ALPHABET: u32 = 1 << 16;

/// Alphabet of `size` symbol codes `0..size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    size: u32,
}

impl Alphabet {
    pub fn new(size: u32) -> Result<Self> {
        if size == 0 || size > MAX_ALPHABET {
            return Err(Error::invalid(format!(
                "alphabet size must be in 1..={MAX_ALPHABET}, got {size}"
            )));
        }
        Ok(Alphabet { size })
    }

    /// Upper-case Latin letters `A..=Z` as codes `0..26`.
    pub const LATIN: Alphabet = Alphabet { size: 26 };

    /// The four DNA bases.
    pub const DNA: Alphabet = Alphabet { size: 4 };

    pub fn size(self) -> u32 {
        self.size
    }

    pub fn contains(self, symbol: Symbol) -> bool {
        u32::from(symbol) < self.size
    }

    fn check(self, symbols: &[Symbol]) -> Result<()> {
        match symbols.iter().position(|&s| !self.contains(s)) {
            None => Ok(()),
            Some(at) => Err(Error::invalid(format!(
                "symbol {} at position {at} outside alphabet of size {}",
                symbols[at], self.size
            ))),
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ={}", self.size)
    }
}

/// Maps `A..=Z` (case-insensitive) to codes `0..26`.
pub fn letters(s: &str) -> Result<Vec<Symbol>> {
    s.bytes()
        .map(|b| match b.to_ascii_uppercase() {
            c @ b'A'..=b'Z' => Ok(Symbol::from(c - b'A')),
            _ => Err(Error::invalid(format!(
                "{:?} is not a Latin letter",
                b as char
            ))),
        })
        .collect()
}

/// Text to be searched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    alphabet: Alphabet,
    symbols: Vec<Symbol>,
}

impl Text {
    pub fn new(alphabet: Alphabet, symbols: Vec<Symbol>) -> Result<Self> {
        alphabet.check(&symbols)?;
        Ok(Text { alphabet, symbols })
    }

    /// Text over [`Alphabet::LATIN`].
    pub fn from_letters(s: &str) -> Result<Self> {
        Text::new(Alphabet::LATIN, letters(s)?)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    /// Copies `pattern` over `self[at..at + m]`.
    pub(crate) fn overwrite(&mut self, at: usize, pattern: &Pattern) {
        self.symbols[at..at + pattern.len()].copy_from_slice(pattern.symbols());
    }
}

/// Non-empty pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    alphabet: Alphabet,
    symbols: Vec<Symbol>,
}

impl Pattern {
    pub fn new(alphabet: Alphabet, symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::invalid("pattern must be non-empty"));
        }
        alphabet.check(&symbols)?;
        Ok(Pattern { alphabet, symbols })
    }

    /// Pattern over [`Alphabet::LATIN`].
    pub fn from_letters(s: &str) -> Result<Self> {
        Pattern::new(Alphabet::LATIN, letters(s)?)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always `false`; patterns are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The prev-encoding of a pattern.
///
/// Entry `i` (1-based) holds the largest `k < i` with `p_k = p_i`, or `i`
/// itself when `p_i` has no earlier occurrence. Two strings p-match exactly
/// when their prev-encodings are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrevEncoding {
    links: Vec<u32>,
}

impl PrevEncoding {
    /// Entry for the 1-based position `i`.
    ///
    /// # Panics
    ///
    /// If `i` is 0 or larger than the encoded length.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.links[i - 1] as usize
    }

    /// `true` when the symbol at 1-based position `i` occurs for the first time.
    #[inline]
    pub fn is_first(&self, i: usize) -> bool {
        self.at(i) == i
    }

    /// Distance back to the previous occurrence of the symbol at 1-based `i`.
    #[inline]
    pub fn distance(&self, i: usize) -> Option<usize> {
        let a = self.at(i);
        (a != i).then_some(i - a)
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    /// The raw 1-based entries.
    pub fn as_slice(&self) -> &[u32] {
        &self.links
    }
}

/// Builds the prev-encoding by a single left-to-right scan, keeping each
/// symbol's most recent position in an ordered map.
pub fn prev_encode(pattern: &Pattern) -> PrevEncoding {
    prev_encode_symbols(pattern.symbols())
}

pub(crate) fn prev_encode_symbols(symbols: &[Symbol]) -> PrevEncoding {
    let mut last: BTreeMap<Symbol, u32> = BTreeMap::new();
    let links = symbols
        .iter()
        .zip(1u32..)
        .map(|(&s, i)| last.insert(s, i).unwrap_or(i))
        .collect();
    PrevEncoding { links }
}

fn same_length(s1: &[Symbol], s2: &[Symbol]) -> Result<()> {
    if s1.len() != s2.len() {
        return Err(Error::invalid(format!(
            "strings must have equal length, got {} and {}",
            s1.len(),
            s2.len()
        )));
    }
    Ok(())
}

/// `true` iff `s1` and `s2` parameterize-match, decided by comparing
/// prev-encodings.
pub fn p_equivalent(s1: &[Symbol], s2: &[Symbol]) -> Result<bool> {
    same_length(s1, s2)?;
    Ok(prev_encode_symbols(s1) == prev_encode_symbols(s2))
}

/// `true` iff a bijection on symbols maps `s1` onto `s2`, decided by growing
/// a forward and a backward map side by side.
pub fn bijection_oracle(s1: &[Symbol], s2: &[Symbol]) -> Result<bool> {
    same_length(s1, s2)?;
    let mut forward: BTreeMap<Symbol, Symbol> = BTreeMap::new();
    let mut backward: BTreeMap<Symbol, Symbol> = BTreeMap::new();
    for (&x, &y) in s1.iter().zip(s2) {
        let fx = *forward.entry(x).or_insert(y);
        let by = *backward.entry(y).or_insert(x);
        if fx != y || by != x {
            return Ok(false);
        }
    }
    Ok(true)
}

//! Explicit input alphabets.
//!
//! The alphabet is always declared up front rather than inferred from a
//! pattern: the empty-set and unary cases need an unambiguous Σ, and words
//! are stored as sequences of symbol indices into it.

use std::fmt;
use std::str::FromStr;

/// Index of a symbol within its [`Alphabet`].
pub type SymbolId = usize;

/// A word over an alphabet, as symbol indices.
pub type Word = Vec<SymbolId>;

/// Characters with a fixed meaning in the regex syntax; they cannot be
/// alphabet symbols.
pub const RESERVED_CHARS: &[char] = &['|', '*', '(', ')', '{', '}', 'ε', '∅'];

/// An ordered set of distinct printable symbols, indexed 0..k−1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphabetError {
    Empty,
    DuplicateSymbol(char),
    ReservedSymbol(char),
    UnknownSymbol(char),
}

impl fmt::Display for AlphabetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphabetError::Empty => write!(f, "alphabet must contain at least one symbol"),
            AlphabetError::DuplicateSymbol(c) => write!(f, "duplicate alphabet symbol '{c}'"),
            AlphabetError::ReservedSymbol(c) => write!(f, "'{c}' is reserved and cannot be an alphabet symbol"),
            AlphabetError::UnknownSymbol(c) => write!(f, "symbol '{c}' is not in the alphabet"),
        }
    }
}

impl std::error::Error for AlphabetError {}

impl Alphabet {
    pub fn new(symbols: &[char]) -> Result<Self, AlphabetError> {
        if symbols.is_empty() {
            return Err(AlphabetError::Empty);
        }
        for (i, &c) in symbols.iter().enumerate() {
            if RESERVED_CHARS.contains(&c) || c.is_whitespace() || c.is_control() {
                return Err(AlphabetError::ReservedSymbol(c));
            }
            if symbols[..i].contains(&c) {
                return Err(AlphabetError::DuplicateSymbol(c));
            }
        }
        Ok(Alphabet { symbols: symbols.to_vec() })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least one symbol
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn index_of(&self, c: char) -> Option<SymbolId> {
        self.symbols.iter().position(|&s| s == c)
    }

    /// The character for a symbol id. Panics if the id is out of range.
    pub fn symbol(&self, id: SymbolId) -> char {
        self.symbols[id]
    }

    pub fn word_from_str(&self, s: &str) -> Result<Word, AlphabetError> {
        s.chars()
            .map(|c| self.index_of(c).ok_or(AlphabetError::UnknownSymbol(c)))
            .collect()
    }

    pub fn word_to_string(&self, word: &[SymbolId]) -> String {
        word.iter().map(|&id| self.symbol(id)).collect()
    }
}

impl FromStr for Alphabet {
    type Err = AlphabetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = s.chars().collect();
        Alphabet::new(&chars)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.symbols {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

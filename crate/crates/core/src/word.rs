//! Finite words over a small integer alphabet.

use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest alphabet that still renders as one ASCII character per letter
/// (`0-9` followed by `a-z`).
pub const MAX_ASCII_ALPHABET: usize = 36;

/// A letter, stored as its 0-based index in the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Symbol(pub u8);

impl Symbol {
    pub const ZERO: Symbol = Symbol(0);
    pub const ONE: Symbol = Symbol(1);

    pub fn value(self) -> u8 {
        self.0
    }

    /// ASCII rendering: digits for values below ten, then lowercase letters.
    pub fn to_ascii(self) -> Option<char> {
        char::from_digit(u32::from(self.0), MAX_ASCII_ALPHABET as u32)
    }
}

impl From<u8> for Symbol {
    fn from(v: u8) -> Self {
        Symbol(v)
    }
}

/// A finite word. Symbols are stored as raw bytes so that block comparisons
/// reduce to slice equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet_size: usize,
}

impl Word {
    /// Builds a word, checking every symbol against the alphabet.
    pub fn new(symbols: Vec<u8>, alphabet_size: usize) -> Result<Self> {
        if alphabet_size == 0 || alphabet_size > 256 {
            return Err(Error::InvalidParameter(format!(
                "alphabet size must be in 1..=256, got {alphabet_size}"
            )));
        }
        if let Some(pos) = symbols.iter().position(|&s| usize::from(s) >= alphabet_size) {
            return Err(Error::InvalidParameter(format!(
                "symbol {} at index {pos} outside alphabet of size {alphabet_size}",
                symbols[pos]
            )));
        }
        Ok(Word {
            symbols,
            alphabet_size,
        })
    }

    /// Builds a word whose alphabet is the smallest one containing every symbol.
    pub fn from_symbols(symbols: Vec<u8>) -> Self {
        let alphabet_size = symbols.iter().max().map_or(1, |&m| usize::from(m) + 1);
        Word {
            symbols,
            alphabet_size,
        }
    }

    pub fn empty(alphabet_size: usize) -> Self {
        Word {
            symbols: Vec::new(),
            alphabet_size: alphabet_size.max(1),
        }
    }

    /// Parses an ASCII literal.
    ///
    /// A literal made only of lowercase letters maps `a` to 0, `b` to 1 and so
    /// on, so that `aabaaabbbaba` reads as a binary word. Anything else is read
    /// as base-36 digits (`0-9`, then `a-z`).
    pub fn parse_ascii(text: &str) -> Result<Self> {
        let letters_only = !text.is_empty() && text.bytes().all(|b| b.is_ascii_lowercase());
        let mut symbols = Vec::with_capacity(text.len());
        for (i, c) in text.chars().enumerate() {
            let v = if letters_only {
                Some(c as u32 - 'a' as u32)
            } else {
                c.to_digit(MAX_ASCII_ALPHABET as u32)
            };
            match v {
                Some(v) => symbols.push(v as u8),
                None => {
                    return Err(Error::Parse(format!(
                        "invalid letter {c:?} at index {i} in {text:?}"
                    )))
                }
            }
        }
        Ok(Word::from_symbols(symbols))
    }

    /// Widens the alphabet; never shrinks it below what the symbols need.
    pub fn with_alphabet(mut self, alphabet_size: usize) -> Result<Self> {
        if alphabet_size < self.alphabet_size {
            return Word::new(self.symbols, alphabet_size);
        }
        self.alphabet_size = alphabet_size;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.symbols
    }

    /// 0-based access.
    pub fn get(&self, index: usize) -> Option<Symbol> {
        self.symbols.get(index).copied().map(Symbol)
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.symbols.iter().copied().map(Symbol)
    }

    /// The factor `[start, end)` in 0-based half-open coordinates.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word {
            symbols: self.symbols[start..end].to_vec(),
            alphabet_size: self.alphabet_size,
        }
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0, len)
    }

    pub fn is_prefix_of(&self, other: &[u8]) -> bool {
        other.starts_with(&self.symbols)
    }

    /// `self` repeated `times` times.
    pub fn pow(&self, times: usize) -> Word {
        Word {
            symbols: self.symbols.repeat(times),
            alphabet_size: self.alphabet_size,
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Word {
            symbols,
            alphabet_size: self.alphabet_size.max(other.alphabet_size),
        }
    }

    /// 0-based start of the first occurrence of `needle` as a factor.
    pub fn find(&self, needle: &[u8]) -> Option<usize> {
        if needle.is_empty() {
            return Some(0);
        }
        self.symbols.windows(needle.len()).position(|w| w == needle)
    }

    fn renders_as_ascii(&self) -> bool {
        self.alphabet_size <= MAX_ASCII_ALPHABET
    }

    /// ASCII rendering, or `None` when the alphabet is too large for one
    /// character per letter.
    pub fn to_ascii(&self) -> Option<String> {
        if !self.renders_as_ascii() {
            return None;
        }
        self.symbols().map(Symbol::to_ascii).collect()
    }
}

impl AsRef<[u8]> for Word {
    fn as_ref(&self) -> &[u8] {
        &self.symbols
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_ascii() {
            Some(s) => f.write_str(&s),
            None => write!(f, "{:?}", self.symbols),
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self}, alphabet={})", self.alphabet_size)
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse_ascii(s)
    }
}

// Words up to base 10 serialize as digit strings, larger alphabets as arrays.
impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.symbols.iter().all(|&s| s < 10) {
            let text: String = self.symbols.iter().map(|&s| char::from(b'0' + s)).collect();
            serializer.serialize_str(&text)
        } else {
            let mut seq = serializer.serialize_seq(Some(self.symbols.len()))?;
            for s in &self.symbols {
                seq.serialize_element(s)?;
            }
            seq.end()
        }
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct WordVisitor;

        impl<'de> Visitor<'de> for WordVisitor {
            type Value = Word;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a digit string or an array of small integers")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Word, E> {
                let symbols = v
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as u8))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| E::custom(format!("not a digit string: {v:?}")))?;
                Ok(Word::from_symbols(symbols))
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Word, A::Error> {
                let mut symbols = Vec::new();
                while let Some(s) = seq.next_element::<u8>()? {
                    symbols.push(s);
                }
                Ok(Word::from_symbols(symbols))
            }
        }

        deserializer.deserialize_any(WordVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_letters_and_digits() {
        let w = Word::parse_ascii("aabaaabbbaba").unwrap();
        assert_eq!(w.alphabet_size(), 2);
        assert_eq!(w.as_bytes()[..4], [0, 0, 1, 0]);
        assert_eq!(w.to_string(), "001000111010");

        let t = Word::parse_ascii("0120").unwrap();
        assert_eq!(t.alphabet_size(), 3);
        assert_eq!(t.to_string(), "0120");
        assert!(Word::parse_ascii("01?").is_err());
    }

    #[test]
    fn empty_word_is_valid() {
        let e = Word::parse_ascii("").unwrap();
        assert!(e.is_empty());
        assert_eq!(e.to_string(), "");
    }

    #[test]
    fn alphabet_is_enforced() {
        assert!(Word::new(vec![0, 1, 2], 2).is_err());
        assert!(Word::new(vec![0, 1, 1], 2).is_ok());
        assert!(Word::from_symbols(vec![0, 2]).with_alphabet(2).is_err());
    }

    #[test]
    fn serde_forms() {
        let w = Word::parse_ascii("0110").unwrap();
        assert_eq!(serde_json::to_string(&w).unwrap(), "\"0110\"");
        let big = Word::new(vec![0, 11, 3], 12).unwrap();
        assert_eq!(serde_json::to_string(&big).unwrap(), "[0,11,3]");
        let back: Word = serde_json::from_str("[0,11,3]").unwrap();
        assert_eq!(back.as_bytes(), big.as_bytes());
        let back: Word = serde_json::from_str("\"0110\"").unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn large_alphabet_renders_letters() {
        let w = Word::new(vec![0, 10, 35], 36).unwrap();
        assert_eq!(w.to_string(), "0az");
    }
}

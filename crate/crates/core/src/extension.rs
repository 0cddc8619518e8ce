//! Right-extension search: can a finite word be continued without creating a
//! k-anti-power?

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hash::PrefixHash;
use crate::power::{blocks_all_equal, blocks_distinct};
use crate::scan::first_anti_power_factor;
use crate::word::Word;

/// A word that grows and shrinks at its right end, with hashes kept in step.
#[derive(Debug, Clone)]
pub(crate) struct GrowingWord {
    symbols: Vec<u8>,
    hasher: PrefixHash,
}

impl GrowingWord {
    pub(crate) fn new(seed: &[u8]) -> Self {
        GrowingWord {
            symbols: seed.to_vec(),
            hasher: PrefixHash::new(seed),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.symbols.len()
    }

    pub(crate) fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub(crate) fn push(&mut self, s: u8) {
        self.symbols.push(s);
        self.hasher.push(s);
    }

    pub(crate) fn pop(&mut self) {
        self.symbols.pop();
        self.hasher.pop();
    }

    /// Some suffix is a k-anti-power.
    pub(crate) fn suffix_anti_power(&self, k: usize) -> bool {
        let n = self.len();
        (1..=n / k).any(|len| blocks_distinct(&self.symbols, &self.hasher, n - k * len, len, k))
    }

    /// Some suffix is an `l`-power with non-empty root.
    pub(crate) fn suffix_power(&self, l: usize) -> bool {
        let n = self.len();
        (1..=n / l).any(|len| blocks_all_equal(&self.symbols, &self.hasher, n - l * len, len, l))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "depth", rename_all = "snake_case")]
pub enum ExtensionOutcome {
    /// Every extension by `depth` letters contains a k-anti-power, and
    /// `depth` is the least such number.
    Exhausted(usize),
    /// Some extension by `depth_cap` letters avoids k-anti-powers.
    Open(usize),
}

/// Depth-first search over right-extensions of `w`.
///
/// A branch is cut as soon as a suffix ending at its newest letter is a
/// k-anti-power; anti-powers inside `w` itself are detected once up front
/// and give `Exhausted(0)`.
pub fn max_avoiding_extension(
    w: &Word,
    k: usize,
    alphabet_size: usize,
    depth_cap: usize,
) -> Result<ExtensionOutcome> {
    if k < 2 || alphabet_size < 2 {
        return Err(Error::InvalidParameter(format!(
            "need k >= 2 and alphabet size >= 2, got k = {k}, alphabet = {alphabet_size}"
        )));
    }
    if alphabet_size > 256 || w.symbols().any(|s| usize::from(s.0) >= alphabet_size) {
        return Err(Error::InvalidParameter(format!(
            "word {w} does not fit an alphabet of size {alphabet_size}"
        )));
    }
    if first_anti_power_factor(w, k).is_some() {
        return Ok(ExtensionOutcome::Exhausted(0));
    }
    if depth_cap == 0 {
        return Ok(ExtensionOutcome::Open(0));
    }

    let mut word = GrowingWord::new(w.as_bytes());
    let base = word.len();
    // deepest number of appended letters reached without an anti-power
    let mut deepest = 0;
    // stack of next letter to try at each depth
    let mut next: Vec<usize> = vec![0];
    while let Some(letter) = next.last_mut() {
        if *letter == alphabet_size {
            next.pop();
            if word.len() > base {
                word.pop();
            }
            continue;
        }
        let s = *letter as u8;
        *letter += 1;
        word.push(s);
        if word.suffix_anti_power(k) {
            word.pop();
            continue;
        }
        let depth = word.len() - base;
        deepest = deepest.max(depth);
        if depth == depth_cap {
            return Ok(ExtensionOutcome::Open(depth_cap));
        }
        next.push(0);
    }
    Ok(ExtensionOutcome::Exhausted(deepest + 1))
}

//! Powers and anti-powers of finite words.
//!
//! A word is a k-power when it splits into k equal blocks, and a k-anti-power
//! when it splits into k pairwise distinct blocks of the same length.

use crate::hash::{HashPair, PrefixHash};
use crate::word::Word;

/// A word cut into `k` consecutive blocks of equal length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockFactorization {
    source: Word,
    k: usize,
    block_length: usize,
}

impl BlockFactorization {
    /// `None` when `k == 0` or `k` does not divide the length.
    pub fn new(source: Word, k: usize) -> Option<Self> {
        if k == 0 || source.len() % k != 0 {
            return None;
        }
        let block_length = source.len() / k;
        Some(BlockFactorization {
            source,
            k,
            block_length,
        })
    }

    pub fn source(&self) -> &Word {
        &self.source
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn block_length(&self) -> usize {
        self.block_length
    }

    pub fn block(&self, j: usize) -> &[u8] {
        let start = j * self.block_length;
        &self.source.as_bytes()[start..start + self.block_length]
    }

    pub fn blocks(&self) -> impl Iterator<Item = &[u8]> + '_ {
        (0..self.k).map(move |j| self.block(j))
    }

    pub fn is_power(&self) -> bool {
        let first = self.block(0);
        self.blocks().all(|b| b == first)
    }

    pub fn is_anti_power(&self) -> bool {
        if self.source.is_empty() {
            return false;
        }
        if self.k <= PAIRWISE_LIMIT {
            return (1..self.k).all(|j| (0..j).all(|i| self.block(i) != self.block(j)));
        }
        let hasher = PrefixHash::new(self.source.as_bytes());
        blocks_distinct(
            self.source.as_bytes(),
            &hasher,
            0,
            self.block_length,
            self.k,
        )
    }
}

/// Whether `w` is a concatenation of `k` identical blocks. The empty word is
/// a k-power for every `k`.
///
/// # Panics
/// If `k == 0`.
pub fn is_k_power(w: &Word, k: usize) -> bool {
    assert!(k >= 1, "order must be at least 1");
    BlockFactorization::new(w.clone(), k).is_some_and(|f| f.is_power())
}

/// Whether `w` is non-empty and a concatenation of `k` pairwise distinct
/// blocks of equal length.
///
/// # Panics
/// If `k == 0`.
pub fn is_k_anti_power(w: &Word, k: usize) -> bool {
    assert!(k >= 1, "order must be at least 1");
    !w.is_empty() && BlockFactorization::new(w.clone(), k).is_some_and(|f| f.is_anti_power())
}

/// Exact equality of two factors of length `len`, filtered by hash.
#[inline]
pub(crate) fn blocks_equal(symbols: &[u8], hasher: &PrefixHash, a: usize, b: usize, len: usize) -> bool {
    hasher.block(a, len) == hasher.block(b, len) && symbols[a..a + len] == symbols[b..b + len]
}

const PAIRWISE_LIMIT: usize = 16;

/// Whether the `k` consecutive blocks of length `len` starting at `start`
/// are pairwise distinct. Equal hashes are always confirmed symbol by symbol.
pub(crate) fn blocks_distinct(
    symbols: &[u8],
    hasher: &PrefixHash,
    start: usize,
    len: usize,
    k: usize,
) -> bool {
    if k <= PAIRWISE_LIMIT {
        let mut hashes = [HashPair(0, 0); PAIRWISE_LIMIT];
        for j in 0..k {
            let pos = start + j * len;
            let h = hasher.block(pos, len);
            for i in 0..j {
                if hashes[i] == h {
                    let other = start + i * len;
                    if symbols[other..other + len] == symbols[pos..pos + len] {
                        return false;
                    }
                }
            }
            hashes[j] = h;
        }
        return true;
    }

    let mut keyed: Vec<(HashPair, usize)> = (0..k)
        .map(|j| {
            let pos = start + j * len;
            (hasher.block(pos, len), pos)
        })
        .collect();
    keyed.sort_unstable();
    let mut run_start = 0;
    for idx in 1..=keyed.len() {
        if idx == keyed.len() || keyed[idx].0 != keyed[run_start].0 {
            let run = &keyed[run_start..idx];
            for (a, &(_, pa)) in run.iter().enumerate() {
                for &(_, pb) in &run[a + 1..] {
                    if symbols[pa..pa + len] == symbols[pb..pb + len] {
                        return false;
                    }
                }
            }
            run_start = idx;
        }
    }
    true
}

/// Whether the `k` consecutive blocks of length `len` starting at `start`
/// are all equal.
pub(crate) fn blocks_all_equal(
    symbols: &[u8],
    hasher: &PrefixHash,
    start: usize,
    len: usize,
    k: usize,
) -> bool {
    (1..k).all(|j| blocks_equal(symbols, hasher, start, start + j * len, len))
}

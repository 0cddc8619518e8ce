//! Searches for power and anti-power factors.
//!
//! Factors are reported in `(block_length, position)` order, smallest first.
//! Different block lengths are scanned in parallel; the reduction keeps the
//! smallest block length, so the result matches a sequential scan.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hash::PrefixHash;
use crate::infinite::InfiniteWord;
use crate::power::{blocks_all_equal, blocks_distinct};
use crate::word::Word;

/// A factor made of `order` blocks of `block_length` symbols, starting at the
/// 1-based `position`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BlockFactor {
    pub position: usize,
    pub block_length: usize,
}

#[derive(Clone, Copy)]
enum Pattern {
    Power,
    AntiPower,
}

fn first_factor(symbols: &[u8], order: usize, pattern: Pattern) -> Option<BlockFactor> {
    if order == 0 || symbols.is_empty() {
        return None;
    }
    let hasher = PrefixHash::new(symbols);
    let n = symbols.len();
    (1..=n / order).into_par_iter().find_map_first(|len| {
        let span = order * len;
        (0..=n - span)
            .find(|&start| match pattern {
                Pattern::Power => blocks_all_equal(symbols, &hasher, start, len, order),
                Pattern::AntiPower => blocks_distinct(symbols, &hasher, start, len, order),
            })
            .map(|start| BlockFactor {
                position: start + 1,
                block_length: len,
            })
    })
}

/// First k-anti-power factor of a finite word.
pub fn first_anti_power_factor(w: &Word, k: usize) -> Option<BlockFactor> {
    first_factor(w.as_bytes(), k, Pattern::AntiPower)
}

/// First `l`-power factor with a non-empty root.
pub fn first_power_factor(w: &Word, l: usize) -> Option<BlockFactor> {
    first_factor(w.as_bytes(), l, Pattern::Power)
}

/// First k-anti-power among the factors of `x_1 .. x_max_prefix`.
pub fn find_anti_power_factor(
    x: &InfiniteWord,
    k: usize,
    max_prefix: usize,
) -> Result<Option<BlockFactor>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("order must be at least 2, got {k}")));
    }
    let prefix = x.prefix(max_prefix)?;
    Ok(first_anti_power_factor(&prefix, k))
}

/// Least block length `ℓ <= limit` such that `x_pos .. x_{pos+kℓ-1}` is a
/// k-anti-power. `None` at the limit says nothing about larger lengths.
pub fn anti_power_at_position(
    x: &InfiniteWord,
    k: usize,
    pos: usize,
    limit: usize,
) -> Result<Option<usize>> {
    if k == 0 || pos == 0 {
        return Err(Error::InvalidParameter(
            "order and position must be at least 1".into(),
        ));
    }
    let offset = pos - 1;
    let mut done = 0;
    let mut horizon = limit.min(16);
    while done < limit {
        let len = k
            .checked_mul(horizon)
            .and_then(|s| s.checked_add(offset))
            .ok_or(Error::CapExceeded {
                requested: usize::MAX,
                cap: x.cap(),
            })?;
        let symbols = x.prefix(len)?.into_bytes();
        let hasher = PrefixHash::new(&symbols);
        if let Some(l) =
            (done + 1..=horizon).find(|&l| blocks_distinct(&symbols, &hasher, offset, l, k))
        {
            return Ok(Some(l));
        }
        done = horizon;
        horizon = horizon.saturating_mul(2).min(limit);
    }
    Ok(None)
}

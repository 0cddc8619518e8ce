//! Constructive power extraction.
//!
//! If `C(k,2) + 1` consecutive block lengths `m, …, m + C(k,2)` all miss
//! `AP(x,k)`, each of them has two equal blocks among the first `k` blocks of
//! that length. Two radii `r < s` then share the same equal pair `(i, j)`,
//! and the factors
//!
//! ```text
//! w = x[is+1 ..= (i+1)r]      v = x[js+1 ..= (j+1)r]
//! ```
//!
//! satisfy: `v` is a border of `w`, and `u` with `w = uv` has
//! `|u| = (j-i)(s-r) <= M = (k-1)C(k,2)`. Taking `m > N = (l+1)M` makes `w`
//! long enough that `u^l` is a prefix of `w`.
//!
//! When no such run of block lengths exists up to the budget, the anti-power
//! prefixes met along the way are reported instead.

use serde::Serialize;

use crate::border::root_power_from_border;
use crate::error::{Error, Result};
use crate::hash::PrefixHash;
use crate::infinite::InfiniteWord;
use crate::power::{blocks_distinct, blocks_equal, is_k_anti_power};
use crate::word::Word;

/// Default upper bound on the block length `m` scanned by the extractor.
pub const DEFAULT_WITNESS_BUDGET: usize = 100_000;

pub fn binomial2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// The first `k` blocks `U(j, r) = x[jr+1 ..= (j+1)r]` of every length `r` in
/// `[m, m + C(k,2)]`, over a materialized prefix.
#[derive(Debug, Clone)]
pub struct BlockGrid {
    k: usize,
    m: usize,
    symbols: Vec<u8>,
    hasher: PrefixHash,
}

impl BlockGrid {
    pub fn new(x: &InfiniteWord, k: usize, m: usize) -> Result<Self> {
        let last = m + binomial2(k);
        let symbols = x.prefix(k * last)?.into_bytes();
        let hasher = PrefixHash::new(&symbols);
        Ok(BlockGrid {
            k,
            m,
            symbols,
            hasher,
        })
    }

    pub fn radii(&self) -> std::ops::RangeInclusive<usize> {
        self.m..=self.m + binomial2(self.k)
    }

    /// `U(j, r)`.
    pub fn block(&self, j: usize, r: usize) -> &[u8] {
        &self.symbols[j * r..(j + 1) * r]
    }

    /// Least pair `i < j` (lexicographically) with `U(i,r) = U(j,r)`.
    pub fn equal_pair(&self, r: usize) -> Option<(usize, usize)> {
        (0..self.k).find_map(|i| {
            (i + 1..self.k)
                .find(|&j| blocks_equal(&self.symbols, &self.hasher, i * r, j * r, r))
                .map(|j| (i, j))
        })
    }
}

/// A certified occurrence of `u^l` in `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessEvidence {
    pub u: Word,
    pub l: usize,
    pub k: usize,
    /// `(k-1) * C(k,2)`
    #[serde(rename = "M")]
    pub max_root_len: usize,
    pub r: usize,
    pub s: usize,
    pub i: usize,
    pub j: usize,
    /// 1-based start of `u^l` in `x`.
    pub position: usize,
    #[serde(skip)]
    pub m: usize,
}

impl WitnessEvidence {
    /// Re-checks every claim against `x` by reading symbols directly.
    pub fn verify(&self, x: &InfiniteWord) -> Result<bool> {
        let c = binomial2(self.k);
        let (i, j, r, s) = (self.i, self.j, self.r, self.s);
        let shape = !self.u.is_empty()
            && self.u.len() <= self.max_root_len
            && self.max_root_len == (self.k - 1) * c
            && self.m <= r
            && r < s
            && s <= self.m + c
            && i < j
            && j < self.k;
        if !shape {
            return Ok(false);
        }
        let end = (self.position - 1 + self.l * self.u.len()).max(self.k * s);
        let prefix = x.prefix(end)?;
        let p = prefix.as_bytes();
        let block = |j: usize, r: usize| &p[j * r..(j + 1) * r];
        let power = self.u.pow(self.l);
        let start = self.position - 1;
        Ok(block(i, r) == block(j, r)
            && block(i, s) == block(j, s)
            && &p[start..start + power.len()] == power.as_bytes())
    }
}

/// The other branch: every run of `C(k,2) + 1` block lengths in the scanned
/// range contains a member of `AP(x,k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntiPowerReport {
    pub k: usize,
    pub l: usize,
    /// Inclusive range of block lengths scanned.
    pub scanned: (usize, usize),
    /// Members of `AP(x,k)` in the scanned range.
    pub members: Vec<usize>,
}

impl AntiPowerReport {
    /// Re-checks each reported prefix with the detector and checks the
    /// members leave no gap of `C(k,2) + 1` block lengths in the range.
    pub fn verify(&self, x: &InfiniteWord) -> Result<bool> {
        let gap = binomial2(self.k) + 1;
        let longest = match self.members.last() {
            Some(&m) if m <= self.scanned.1 => x.prefix(self.k * m)?,
            _ => return Ok(false),
        };
        let mut last = self.scanned.0 - 1;
        for &m in &self.members {
            if m < self.scanned.0 || m > self.scanned.1 || m - last > gap {
                return Ok(false);
            }
            if !is_k_anti_power(&longest.prefix(self.k * m), self.k) {
                return Ok(false);
            }
            last = m;
        }
        Ok(!self.members.is_empty() && self.scanned.1 - last < gap)
    }
}

/// Which side of the power / anti-power dichotomy was certified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum Dichotomy {
    Power(WitnessEvidence),
    AntiPower(AntiPowerReport),
}

impl Dichotomy {
    pub fn verify(&self, x: &InfiniteWord) -> Result<bool> {
        match self {
            Dichotomy::Power(e) => e.verify(x),
            Dichotomy::AntiPower(r) => r.verify(x),
        }
    }
}

/// Finds `u` with `1 <= |u| <= (k-1)C(k,2)` and `u^l` a factor of `x`, or
/// reports the k-anti-power prefixes that block the construction.
///
/// Block lengths `m` are scanned upward from `(l+1)(k-1)C(k,2) + 1` while
/// `m <= budget`.
pub fn extract_power_witness(
    x: &InfiniteWord,
    k: usize,
    l: usize,
    budget: usize,
) -> Result<Dichotomy> {
    if k < 2 || l < 1 {
        return Err(Error::InvalidParameter(format!(
            "need k >= 2 and l >= 1, got k = {k}, l = {l}"
        )));
    }
    let c = binomial2(k);
    let max_root_len = (k - 1) * c;
    let floor = (l + 1) * max_root_len;
    let first = floor + 1;
    if budget < first {
        return Err(Error::BudgetExhausted { budget });
    }
    let last = budget + c;

    // scan AP membership over [first, last] in doubling stages
    let mut members = Vec::new();
    let mut run = 0;
    let mut scanned = first - 1;
    let mut horizon = (first + 4 * (c + 1)).min(last);
    let window = loop {
        let symbols = x.prefix(k * horizon)?.into_bytes();
        let hasher = PrefixHash::new(&symbols);
        let mut found = None;
        for m in scanned + 1..=horizon {
            if blocks_distinct(&symbols, &hasher, 0, m, k) {
                members.push(m);
                run = 0;
            } else {
                run += 1;
                if run == c + 1 {
                    found = Some(m - c);
                    break;
                }
            }
        }
        if found.is_some() || horizon == last {
            break found;
        }
        scanned = horizon;
        horizon = (horizon * 2).min(last);
    };

    let Some(m) = window else {
        return Ok(Dichotomy::AntiPower(AntiPowerReport {
            k,
            l,
            scanned: (first, last),
            members,
        }));
    };

    let grid = BlockGrid::new(x, k, m)?;
    let mut seen: Vec<Option<usize>> = vec![None; k * k];
    let mut hit = None;
    for r in grid.radii() {
        let (i, j) = grid
            .equal_pair(r)
            .expect("block length outside AP(x,k) has an equal pair");
        match seen[i * k + j] {
            Some(earlier) => {
                hit = Some((i, j, earlier, r));
                break;
            }
            None => seen[i * k + j] = Some(r),
        }
    }
    let (i, j, r, s) = hit.expect("C(k,2)+1 radii share an equal pair");

    assert!((i + 1) * r > i * s + 1, "w must be non-empty");
    assert!((j + 1) * r > j * s + 1, "v must be non-empty");
    let w_start = i * s;
    let w_end = (i + 1) * r;
    let v_len = (j + 1) * r - j * s;
    let w = Word::new(grid.symbols[w_start..w_end].to_vec(), x.alphabet_size())?;
    let u = root_power_from_border(&w, v_len, l)?
        .expect("m > (l+1)M makes w long enough for u^l");

    let evidence = WitnessEvidence {
        u,
        l,
        k,
        max_root_len,
        r,
        s,
        i,
        j,
        position: w_start + 1,
        m,
    };
    assert!(evidence.verify(x)?, "witness failed re-verification");
    Ok(Dichotomy::Power(evidence))
}

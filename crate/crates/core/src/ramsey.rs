//! Exhaustive computation of `N(l,k)`: the least `N` such that every word of
//! length `N` contains an `l`-power or a k-anti-power.
//!
//! Words are grown one letter at a time. A node dies when a suffix ending at
//! its last letter is an `l`-power or a k-anti-power. Letter renaming is
//! factored out by requiring first occurrences to appear in increasing order,
//! so every word starts with 0.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extension::GrowingWord;
use crate::naive;
use crate::word::Word;

pub const DEFAULT_LENGTH_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchParams {
    pub l: usize,
    pub k: usize,
    pub alphabet_size: usize,
    pub length_cap: usize,
    /// Subtrees rooted at this depth are searched concurrently; 0 keeps the
    /// search sequential.
    pub parallel_depth: usize,
}

impl SearchParams {
    pub fn new(l: usize, k: usize) -> Self {
        SearchParams {
            l,
            k,
            alphabet_size: 2,
            length_cap: DEFAULT_LENGTH_CAP,
            parallel_depth: 0,
        }
    }

    pub fn alphabet(mut self, alphabet_size: usize) -> Self {
        self.alphabet_size = alphabet_size;
        self
    }

    pub fn length_cap(mut self, cap: usize) -> Self {
        self.length_cap = cap;
        self
    }

    pub fn parallel_depth(mut self, depth: usize) -> Self {
        self.parallel_depth = depth;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.l < 2 || self.k < 2 {
            return Err(Error::InvalidParameter(format!(
                "need l >= 2 and k >= 2, got l = {}, k = {}",
                self.l, self.k
            )));
        }
        if !(2..=256).contains(&self.alphabet_size) {
            return Err(Error::InvalidParameter(format!(
                "alphabet size must be in 2..=256, got {}",
                self.alphabet_size
            )));
        }
        if self.length_cap == 0 {
            return Err(Error::InvalidParameter("length cap must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    /// `N(l,k)` exactly.
    Exact(usize),
    /// A word of this length avoids both patterns, so `N(l,k)` exceeds it.
    LowerBoundOnly(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub l: usize,
    pub k: usize,
    pub alphabet_size: usize,
    pub status: SearchStatus,
    /// Lexicographically least among the longest avoiding words found.
    pub max_avoiding_word: Word,
    pub nodes_explored: u64,
}

impl SearchOutcome {
    /// Checks the witness with the naive oracle, plus the length relation
    /// implied by the status.
    pub fn verify(&self) -> bool {
        let w = self.max_avoiding_word.as_bytes();
        let length_ok = match self.status {
            SearchStatus::Exact(n) => w.len() + 1 == n,
            SearchStatus::LowerBoundOnly(n) => w.len() >= n,
        };
        length_ok && !naive::contains_power(w, self.l) && !naive::contains_anti_power(w, self.k)
    }
}

#[derive(Serialize)]
struct OutcomeJson<'a> {
    l: usize,
    k: usize,
    alphabet_size: usize,
    status: &'static str,
    #[serde(rename = "N_or_bound")]
    n_or_bound: usize,
    witness: &'a Word,
    nodes_explored: u64,
}

impl Serialize for SearchOutcome {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (status, n_or_bound) = match self.status {
            SearchStatus::Exact(n) => ("exact", n),
            SearchStatus::LowerBoundOnly(n) => ("lower_bound_only", n),
        };
        OutcomeJson {
            l: self.l,
            k: self.k,
            alphabet_size: self.alphabet_size,
            status,
            n_or_bound,
            witness: &self.max_avoiding_word,
            nodes_explored: self.nodes_explored,
        }
        .serialize(serializer)
    }
}

#[derive(Debug, Clone)]
struct SubtreeResult {
    best: Vec<u8>,
    hit_cap: bool,
    nodes: u64,
}

impl SubtreeResult {
    /// Longer wins; ties go to the lexicographically smaller word.
    fn better(self, other: SubtreeResult) -> SubtreeResult {
        let nodes = self.nodes + other.nodes;
        let self_wins = self.best.len() > other.best.len()
            || (self.best.len() == other.best.len() && self.best <= other.best);
        let mut winner = if self_wins { self } else { other };
        winner.nodes = nodes;
        winner
    }
}

struct Search<'a> {
    params: &'a SearchParams,
}

impl Search<'_> {
    fn dies(&self, word: &GrowingWord) -> bool {
        word.suffix_power(self.params.l) || word.suffix_anti_power(self.params.k)
    }

    /// Letters allowed after `symbols` under the canonical-form rule.
    fn letter_bound(&self, symbols: &[u8]) -> usize {
        let used = symbols.iter().max().map_or(0, |&m| usize::from(m) + 1);
        (used + 1).min(self.params.alphabet_size)
    }

    /// Alive canonical words of length exactly `depth` (or shorter dead-end
    /// leaves when nothing reaches that depth), in lexicographic order.
    fn frontier(&self, depth: usize) -> (Vec<Vec<u8>>, SubtreeResult) {
        let mut word = GrowingWord::new(&[]);
        let mut roots = Vec::new();
        let mut acc = SubtreeResult {
            best: Vec::new(),
            hit_cap: false,
            nodes: 0,
        };
        self.collect(&mut word, depth, &mut roots, &mut acc);
        (roots, acc)
    }

    fn collect(
        &self,
        word: &mut GrowingWord,
        depth: usize,
        roots: &mut Vec<Vec<u8>>,
        acc: &mut SubtreeResult,
    ) {
        if word.len() == depth {
            roots.push(word.symbols().to_vec());
            return;
        }
        for s in 0..self.letter_bound(word.symbols()) {
            word.push(s as u8);
            acc.nodes += 1;
            if !self.dies(word) {
                if word.len() > acc.best.len() {
                    acc.best = word.symbols().to_vec();
                }
                if word.len() == self.params.length_cap {
                    acc.hit_cap = true;
                    word.pop();
                    return;
                }
                self.collect(word, depth, roots, acc);
                if acc.hit_cap {
                    word.pop();
                    return;
                }
            }
            word.pop();
        }
    }

    /// Searches below `root` (already known to be alive), stopping at the
    /// first word of length `length_cap`. `cancelled` is polled between nodes.
    fn subtree(&self, root: &[u8], cancelled: &dyn Fn() -> bool) -> SubtreeResult {
        let cap = self.params.length_cap;
        let mut word = GrowingWord::new(root);
        let mut result = SubtreeResult {
            best: root.to_vec(),
            hit_cap: root.len() >= cap,
            nodes: 0,
        };
        if result.hit_cap {
            return result;
        }
        let base = root.len();
        // next letter to try and the bound for it, per depth below root
        let mut stack: Vec<(usize, usize)> = vec![(0, self.letter_bound(word.symbols()))];
        while let Some((next, bound)) = stack.last_mut() {
            if *next == *bound {
                stack.pop();
                if word.len() > base {
                    word.pop();
                }
                continue;
            }
            let s = *next as u8;
            *next += 1;
            word.push(s);
            result.nodes += 1;
            if self.dies(&word) {
                word.pop();
                continue;
            }
            if word.len() > result.best.len() {
                result.best = word.symbols().to_vec();
            }
            if word.len() == cap {
                result.hit_cap = true;
                return result;
            }
            if result.nodes % 4096 == 0 && cancelled() {
                return result;
            }
            stack.push((0, self.letter_bound(word.symbols())));
        }
        result
    }
}

/// Computes `N(l,k)` over the given alphabet, or a lower bound when some
/// avoiding word reaches `length_cap`.
pub fn compute_n(params: &SearchParams) -> Result<SearchOutcome> {
    params.validate()?;
    let search = Search { params };
    let split = params.parallel_depth.min(params.length_cap);
    let (roots, head) = search.frontier(split);

    let result = if head.hit_cap {
        head
    } else {
        // lowest root index whose subtree reached the cap
        let first_cap_hit = AtomicUsize::new(usize::MAX);
        let results: Vec<SubtreeResult> = roots
            .par_iter()
            .enumerate()
            .map(|(idx, root)| {
                let cancelled = || first_cap_hit.load(Ordering::Relaxed) < idx;
                let r = search.subtree(root, &cancelled);
                if r.hit_cap {
                    first_cap_hit.fetch_min(idx, Ordering::Relaxed);
                }
                r
            })
            .collect();
        let cut = first_cap_hit.load(Ordering::Relaxed);
        results
            .into_iter()
            .enumerate()
            .filter(|(idx, _)| *idx <= cut)
            .map(|(_, r)| r)
            .fold(head, SubtreeResult::better)
    };

    let status = if result.hit_cap {
        SearchStatus::LowerBoundOnly(result.best.len())
    } else {
        SearchStatus::Exact(result.best.len() + 1)
    };
    let outcome = SearchOutcome {
        l: params.l,
        k: params.k,
        alphabet_size: params.alphabet_size,
        status,
        max_avoiding_word: Word::new(result.best, params.alphabet_size)?,
        nodes_explored: result.nodes,
    };
    assert!(outcome.verify(), "search witness failed naive re-verification");
    Ok(outcome)
}

/// `(0^{k-1} 1)^{k-2} 0^{k-2} 1 0^{k-1}`, of length `k^2 - 2`, which contains
/// neither a k-power nor a k-anti-power.
pub fn lower_bound_witness(k: usize) -> Result<Word> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("need k >= 3, got {k}")));
    }
    let mut block = vec![0u8; k - 1];
    block.push(1);
    let mut symbols = block.repeat(k - 2);
    symbols.extend(std::iter::repeat_n(0, k - 2));
    symbols.push(1);
    symbols.extend(std::iter::repeat_n(0, k - 1));
    Word::new(symbols, 2)
}

/// `k^3 * C(k,2)`, an upper bound for `N(k,k)`.
pub fn theoretical_upper_bound(k: usize) -> Result<u64> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("need k >= 2, got {k}")));
    }
    let k = k as u64;
    k.checked_pow(3)
        .and_then(|c| c.checked_mul(k * (k - 1) / 2))
        .ok_or_else(|| Error::InvalidParameter("bound overflows u64".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(l: usize, k: usize) -> usize {
        match compute_n(&SearchParams::new(l, k)).unwrap().status {
            SearchStatus::Exact(n) => n,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(exact(2, 2), 2);
        assert_eq!(exact(3, 2), 3);
        assert_eq!(exact(2, 3), 4);
        assert_eq!(exact(3, 3), 9);
        assert_eq!(exact(4, 3), 12);
    }

    #[test]
    fn witness_words() {
        assert_eq!(lower_bound_witness(3).unwrap().to_string(), "0010100");
        assert_eq!(lower_bound_witness(4).unwrap().to_string(), "00010001001000");
        assert_eq!(lower_bound_witness(5).unwrap().len(), 23);
        assert!(lower_bound_witness(2).is_err());
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(theoretical_upper_bound(2).unwrap(), 8);
        assert_eq!(theoretical_upper_bound(3).unwrap(), 81);
        assert_eq!(theoretical_upper_bound(4).unwrap(), 384);
    }

    #[test]
    fn cap_gives_lower_bound() {
        let out = compute_n(&SearchParams::new(3, 3).length_cap(5)).unwrap();
        assert_eq!(out.status, SearchStatus::LowerBoundOnly(5));
        assert_eq!(out.max_avoiding_word.len(), 5);
        assert!(out.verify());
    }

    #[test]
    fn parallel_matches_sequential() {
        for (l, k) in [(3, 3), (4, 3), (2, 3)] {
            let seq = compute_n(&SearchParams::new(l, k)).unwrap();
            for depth in [1, 3, 6, 20] {
                let par = compute_n(&SearchParams::new(l, k).parallel_depth(depth)).unwrap();
                assert_eq!(par.status, seq.status);
                assert_eq!(par.max_avoiding_word, seq.max_avoiding_word);
            }
        }
        let seq = compute_n(&SearchParams::new(3, 4).length_cap(17)).unwrap();
        let par = compute_n(&SearchParams::new(3, 4).length_cap(17).parallel_depth(6)).unwrap();
        assert_eq!(par.status, seq.status);
        assert_eq!(par.max_avoiding_word, seq.max_avoiding_word);
    }

    #[test]
    fn json_shape() {
        let out = compute_n(&SearchParams::new(3, 3)).unwrap();
        let v = serde_json::to_value(&out).unwrap();
        assert_eq!(v["status"], "exact");
        assert_eq!(v["N_or_bound"], 9);
        assert_eq!(v["witness"].as_str().unwrap().len(), 8);
        assert_eq!(v["alphabet_size"], 2);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(compute_n(&SearchParams::new(1, 3)).is_err());
        assert!(compute_n(&SearchParams::new(3, 3).alphabet(1)).is_err());
        assert!(compute_n(&SearchParams::new(3, 3).length_cap(0)).is_err());
    }
}

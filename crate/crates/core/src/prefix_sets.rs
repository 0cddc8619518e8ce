//! The sets `AP(x,k)` and `P(x,k)` of block lengths `m` for which the prefix
//! of length `km` is a k-anti-power or a k-power, truncated at a horizon.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hash::PrefixHash;
use crate::infinite::InfiniteWord;
use crate::power::{blocks_all_equal, blocks_distinct};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetKind {
    AntiPower,
    Power,
}

impl SetKind {
    fn holds(self, symbols: &[u8], hasher: &PrefixHash, m: usize, k: usize) -> bool {
        match self {
            SetKind::AntiPower => blocks_distinct(symbols, hasher, 0, m, k),
            SetKind::Power => blocks_all_equal(symbols, hasher, 0, m, k),
        }
    }
}

/// A finite truncation `X ∩ {1..horizon}` of one of the prefix sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexSet {
    pub kind: SetKind,
    pub k: usize,
    pub horizon: usize,
    /// Sorted ascending.
    pub members: Vec<usize>,
}

impl IndexSet {
    pub fn contains(&self, m: usize) -> bool {
        self.members.binary_search(&m).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// One member per row, no header.
    pub fn to_csv(&self) -> String {
        self.members.iter().map(|m| format!("{m}\n")).collect()
    }
}

fn materialize_for(x: &InfiniteWord, k: usize, horizon: usize) -> Result<(Vec<u8>, PrefixHash)> {
    let len = k.checked_mul(horizon).ok_or(Error::CapExceeded {
        requested: usize::MAX,
        cap: x.cap(),
    })?;
    let prefix = x.prefix(len)?.into_bytes();
    let hasher = PrefixHash::new(&prefix);
    Ok((prefix, hasher))
}

fn index_set(x: &InfiniteWord, k: usize, horizon: usize, kind: SetKind) -> Result<IndexSet> {
    check_order(k)?;
    let (symbols, hasher) = materialize_for(x, k, horizon)?;
    let members = (1..=horizon)
        .filter(|&m| kind.holds(&symbols, &hasher, m, k))
        .collect();
    Ok(IndexSet {
        kind,
        k,
        horizon,
        members,
    })
}

fn check_order(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("order k must be at least 1".into()));
    }
    Ok(())
}

/// `AP(x,k) ∩ {1..horizon}`.
pub fn ap_set(x: &InfiniteWord, k: usize, horizon: usize) -> Result<IndexSet> {
    index_set(x, k, horizon, SetKind::AntiPower)
}

/// `P(x,k) ∩ {1..horizon}`.
pub fn p_set(x: &InfiniteWord, k: usize, horizon: usize) -> Result<IndexSet> {
    index_set(x, k, horizon, SetKind::Power)
}

/// Least `m <= limit` whose `km`-prefix is a k-anti-power.
///
/// The prefix is materialized in doubling stages, so a small answer never
/// requires `k * limit` symbols.
pub fn ap_min(x: &InfiniteWord, k: usize, limit: usize) -> Result<Option<usize>> {
    first_member(x, k, limit, SetKind::AntiPower)
}

pub(crate) fn first_member(
    x: &InfiniteWord,
    k: usize,
    limit: usize,
    kind: SetKind,
) -> Result<Option<usize>> {
    check_order(k)?;
    let mut done = 0;
    let mut horizon = limit.min(16);
    while done < limit {
        let (symbols, hasher) = materialize_for(x, k, horizon)?;
        if let Some(m) = (done + 1..=horizon).find(|&m| kind.holds(&symbols, &hasher, m, k)) {
            return Ok(Some(m));
        }
        done = horizon;
        horizon = horizon.saturating_mul(2).min(limit);
    }
    Ok(None)
}

/// Prefix densities `d_n = |X ∩ {1..n}| / n` of a truncated set.
///
/// This is a finite estimate. `min_tail`, the minimum of `d_n` over the tail
/// window `[horizon/2, horizon]`, stands in for the lower density, which no
/// finite computation determines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityEstimate {
    counts: Vec<u64>,
    min_tail: Ratio<u64>,
    tail_start: usize,
}

impl DensityEstimate {
    pub fn horizon(&self) -> usize {
        self.counts.len()
    }

    /// `d_n` for `1 <= n <= horizon`, in lowest terms.
    pub fn ratio(&self, n: usize) -> Ratio<u64> {
        Ratio::new(self.counts[n - 1], n as u64)
    }

    pub fn ratios(&self) -> impl Iterator<Item = Ratio<u64>> + '_ {
        (1..=self.horizon()).map(|n| self.ratio(n))
    }

    pub fn min_tail(&self) -> Ratio<u64> {
        self.min_tail
    }

    /// The window `[start, horizon]` over which `min_tail` is taken.
    pub fn tail_window(&self) -> (usize, usize) {
        (self.tail_start, self.horizon())
    }

    /// Header `n,numerator,denominator`, one row per `n`, then a comment line
    /// with the tail minimum.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,numerator,denominator\n");
        for (i, r) in self.ratios().enumerate() {
            out.push_str(&format!("{},{},{}\n", i + 1, r.numer(), r.denom()));
        }
        let (a, b) = self.tail_window();
        out.push_str(&format!(
            "# finite estimate: min_tail over [{a},{b}] = {}/{}\n",
            self.min_tail.numer(),
            self.min_tail.denom()
        ));
        out
    }
}

#[derive(Serialize)]
struct DensityJson {
    estimate: &'static str,
    horizon: usize,
    ratios: Vec<[u64; 2]>,
    min_tail: [u64; 2],
    tail_window: [usize; 2],
}

impl Serialize for DensityEstimate {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (a, b) = self.tail_window();
        DensityJson {
            estimate: "finite",
            horizon: self.horizon(),
            ratios: self.ratios().map(|r| [*r.numer(), *r.denom()]).collect(),
            min_tail: [*self.min_tail.numer(), *self.min_tail.denom()],
            tail_window: [a, b],
        }
        .serialize(serializer)
    }
}

/// Exact prefix densities of `set`; requires `horizon >= 2`.
pub fn density_estimate(set: &IndexSet) -> Result<DensityEstimate> {
    if set.horizon < 2 {
        return Err(Error::InvalidParameter(format!(
            "density needs horizon >= 2, got {}",
            set.horizon
        )));
    }
    let mut counts = Vec::with_capacity(set.horizon);
    let mut members = set.members.iter().peekable();
    let mut count = 0u64;
    for n in 1..=set.horizon {
        while members.next_if(|&&m| m <= n).is_some() {
            count += 1;
        }
        counts.push(count);
    }
    let tail_start = (set.horizon / 2).max(1);
    let min_tail = (tail_start..=set.horizon)
        .map(|n| Ratio::new(counts[n - 1], n as u64))
        .min()
        .expect("non-empty window");
    Ok(DensityEstimate {
        counts,
        min_tail,
        tail_start,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn set(members: Vec<usize>, horizon: usize) -> IndexSet {
        IndexSet {
            kind: SetKind::AntiPower,
            k: 2,
            horizon,
            members,
        }
    }

    #[test]
    fn ap_set_examples() {
        let x: InfiniteWord = "ultimately:0:1".parse().unwrap();
        assert!(ap_set(&x, 3, 200).unwrap().is_empty());
        assert!(p_set(&x, 3, 20).unwrap().is_empty());

        let t = InfiniteWord::thue_morse();
        assert_eq!(ap_set(&t, 1, 10).unwrap().members, (1..=10).collect::<Vec<_>>());
        let ap3 = ap_set(&t, 3, 10).unwrap();
        assert_eq!(ap3.members.first(), Some(&5));
    }

    #[test]
    fn p_set_examples() {
        let x = InfiniteWord::periodic(Word::parse_ascii("01").unwrap()).unwrap();
        assert_eq!(p_set(&x, 2, 6).unwrap().members, [2, 4, 6]);
        assert!(p_set(&InfiniteWord::thue_morse(), 3, 100).unwrap().is_empty());
    }

    #[test]
    fn ap_min_examples() {
        let t = InfiniteWord::thue_morse();
        assert_eq!(ap_min(&t, 2, 10).unwrap(), Some(1));
        assert_eq!(ap_min(&t, 7, 100).unwrap(), Some(11));
        assert_eq!(ap_min(&t, 100, 1000).unwrap(), Some(97));
        assert_eq!(ap_min(&t, 100, 96).unwrap(), None);
    }

    #[test]
    fn cap_error_propagates() {
        let t = InfiniteWord::thue_morse().with_cap(50);
        assert!(matches!(ap_set(&t, 3, 20), Err(Error::CapExceeded { .. })));
        assert!(matches!(ap_min(&t, 100, 1000), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn density_examples() {
        let full = density_estimate(&set((1..=10).collect(), 10)).unwrap();
        assert!(full.ratios().all(|r| r == Ratio::from_integer(1)));

        let empty = density_estimate(&set(vec![], 10)).unwrap();
        assert!(empty.ratios().all(|r| r == Ratio::from_integer(0)));
        assert_eq!(empty.min_tail(), Ratio::from_integer(0));

        let evens = density_estimate(&set((2..=100).step_by(2).collect(), 100)).unwrap();
        assert_eq!(evens.ratio(100), Ratio::new(1, 2));
        assert_eq!(evens.ratio(51), Ratio::new(25, 51));
        assert_eq!(evens.min_tail(), Ratio::new(25, 51));
        assert!(evens.min_tail() <= evens.ratio(100));

        assert!(density_estimate(&set(vec![1], 1)).is_err());
    }

    #[test]
    fn density_csv_layout() {
        let d = density_estimate(&set(vec![2], 4)).unwrap();
        assert_eq!(
            d.to_csv(),
            "n,numerator,denominator\n1,0,1\n2,1,2\n3,1,3\n4,1,4\n# finite estimate: min_tail over [2,4] = 1/4\n"
        );
    }
}

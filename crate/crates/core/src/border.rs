//! Borders and the periodic root they induce.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::Word;

/// Failure function: entry `p` (for `p = 1..=|w|`, stored at index `p - 1`)
/// is the length of the longest border of the prefix of length `p`.
/// Iterating `b -> table[b - 1]` from `|w|` enumerates every border of `w`.
pub fn longest_border_array(w: &[u8]) -> Vec<usize> {
    let mut table = vec![0; w.len()];
    let mut b = 0;
    for i in 1..w.len() {
        while b > 0 && w[i] != w[b] {
            b = table[b - 1];
        }
        if w[i] == w[b] {
            b += 1;
        }
        table[i] = b;
    }
    table
}

/// All border lengths of `w`, longest first, ending with 0.
pub fn borders(w: &[u8]) -> Vec<usize> {
    let table = longest_border_array(w);
    let mut out = Vec::new();
    let mut b = table.last().copied().unwrap_or(0);
    loop {
        out.push(b);
        if b == 0 {
            break;
        }
        b = table[b - 1];
    }
    out
}

/// Returned instead of a root when the word is too short for `u^l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthDeficit {
    pub word_len: usize,
    pub root_len: usize,
    pub exponent: usize,
    /// `l * |u| - |w|`
    pub missing: usize,
}

/// If `v` (the prefix of length `border_len`) is a border of `w = uv` and
/// `|w| >= l * |u|`, then `u^l` is a prefix of `w`; returns `u`.
///
/// The outer error rejects a `border_len` that is not a border; the inner
/// `Err` reports a length deficit.
pub fn root_power_from_border(
    w: &Word,
    border_len: usize,
    l: usize,
) -> Result<std::result::Result<Word, LengthDeficit>> {
    let bytes = w.as_bytes();
    let n = bytes.len();
    if border_len >= n || bytes[..border_len] != bytes[n - border_len..] {
        return Err(Error::InvalidBorder {
            border_len,
            word_len: n,
        });
    }
    let root_len = n - border_len;
    let needed = l.saturating_mul(root_len);
    if n < needed {
        return Ok(Err(LengthDeficit {
            word_len: n,
            root_len,
            exponent: l,
            missing: needed - n,
        }));
    }
    Ok(Ok(w.prefix(root_len)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse_ascii(s).unwrap()
    }

    /// Brute-force oracle: longest proper prefix that is also a suffix.
    fn brute_longest_border(s: &[u8]) -> usize {
        (0..s.len())
            .rev()
            .find(|&b| s[..b] == s[s.len() - b..])
            .unwrap_or(0)
    }

    #[test]
    fn border_array_examples() {
        assert_eq!(longest_border_array(w("aaaa").as_bytes()), [0, 1, 2, 3]);
        assert_eq!(longest_border_array(w("abab").as_bytes()), [0, 0, 1, 2]);
        assert_eq!(longest_border_array(w("aabaa").as_bytes()), [0, 1, 0, 1, 2]);
    }

    #[test]
    fn frozen_examples_match_brute_force() {
        for s in ["aaaa", "abab", "aabaa"] {
            let b = w(s);
            let expected: Vec<usize> = (1..=b.len())
                .map(|p| brute_longest_border(&b.as_bytes()[..p]))
                .collect();
            assert_eq!(longest_border_array(b.as_bytes()), expected);
        }
    }

    #[test]
    fn borders_enumerates_all() {
        assert_eq!(borders(w("abaababaab").as_bytes()), [5, 2, 0]);
        assert_eq!(borders(w("aaaa").as_bytes()), [3, 2, 1, 0]);
        assert_eq!(borders(&[]), [0]);
    }

    #[test]
    fn root_examples() {
        let root = root_power_from_border(&w("aabaa"), 2, 1).unwrap().unwrap();
        assert_eq!(root, w("aab"));

        let ab = w("ababab");
        let root = root_power_from_border(&ab, 4, 3).unwrap().unwrap();
        assert_eq!(root.to_string(), "01");
        assert!(root.pow(3).is_prefix_of(ab.as_bytes()));

        let deficit = root_power_from_border(&w("aabaa"), 2, 2).unwrap().unwrap_err();
        assert_eq!(deficit.missing, 1);
    }

    #[test]
    fn invalid_border_is_rejected() {
        assert_eq!(
            root_power_from_border(&w("aabaa"), 3, 1),
            Err(Error::InvalidBorder {
                border_len: 3,
                word_len: 5
            })
        );
        assert!(root_power_from_border(&w("aa"), 2, 1).is_err());
    }
}

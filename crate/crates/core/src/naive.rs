//! Quadratic reference checks by direct block comparison. No hashing, no
//! shared code with the fast detectors.

fn blocks(w: &[u8], k: usize) -> Option<Vec<&[u8]>> {
    if k == 0 || w.len() % k != 0 {
        return None;
    }
    let len = w.len() / k;
    Some((0..k).map(|j| &w[j * len..(j + 1) * len]).collect())
}

pub fn is_power(w: &[u8], k: usize) -> bool {
    blocks(w, k).is_some_and(|b| b.iter().all(|x| *x == b[0]))
}

pub fn is_anti_power(w: &[u8], k: usize) -> bool {
    if w.is_empty() {
        return false;
    }
    blocks(w, k).is_some_and(|b| (0..k).all(|i| (i + 1..k).all(|j| b[i] != b[j])))
}

fn any_factor(w: &[u8], order: usize, pred: impl Fn(&[u8]) -> bool) -> bool {
    let n = w.len();
    (1..=n / order.max(1)).any(|len| (0..=n - order * len).any(|p| pred(&w[p..p + order * len])))
}

/// Some factor (with non-empty blocks) is an `l`-power.
pub fn contains_power(w: &[u8], l: usize) -> bool {
    any_factor(w, l, |f| is_power(f, l))
}

/// Some factor is a k-anti-power.
pub fn contains_anti_power(w: &[u8], k: usize) -> bool {
    any_factor(w, k, |f| is_anti_power(f, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert!(is_power(b"abab", 2));
        assert!(is_power(b"", 3));
        assert!(!is_anti_power(b"", 3));
        assert!(is_anti_power(b"aabaaabbbaba", 4));
        assert!(contains_power(&[0, 1, 1], 2));
        assert!(!contains_power(&[0, 1, 0], 2));
        assert!(contains_anti_power(&[0, 1], 2));
        assert!(!contains_anti_power(&[0, 0, 0], 2));
    }
}

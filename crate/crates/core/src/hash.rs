//! Polynomial prefix hashing modulo two 61-bit primes.
//!
//! Hash equality is only ever used as a filter: callers confirm every
//! equality by comparing the symbols themselves.

// Both moduli have the form 2^61 - c, which allows shift-and-add reduction.
const MOD_BITS: u32 = 61;
const MASK: u64 = (1 << MOD_BITS) - 1;
const C1: u64 = 1;
const C2: u64 = 31;
const P1: u64 = (1 << MOD_BITS) - C1;
const P2: u64 = (1 << MOD_BITS) - C2;

const BASE1: u64 = 0x1b87_3593_a4c1_f2d7 & MASK;
const BASE2: u64 = 0x0cc9_e2d5_1f1b_7a43 & MASK;

#[inline]
fn reduce<const C: u64>(x: u128) -> u64 {
    let p = (1u64 << MOD_BITS) - C;
    let folded = (x >> MOD_BITS) * C as u128 + (x & MASK as u128);
    let folded = ((folded >> MOD_BITS) * C as u128 + (folded & MASK as u128)) as u64;
    let mut r = folded;
    while r >= p {
        r -= p;
    }
    r
}

#[inline]
fn mul<const C: u64>(a: u64, b: u64) -> u64 {
    reduce::<C>(a as u128 * b as u128)
}

/// Hash of a factor under both moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HashPair(pub u64, pub u64);

/// Prefix hashes of a word. Supports `push`/`pop` so that depth-first
/// searches can extend and retract the word in place.
#[derive(Debug, Clone)]
pub struct PrefixHash {
    bases: (u64, u64),
    h1: Vec<u64>,
    h2: Vec<u64>,
    pow1: Vec<u64>,
    pow2: Vec<u64>,
}

impl PrefixHash {
    pub fn new(symbols: &[u8]) -> Self {
        Self::with_bases(symbols, BASE1, BASE2)
    }

    pub(crate) fn with_bases(symbols: &[u8], base1: u64, base2: u64) -> Self {
        let mut h = PrefixHash {
            bases: (base1 % P1, base2 % P2),
            h1: Vec::with_capacity(symbols.len() + 1),
            h2: Vec::with_capacity(symbols.len() + 1),
            pow1: Vec::with_capacity(symbols.len() + 1),
            pow2: Vec::with_capacity(symbols.len() + 1),
        };
        h.h1.push(0);
        h.h2.push(0);
        h.pow1.push(1);
        h.pow2.push(1);
        for &s in symbols {
            h.push(s);
        }
        h
    }

    /// Number of symbols hashed.
    pub fn len(&self) -> usize {
        self.h1.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn push(&mut self, symbol: u8) {
        let n = self.len();
        // symbols are offset by one so that 0 does not hash like the empty word
        let s = u64::from(symbol) + 1;
        self.h1.push(reduce::<C1>(mul::<C1>(self.h1[n], self.bases.0) as u128 + s as u128));
        self.h2.push(reduce::<C2>(mul::<C2>(self.h2[n], self.bases.1) as u128 + s as u128));
        if self.pow1.len() <= n + 1 {
            self.pow1.push(mul::<C1>(self.pow1[n], self.bases.0));
            self.pow2.push(mul::<C2>(self.pow2[n], self.bases.1));
        }
    }

    pub fn pop(&mut self) {
        if !self.is_empty() {
            self.h1.pop();
            self.h2.pop();
        }
    }

    /// Hash of the factor `[start, start + len)` (0-based).
    #[inline]
    pub fn block(&self, start: usize, len: usize) -> HashPair {
        let end = start + len;
        let a = self.h1[end] + P1 - mul::<C1>(self.h1[start], self.pow1[len]);
        let b = self.h2[end] + P2 - mul::<C2>(self.h2[start], self.pow2[len]);
        HashPair(
            if a >= P1 { a - P1 } else { a },
            if b >= P2 { b - P2 } else { b },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(symbols: &[u8], base: u64, p: u64) -> u64 {
        symbols.iter().fold(0u64, |acc, &s| {
            ((acc as u128 * base as u128 + u64::from(s) as u128 + 1) % p as u128) as u64
        })
    }

    #[test]
    fn moduli_are_the_intended_primes() {
        assert_eq!(P1, 2_305_843_009_213_693_951);
        assert_eq!(P2, 2_305_843_009_213_693_921);
    }

    #[test]
    fn reduction_matches_u128_remainder() {
        let samples = [0u128, 1, P1 as u128, P2 as u128, u64::MAX as u128, (P1 as u128 - 1) * (P1 as u128 - 1)];
        for &x in &samples {
            assert_eq!(reduce::<C1>(x), (x % P1 as u128) as u64);
            assert_eq!(reduce::<C2>(x), (x % P2 as u128) as u64);
        }
        let mut x: u64 = 0x9e37_79b9_7f4a_7c15;
        for _ in 0..10_000 {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let a = x & MASK;
            let b = x.rotate_left(17) & MASK;
            let prod = (a % P2) as u128 * (b % P2) as u128;
            assert_eq!(mul::<C2>(a % P2, b % P2), (prod % P2 as u128) as u64);
        }
    }

    #[test]
    fn block_hashes_match_direct_hashing() {
        let word: Vec<u8> = (0..200u32).map(|i| (i.count_ones() % 3) as u8).collect();
        let h = PrefixHash::new(&word);
        for start in (0..200).step_by(7) {
            for len in 0..(200 - start).min(40) {
                let f = &word[start..start + len];
                assert_eq!(
                    h.block(start, len),
                    HashPair(naive(f, BASE1, P1), naive(f, BASE2, P2))
                );
            }
        }
    }

    #[test]
    fn push_pop_restores_state() {
        let mut h = PrefixHash::new(&[0, 1, 1]);
        let before = h.block(0, 3);
        h.push(0);
        h.push(1);
        h.pop();
        h.pop();
        assert_eq!(h.len(), 3);
        assert_eq!(h.block(0, 3), before);
        h.push(1);
        assert_eq!(h.block(1, 3), PrefixHash::new(&[1, 1, 1]).block(0, 3));
    }
}

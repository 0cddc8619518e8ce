//! Deterministic infinite words, addressed by 1-based position.
//!
//! Every generator answers `symbol_at(n)` as a pure function of the position,
//! in at most logarithmic time. Prefixes are materialized on demand, bounded
//! by a per-word cap.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{Symbol, Word};

/// Default bound on the number of symbols a single prefix request may produce.
pub const DEFAULT_MATERIALIZATION_CAP: usize = 10_000_000;

/// Positions of the 1s in the sparse avoider: `alpha_i = first * growth^(i-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorConfig {
    first: u64,
    growth: u64,
}

impl GeneratorConfig {
    /// Requires `first >= 1` and `growth >= 5`, which gives
    /// `alpha_{i+1} >= 5 * alpha_i`.
    pub fn new(first: u64, growth: u64) -> Result<Self> {
        if first == 0 {
            return Err(Error::InvalidParameter("alpha_1 must be at least 1".into()));
        }
        if growth < 5 {
            return Err(Error::InvalidParameter(format!(
                "growth factor must be at least 5, got {growth}"
            )));
        }
        Ok(GeneratorConfig { first, growth })
    }

    pub fn first(&self) -> u64 {
        self.first
    }

    pub fn growth(&self) -> u64 {
        self.growth
    }

    /// `alpha_i` for `i >= 1`, or `None` on overflow.
    pub fn alpha(&self, i: u32) -> Option<u64> {
        assert!(i >= 1, "alpha is indexed from 1");
        self.growth
            .checked_pow(i - 1)
            .and_then(|p| p.checked_mul(self.first))
    }

    /// Whether `n` is one of the `alpha_i`.
    pub fn contains(&self, n: u64) -> bool {
        if n == 0 || n % self.first != 0 {
            return false;
        }
        let mut q = n / self.first;
        while q % self.growth == 0 {
            q /= self.growth;
        }
        q == 1
    }
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig { first: 1, growth: 5 }
    }
}

/// The source of an infinite word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    ThueMorse,
    /// Fixed point of `0 -> 01, 1 -> 0`.
    Fibonacci,
    Periodic(Word),
    /// 1 exactly at the positions `alpha_i`, 0 elsewhere.
    SparseAvoider(GeneratorConfig),
    /// Limit of `w_0 = 0`, `w_n = w_{n-1} 1^{3|w_{n-1}|} w_{n-1}`.
    RecurrentAvoider,
    /// `prefix` followed by `tail` repeated forever.
    Literal { prefix: Word, tail: Word },
}

/// An infinite word together with its materialization cap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InfiniteWord {
    generator: Generator,
    cap: usize,
}

impl InfiniteWord {
    pub fn new(generator: Generator) -> Result<Self> {
        match &generator {
            Generator::Periodic(seed) if seed.is_empty() => {
                return Err(Error::InvalidParameter("periodic seed must be non-empty".into()))
            }
            Generator::Literal { tail, .. } if tail.is_empty() => {
                return Err(Error::InvalidParameter("periodic tail must be non-empty".into()))
            }
            _ => {}
        }
        Ok(InfiniteWord {
            generator,
            cap: DEFAULT_MATERIALIZATION_CAP,
        })
    }

    pub fn thue_morse() -> Self {
        Self::from_valid(Generator::ThueMorse)
    }

    pub fn fibonacci() -> Self {
        Self::from_valid(Generator::Fibonacci)
    }

    pub fn sparse_avoider(cfg: GeneratorConfig) -> Self {
        Self::from_valid(Generator::SparseAvoider(cfg))
    }

    pub fn recurrent_avoider() -> Self {
        Self::from_valid(Generator::RecurrentAvoider)
    }

    pub fn periodic(seed: Word) -> Result<Self> {
        Self::new(Generator::Periodic(seed))
    }

    pub fn ultimately_periodic(prefix: Word, tail: Word) -> Result<Self> {
        Self::new(Generator::Literal { prefix, tail })
    }

    fn from_valid(generator: Generator) -> Self {
        InfiniteWord {
            generator,
            cap: DEFAULT_MATERIALIZATION_CAP,
        }
    }

    /// Replaces the materialization cap.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn generator(&self) -> &Generator {
        &self.generator
    }

    pub fn alphabet_size(&self) -> usize {
        match &self.generator {
            Generator::Periodic(seed) => seed.alphabet_size().max(2),
            Generator::Literal { prefix, tail } => {
                prefix.alphabet_size().max(tail.alphabet_size()).max(2)
            }
            _ => 2,
        }
    }

    /// The symbol at 1-based position `n`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn symbol_at(&self, n: usize) -> Symbol {
        assert!(n >= 1, "positions are 1-based");
        let i = n - 1;
        match &self.generator {
            Generator::ThueMorse => thue_morse_symbol(i as u64),
            Generator::Fibonacci => fibonacci_symbol(i as u64),
            Generator::Periodic(seed) => Symbol(seed.as_bytes()[i % seed.len()]),
            Generator::SparseAvoider(cfg) => sparse_avoider_symbol(n as u64, cfg),
            Generator::RecurrentAvoider => recurrent_avoider_symbol(n as u64),
            Generator::Literal { prefix, tail } => {
                if i < prefix.len() {
                    Symbol(prefix.as_bytes()[i])
                } else {
                    Symbol(tail.as_bytes()[(i - prefix.len()) % tail.len()])
                }
            }
        }
    }

    /// Materializes `x_1 .. x_n`.
    pub fn prefix(&self, n: usize) -> Result<Word> {
        if n > self.cap {
            return Err(Error::CapExceeded {
                requested: n,
                cap: self.cap,
            });
        }
        let symbols = match &self.generator {
            Generator::ThueMorse => thue_morse_prefix(n).into_bytes(),
            Generator::Fibonacci => fibonacci_prefix(n).into_bytes(),
            Generator::Periodic(seed) => seed.as_bytes().iter().copied().cycle().take(n).collect(),
            _ => (1..=n).map(|p| self.symbol_at(p).0).collect(),
        };
        Word::new(symbols, self.alphabet_size())
    }
}

impl fmt::Display for InfiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.generator {
            Generator::ThueMorse => f.write_str("thue-morse"),
            Generator::Fibonacci => f.write_str("fibonacci"),
            Generator::Periodic(seed) => write!(f, "periodic:{seed}"),
            Generator::SparseAvoider(cfg) if *cfg == GeneratorConfig::default() => {
                f.write_str("sparse-avoider")
            }
            Generator::SparseAvoider(cfg) => {
                write!(f, "sparse-avoider:{}:{}", cfg.first, cfg.growth)
            }
            Generator::RecurrentAvoider => f.write_str("recurrent-avoider"),
            Generator::Literal { prefix, tail } => write!(f, "ultimately:{prefix}:{tail}"),
        }
    }
}

/// Parses the generator names accepted on the command line:
/// `thue-morse`, `fibonacci`, `periodic:<seed>`, `sparse-avoider[:<alpha1>:<growth>]`,
/// `recurrent-avoider` and `ultimately:<prefix>:<tail>`.
impl FromStr for InfiniteWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (name, arg) = match text.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (text, None),
        };
        match (name, arg) {
            ("thue-morse", None) => Ok(Self::thue_morse()),
            ("fibonacci", None) => Ok(Self::fibonacci()),
            ("recurrent-avoider", None) => Ok(Self::recurrent_avoider()),
            ("sparse-avoider", None) => Ok(Self::sparse_avoider(GeneratorConfig::default())),
            ("sparse-avoider", Some(arg)) => {
                let (a, g) = arg
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("expected <alpha1>:<growth>, got {arg:?}")))?;
                let parse = |s: &str| {
                    s.parse::<u64>()
                        .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
                };
                Ok(Self::sparse_avoider(GeneratorConfig::new(parse(a)?, parse(g)?)?))
            }
            ("periodic", Some(seed)) => Self::periodic(Word::parse_ascii(seed)?),
            ("ultimately", Some(arg)) => {
                let (p, t) = arg
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("expected <prefix>:<tail>, got {arg:?}")))?;
                Self::ultimately_periodic(Word::parse_ascii(p)?, Word::parse_ascii(t)?)
            }
            _ => Err(Error::Parse(format!("unknown generator {text:?}"))),
        }
    }
}

fn thue_morse_symbol(i: u64) -> Symbol {
    Symbol((i.count_ones() & 1) as u8)
}

/// The first `n` letters of the Thue-Morse word.
pub fn thue_morse_prefix(n: usize) -> Word {
    let symbols = (0..n as u64).map(|i| thue_morse_symbol(i).0).collect();
    Word::new(symbols, 2).expect("binary")
}

// Standard words s_0 = 0, s_1 = 01, s_n = s_{n-1} s_{n-2}; each is a prefix of
// the next, so the letter at index i can be read from any s_n longer than i.
fn fibonacci_symbol(i: u64) -> Symbol {
    let mut lens: Vec<u64> = vec![1, 2];
    while *lens.last().unwrap() <= i {
        let n = lens.len();
        lens.push(lens[n - 1] + lens[n - 2]);
    }
    let mut level = lens.len() - 1;
    let mut i = i;
    while level >= 2 {
        if i < lens[level - 1] {
            level -= 1;
        } else {
            i -= lens[level - 1];
            level -= 2;
        }
    }
    Symbol(if level == 0 || i == 0 { 0 } else { 1 })
}

/// The first `n` letters of the fixed point of `0 -> 01, 1 -> 0`.
pub fn fibonacci_prefix(n: usize) -> Word {
    let mut prev: Vec<u8> = vec![0];
    let mut cur: Vec<u8> = vec![0, 1];
    while cur.len() < n {
        let next = [cur.as_slice(), prev.as_slice()].concat();
        prev = std::mem::replace(&mut cur, next);
    }
    cur.truncate(n);
    Word::new(cur, 2).expect("binary")
}

/// Letter `n` (1-based) of the sparse avoider.
pub fn sparse_avoider_symbol(n: u64, cfg: &GeneratorConfig) -> Symbol {
    Symbol(u8::from(cfg.contains(n)))
}

/// Letter `n` (1-based) of the limit word of `w_n = w_{n-1} 1^{3|w_{n-1}|} w_{n-1}`.
pub fn recurrent_avoider_symbol(n: u64) -> Symbol {
    assert!(n >= 1, "positions are 1-based");
    // smallest level m with |w_m| = 5^m >= n
    let mut block = 1u64;
    while block < n {
        block *= 5;
    }
    let mut i = n - 1;
    // w_m = w_{m-1} 1^{3*5^{m-1}} w_{m-1}
    while block > 1 {
        let part = block / 5;
        if i < part {
            block = part;
        } else if i < 4 * part {
            return Symbol::ONE;
        } else {
            i -= 4 * part;
            block = part;
        }
    }
    Symbol::ZERO
}

//! Powers, anti-powers and unavoidable regularities in infinite words.
//!
//! A k-power is a word made of `k` equal consecutive blocks; a k-anti-power
//! is one made of `k` pairwise distinct blocks of the same length. This crate
//! provides detectors for both, generators for a handful of infinite words
//! (Thue-Morse, Fibonacci, periodic words and two anti-power avoiders), the
//! prefix sets `AP(x,k)` and `P(x,k)` with density estimates, a constructive
//! power extractor for words whose anti-power prefixes are sparse, and an
//! exhaustive search for the numbers `N(l,k)`.

pub mod border;
mod error;
pub mod extension;
pub mod hash;
pub mod infinite;
pub mod naive;
pub mod power;
pub mod prefix_sets;
pub mod ramsey;
pub mod scan;
pub mod witness;
pub mod word;

pub use border::{borders, longest_border_array, root_power_from_border, LengthDeficit};
pub use error::{Error, Result};
pub use extension::{max_avoiding_extension, ExtensionOutcome};
pub use infinite::{
    fibonacci_prefix, recurrent_avoider_symbol, sparse_avoider_symbol, thue_morse_prefix,
    Generator, GeneratorConfig, InfiniteWord, DEFAULT_MATERIALIZATION_CAP,
};
pub use power::{is_k_anti_power, is_k_power, BlockFactorization};
pub use prefix_sets::{ap_min, ap_set, density_estimate, p_set, DensityEstimate, IndexSet, SetKind};
pub use ramsey::{
    compute_n, lower_bound_witness, theoretical_upper_bound, SearchOutcome, SearchParams,
    SearchStatus,
};
pub use scan::{
    anti_power_at_position, find_anti_power_factor, first_anti_power_factor, first_power_factor,
    BlockFactor,
};
pub use witness::{
    extract_power_witness, AntiPowerReport, BlockGrid, Dichotomy, WitnessEvidence,
    DEFAULT_WITNESS_BUDGET,
};
pub use word::{Symbol, Word};

//! Reduced words in free groups, exhaustive enumeration, a brute-force
//! freeness oracle, the orbit comparison of words, and the finite-ball check
//! for the free group acting on itself.

mod corollary;
mod enumerate;
mod oracle;
mod word;

pub use corollary::{corollary_ball_check, RegularActionModel};
pub use enumerate::{enumerate_reduced, ReducedWords};
pub(crate) use enumerate::walk_reduced;
pub use oracle::{evaluate_word, freeness_oracle, orbit_order_compare, OracleMode};
pub use word::{Letter, Word, WordError};

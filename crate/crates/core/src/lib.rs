//! Suffix arrays and Burrows-Wheeler arrays as permutations.
//!
//! A permutation `π` of `[1, n]` is a suffix array over `k` letters exactly
//! when its linking permutation `φ = π'⁻¹(π' + 1)`, taken for the sentinel
//! form `π' = (n+1) π(1) … π(n)`, has at most `k − 1` descents besides 1.
//! This crate turns that fact and its relatives into code:
//!
//! - [`perm`]: permutation arithmetic, descents, orbits, shift classes
//! - [`linking`]: the linking mapping and its inverse
//! - [`strings`]: words, naive suffix arrays and BW-arrays, sentinels
//! - [`characterize`]: suffix-array and BW-array predicates, unique word
//!   recovery, the bijection with one-orbit permutations
//! - [`mid_sentinel`]: binary words with the sentinel between `a` and `b`
//! - [`enumerate`]: exact counts and lazy generators
//! - [`oracle`]: brute-force censuses used as ground truth
//! - [`verify`]: the oracle cross-check suite behind `sufperm verify`
//!
//! ```
//! use sufperm::{characterize, strings::Word};
//!
//! let w = Word::parse("babba", None).unwrap();
//! let sa = w.suffix_array();
//! assert_eq!(sa.to_string(), "5 2 4 1 3");
//! assert_eq!(characterize::min_alphabet(&sa), 2);
//! assert_eq!(characterize::recover_word_sa(&sa, &w.parikh()).unwrap(), w);
//! ```

pub mod characterize;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod linking;
pub mod mid_sentinel;
pub mod oracle;
pub mod perm;
pub mod strings;
pub mod verify;

pub use characterize::ParikhVector;
pub use enumerate::BigCount;
pub use error::{Error, Result};
pub use linking::LinkingPermutation;
pub use perm::{DescentSet, Permutation};
pub use strings::{SentinelWord, Word};

//! Deciding which permutations are BW-arrays or suffix arrays, recovering
//! the unique preimage word, and the bijection between suffix arrays of
//! length `n` and one-orbit permutations of length `n + 1`.
//!
//! Everything reduces to one test on the descents of a linking permutation.
//! For a BW-array with letter counts `r`, the descents of `phi(π)` must lie
//! at letter-class boundaries `r_1, r_1 + r_2, …`. A suffix array `π` is
//! handled through the sentinel form `π' = (n+1) π(1) … π(n)`, whose
//! BW-array carries one extra letter `♯` below everything, which moves every
//! boundary up by one and adds the boundary at 1.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linking::{phi, LinkingPermutation};
use crate::perm::Permutation;
use crate::strings::{append_sentinel_perm, bw_array, is_primitive, suffix_array, Word};

/// Letter occurrence counts `(r_1, …, r_k)`; zero entries are allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParikhVector {
    counts: Vec<usize>,
}

impl ParikhVector {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidParikh("need at least one letter".into()));
        }
        Ok(ParikhVector { counts })
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Alphabet size `k`.
    pub fn alphabet_size(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `r_1, r_1 + r_2, …, r_1 + … + r_{k-1}`.
    pub fn boundaries(&self) -> Vec<usize> {
        self.counts[..self.counts.len() - 1]
            .iter()
            .scan(0, |acc, &r| {
                *acc += r;
                Some(*acc)
            })
            .collect()
    }

    /// Rank of the letter at sorted position `i`: the least `j` with
    /// `i ≤ r_1 + … + r_j`.
    fn letter_at_rank(&self, i: usize) -> usize {
        let mut acc = 0;
        for (j, &r) in self.counts.iter().enumerate() {
            acc += r;
            if i <= acc {
                return j + 1;
            }
        }
        unreachable!("rank {i} exceeds total {acc}")
    }

    fn check_total(&self, n: usize) -> Result<()> {
        if self.total() != n {
            return Err(Error::ParikhSumMismatch {
                sum: self.total(),
                n,
            });
        }
        Ok(())
    }

    /// The word placing the `i`-th smallest letter at position `p(i)`.
    fn spread_over(&self, p: &Permutation) -> Word {
        let mut letters = vec![0; p.len()];
        for (i, &pos) in p.values().iter().enumerate() {
            letters[pos - 1] = self.letter_at_rank(i + 1);
        }
        Word::new_unchecked(letters, self.alphabet_size())
    }
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.counts.iter().format(","))
    }
}

impl fmt::Debug for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParikhVector({self})")
    }
}

impl FromStr for ParikhVector {
    type Err = Error;

    /// Comma-separated counts, e.g. `"2,3"`.
    fn from_str(s: &str) -> Result<Self> {
        let counts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParikh(format!("not a count: {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ParikhVector::new(counts)
    }
}

fn descent_condition_bw(p: &Permutation, r: &ParikhVector) -> bool {
    phi(p).as_perm().descents().is_subset_of(&r.boundaries())
}

/// Allowed descents of `phi(π')` for a suffix array with counts `r`:
/// `1, 1 + r_1, …, 1 + r_1 + … + r_{k-1}`.
fn sentinel_boundaries(r: &ParikhVector) -> Vec<usize> {
    std::iter::once(1)
        .chain(r.boundaries().into_iter().map(|b| b + 1))
        .collect()
}

/// True iff `p` is the BW-array of a primitive word with letter counts `r`.
pub fn is_bw_array(p: &Permutation, r: &ParikhVector) -> Result<bool> {
    r.check_total(p.len())?;
    // The descent test alone admits non-primitive candidates such as a^n.
    Ok(descent_condition_bw(p, r) && is_primitive(&r.spread_over(p)))
}

/// The unique word with counts `r` whose sorted rotations start at `p`.
///
/// Fails when the descent condition does not hold.
pub fn recover_word_bw(p: &Permutation, r: &ParikhVector) -> Result<Word> {
    r.check_total(p.len())?;
    if !descent_condition_bw(p, r) {
        return Err(Error::NotBwArray);
    }
    let word = r.spread_over(p);
    if let Ok(bwa) = bw_array(&word) {
        assert_eq!(&bwa, p, "recovered {word} does not reproduce its BW-array");
    }
    Ok(word)
}

/// `|Des(phi(π')) \ {1}|` for `π' = (n+1) π(1) … π(n)`.
pub fn sentinel_descent_count(p: &Permutation) -> usize {
    linking_of_sa(p).as_perm().descents().count_except_first()
}

/// True iff `p` is the suffix array of some word with letter counts `r`.
pub fn is_suffix_array_parikh(p: &Permutation, r: &ParikhVector) -> Result<bool> {
    r.check_total(p.len())?;
    Ok(linking_of_sa(p)
        .as_perm()
        .descents()
        .is_subset_of(&sentinel_boundaries(r)))
}

/// True iff `p` is the suffix array of some word over `k` letters.
pub fn is_suffix_array(p: &Permutation, k: usize) -> bool {
    sentinel_descent_count(p) < k
}

/// The least alphabet size over which `p` is a suffix array.
pub fn min_alphabet(p: &Permutation) -> usize {
    sentinel_descent_count(p) + 1
}

/// The unique word with counts `r` whose suffix array is `p`.
pub fn recover_word_sa(p: &Permutation, r: &ParikhVector) -> Result<Word> {
    if !is_suffix_array_parikh(p, r)? {
        return Err(Error::NotSuffixArray);
    }
    let word = r.spread_over(p);
    assert_eq!(
        &suffix_array(&word),
        p,
        "recovered {word} does not reproduce its suffix array"
    );
    Ok(word)
}

/// `phi(π')` where `π' = (n+1) π(1) … π(n)`.
pub fn linking_of_sa(p: &Permutation) -> LinkingPermutation {
    phi(&append_sentinel_perm(p))
}

/// Inverse of [`linking_of_sa`]: `π⁻¹(i) = φ^i(1) − 1` for `i ∈ [1, n]`.
pub fn sa_from_linking(f: &LinkingPermutation) -> Result<Permutation> {
    let m = f.len();
    if m < 2 {
        return Err(Error::InvalidLength { got: m, min: 2 });
    }
    let inverse: Vec<usize> = f.orbit_of_one().take(m - 1).map(|x| x - 1).collect();
    let p = Permutation::from_values_unchecked(inverse).inverse();
    debug_assert_eq!(&linking_of_sa(&p), f);
    Ok(p)
}

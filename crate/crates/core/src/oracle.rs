//! Brute-force ground truth.
//!
//! Nothing here goes through the characterization or counting code: words
//! are enumerated and suffix-sorted directly, permutations are scanned
//! exhaustively, and the results are grouped. Search spaces are capped and
//! exceeding a cap is an error, never a silent truncation.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::enumerate::BigCount;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::strings::{suffix_array, suffix_array_sentinel, SentinelWord, Word};

/// Default cap on the number of words a census may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Largest `n` for which `S_n` (or `S_{n+1}` for one-orbit censuses) is scanned.
pub const MAX_PERM_SCAN: usize = 8;

/// Largest binary word length scanned for mid-sentinel suffix arrays.
pub const MAX_BINARY_SCAN: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}

fn space_size(n: usize, k: usize, budget: u64) -> Result<u64> {
    let size = (k as u128).checked_pow(n as u32);
    match size {
        Some(s) if s <= budget as u128 => Ok(s as u64),
        Some(s) => Err(Error::BudgetExceeded { size: s, budget }),
        None => Err(Error::BudgetExceeded {
            size: u128::MAX,
            budget,
        }),
    }
}

/// The `index`-th word of `[1, k]^n` in lexicographic order.
fn word_at(mut index: u64, n: usize, k: usize) -> Word {
    let mut letters = vec![1; n];
    for slot in letters.iter_mut().rev() {
        *slot = (index % k as u64) as usize + 1;
        index /= k as u64;
    }
    Word::new_unchecked(letters, k)
}

/// Every word of `[1, k]^n` in lexicographic order.
pub struct AllWords {
    n: usize,
    k: usize,
    next: u64,
    end: u64,
}

impl Iterator for AllWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.next == self.end {
            return None;
        }
        let w = word_at(self.next, self.n, self.k);
        self.next += 1;
        Some(w)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for AllWords {}

pub fn all_words(n: usize, k: usize) -> Result<AllWords> {
    all_words_with_budget(n, k, DEFAULT_BUDGET)
}

pub fn all_words_with_budget(n: usize, k: usize, budget: u64) -> Result<AllWords> {
    if n == 0 {
        return Err(Error::InvalidLength { got: 0, min: 1 });
    }
    if k == 0 {
        return Err(Error::InvalidWord("alphabet size must be positive".into()));
    }
    let end = space_size(n, k, budget)?;
    Ok(AllWords { n, k, next: 0, end })
}

/// All words of `[1, k]^n` grouped by suffix array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaCensus {
    n: usize,
    k: usize,
    groups: BTreeMap<Permutation, Vec<Word>>,
}

impl SaCensus {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn groups(&self) -> &BTreeMap<Permutation, Vec<Word>> {
        &self.groups
    }

    /// Distinct suffix arrays, sorted.
    pub fn keys(&self) -> impl Iterator<Item = &Permutation> {
        self.groups.keys()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.groups.contains_key(p)
    }

    /// Words with suffix array `p`, lexicographically sorted.
    pub fn group(&self, p: &Permutation) -> &[Word] {
        self.groups.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, p: &Permutation) -> BigCount {
        BigCount::from(self.group(p).len())
    }

    /// Words with suffix array `p` that use every one of the `k` letters.
    pub fn count_surjective(&self, p: &Permutation) -> BigCount {
        let k = self.k;
        let n = self
            .group(p)
            .iter()
            .filter(|w| {
                let used: BTreeSet<_> = w.letters().iter().collect();
                used.len() == k
            })
            .count();
        BigCount::from(n)
    }

    pub fn total_words(&self) -> usize {
        self.groups.values().map(Vec::len).sum()
    }

    /// Internal consistency: totals are `k^n` and every key recomputes.
    pub fn validate(&self) -> bool {
        let expected = (self.k as u128).pow(self.n as u32);
        self.total_words() as u128 == expected
            && self
                .groups
                .iter()
                .all(|(p, ws)| ws.iter().all(|w| suffix_array(w) == *p))
    }
}

pub fn sa_census(n: usize, k: usize) -> Result<SaCensus> {
    sa_census_with(n, k, DEFAULT_BUDGET, Execution::default())
}

/// Builds the census; serial and parallel runs give identical results.
pub fn sa_census_with(n: usize, k: usize, budget: u64, exec: Execution) -> Result<SaCensus> {
    let words = all_words_with_budget(n, k, budget)?;
    let end = words.end;
    let keyed: Vec<(Permutation, Word)> = match exec {
        Execution::Serial => words.map(|w| (suffix_array(&w), w)).collect(),
        Execution::Parallel => (0..end)
            .into_par_iter()
            .map(|i| {
                let w = word_at(i, n, k);
                (suffix_array(&w), w)
            })
            .collect(),
    };
    let mut groups: BTreeMap<Permutation, Vec<Word>> = BTreeMap::new();
    for (p, w) in keyed {
        groups.entry(p).or_default().push(w);
    }
    Ok(SaCensus { n, k, groups })
}

fn check_scan(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n < 1 || n > max {
        return Err(Error::OutOfRange {
            what,
            value: n,
            lo: 1,
            hi: max,
        });
    }
    Ok(())
}

/// Permutations of `[1, n]` with exactly `d` descents, by scanning `S_n`.
pub fn brute_eulerian(n: usize, d: usize) -> Result<BigCount> {
    check_scan("n", n, MAX_PERM_SCAN)?;
    let count = Permutation::all(n)
        .filter(|p| p.descents().len() == d)
        .count();
    Ok(BigCount::from(count))
}

/// Scans `S_{n+1}`, keeps the one-orbit permutations and buckets them by
/// the number of descents other than 1.
pub fn brute_one_orbit_census(n: usize) -> Result<BTreeMap<usize, BigCount>> {
    check_scan("n", n, MAX_PERM_SCAN)?;
    let mut hist: BTreeMap<usize, u64> = BTreeMap::new();
    for p in Permutation::all(n + 1).filter(Permutation::is_one_orbit) {
        let d = p.descents().count_except_first();
        *hist.entry(d).or_default() += 1;
    }
    Ok(hist
        .into_iter()
        .map(|(d, c)| (d, BigCount::from(c)))
        .collect())
}

/// Suffix arrays of `w♯` under `a < ♯ < b` for every `w ∈ {a, b}^n`.
pub fn brute_mid_sentinel_sas(n: usize) -> Result<BTreeSet<Permutation>> {
    check_scan("n", n, MAX_BINARY_SCAN)?;
    all_words(n, 2)?
        .map(|w| Ok(suffix_array_sentinel(&SentinelWord::new(w, 2)?)))
        .collect()
}

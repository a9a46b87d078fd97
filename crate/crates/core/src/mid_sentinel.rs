//! Binary suffix arrays with the sentinel ranked between the letters,
//! `a < ♯ < b`.
//!
//! With this order the suffixes of `w` and of `w♯` no longer sort the same
//! way, so these arrays are their own family. They are characterized three
//! ways here: by the descents of the linking permutation, by the
//! ascending-to-max and non-nesting conditions on `π⁻¹`, and by brute force
//! in [`crate::oracle`].

use crate::error::{Error, Result};
use crate::linking::phi;
use crate::perm::Permutation;
use crate::strings::{suffix_array_sentinel, SentinelWord, Word};

const A: usize = 1;
const B: usize = 2;
// a -> 1, ♯ -> 2, b -> 3
const MID_RANK: usize = 2;

fn check_len(p: &Permutation) -> Result<()> {
    if p.len() < 2 {
        return Err(Error::InvalidLength {
            got: p.len(),
            min: 2,
        });
    }
    Ok(())
}

/// Suffix array of `w♯` under `a < ♯ < b`; length `n + 1`.
pub fn mid_sentinel_sa(w: &Word) -> Result<Permutation> {
    if let Some(&c) = w.letters().iter().find(|&&c| c > B) {
        return Err(Error::NotBinary(c));
    }
    let binary = Word::new_unchecked(w.letters().to_vec(), B);
    let sw = SentinelWord::new(binary, MID_RANK)?;
    Ok(suffix_array_sentinel(&sw))
}

/// True iff `Des(phi(p)) ⊆ {pos − 1, pos} ∩ [1, n]`, `pos = p⁻¹(n + 1)`.
pub fn is_mid_sentinel_sa(p: &Permutation) -> Result<bool> {
    check_len(p)?;
    let m = p.len();
    let pos = p.inverse().apply(m);
    // pos - 1 = 0 and pos = m are not descent positions; dropping them is implicit
    let allowed = [pos - 1, pos];
    Ok(phi(p).as_perm().descents().is_subset_of(&allowed))
}

/// For every `i ∈ [1, n − 1]`: if `π⁻¹(i)` and `π⁻¹(i+1)` are both left of
/// `π⁻¹(n+1)` they increase, and if both are right of it they decrease.
pub fn is_ascending_to_max(p: &Permutation) -> Result<bool> {
    check_len(p)?;
    let m = p.len();
    let inv = p.inverse();
    let top = inv.apply(m);
    Ok((1..m - 1).all(|i| {
        let (x, y) = (inv.apply(i), inv.apply(i + 1));
        if x < top && y < top {
            x < y
        } else if x > top && y > top {
            x > y
        } else {
            true
        }
    }))
}

/// For `i, j ∈ [1, n]` with `π⁻¹(i) < π⁻¹(j)` and both steps `i → i+1`,
/// `j → j+1` going the same direction in `π⁻¹`, the targets keep their
/// order: `π⁻¹(i+1) < π⁻¹(j+1)`.
pub fn is_non_nesting(p: &Permutation) -> Result<bool> {
    check_len(p)?;
    let m = p.len();
    let inv = p.inverse();
    let up = |i: usize| inv.apply(i) < inv.apply(i + 1);
    for i in 1..m {
        for j in 1..m {
            if inv.apply(i) < inv.apply(j) && up(i) == up(j) && inv.apply(i + 1) > inv.apply(j + 1)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The unique binary `w` with `mid_sentinel_sa(w) = p`: letters sorted
/// before the sentinel's rank are `a`, after it `b`.
pub fn recover_binary_word(p: &Permutation) -> Result<Word> {
    if !is_mid_sentinel_sa(p)? {
        return Err(Error::NotMidSentinelSuffixArray);
    }
    let m = p.len();
    let pos = p.inverse().apply(m);
    let mut letters = vec![0; m - 1];
    for (i, &at) in p.values().iter().enumerate() {
        if at != m {
            letters[at - 1] = if i + 1 < pos { A } else { B };
        }
    }
    let word = Word::new_unchecked(letters, B);
    assert_eq!(
        &mid_sentinel_sa(&word)?,
        p,
        "recovered {word} does not reproduce its suffix array"
    );
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use std::collections::HashSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s, Some(2)).unwrap()
    }

    fn binary_words(n: usize) -> impl Iterator<Item = Word> {
        (0..n)
            .map(|_| 1..=2)
            .multi_cartesian_product()
            .map(|l| Word::new(l, 2).unwrap())
    }

    #[test]
    fn mid_sentinel_sa_examples() {
        assert_eq!(mid_sentinel_sa(&w("ab")).unwrap(), p("1 3 2"));
        assert_eq!(mid_sentinel_sa(&w("a")).unwrap(), p("1 2"));
        assert_eq!(mid_sentinel_sa(&w("b")).unwrap(), p("2 1"));
        assert_eq!(mid_sentinel_sa(&w("aba")).unwrap(), p("3 1 4 2"));
        assert_eq!(mid_sentinel_sa(&w("aaa")).unwrap(), p("1 2 3 4"));
        let abc = Word::parse("abc", None).unwrap();
        assert_eq!(mid_sentinel_sa(&abc), Err(Error::NotBinary(3)));
        // binary letters over a declared larger alphabet are still binary
        assert!(mid_sentinel_sa(&Word::parse("ab", Some(3)).unwrap()).is_ok());
    }

    #[test]
    fn descent_predicate_examples() {
        assert!(is_mid_sentinel_sa(&p("1 3 2")).unwrap());
        assert!(is_mid_sentinel_sa(&p("2 1")).unwrap());
        // suffix array of "aaa#" under a < # < b
        assert!(is_mid_sentinel_sa(&p("1 2 3 4")).unwrap());
        assert!(!is_mid_sentinel_sa(&p("2 1 3")).unwrap());
        assert!(is_mid_sentinel_sa(&p("1")).is_err());
    }

    #[test]
    fn ascending_to_max_examples() {
        assert!(is_ascending_to_max(&p("1 3 2")).unwrap());
        assert!(is_ascending_to_max(&p("2 1")).unwrap());
        // no i has both inverse values on one side of the maximum
        assert!(is_ascending_to_max(&p("3 1 4 2")).unwrap());
        // clause (a) fails at i = 1
        assert!(!is_ascending_to_max(&p("2 1 3 4")).unwrap());
        assert!(is_ascending_to_max(&p("1")).is_err());
    }

    #[test]
    fn non_nesting_examples() {
        assert!(is_non_nesting(&p("1 3 2")).unwrap());
        assert!(is_non_nesting(&p("2 1")).unwrap());
        assert!(is_non_nesting(&p("1 2 3 4")).unwrap());
        assert!(is_non_nesting(&p("1")).is_err());
    }

    #[test]
    fn non_nesting_can_fail_alone() {
        // some permutation is ascending-to-max but nesting
        let found = (2..=5)
            .flat_map(Permutation::all)
            .any(|q| is_ascending_to_max(&q).unwrap() && !is_non_nesting(&q).unwrap());
        assert!(found);
    }

    #[test]
    fn recover_binary_word_examples() {
        assert_eq!(recover_binary_word(&p("1 3 2")).unwrap(), w("ab"));
        assert_eq!(recover_binary_word(&p("2 1")).unwrap(), w("b"));
        assert_eq!(recover_binary_word(&p("1 2")).unwrap(), w("a"));
        assert_eq!(
            recover_binary_word(&p("2 1 3")),
            Err(Error::NotMidSentinelSuffixArray)
        );
    }

    #[test]
    fn recovery_round_trips() {
        for n in 1..=10 {
            for word in binary_words(n) {
                let sa = mid_sentinel_sa(&word).unwrap();
                assert_eq!(recover_binary_word(&sa).unwrap(), word);
            }
        }
    }

    #[test]
    fn three_characterizations_agree() {
        for n in 1..=6 {
            let brute: HashSet<_> = binary_words(n)
                .map(|x| mid_sentinel_sa(&x).unwrap())
                .collect();
            assert_eq!(brute.len(), 1 << n);
            for q in Permutation::all(n + 1) {
                let by_descents = is_mid_sentinel_sa(&q).unwrap();
                let by_conditions = is_ascending_to_max(&q).unwrap() && is_non_nesting(&q).unwrap();
                assert_eq!(by_descents, by_conditions, "{q}");
                assert_eq!(by_descents, brute.contains(&q), "{q}");
            }
        }
    }

    #[test]
    fn matches_rotation_order() {
        for n in 1..=8 {
            for word in binary_words(n) {
                let ext = SentinelWord::new(word.clone(), MID_RANK)
                    .unwrap()
                    .extended();
                assert_eq!(
                    mid_sentinel_sa(&word).unwrap(),
                    crate::strings::bw_array(&ext).unwrap()
                );
            }
        }
    }
}

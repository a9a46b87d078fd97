//! Words over an ordered alphabet `a_1 < … < a_k`, stored as letter ranks,
//! with naive suffix-array and BW-array construction.
//!
//! Construction is plain comparison sorting. It is quadratic in the worst
//! case, which is fine for the word lengths this crate deals in, and simple
//! enough to serve as the reference the characterizations are tested against.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::characterize::ParikhVector;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Sentinel character in the text format.
pub const SENTINEL_CHAR: char = '#';

/// A non-empty word; each letter is a rank in `[1, k]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<usize>,
    k: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, k: usize) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidLength { got: 0, min: 1 });
        }
        if k == 0 {
            return Err(Error::InvalidWord("alphabet size must be positive".into()));
        }
        if let Some(&bad) = letters.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::InvalidWord(format!(
                "letter rank {bad} outside [1, {k}]"
            )));
        }
        Ok(Word { letters, k })
    }

    pub(crate) fn new_unchecked(letters: Vec<usize>, k: usize) -> Self {
        debug_assert!(Word::new(letters.clone(), k).is_ok());
        Word { letters, k }
    }

    /// Parses lowercase ASCII letters, `'a'` being rank 1.
    ///
    /// Without `alphabet_size` the alphabet is `[1, largest rank used]`.
    pub fn parse(s: &str, alphabet_size: Option<usize>) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                'a'..='z' => Ok(c as usize - 'a' as usize + 1),
                _ => Err(Error::InvalidWord(format!("unexpected character {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let used = letters.iter().copied().max().unwrap_or(0);
        match alphabet_size {
            Some(k) if k < used => Err(Error::InvalidWord(format!(
                "letter rank {used} exceeds alphabet size {k}"
            ))),
            Some(k) => Word::new(letters, k),
            None => Word::new(letters, used),
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Letter rank at 1-based position `i`.
    pub fn letter(&self, i: usize) -> usize {
        self.letters[i - 1]
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.k
    }

    /// The same letters seen over a larger alphabet.
    pub fn with_alphabet_size(&self, k: usize) -> Result<Self> {
        Word::new(self.letters.clone(), k)
    }

    pub fn suffix_array(&self) -> Permutation {
        suffix_array(self)
    }

    pub fn is_primitive(&self) -> bool {
        is_primitive(self)
    }

    pub fn parikh(&self) -> ParikhVector {
        parikh(self)
    }
}

impl fmt::Display for Word {
    /// Letters `a..z` when every rank fits, otherwise the ranks themselves
    /// separated by dots.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&c| c <= 26) {
            for &c in &self.letters {
                write!(f, "{}", (b'a' + (c - 1) as u8) as char)?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.letters.iter().format("."))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self}, k={})", self.k)
    }
}

/// A word followed by a single sentinel `♯`.
///
/// `sentinel_rank` places `♯` in the extended order: 1 puts it below every
/// letter, `r` puts it directly above `a_{r-1}`, and `k + 1` above all of
/// them. Letters at or above that rank move up by one in the extended word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SentinelWord {
    base: Word,
    sentinel_rank: usize,
}

impl SentinelWord {
    pub fn new(base: Word, sentinel_rank: usize) -> Result<Self> {
        let hi = base.alphabet_size() + 1;
        if sentinel_rank < 1 || sentinel_rank > hi {
            return Err(Error::OutOfRange {
                what: "sentinel rank",
                value: sentinel_rank,
                lo: 1,
                hi,
            });
        }
        Ok(SentinelWord {
            base,
            sentinel_rank,
        })
    }

    /// `w♯` with `♯` below every letter.
    pub fn smallest(base: Word) -> Self {
        SentinelWord {
            base,
            sentinel_rank: 1,
        }
    }

    pub fn base(&self) -> &Word {
        &self.base
    }

    pub fn sentinel_rank(&self) -> usize {
        self.sentinel_rank
    }

    /// The `(n+1)`-letter word over `k + 1` ranks, sentinel last.
    pub fn extended(&self) -> Word {
        let s = self.sentinel_rank;
        let letters = self
            .base
            .letters
            .iter()
            .map(|&c| if c >= s { c + 1 } else { c })
            .chain(std::iter::once(s))
            .collect();
        Word::new_unchecked(letters, self.base.k + 1)
    }
}

impl fmt::Display for SentinelWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.base, SENTINEL_CHAR)
    }
}

impl fmt::Debug for SentinelWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SentinelWord({self}, rank={})", self.sentinel_rank)
    }
}

/// Sorted suffix start positions. A proper prefix sorts before its
/// extensions, so `a < aa`.
pub fn suffix_array(w: &Word) -> Permutation {
    let text = w.letters();
    let mut starts: Vec<usize> = (0..text.len()).collect();
    starts.sort_by(|&a, &b| text[a..].cmp(&text[b..]));
    Permutation::from_values_unchecked(starts.into_iter().map(|i| i + 1).collect())
}

/// True iff `w` is not `v^m` for any `m > 1`.
pub fn is_primitive(w: &Word) -> bool {
    let text = w.letters();
    let n = text.len();
    !(1..n)
        .filter(|d| n.is_multiple_of(*d))
        .any(|d| (d..n).all(|i| text[i] == text[i - d]))
}

fn cmp_rotations(text: &[usize], a: usize, b: usize) -> Ordering {
    let rot = |s: usize| text[s..].iter().chain(&text[..s]);
    rot(a).cmp(rot(b))
}

/// Start positions of the cyclic shifts of a primitive word, in sorted order.
pub fn bw_array(w: &Word) -> Result<Permutation> {
    if !is_primitive(w) {
        return Err(Error::NotPrimitive);
    }
    let text = w.letters();
    let mut starts: Vec<usize> = (0..text.len()).collect();
    starts.sort_by(|&a, &b| cmp_rotations(text, a, b));
    Ok(Permutation::from_values_unchecked(
        starts.into_iter().map(|i| i + 1).collect(),
    ))
}

/// Suffix array of `w♯` under the sentinel's position in the order.
pub fn suffix_array_sentinel(sw: &SentinelWord) -> Permutation {
    suffix_array(&sw.extended())
}

/// `σ ↦ (n+1) σ(1) … σ(n)`.
pub fn append_sentinel_perm(p: &Permutation) -> Permutation {
    let n = p.len();
    let values = std::iter::once(n + 1)
        .chain(p.values().iter().copied())
        .collect();
    Permutation::from_values_unchecked(values)
}

/// Inverse of [`append_sentinel_perm`]; the first value must be the maximum.
pub fn strip_sentinel_perm(p: &Permutation) -> Result<Permutation> {
    let m = p.len();
    if m < 2 {
        return Err(Error::InvalidLength { got: m, min: 2 });
    }
    if p.apply(1) != m {
        return Err(Error::MissingSentinel {
            got: p.apply(1),
            expected: m,
        });
    }
    Ok(Permutation::from_values_unchecked(p.values()[1..].to_vec()))
}

/// Letter occurrence counts over the word's alphabet.
pub fn parikh(w: &Word) -> ParikhVector {
    let mut counts = vec![0; w.alphabet_size()];
    for &c in w.letters() {
        counts[c - 1] += 1;
    }
    ParikhVector::new(counts).expect("alphabet size is positive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s, None).unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Every word in [1,k]^n.
    fn words(n: usize, k: usize) -> Vec<Word> {
        (0..n)
            .map(|_| 1..=k)
            .multi_cartesian_product()
            .map(|l| Word::new(l, k).unwrap())
            .collect()
    }

    #[test]
    fn suffix_array_examples() {
        assert_eq!(suffix_array(&w("babba")), p("5 2 4 1 3"));
        assert_eq!(suffix_array(&w("aaa")), p("3 2 1"));
        assert_eq!(suffix_array(&w("abc")), p("1 2 3"));
    }

    #[test]
    fn primitive_examples() {
        assert!(is_primitive(&w("a")));
        assert!(!is_primitive(&w("abab")));
        assert!(is_primitive(&w("bbaba")));
        assert!(!is_primitive(&w("aaa")));
        assert!(is_primitive(&w("aab")));
    }

    #[test]
    fn primitivity_matches_distinct_rotations() {
        for n in 1..=8 {
            for word in words(n, 2) {
                let t = word.letters();
                let mut rots: Vec<Vec<usize>> =
                    (0..n).map(|s| [&t[s..], &t[..s]].concat()).collect();
                rots.sort();
                rots.dedup();
                assert_eq!(is_primitive(&word), rots.len() == n, "{word}");
            }
        }
    }

    #[test]
    fn bw_array_examples() {
        assert_eq!(bw_array(&w("bbaba")).unwrap(), p("3 5 2 4 1"));
        assert_eq!(bw_array(&w("a")).unwrap(), p("1"));
        assert_eq!(bw_array(&w("ab")).unwrap(), p("1 2"));
        assert_eq!(bw_array(&w("abab")), Err(Error::NotPrimitive));
    }

    #[test]
    fn sentinel_examples() {
        let babba = SentinelWord::smallest(w("babba"));
        assert_eq!(suffix_array_sentinel(&babba), p("6 5 2 4 1 3"));
        let ab_mid = SentinelWord::new(w("ab"), 2).unwrap();
        assert_eq!(ab_mid.extended().letters(), &[1, 3, 2]);
        assert_eq!(suffix_array_sentinel(&ab_mid), p("1 3 2"));
        assert_eq!(
            suffix_array_sentinel(&SentinelWord::smallest(w("a"))),
            p("2 1")
        );
        assert!(SentinelWord::new(w("ab"), 0).is_err());
        assert!(SentinelWord::new(w("ab"), 4).is_err());
        assert_eq!(babba.to_string(), "babba#");
    }

    #[test]
    fn append_and_strip_examples() {
        assert_eq!(append_sentinel_perm(&p("5 2 4 1 3")), p("6 5 2 4 1 3"));
        assert_eq!(
            strip_sentinel_perm(&p("6 5 2 4 1 3")).unwrap(),
            p("5 2 4 1 3")
        );
        assert_eq!(append_sentinel_perm(&p("1")), p("2 1"));
        assert_eq!(
            strip_sentinel_perm(&p("5 6 2 4 1 3")),
            Err(Error::MissingSentinel {
                got: 5,
                expected: 6
            })
        );
        assert!(strip_sentinel_perm(&p("1")).is_err());
    }

    #[test]
    fn parikh_examples() {
        assert_eq!(parikh(&w("babba")).counts(), &[2, 3]);
        assert_eq!(parikh(&w("aaa")).counts(), &[3]);
        assert_eq!(parikh(&w("abc")).counts(), &[1, 1, 1]);
        let wide = Word::parse("b", Some(4)).unwrap();
        assert_eq!(parikh(&wide).counts(), &[0, 1, 0, 0]);
    }

    #[test]
    fn parse_and_display() {
        assert!(Word::parse("", None).is_err());
        assert!(Word::parse("aB", None).is_err());
        assert!(Word::parse("abc", Some(2)).is_err());
        assert_eq!(Word::parse("ab", Some(5)).unwrap().alphabet_size(), 5);
        assert_eq!(w("babba").to_string(), "babba");
        assert_eq!(Word::new(vec![27, 1], 27).unwrap().to_string(), "27.1");
    }

    #[test]
    fn smallest_sentinel_prepends_max() {
        for n in 1..=8 {
            for k in 1..=3 {
                for word in words(n, k) {
                    let sw = SentinelWord::smallest(word.clone());
                    assert_eq!(
                        suffix_array_sentinel(&sw),
                        append_sentinel_perm(&suffix_array(&word))
                    );
                }
            }
        }
    }

    #[test]
    fn sentinel_suffix_order_equals_rotation_order() {
        for n in 1..=6 {
            for k in 1..=3 {
                for word in words(n, k) {
                    for rank in 1..=k + 1 {
                        let sw = SentinelWord::new(word.clone(), rank).unwrap();
                        let ext = sw.extended();
                        assert!(is_primitive(&ext));
                        assert_eq!(suffix_array_sentinel(&sw), bw_array(&ext).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn bw_first_letters_nondecreasing() {
        for n in 1..=7 {
            for word in words(n, 3).into_iter().filter(is_primitive) {
                let bwa = bw_array(&word).unwrap();
                let firsts: Vec<_> = bwa.values().iter().map(|&i| word.letter(i)).collect();
                assert!(firsts.windows(2).all(|x| x[0] <= x[1]), "{word}");
            }
        }
    }

    #[test]
    fn suffix_array_ignores_order_preserving_relabeling() {
        // map [1,3] into [1,5] strictly increasingly
        let maps: Vec<[usize; 3]> = (1..=5)
            .tuple_combinations()
            .map(|(a, b, c)| [a, b, c])
            .collect();
        for n in 1..=6 {
            for word in words(n, 3) {
                let sa = suffix_array(&word);
                for m in &maps {
                    let relabeled =
                        Word::new(word.letters().iter().map(|&c| m[c - 1]).collect(), 5).unwrap();
                    assert_eq!(suffix_array(&relabeled), sa);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn word_text_round_trips(letters in prop::collection::vec(1usize..=26, 1..30)) {
            let word = Word::new(letters, 26).unwrap();
            prop_assert_eq!(Word::parse(&word.to_string(), Some(26)).unwrap(), word);
        }

        #[test]
        fn suffix_array_sorts_suffixes(letters in prop::collection::vec(1usize..=3, 1..40)) {
            let word = Word::new(letters, 3).unwrap();
            let sa = suffix_array(&word);
            let t = word.letters();
            for pair in sa.values().windows(2) {
                prop_assert!(t[pair[0] - 1..] < t[pair[1] - 1..]);
            }
        }
    }
}

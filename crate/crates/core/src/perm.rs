//! Permutations of `[1, n]` with the arithmetic the rest of the crate needs:
//! composition, inversion, cyclic value shifts, descents, orbits and the
//! shift equivalence.
//!
//! Positions and values are 1-based everywhere in the public API. A
//! permutation is written as its one-line notation, `5 2 4 1 3` meaning
//! `π(1) = 5, π(2) = 2, …`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Adds `k` to the value `v` modulo `n`, staying in `[1, n]`.
///
/// This is the only place wraparound is computed: `n + 1 ≡ 1`.
#[inline]
pub(crate) fn wrap_add(v: usize, k: usize, n: usize) -> usize {
    debug_assert!(v >= 1 && v <= n);
    (v - 1 + k % n) % n + 1
}

/// A bijection of `[1, n]` onto itself, `n ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // values[i - 1] = π(i)
    values: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidLength { got: 0, min: 1 });
        }
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 {
                return Err(Error::InvalidPermutation("value 0 is not allowed".into()));
            }
            if v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} exceeds length {n}"
                )));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation(format!("duplicate value {v}")));
            }
        }
        Ok(Permutation { values })
    }

    /// Caller guarantees `values` is a rearrangement of `1..=n`.
    pub(crate) fn from_values_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidLength { got: 0, min: 1 });
        }
        Ok(Permutation {
            values: (1..=n).collect(),
        })
    }

    /// Every permutation of `[1, n]`, in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n)
            .permutations(n)
            .filter(|v| !v.is_empty())
            .map(Permutation::from_values_unchecked)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `π(i)` for a 1-based position `i`.
    ///
    /// Panics if `i` is not in `[1, n]`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        assert!(
            i >= 1 && i <= self.len(),
            "position {i} outside [1, {}]",
            self.len()
        );
        self.values[i - 1]
    }

    /// The one-line notation.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_same_len(other)?;
        Ok(Permutation {
            values: other.values.iter().map(|&v| self.values[v - 1]).collect(),
        })
    }

    /// `(π + k)(i) = π(i) + k` with wraparound, for `k ∈ [1, n]`.
    pub fn shift(&self, k: usize) -> Result<Permutation> {
        let n = self.len();
        if k < 1 || k > n {
            return Err(Error::OutOfRange {
                what: "shift",
                value: k,
                lo: 1,
                hi: n,
            });
        }
        Ok(self.shift_unchecked(k))
    }

    pub(crate) fn shift_unchecked(&self, k: usize) -> Permutation {
        let n = self.len();
        Permutation {
            values: self.values.iter().map(|&v| wrap_add(v, k, n)).collect(),
        }
    }

    pub fn descents(&self) -> DescentSet {
        DescentSet {
            positions: self
                .values
                .windows(2)
                .enumerate()
                .filter(|(_, w)| w[0] > w[1])
                .map(|(i, _)| i + 1)
                .collect(),
        }
    }

    /// Number of cycles in the disjoint cycle decomposition.
    pub fn orbit_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut cycles = 0;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.values[i] - 1;
            }
        }
        cycles
    }

    pub fn is_one_orbit(&self) -> bool {
        self.orbit_count() == 1
    }

    /// True iff `other = self + k` for some `k ∈ [1, n]`.
    pub fn equivalent(&self, other: &Permutation) -> Result<bool> {
        self.check_same_len(other)?;
        // The shift is forced by the first value.
        let n = self.len();
        let k = (other.values[0] + n - self.values[0]) % n;
        let k = if k == 0 { n } else { k };
        Ok(self.shift_unchecked(k) == *other)
    }

    /// The member of the shift class whose first value is `n`.
    pub fn canonical_rep(&self) -> Permutation {
        let n = self.len();
        let k = n - self.values[0];
        if k == 0 {
            self.clone()
        } else {
            self.shift_unchecked(k)
        }
    }

    fn check_same_len(&self, other: &Permutation) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.values.iter().format(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Whitespace-separated 1-based values, e.g. `"5 2 4 1 3"`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("not a number: {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}

/// The descent set `{ i ∈ [1, n-1] : π(i) > π(i+1) }`, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DescentSet {
    positions: Vec<usize>,
}

impl DescentSet {
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.positions.binary_search(&i).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.positions.iter().copied()
    }

    /// Number of descents other than position 1.
    pub fn count_except_first(&self) -> usize {
        self.len() - usize::from(self.contains(1))
    }

    /// True iff every descent is in `allowed`.
    pub fn is_subset_of(&self, allowed: &[usize]) -> bool {
        self.iter().all(|d| allowed.contains(&d))
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.positions.iter().format(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn identity_examples() {
        assert_eq!(Permutation::identity(1).unwrap(), p("1"));
        assert_eq!(Permutation::identity(3).unwrap(), p("1 2 3"));
        assert_eq!(Permutation::identity(5).unwrap(), p("1 2 3 4 5"));
        assert_eq!(
            Permutation::identity(0),
            Err(Error::InvalidLength { got: 0, min: 1 })
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("1 2 3").inverse(), p("1 2 3"));
        assert_eq!(p("5 2 4 1 3").inverse(), p("4 2 5 3 1"));
        assert_eq!(p("2 3 1").inverse(), p("3 1 2"));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(p("3 1 2").compose(&p("1 2 3")).unwrap(), p("3 1 2"));
        assert_eq!(p("3 1 2").compose(&p("2 3 1")).unwrap(), p("1 2 3"));
        assert_eq!(
            p("5 2 4 1 3").compose(&p("4 2 5 3 1")).unwrap(),
            p("1 2 3 4 5")
        );
        assert_eq!(
            p("1 2").compose(&p("1 2 3")),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p("5 2 4 1 3").shift(5).unwrap(), p("5 2 4 1 3"));
        assert_eq!(p("5 2 4 1 3").shift(2).unwrap(), p("2 4 1 3 5"));
        assert_eq!(p("1 2 3").shift(1).unwrap(), p("2 3 1"));
        assert!(p("1 2 3").shift(0).is_err());
        assert!(p("1 2 3").shift(4).is_err());
    }

    #[test]
    fn descent_examples() {
        assert!(p("1 2 3 4").descents().is_empty());
        assert_eq!(p("5 2 4 1 3").descents().positions(), &[1, 3]);
        assert_eq!(p("4 5 1 2 3").descents().positions(), &[2]);
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(p("1 2 3").orbit_count(), 3);
        assert!(!p("1 2 3").is_one_orbit());
        assert_eq!(p("4 5 1 2 3").orbit_count(), 1);
        assert!(p("4 5 1 2 3").is_one_orbit());
        assert_eq!(p("2 1 4 3").orbit_count(), 2);
        assert!(!p("2 1 4 3").is_one_orbit());
    }

    #[test]
    fn equivalence_examples() {
        assert!(p("5 2 4 1 3").equivalent(&p("5 2 4 1 3")).unwrap());
        assert!(p("5 2 4 1 3").equivalent(&p("2 4 1 3 5")).unwrap());
        assert!(!p("1 2 3").equivalent(&p("1 3 2")).unwrap());
        assert!(p("1 2").equivalent(&p("1 2 3")).is_err());
    }

    #[test]
    fn canonical_rep_examples() {
        assert_eq!(p("5 2 4 1 3").canonical_rep(), p("5 2 4 1 3"));
        assert_eq!(p("2 4 1 3 5").canonical_rep(), p("5 2 4 1 3"));
        assert_eq!(p("1 2 3").canonical_rep(), p("3 1 2"));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!("".parse::<Permutation>().is_err());
        assert!("1 1".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
        assert!("1 3".parse::<Permutation>().is_err());
        assert!("1 x".parse::<Permutation>().is_err());
        assert_eq!(p(" 2\t1 ").to_string(), "2 1");
    }

    #[test]
    fn equivalence_is_an_equivalence_relation() {
        for n in 1..=5 {
            let all: Vec<_> = Permutation::all(n).collect();
            for a in &all {
                assert!(a.equivalent(a).unwrap());
                for b in &all {
                    let ab = a.equivalent(b).unwrap();
                    assert_eq!(ab, b.equivalent(a).unwrap());
                    assert_eq!(ab, a.canonical_rep() == b.canonical_rep());
                    // brute force over every shift
                    assert_eq!(ab, (1..=n).any(|k| a.shift(k).unwrap() == *b));
                    if ab {
                        for c in &all {
                            if b.equivalent(c).unwrap() {
                                assert!(a.equivalent(c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn one_orbit_census_is_factorial() {
        let mut fact = 1;
        for n in 1..=7 {
            if n > 1 {
                fact *= n - 1;
            }
            let count = Permutation::all(n)
                .filter(Permutation::is_one_orbit)
                .count();
            assert_eq!(count, fact, "n = {n}");
        }
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..40).prop_flat_map(|n| {
            Just((1..=n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(Permutation::from_values_unchecked)
        })
    }

    proptest! {
        #[test]
        fn inverse_composes_to_identity(p in arb_perm()) {
            let id = Permutation::identity(p.len()).unwrap();
            prop_assert_eq!(p.inverse().compose(&p).unwrap(), id.clone());
            prop_assert_eq!(p.compose(&p.inverse()).unwrap(), id);
        }

        #[test]
        fn shifts_add(p in arb_perm(), a in 1usize..100, b in 1usize..100) {
            let n = p.len();
            let k1 = (a - 1) % n + 1;
            let k2 = (b - 1) % n + 1;
            let lhs = p.shift(k1).unwrap().shift(k2).unwrap();
            prop_assert_eq!(lhs, p.shift((k1 + k2 - 1) % n + 1).unwrap());
            prop_assert_eq!(p.shift(n).unwrap(), p.clone());
        }

        #[test]
        fn shift_is_left_composition(p in arb_perm(), a in 1usize..100) {
            let k = (a - 1) % p.len() + 1;
            let id_k = Permutation::identity(p.len()).unwrap().shift(k).unwrap();
            prop_assert_eq!(p.shift(k).unwrap(), id_k.compose(&p).unwrap());
        }

        #[test]
        fn canonical_rep_starts_with_max(p in arb_perm()) {
            let c = p.canonical_rep();
            prop_assert_eq!(c.apply(1), p.len());
            prop_assert!(p.equivalent(&c).unwrap());
        }

        #[test]
        fn text_format_round_trips(p in arb_perm()) {
            prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
        }
    }
}

//! The linking mapping `π ↦ φ = π⁻¹(π + 1)` and its inverse.
//!
//! For a BW-array or suffix array `π`, the linking permutation sends the
//! rank of a rotation (or suffix) to the rank of the one starting a position
//! later. It always has a single orbit, and it is constant on the shift
//! classes of `π`, so `π` is recovered from `φ` together with `π(1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{wrap_add, Permutation};

/// A permutation certified to consist of one `n`-cycle.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkingPermutation(Permutation);

impl LinkingPermutation {
    pub fn new(perm: Permutation) -> Result<Self> {
        if perm.is_one_orbit() {
            Ok(LinkingPermutation(perm))
        } else {
            Err(Error::NotOneOrbit)
        }
    }

    pub(crate) fn new_asserted(perm: Permutation) -> Self {
        assert!(
            perm.is_one_orbit(),
            "linking permutation {perm} has more than one orbit"
        );
        LinkingPermutation(perm)
    }

    pub fn as_perm(&self) -> &Permutation {
        &self.0
    }

    pub fn into_perm(self) -> Permutation {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0.apply(i)
    }

    /// `φ^i(1)` for `i ∈ [1, n]`.
    pub fn power_of_one(&self, i: usize) -> Result<usize> {
        let n = self.len();
        if i < 1 || i > n {
            return Err(Error::OutOfRange {
                what: "power",
                value: i,
                lo: 1,
                hi: n,
            });
        }
        Ok((0..i).fold(1, |x, _| self.apply(x)))
    }

    /// The orbit of 1 after the start: `φ(1), φ²(1), …, φⁿ(1) = 1`.
    pub fn orbit_of_one(&self) -> impl Iterator<Item = usize> + '_ {
        let mut x = 1;
        (0..self.len()).map(move |_| {
            x = self.apply(x);
            x
        })
    }
}

impl TryFrom<Permutation> for LinkingPermutation {
    type Error = Error;

    fn try_from(perm: Permutation) -> Result<Self> {
        LinkingPermutation::new(perm)
    }
}

impl AsRef<Permutation> for LinkingPermutation {
    fn as_ref(&self) -> &Permutation {
        &self.0
    }
}

impl fmt::Display for LinkingPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for LinkingPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinkingPermutation({})", self.0)
    }
}

/// The linking permutation `π⁻¹ ∘ (π + 1)`.
///
/// Panics if the result is not a single cycle, which cannot happen for a
/// valid permutation.
pub fn phi(p: &Permutation) -> LinkingPermutation {
    let n = p.len();
    let inv = p.inverse();
    let values = p
        .values()
        .iter()
        .map(|&v| inv.apply(wrap_add(v, 1, n)))
        .collect();
    LinkingPermutation::new_asserted(Permutation::from_values_unchecked(values))
}

/// Rebuilds the unique `π` with `phi(π) = f` and `π(1) = first`.
pub fn unphi(f: &LinkingPermutation, first: usize) -> Result<Permutation> {
    let n = f.len();
    if first < 1 || first > n {
        return Err(Error::OutOfRange {
            what: "first value",
            value: first,
            lo: 1,
            hi: n,
        });
    }
    let mut values = vec![0; n];
    values[0] = first;
    let mut i = 1;
    for _ in 1..n {
        let next = f.apply(i);
        values[next - 1] = wrap_add(values[i - 1], 1, n);
        i = next;
    }
    Ok(Permutation::from_values_unchecked(values))
}

pub fn power_of_one(f: &LinkingPermutation, i: usize) -> Result<usize> {
    f.power_of_one(i)
}

//! Exact counts of suffix arrays and their preimage words, and lazy
//! generators for one-orbit permutations, suffix arrays and the Parikh
//! vectors compatible with a given suffix array.
//!
//! Counting rests on the bijection `π ↦ phi(π')`: a suffix array over `k`
//! letters is a one-orbit permutation of `[1, n+1]` with at most `k − 1`
//! descents other than 1, and those are counted by Eulerian numbers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::characterize::{sa_from_linking, sentinel_descent_count, ParikhVector};
use crate::error::{Error, Result};
use crate::linking::LinkingPermutation;
use crate::perm::Permutation;

pub type BigCount = BigUint;

/// `C(m, r)`, zero when `r < 0` or `r > m`.
pub fn binomial(m: i64, r: i64) -> BigCount {
    if r < 0 || m < 0 || r > m {
        return BigCount::zero();
    }
    let r = r.min(m - r) as u64;
    let m = m as u64;
    // exact at every step: the running value is C(m - r + i, i)
    (1..=r).fold(BigCount::one(), |acc, i| acc * (m - r + i) / i)
}

/// Number of words in `[1, k]^n` whose suffix array is `p`.
pub fn count_words(p: &Permutation, k: usize) -> BigCount {
    let n = p.len() as i64;
    let d = sentinel_descent_count(p) as i64;
    let k = k as i64;
    binomial(n + k - 1 - d, k - 1 - d)
}

/// Number of words in `[1, k]^n` using every letter whose suffix array is `p`.
pub fn count_words_full_alphabet(p: &Permutation, k: usize) -> BigCount {
    let n = p.len() as i64;
    let d = sentinel_descent_count(p) as i64;
    let k = k as i64;
    binomial(n - 1 - d, k - 1 - d)
}

/// Eulerian number: permutations of `[1, n]` with exactly `d` descents.
///
/// Uses the alternating sum `Σ_{j=0}^{d} (−1)^j C(n+1, j) (d+1−j)^n`, an
/// independent route from the recurrence in [`p_count`].
pub fn eulerian(n: usize, d: usize) -> BigCount {
    if n == 0 {
        return if d == 0 {
            BigCount::one()
        } else {
            BigCount::zero()
        };
    }
    if d >= n {
        return BigCount::zero();
    }
    let mut sum = BigInt::zero();
    for j in 0..=d {
        let term =
            BigInt::from(binomial(n as i64 + 1, j as i64)) * BigInt::from(d + 1 - j).pow(n as u32);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum.to_biguint().expect("Eulerian numbers are non-negative")
}

/// One-orbit permutations of `[1, n+1]` with `d` descents other than 1,
/// by `P(n, d) = (d+1) P(n−1, d) + (n−d) P(n−1, d−1)`, `P(1, 0) = 1`.
pub fn p_count(n: usize, d: usize) -> BigCount {
    if n == 0 || d >= n {
        return BigCount::zero();
    }
    // row[j] = P(m, j) for the current m
    let mut row = vec![BigCount::one()];
    for m in 2..=n {
        let mut next = Vec::with_capacity(m);
        for j in 0..m {
            let keep = row.get(j).map_or(BigCount::zero(), |x| x * (j + 1));
            let add = if j > 0 {
                &row[j - 1] * (m - j)
            } else {
                BigCount::zero()
            };
            next.push(keep + add);
        }
        row = next;
    }
    row[d].clone()
}

/// Number of permutations of `[1, n]` that are suffix arrays over `k` letters.
pub fn count_suffix_arrays(n: usize, k: usize) -> BigCount {
    (0..k.min(n)).map(|d| eulerian(n, d)).sum()
}

/// `Aug_s(i) = i` if `i < s`, else `i + 1`; for `s ∈ [2, n+1]`, `i ∈ [1, n]`.
pub fn aug(n: usize, s: usize, i: usize) -> Result<usize> {
    check_range("s", s, 2, n + 1)?;
    check_range("i", i, 1, n)?;
    Ok(aug_unchecked(s, i))
}

#[inline]
fn aug_unchecked(s: usize, i: usize) -> usize {
    if i < s {
        i
    } else {
        i + 1
    }
}

#[inline]
fn aug_inv_unchecked(s: usize, i: usize) -> usize {
    debug_assert_ne!(i, s);
    if i < s {
        i
    } else {
        i - 1
    }
}

fn check_range(what: &'static str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::OutOfRange {
            what,
            value,
            lo,
            hi,
        });
    }
    Ok(())
}

/// Inserts the point `s` into the cycle of `f`, splitting the arc
/// `1 → f(1)` into `1 → s → f(1)` after renumbering `s..=n` upward.
pub fn t_transform(f: &LinkingPermutation, s: usize) -> Result<LinkingPermutation> {
    let n = f.len();
    check_range("s", s, 2, n + 1)?;
    let values = (1..=n + 1)
        .map(|x| {
            if x == 1 {
                s
            } else if x == s {
                aug_unchecked(s, f.apply(1))
            } else {
                aug_unchecked(s, f.apply(aug_inv_unchecked(s, x)))
            }
        })
        .collect();
    Ok(LinkingPermutation::new_asserted(
        Permutation::from_values_unchecked(values),
    ))
}

/// Lazily yields every one-orbit permutation of `[1, n]` exactly once.
///
/// Built from `1` by repeated [`t_transform`]; for each permutation from the
/// level below, `s` runs upward. Only the chain of partial iterators is kept.
pub struct OneOrbit {
    n: usize,
    state: OneOrbitState,
}

enum OneOrbitState {
    Base {
        done: bool,
    },
    Step {
        inner: Box<OneOrbit>,
        current: Option<LinkingPermutation>,
        next_s: usize,
    },
}

impl Iterator for OneOrbit {
    type Item = LinkingPermutation;

    fn next(&mut self) -> Option<LinkingPermutation> {
        match &mut self.state {
            OneOrbitState::Base { done } => {
                if *done {
                    return None;
                }
                *done = true;
                Some(LinkingPermutation::new_asserted(
                    Permutation::identity(1).unwrap(),
                ))
            }
            OneOrbitState::Step {
                inner,
                current,
                next_s,
            } => loop {
                if let Some(f) = current {
                    if *next_s <= self.n {
                        let t = t_transform(f, *next_s).expect("s within range");
                        *next_s += 1;
                        return Some(t);
                    }
                }
                *current = Some(inner.next()?);
                *next_s = 2;
            },
        }
    }
}

/// Every element of `S_n^c`, `(n−1)!` in total; empty for `n = 0`.
pub fn gen_one_orbit(n: usize) -> OneOrbit {
    let state = match n {
        0 => OneOrbitState::Base { done: true },
        1 => OneOrbitState::Base { done: false },
        _ => OneOrbitState::Step {
            inner: Box::new(gen_one_orbit(n - 1)),
            current: None,
            next_s: 2,
        },
    };
    OneOrbit { n, state }
}

/// Every suffix array of length `n` over `k` letters, exactly once.
pub fn gen_suffix_arrays(n: usize, k: usize) -> impl Iterator<Item = Permutation> {
    let n = if n == 0 { 0 } else { n + 1 };
    gen_one_orbit(n)
        .filter(move |f| f.as_perm().descents().count_except_first() < k)
        .map(|f| sa_from_linking(&f).expect("length at least 2"))
}

/// Lazily yields every `(r_1, …, r_k)` with `Σ r_i = n` for which `p` is the
/// suffix array of a word with those counts.
///
/// A Parikh vector is a placement of `k − 1` separators among `n` dots. Each
/// descent `d > 1` of `phi(p')` forces a separator right after dot `d − 1`;
/// the remaining separators are a free multiset over `[0, n]`.
pub struct ParikhStream {
    n: usize,
    forced: Vec<usize>,
    // free separator positions, nondecreasing; None once exhausted
    free: Option<Vec<usize>>,
}

impl Iterator for ParikhStream {
    type Item = ParikhVector;

    fn next(&mut self) -> Option<ParikhVector> {
        let free = self.free.as_mut()?;
        let mut cuts: Vec<usize> = self.forced.iter().chain(free.iter()).copied().collect();
        cuts.sort_unstable();
        let counts = std::iter::once(0)
            .chain(cuts.iter().copied())
            .zip(cuts.iter().copied().chain(std::iter::once(self.n)))
            .map(|(a, b)| b - a)
            .collect();

        // advance the nondecreasing odometer
        match free.iter().rposition(|&x| x < self.n) {
            Some(i) => {
                let v = free[i] + 1;
                free[i..].iter_mut().for_each(|x| *x = v);
            }
            None => self.free = None,
        }
        Some(ParikhVector::new(counts).expect("k >= 1"))
    }
}

pub fn gen_parikh(p: &Permutation, k: usize) -> ParikhStream {
    let n = p.len();
    let forced: Vec<usize> = crate::characterize::linking_of_sa(p)
        .as_perm()
        .descents()
        .iter()
        .filter(|&d| d != 1)
        .map(|d| d - 1)
        .collect();
    let free = (k >= 1 && forced.len() < k).then(|| vec![0; k - 1 - forced.len()]);
    ParikhStream { n, forced, free }
}

//! Cross-checks every characterization and counting result against the
//! brute-force oracle, for all lengths up to `n` and alphabets up to `k`.
//!
//! Used by the `verify` subcommand; each check reports how many cases it
//! looked at and the first few counterexamples, if any.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use itertools::Itertools;

use crate::characterize::{
    is_bw_array, is_suffix_array, is_suffix_array_parikh, linking_of_sa, min_alphabet,
    recover_word_bw, recover_word_sa, sa_from_linking, ParikhVector,
};
use crate::enumerate::{
    count_suffix_arrays, count_words, count_words_full_alphabet, eulerian, gen_one_orbit,
    gen_parikh, gen_suffix_arrays, p_count, t_transform, BigCount,
};
use crate::error::{Error, Result};
use crate::linking::{phi, unphi, LinkingPermutation};
use crate::mid_sentinel::{
    is_ascending_to_max, is_mid_sentinel_sa, is_non_nesting, mid_sentinel_sa, recover_binary_word,
};
use crate::oracle::{
    all_words, brute_eulerian, brute_mid_sentinel_sas, brute_one_orbit_census, sa_census, SaCensus,
    MAX_BINARY_SCAN, MAX_PERM_SCAN,
};
use crate::perm::Permutation;
use crate::strings::{
    append_sentinel_perm, bw_array, is_primitive, parikh, suffix_array, suffix_array_sentinel,
    SentinelWord, Word,
};

const MAX_REPORTED: usize = 3;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        CheckResult {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < MAX_REPORTED {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} cases)", self.name, self.cases)
        } else {
            write!(
                f,
                "FAIL {} ({} cases): {}",
                self.name,
                self.cases,
                self.failures.join("; ")
            )
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub n: usize,
    pub k: usize,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        write!(
            f,
            "{} checks, {} failed (n <= {}, k <= {})",
            self.checks.len(),
            failed,
            self.n,
            self.k
        )
    }
}

fn p(s: &str) -> Permutation {
    s.parse().expect("valid literal")
}

fn factorial(n: usize) -> BigCount {
    (1..=n).map(BigCount::from).product()
}

/// Every `(r_1, …, r_k)` of non-negative integers summing to `n`.
pub fn compositions(n: usize, k: usize) -> Vec<ParikhVector> {
    (0..k)
        .map(|_| 0..=n)
        .multi_cartesian_product()
        .filter(|c| c.iter().sum::<usize>() == n)
        .map(|c| ParikhVector::new(c).expect("k >= 1"))
        .collect()
}

/// Fixed worked examples: the three basic constructions and one insertion.
pub fn check_worked_examples() -> CheckResult {
    let mut c = CheckResult::new("worked-examples");
    let babba = Word::parse("babba", None).expect("literal");
    let bbaba = Word::parse("bbaba", None).expect("literal");
    c.check(suffix_array(&babba) == p("5 2 4 1 3"), || {
        "suffix_array(babba)".into()
    });
    c.check(bw_array(&bbaba).ok() == Some(p("3 5 2 4 1")), || {
        "bw_array(bbaba)".into()
    });
    c.check(phi(&p("5 2 4 1 3")).into_perm() == p("4 5 1 2 3"), || {
        "phi(52413)".into()
    });
    let f = LinkingPermutation::new(p("3 1 4 2")).expect("one orbit");
    c.check(
        t_transform(&f, 3).map(LinkingPermutation::into_perm).ok() == Some(p("3 1 4 5 2")),
        || "t_transform(3142, 3)".into(),
    );
    c
}

pub fn check_perm_algebra(n: usize) -> CheckResult {
    let mut c = CheckResult::new("permutation-algebra");
    for m in 1..=n {
        let id = Permutation::identity(m).expect("m >= 1");
        let all: Vec<_> = Permutation::all(m).collect();
        for q in &all {
            let inv = q.inverse();
            c.check(
                inv.compose(q).ok().as_ref() == Some(&id)
                    && q.compose(&inv).ok().as_ref() == Some(&id),
                || format!("inverse of {q}"),
            );
            for k1 in 1..=m {
                let id_k = id.shift_unchecked(k1);
                c.check(id_k.compose(q).ok() == Some(q.shift_unchecked(k1)), || {
                    format!("shift {q} by {k1} is not (ID+k)π")
                });
                for k2 in 1..=m {
                    let lhs = q.shift_unchecked(k1).shift_unchecked(k2);
                    c.check(lhs == q.shift_unchecked((k1 + k2 - 1) % m + 1), || {
                        format!("shift {q} by {k1} then {k2}")
                    });
                }
            }
        }
        if m <= 5 {
            for a in &all {
                for b in &all {
                    let eq = a.equivalent(b).unwrap_or(false);
                    c.check(eq == (a.canonical_rep() == b.canonical_rep()), || {
                        format!("equivalence of {a} and {b}")
                    });
                    c.check(eq == b.equivalent(a).unwrap_or(false), || {
                        format!("symmetry of {a} and {b}")
                    });
                }
            }
        }
        let one_orbit = all.iter().filter(|q| q.is_one_orbit()).count();
        c.check(BigCount::from(one_orbit) == factorial(m - 1), || {
            format!("one-orbit count for n = {m}")
        });
    }
    c
}

pub fn check_linking(n: usize) -> CheckResult {
    let mut c = CheckResult::new("linking-mapping");
    for m in 1..=n {
        let mut image = HashSet::new();
        for q in Permutation::all(m) {
            let f = phi(&q);
            for k in 1..=m {
                c.check(phi(&q.shift_unchecked(k)) == f, || {
                    format!("phi not shift-invariant at {q}")
                });
            }
            c.check(unphi(&f, q.apply(1)).ok().as_ref() == Some(&q), || {
                format!("unphi(phi({q}))")
            });
            if q.apply(1) == m {
                image.insert(f);
            }
        }
        c.check(BigCount::from(image.len()) == factorial(m - 1), || {
            format!("phi on class representatives is not a bijection, n = {m}")
        });
    }
    c
}

pub fn check_sentinel_reduction(n: usize, k: usize) -> Result<CheckResult> {
    let mut c = CheckResult::new("sentinel-reduction");
    for m in 1..=n {
        for kk in 1..=k {
            for w in all_words(m, kk)? {
                let sa = suffix_array(&w);
                let smallest = SentinelWord::smallest(w.clone());
                c.check(
                    suffix_array_sentinel(&smallest) == append_sentinel_perm(&sa),
                    || format!("sentinel prepend for {w}"),
                );
                for rank in 1..=kk + 1 {
                    let sw = SentinelWord::new(w.clone(), rank)?;
                    c.check(
                        bw_array(&sw.extended()).ok() == Some(suffix_array_sentinel(&sw)),
                        || format!("rotation order for {w} with sentinel rank {rank}"),
                    );
                }
                // spread letters out: rank c -> 2c over 2k letters
                let spread = Word::new(w.letters().iter().map(|&x| 2 * x).collect(), 2 * kk)?;
                c.check(suffix_array(&spread) == sa, || format!("relabeling {w}"));
                if is_primitive(&w) {
                    let bwa = bw_array(&w)?;
                    let sorted = bwa
                        .values()
                        .windows(2)
                        .all(|x| w.letter(x[0]) <= w.letter(x[1]));
                    c.check(sorted, || format!("rotation first letters of {w}"));
                }
            }
        }
    }
    Ok(c)
}

pub fn check_recovery(n: usize, k: usize) -> Result<CheckResult> {
    let mut c = CheckResult::new("unique-recovery");
    for m in 1..=n {
        for kk in 1..=k {
            for w in all_words(m, kk)? {
                let r = parikh(&w);
                c.check(
                    recover_word_sa(&suffix_array(&w), &r).ok().as_ref() == Some(&w),
                    || format!("recover_word_sa for {w}"),
                );
                if is_primitive(&w) {
                    let bwa = bw_array(&w)?;
                    c.check(recover_word_bw(&bwa, &r).ok().as_ref() == Some(&w), || {
                        format!("recover_word_bw for {w}")
                    });
                    c.check(is_bw_array(&bwa, &r) == Ok(true), || {
                        format!("is_bw_array for {w}")
                    });
                }
            }
        }
    }
    Ok(c)
}

/// Predicates and counts against one census.
pub fn check_census_agreement(census: &SaCensus) -> CheckResult {
    let mut c = CheckResult::new("characterization-vs-census");
    let (m, kk) = (census.n(), census.k());
    let vectors = compositions(m, kk);
    for q in Permutation::all(m) {
        let group = census.group(&q);
        c.check(is_suffix_array(&q, kk) == census.contains(&q), || {
            format!("is_suffix_array({q}, {kk})")
        });
        c.check(count_words(&q, kk) == census.count(&q), || {
            format!("count_words({q}, {kk})")
        });
        c.check(
            count_words_full_alphabet(&q, kk) == census.count_surjective(&q),
            || format!("count_words_full_alphabet({q}, {kk})"),
        );
        for r in &vectors {
            let witnesses: Vec<&Word> = group.iter().filter(|w| parikh(w) == *r).collect();
            let predicted = is_suffix_array_parikh(&q, r).unwrap_or(false);
            c.check(predicted == !witnesses.is_empty(), || {
                format!("is_suffix_array_parikh({q}, {r})")
            });
            c.check(witnesses.len() <= 1, || {
                format!("several words for {q} with {r}")
            });
            if let Some(&w) = witnesses.first() {
                c.check(recover_word_sa(&q, r).ok().as_ref() == Some(w), || {
                    format!("recover_word_sa({q}, {r})")
                });
            }
        }
        let streamed: BTreeSet<_> = gen_parikh(&q, kk).collect();
        let seen: BTreeSet<_> = group.iter().map(parikh).collect();
        c.check(streamed == seen, || format!("gen_parikh({q}, {kk})"));
    }
    c
}

pub fn check_totals(census: &SaCensus) -> CheckResult {
    let mut c = CheckResult::new("suffix-array-totals");
    let (m, kk) = (census.n(), census.k());
    let keys: BTreeSet<_> = census.keys().cloned().collect();
    c.check(
        count_suffix_arrays(m, kk) == BigCount::from(keys.len()),
        || format!("count_suffix_arrays({m}, {kk})"),
    );
    let streamed: Vec<_> = gen_suffix_arrays(m, kk).collect();
    let set: BTreeSet<_> = streamed.iter().cloned().collect();
    c.check(set.len() == streamed.len() && set == keys, || {
        format!("gen_suffix_arrays({m}, {kk})")
    });
    c
}

pub fn check_eulerian(n: usize) -> Result<CheckResult> {
    let mut c = CheckResult::new("eulerian-identity");
    for m in 1..=n {
        for d in 0..m {
            let e = eulerian(m, d);
            c.check(p_count(m, d) == e, || format!("p_count({m}, {d})"));
            if m <= MAX_PERM_SCAN {
                c.check(brute_eulerian(m, d)? == e, || {
                    format!("brute_eulerian({m}, {d})")
                });
            }
        }
        let row: BigCount = (0..m).map(|d| eulerian(m, d)).sum();
        c.check(row == factorial(m), || format!("Eulerian row {m}"));
    }
    Ok(c)
}

pub fn check_one_orbit_generation(n: usize) -> Result<CheckResult> {
    let mut c = CheckResult::new("one-orbit-generation");
    for m in 1..=n {
        let gen: Vec<_> = gen_one_orbit(m + 1).collect();
        let set: HashSet<_> = gen.iter().cloned().collect();
        let brute: HashSet<_> = Permutation::all(m + 1)
            .filter(Permutation::is_one_orbit)
            .filter_map(|q| LinkingPermutation::new(q).ok())
            .collect();
        c.check(set.len() == gen.len() && set == brute, || {
            format!("gen_one_orbit({})", m + 1)
        });
        c.check(BigCount::from(gen.len()) == factorial(m), || {
            format!("|gen_one_orbit({})|", m + 1)
        });
        let census = brute_one_orbit_census(m)?;
        for d in 0..=m {
            let brute = census.get(&d).cloned().unwrap_or_default();
            c.check(p_count(m, d) == brute, || format!("P({m}, {d}) vs census"));
        }
    }
    Ok(c)
}

pub fn check_bijection(n: usize) -> Result<CheckResult> {
    let mut c = CheckResult::new("suffix-array-bijection");
    for m in 1..=n {
        for q in Permutation::all(m) {
            c.check(sa_from_linking(&linking_of_sa(&q))? == q, || {
                format!("sa_from_linking(linking_of_sa({q}))")
            });
        }
        for f in gen_one_orbit(m + 1) {
            c.check(linking_of_sa(&sa_from_linking(&f)?) == f, || {
                format!("linking_of_sa(sa_from_linking({f}))")
            });
        }
    }
    Ok(c)
}

pub fn check_insertion(n: usize) -> Result<CheckResult> {
    let mut c = CheckResult::new("insertion-transform");
    for m in 1..=n {
        let mut seen = HashSet::new();
        for f in gen_one_orbit(m) {
            let d = f.as_perm().descents().count_except_first();
            let (mut same, mut plus_one) = (0, 0);
            for s in 2..=m + 1 {
                let t = t_transform(&f, s)?;
                let e = t.as_perm().descents().count_except_first();
                if e == d {
                    same += 1;
                } else if e == d + 1 {
                    plus_one += 1;
                }
                c.check(seen.insert(t), || format!("t_transform({f}, {s}) collides"));
            }
            c.check((same, plus_one) == (d + 1, m - 1 - d), || {
                format!("descent split for {f}: {same}/{plus_one}")
            });
        }
        c.check(BigCount::from(seen.len()) == factorial(m), || {
            format!("image size for n = {m}")
        });
    }
    Ok(c)
}

pub fn check_mid_sentinel(n: usize) -> Result<CheckResult> {
    let mut c = CheckResult::new("mid-sentinel-equivalence");
    for m in 1..=n.min(MAX_BINARY_SCAN) {
        let brute = brute_mid_sentinel_sas(m)?;
        for q in Permutation::all(m + 1) {
            let by_descents = is_mid_sentinel_sa(&q)?;
            let by_conditions = is_ascending_to_max(&q)? && is_non_nesting(&q)?;
            c.check(by_descents == by_conditions, || {
                format!("{q}: descents {by_descents}, conditions {by_conditions}")
            });
            c.check(by_descents == brute.contains(&q), || {
                format!("{q}: descents {by_descents} vs oracle")
            });
        }
        for w in all_words(m, 2)? {
            let sa = mid_sentinel_sa(&w)?;
            c.check(recover_binary_word(&sa).ok().as_ref() == Some(&w), || {
                format!("recover_binary_word for {w}")
            });
        }
    }
    Ok(c)
}

/// Runs every check for lengths `1..=n` and alphabet sizes `1..=k`.
pub fn run(n: usize, k: usize) -> Result<Report> {
    if !(1..=MAX_PERM_SCAN).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            lo: 1,
            hi: MAX_PERM_SCAN,
        });
    }
    if k < 1 {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            lo: 1,
            hi: usize::MAX,
        });
    }
    // fail fast on the budget before doing any work
    all_words(n, k)?;

    let mut checks = vec![
        check_worked_examples(),
        check_perm_algebra(n),
        check_linking(n),
        check_sentinel_reduction(n, k)?,
        check_recovery(n, k)?,
    ];
    let mut agreement = CheckResult::new("characterization-vs-census");
    let mut totals = CheckResult::new("suffix-array-totals");
    let mut least = CheckResult::new("min-alphabet");
    for m in 1..=n {
        let mut first_seen: HashMap<Permutation, usize> = HashMap::new();
        for kk in 1..=k {
            let census = sa_census(m, kk)?;
            merge(&mut agreement, check_census_agreement(&census));
            merge(&mut totals, check_totals(&census));
            for q in census.keys() {
                first_seen.entry(q.clone()).or_insert(kk);
            }
        }
        for q in Permutation::all(m) {
            let expected = first_seen.get(&q).copied();
            let got = min_alphabet(&q);
            // beyond k the census is silent, so only "more than k" is checkable
            let ok = match expected {
                Some(e) => got == e,
                None => got > k,
            };
            least.check(ok, || {
                format!("min_alphabet({q}) = {got}, census says {expected:?}")
            });
        }
    }
    checks.push(agreement);
    checks.push(totals);
    checks.push(least);
    checks.push(check_eulerian(n)?);
    checks.push(check_one_orbit_generation(n)?);
    checks.push(check_bijection(n)?);
    checks.push(check_insertion(n)?);
    checks.push(check_mid_sentinel(n)?);
    Ok(Report { n, k, checks })
}

fn merge(into: &mut CheckResult, from: CheckResult) {
    into.cases += from.cases;
    let room = MAX_REPORTED.saturating_sub(into.failures.len());
    into.failures.extend(from.failures.into_iter().take(room));
}

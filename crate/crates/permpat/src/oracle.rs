//! Brute-force ground truth.
//!
//! Classes are grown one entry at a time: a permutation of length `m + 1`
//! is a permutation of length `m` with a new last entry, and since classes
//! are closed under deletion only permutations already in the class are
//! extended. A new entry can only create occurrences that end at it, so the
//! test per node is end-anchored. Involutions are built directly from
//! matchings. Every function refuses lengths beyond its [`Budget`] instead
//! of returning partial counts.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{
    avoids_all, bonds, del_k_count, is_simple, stats, total_occurrences, EndMatcher, Permutation,
};

/// Largest lengths the oracle will search exhaustively.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Avoidance classes and involution sets.
    pub max_n: usize,
    /// Walks over all of `S_n`.
    pub max_exhaustive_n: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_n: 14,
            max_exhaustive_n: 11,
        }
    }
}

impl Budget {
    fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::BudgetExceeded(format!(
                "length {n} above max_n {}",
                self.max_n
            )));
        }
        Ok(())
    }

    fn check_exhaustive(&self, n: usize) -> Result<()> {
        if n > self.max_exhaustive_n {
            return Err(Error::BudgetExceeded(format!(
                "walking S_{n} exceeds max_exhaustive_n {}",
                self.max_exhaustive_n
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvoidanceQuery {
    pub basis: Vec<Permutation>,
    /// Restrict to involutions; the basis is then closed under inverse.
    pub involutions_only: bool,
    pub n: usize,
}

impl AvoidanceQuery {
    pub fn new(basis: Vec<Permutation>, n: usize) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::InvalidArgument("the basis must be nonempty".into()));
        }
        Ok(AvoidanceQuery {
            basis,
            involutions_only: false,
            n,
        })
    }

    pub fn involutions(mut self) -> Self {
        self.involutions_only = true;
        self
    }

    /// The basis actually searched against.
    pub fn effective_basis(&self) -> Vec<Permutation> {
        let mut b: BTreeSet<Permutation> = self.basis.iter().cloned().collect();
        if self.involutions_only {
            b.extend(self.basis.iter().map(Permutation::inverse));
        }
        b.into_iter().collect()
    }
}

/// Length at which the search tree is split across workers.
const SPLIT_DEPTH: usize = 6;

fn extend(cur: &[u32], v: u32) -> Vec<u32> {
    let mut child: Vec<u32> = cur
        .iter()
        .map(|&x| if x >= v { x + 1 } else { x })
        .collect();
    child.push(v);
    child
}

fn grow<T>(
    ends: &[EndMatcher],
    cur: Vec<u32>,
    n: usize,
    acc: &mut T,
    visit: &(impl Fn(&mut T, &[u32]) + Sync),
) {
    if cur.len() == n {
        visit(acc, &cur);
        return;
    }
    for v in 1..=cur.len() as u32 + 1 {
        let child = extend(&cur, v);
        if ends.iter().all(|e| !e.matches(&child)) {
            grow(ends, child, n, acc, visit);
        }
    }
}

/// Folds `visit` over every permutation of length `n` avoiding `basis`
/// (all of `S_n` when the basis is empty).
fn fold_avoiders<T: Send>(
    basis: &[Permutation],
    n: usize,
    identity: impl Fn() -> T + Sync + Send,
    visit: impl Fn(&mut T, &[u32]) + Sync + Send,
    merge: impl Fn(T, T) -> T + Sync + Send,
) -> T {
    let ends: Vec<EndMatcher> = basis.iter().map(EndMatcher::new).collect();
    let split = n.min(SPLIT_DEPTH);
    let mut roots: Vec<Vec<u32>> = Vec::new();
    grow(
        &ends,
        Vec::new(),
        split,
        &mut roots,
        &|acc: &mut Vec<Vec<u32>>, p: &[u32]| acc.push(p.to_vec()),
    );
    roots
        .into_par_iter()
        .fold(&identity, |mut acc, root| {
            grow(&ends, root, n, &mut acc, &visit);
            acc
        })
        .reduce(&identity, &merge)
}

/// Every involution of length `n`, one matching at a time, split across
/// workers by the partner of the first entry.
fn fold_involutions<T: Send>(
    n: usize,
    identity: impl Fn() -> T + Sync + Send,
    visit: impl Fn(&mut T, &[u32]) + Sync + Send,
    merge: impl Fn(T, T) -> T + Sync + Send,
) -> T {
    fn rec<T>(p: &mut Vec<u32>, acc: &mut T, visit: &(impl Fn(&mut T, &[u32]) + Sync)) {
        let Some(i) = p.iter().position(|&x| x == 0) else {
            visit(acc, p);
            return;
        };
        p[i] = i as u32 + 1;
        rec(p, acc, visit);
        p[i] = 0;
        for j in i + 1..p.len() {
            if p[j] == 0 {
                p[i] = j as u32 + 1;
                p[j] = i as u32 + 1;
                rec(p, acc, visit);
                p[i] = 0;
                p[j] = 0;
            }
        }
    }
    if n == 0 {
        let mut acc = identity();
        visit(&mut acc, &[]);
        return acc;
    }
    (0..n)
        .into_par_iter()
        .fold(&identity, |mut acc, partner| {
            let mut p = vec![0u32; n];
            p[0] = partner as u32 + 1;
            p[partner] = 1;
            rec(&mut p, &mut acc, &visit);
            acc
        })
        .reduce(&identity, &merge)
}

/// Folds over the members of the queried class (or its involutions).
pub fn fold_members<T: Send>(
    q: &AvoidanceQuery,
    budget: &Budget,
    identity: impl Fn() -> T + Sync + Send,
    visit: impl Fn(&mut T, &[u32]) + Sync + Send,
    merge: impl Fn(T, T) -> T + Sync + Send,
) -> Result<T> {
    budget.check(q.n)?;
    let basis = q.effective_basis();
    if q.involutions_only {
        let perms: Vec<Permutation> = basis.clone();
        Ok(fold_involutions(
            q.n,
            identity,
            move |acc, p| {
                let perm = Permutation::from_vec_unchecked(p.to_vec());
                if avoids_all(&perm, &perms) {
                    visit(acc, p);
                }
            },
            merge,
        ))
    } else {
        Ok(fold_avoiders(&basis, q.n, identity, visit, merge))
    }
}

/// `|Av_n(basis)|`, or the number of involutions in it.
pub fn enumerate_class(q: &AvoidanceQuery, budget: &Budget) -> Result<u64> {
    fold_members(q, budget, || 0u64, |c, _| *c += 1, |a, b| a + b)
}

/// Involutions avoiding the basis and its inverses.
pub fn enumerate_involutions(q: &AvoidanceQuery, budget: &Budget) -> Result<u64> {
    enumerate_class(&q.clone().involutions(), budget)
}

/// The members themselves, sorted.
pub fn class_members(q: &AvoidanceQuery, budget: &Budget) -> Result<Vec<Permutation>> {
    let mut all = fold_members(
        q,
        budget,
        Vec::new,
        |acc: &mut Vec<Permutation>, p| acc.push(Permutation::from_vec_unchecked(p.to_vec())),
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    all.sort();
    Ok(all)
}

/// Total occurrences of `sigma` over `Av_n(basis)`.
pub fn occurrence_totals(
    sigma: &Permutation,
    basis: &[Permutation],
    n: usize,
    budget: &Budget,
) -> Result<u64> {
    let q = AvoidanceQuery::new(basis.to_vec(), n)?;
    fold_members(
        &q,
        budget,
        || 0u64,
        |c, p| *c += total_occurrences(sigma, [&Permutation::from_vec_unchecked(p.to_vec())]),
        |a, b| a + b,
    )
}

fn simple_filter(p: &Permutation, fixed_points: Option<usize>) -> bool {
    is_simple(p) && fixed_points.map_or(true, |f| stats(p).fixed_points == f)
}

/// Simple members of the class, optionally involutions with a given number
/// of fixed points.
pub fn simple_members(
    basis: &[Permutation],
    n: usize,
    involutions_only: bool,
    fixed_points: Option<usize>,
    budget: &Budget,
) -> Result<Vec<Permutation>> {
    let mut q = AvoidanceQuery::new(basis.to_vec(), n)?;
    q.involutions_only = involutions_only;
    Ok(class_members(&q, budget)?
        .into_iter()
        .filter(|p| simple_filter(p, fixed_points))
        .collect())
}

pub fn simple_census(
    basis: &[Permutation],
    n: usize,
    involutions_only: bool,
    fixed_points: Option<usize>,
    budget: &Budget,
) -> Result<u64> {
    let mut q = AvoidanceQuery::new(basis.to_vec(), n)?;
    q.involutions_only = involutions_only;
    fold_members(
        &q,
        budget,
        || 0u64,
        |c, p| {
            if simple_filter(&Permutation::from_vec_unchecked(p.to_vec()), fixed_points) {
                *c += 1;
            }
        },
        |a, b| a + b,
    )
}

/// Exact bond statistics over `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BondDistribution {
    pub n: usize,
    /// `counts[k]` permutations with exactly `k` bonds.
    pub counts: Vec<u64>,
    pub mean: BigRational,
    pub variance: BigRational,
}

fn moments(counts: &[u64]) -> (BigRational, BigRational) {
    let total: BigInt = counts.iter().map(|&c| BigInt::from(c)).sum();
    let s1: BigInt = counts
        .iter()
        .enumerate()
        .map(|(k, &c)| BigInt::from(c) * k)
        .sum();
    let s2: BigInt = counts
        .iter()
        .enumerate()
        .map(|(k, &c)| BigInt::from(c) * (k * k))
        .sum();
    let mean = BigRational::new(s1, total.clone());
    let variance = BigRational::new(s2, total) - &mean * &mean;
    (mean, variance)
}

pub fn bond_distribution(n: usize, budget: &Budget) -> Result<BondDistribution> {
    budget.check_exhaustive(n)?;
    let width = n.max(1);
    let counts = fold_avoiders(
        &[],
        n,
        || vec![0u64; width],
        |acc, p| acc[bonds(&Permutation::from_vec_unchecked(p.to_vec()))] += 1,
        |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
    );
    let (mean, variance) = moments(&counts);
    Ok(BondDistribution {
        n,
        counts,
        mean,
        variance,
    })
}

/// Bond statistics estimated from uniform samples. Never exact; kept apart
/// from [`BondDistribution`] so the two cannot be confused.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledBondDistribution {
    pub n: usize,
    pub samples: usize,
    pub counts: Vec<u64>,
    pub mean: f64,
    pub variance: f64,
}

pub fn bond_distribution_sampled(n: usize, samples: usize, seed: u64) -> SampledBondDistribution {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0u64; n.max(1)];
    let mut p: Vec<u32> = (1..=n as u32).collect();
    for _ in 0..samples {
        p.shuffle(&mut rng);
        counts[bonds(&Permutation::from_vec_unchecked(p.clone()))] += 1;
    }
    let total = samples.max(1) as f64;
    let mean = counts
        .iter()
        .enumerate()
        .map(|(k, &c)| k as f64 * c as f64)
        .sum::<f64>()
        / total;
    let second = counts
        .iter()
        .enumerate()
        .map(|(k, &c)| (k * k) as f64 * c as f64)
        .sum::<f64>()
        / total;
    SampledBondDistribution {
        n,
        samples,
        counts,
        mean,
        variance: second - mean * mean,
    }
}

/// Histogram over `S_n` of the number of distinct patterns left after
/// deleting `k` entries.
pub fn distinct_pattern_distribution(
    n: usize,
    k: usize,
    budget: &Budget,
) -> Result<BTreeMap<usize, u64>> {
    budget.check_exhaustive(n)?;
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "cannot delete {k} entries from length {n}"
        )));
    }
    Ok(fold_avoiders(
        &[],
        n,
        BTreeMap::new,
        |acc: &mut BTreeMap<usize, u64>, p| {
            let c = del_k_count(&Permutation::from_vec_unchecked(p.to_vec()), k).expect("k <= n");
            *acc.entry(c).or_default() += 1;
        },
        |mut a, b| {
            for (key, c) in b {
                *a.entry(key).or_default() += c;
            }
            a
        },
    ))
}

/// One side-by-side comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub n: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Fraction of bond-free permutations at length `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct PlentifulDatum {
    pub n: usize,
    pub bond_free: u64,
    pub probability: f64,
    pub distance_to_limit: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    /// Permutations of each length whose ltr-minima sit at the same
    /// positions, compared between Av(123) and Av(132).
    pub ltr_minima: Vec<(usize, bool)>,
    pub plentiful: Vec<PlentifulDatum>,
    /// The distance to `1/e^2` shrinks from each length to the next.
    pub plentiful_trend_monotone: bool,
}

impl IdentityReport {
    pub fn failures(&self) -> Vec<&IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds()).collect()
    }
}

/// Names of the identities in [`identity_suite`].
pub mod identities {
    pub const INV21_STAR: &str = "num21(Av*_n(123)) = 2 num213(Av*_n(123))";
    pub const INV21_FULL: &str = "num21(Av_n(123)) = 2 num213(Av*_n(123))";
    pub const SUM_NEXT: &str = "num213(Av_n(123)) + num231(Av_n(123)) = num231(Av*_(n+1)(123))";
    pub const SUM_PREV: &str = "num213(Av_n(123)) + num231(Av_n(123)) = num231(Av*_(n-1)(123))";
    pub const SERIES: &str = "[z^n] C(z) A213(z) = [z^n] z C'(z) J(z)";
    pub const CROSS: &str = "num213(Av*_n(132)) = num132(Av*_n(123)) + num231(Av*_n(123))";
}

struct ClassTotals {
    members: Vec<Permutation>,
    star: Vec<Permutation>,
}

impl ClassTotals {
    fn new(basis: &str, n: usize, budget: &Budget) -> Result<Self> {
        let b: Permutation = basis.parse()?;
        let members = class_members(&AvoidanceQuery::new(vec![b], n)?, budget)?;
        let star = members
            .iter()
            .filter(|p| !p.is_skew_decomposable())
            .cloned()
            .collect();
        Ok(ClassTotals { members, star })
    }

    fn num(&self, pattern: &str, star: bool) -> BigInt {
        let p: Permutation = pattern.parse().expect("literal pattern");
        let set = if star { &self.star } else { &self.members };
        BigInt::from(total_occurrences(&p, set))
    }
}

/// Checks the equivalent forms of the 213-occurrence count, both the forms
/// that hold and nearby forms that do not, the ltr-minima equidistribution
/// between Av(123) and Av(132), and the bond-free trend towards `1/e^2`.
pub fn identity_suite(n_max: usize, budget: &Budget) -> Result<IdentityReport> {
    use identities::*;
    if n_max > 10 {
        return Err(Error::BudgetExceeded(format!(
            "identity suite runs to n = 10, asked {n_max}"
        )));
    }
    let a: Vec<ClassTotals> = (0..=n_max + 1)
        .map(|n| ClassTotals::new("123", n, budget))
        .collect::<Result<_>>()?;
    let b: Vec<ClassTotals> = (0..=n_max)
        .map(|n| ClassTotals::new("132", n, budget))
        .collect::<Result<_>>()?;
    let mut checks = Vec::new();
    let mut push = |name, n, lhs, rhs| checks.push(IdentityCheck { name, n, lhs, rhs });
    for n in 1..=n_max {
        push(
            INV21_STAR,
            n,
            a[n].num("21", true),
            BigInt::from(2) * a[n].num("213", true),
        );
        push(
            INV21_FULL,
            n,
            a[n].num("21", false),
            BigInt::from(2) * a[n].num("213", true),
        );
        let left = a[n].num("213", false) + a[n].num("231", false);
        push(SUM_NEXT, n, left.clone(), a[n + 1].num("231", true));
        if n >= 2 {
            push(SUM_PREV, n, left, a[n - 1].num("231", true));
        }
        push(
            CROSS,
            n,
            b[n].num("213", true),
            a[n].num("132", true) + a[n].num("231", true),
        );
    }
    let c: Vec<BigInt> = (0..=n_max)
        .map(|n| BigInt::from(a[n].members.len()))
        .collect();
    let a213: Vec<BigInt> = (0..=n_max).map(|n| a[n].num("213", false)).collect();
    let j: Vec<BigInt> = (0..=n_max).map(|n| a[n].num("12", false)).collect();
    for n in 0..=n_max {
        let lhs: BigInt = (0..=n).map(|i| &c[i] * &a213[n - i]).sum();
        let rhs: BigInt = (0..=n).map(|i| &c[i] * i * &j[n - i]).sum();
        push(SERIES, n, lhs, rhs);
    }
    let ltr = |set: &[Permutation]| -> BTreeMap<Vec<usize>, usize> {
        let mut h = BTreeMap::new();
        for p in set {
            *h.entry(stats(p).ltr_minima_positions).or_insert(0) += 1;
        }
        h
    };
    let ltr_minima = (1..=n_max)
        .map(|n| (n, ltr(&a[n].members) == ltr(&b[n].members)))
        .collect();
    let limit = (-2f64).exp();
    let mut plentiful = Vec::new();
    for n in 4..=n_max.min(budget.max_exhaustive_n) {
        let d = bond_distribution(n, budget)?;
        let total: u64 = d.counts.iter().sum();
        let probability = d.counts[0] as f64 / total as f64;
        plentiful.push(PlentifulDatum {
            n,
            bond_free: d.counts[0],
            probability,
            distance_to_limit: (probability - limit).abs(),
        });
    }
    let plentiful_trend_monotone = plentiful
        .windows(2)
        .all(|w| w[1].distance_to_limit < w[0].distance_to_limit);
    Ok(IdentityReport {
        checks,
        ltr_minima,
        plentiful,
        plentiful_trend_monotone,
    })
}

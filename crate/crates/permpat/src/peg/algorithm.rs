//! Complete, compact, clean: the three passes that turn a set of peg
//! permutations into disjoint restricted classes, each counted by
//! inclusion–exclusion over its forbidden vectors.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::downset::{IntVector, VectorDownset};
use super::gf::{to_binomial_basis, ClassPolynomial, RationalGf};
use super::{Decoration, PegPermutation};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Closes `set` under deleting an entry and turning a sign into a dot. The
/// empty peg is left out.
pub fn complete(set: &BTreeSet<PegPermutation>) -> BTreeSet<PegPermutation> {
    let mut seen: HashSet<PegPermutation> = set.iter().cloned().collect();
    let mut frontier: Vec<PegPermutation> = set.iter().cloned().collect();
    while !frontier.is_empty() {
        let children: Vec<PegPermutation> = frontier
            .par_iter()
            .flat_map_iter(|p| {
                let dels = (0..p.len())
                    .filter(|_| p.len() > 1)
                    .map(move |i| p.delete(i));
                let weak = (0..p.len())
                    .filter(move |&i| p.decorations()[i].is_signed())
                    .map(move |i| p.weaken(i));
                dels.chain(weak)
            })
            .collect();
        frontier = children
            .into_iter()
            .filter(|c| seen.insert(c.clone()))
            .collect();
    }
    seen.into_iter().collect()
}

pub fn compact_filter(set: &BTreeSet<PegPermutation>) -> BTreeSet<PegPermutation> {
    set.iter().filter(|p| p.is_compact()).cloned().collect()
}

/// Inflations of a clean, compact peg by filling vectors from `allowed`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RestrictedPegClass {
    pub peg: PegPermutation,
    pub allowed: VectorDownset,
}

impl RestrictedPegClass {
    pub fn gf(&self) -> Result<RationalGf> {
        restricted_gf(&self.peg, &self.allowed)
    }

    /// The permutations of length `n` in this class, by direct enumeration
    /// of filling vectors.
    pub fn members(&self, n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let min = self.peg.min_fill();
        let mut cur = min.components().to_vec();
        let base: u64 = min.weight();
        if base > n as u64 {
            return out;
        }
        let signed: Vec<usize> = (0..self.peg.len())
            .filter(|&i| self.peg.decorations()[i].is_signed())
            .collect();
        self.extra(&signed, 0, n as u64 - base, &mut cur, &mut out);
        out
    }

    fn extra(
        &self,
        signed: &[usize],
        k: usize,
        rem: u64,
        cur: &mut Vec<u32>,
        out: &mut Vec<Permutation>,
    ) {
        if k == signed.len() {
            if rem == 0 && self.allowed.contains(&IntVector::new(cur.clone())) {
                out.push(self.peg.inflate_unchecked(cur));
            }
            return;
        }
        let i = signed[k];
        for t in 0..=rem {
            cur[i] += t as u32;
            self.extra(signed, k + 1, rem - t, cur, out);
            cur[i] -= t as u32;
        }
    }
}

/// Numerator over `(1 - z)^s`, `s` the number of signed entries.
fn restricted_terms(rho: &PegPermutation, allowed: &VectorDownset) -> Result<(Vec<BigInt>, usize)> {
    if allowed.dimension() != rho.len() {
        return Err(Error::LengthMismatch {
            expected: rho.len(),
            got: allowed.dimension(),
        });
    }
    let min = rho.min_fill();
    // Inclusion–exclusion with equal joins merged: join -> signed multiplicity.
    let mut joins: BTreeMap<IntVector, i64> = BTreeMap::new();
    joins.insert(min.clone(), 1);
    for b in allowed.basis() {
        let mut next = joins.clone();
        for (j, c) in &joins {
            *next.entry(j.join_unchecked(b)).or_default() -= c;
        }
        next.retain(|_, c| *c != 0);
        joins = next;
    }
    let dotted: Vec<usize> = (0..rho.len())
        .filter(|&i| rho.decorations()[i] == Decoration::Dot)
        .collect();
    let mut num: Vec<BigInt> = Vec::new();
    for (j, c) in joins {
        // No filling vector exceeds 1 at a dot.
        if dotted.iter().any(|&i| j.components()[i] > 1) {
            continue;
        }
        let w = j.weight() as usize;
        if num.len() <= w {
            num.resize(w + 1, BigInt::zero());
        }
        num[w] += c;
    }
    Ok((num, rho.signed_count()))
}

/// Generating function, by length, of `rho(v)` over filling vectors `v` in
/// `allowed`.
pub fn restricted_gf(rho: &PegPermutation, allowed: &VectorDownset) -> Result<RationalGf> {
    let (num, s) = restricted_terms(rho, allowed)?;
    Ok(RationalGf::over_one_minus_z(num, s))
}

/// The output of [`polyclass_enumerate`].
#[derive(Clone, Debug)]
pub struct Polyclass {
    /// Disjoint restricted classes whose union is the class.
    pub partition: Vec<RestrictedPegClass>,
    pub gf: RationalGf,
    pub polynomial: ClassPolynomial,
}

impl Polyclass {
    pub fn counts(&self, n_max: usize) -> Vec<BigInt> {
        self.gf.coefficients(n_max)[1..].to_vec()
    }
}

/// Counts the class generated by `set`: complete it, drop non-compact
/// members, clean the rest and merge allowed vectors by cleaned peg.
pub fn polyclass_enumerate(set: &BTreeSet<PegPermutation>) -> Result<Polyclass> {
    if set.is_empty() || set.iter().any(|p| p.is_empty()) {
        return Err(Error::InvalidArgument(
            "peg set must be nonempty with nonempty members".into(),
        ));
    }
    let compact = compact_filter(&complete(set));
    let cleaned: Vec<(PegPermutation, VectorDownset)> =
        compact.par_iter().map(|p| p.clean()).collect();
    let mut merged: BTreeMap<PegPermutation, VectorDownset> = BTreeMap::new();
    for (tau, v) in cleaned {
        match merged.get_mut(&tau) {
            Some(w) => *w = w.union(&v)?,
            None => {
                merged.insert(tau, v);
            }
        }
    }
    let partition: Vec<RestrictedPegClass> = merged
        .into_iter()
        .map(|(peg, allowed)| RestrictedPegClass { peg, allowed })
        .collect();
    let terms = partition
        .par_iter()
        .map(|c| restricted_terms(&c.peg, &c.allowed))
        .collect::<Result<Vec<_>>>()?;
    let gf = RationalGf::sum_over_one_minus_z(terms);
    let polynomial = to_binomial_basis(&gf)?;
    Ok(Polyclass {
        partition,
        gf,
        polynomial,
    })
}

/// Distinct permutations of length `n` among all inflations of members of
/// `set`.
pub fn brute_class_members(set: &BTreeSet<PegPermutation>, n: usize) -> usize {
    let all: BTreeSet<Permutation> =
        set.par_iter()
            .map(|p| p.inflations_of_length(n))
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            });
    all.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn peg(s: &str) -> PegPermutation {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<PegPermutation> {
        items.iter().map(|s| peg(s)).collect()
    }

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn completion() {
        assert_eq!(complete(&set(&["+1"])), set(&["+1", ".1"]));
        assert_eq!(complete(&set(&[".1"])), set(&[".1"]));
        let c = complete(&set(&["+2+1"]));
        for p in ["+1", ".1", ".2.1", "+2.1", ".2+1", "+2+1"] {
            assert!(c.contains(&peg(p)), "{p}");
        }
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn restricted_single_pegs() {
        let g = restricted_gf(
            &peg("+1"),
            &VectorDownset::new(1, vec![IntVector::new(vec![5])]).unwrap(),
        )
        .unwrap();
        assert_eq!(g.coefficients(6), ints(&[0, 0, 1, 1, 1, 0, 0]));
        let g = restricted_gf(&peg(".1"), &VectorDownset::full(1)).unwrap();
        assert_eq!(g.coefficients(3), ints(&[0, 1, 0, 0]));
        // s signs and d dots: z^{d+2s}/(1-z)^s.
        let rho = peg("+3.1-4.2+5");
        let g = restricted_gf(&rho, &VectorDownset::full(5)).unwrap();
        assert_eq!(g.numerator(), &ints(&[0, 0, 0, 0, 0, 0, 0, 0, 1])[..]);
        assert_eq!(g.one_minus_z_power(), Some(3));
        assert!(restricted_gf(&rho, &VectorDownset::full(2)).is_err());
    }

    #[test]
    fn dotted_runs_sum_to_short_increasing() {
        let p = polyclass_enumerate(&set(&[".1.2.3.4"])).unwrap();
        assert_eq!(p.counts(6), ints(&[1, 1, 1, 1, 0, 0]));
    }

    #[test]
    fn av123_231_class() {
        // 312 inflated by decreasing runs.
        let p = polyclass_enumerate(&set(&["-3-1-2"])).unwrap();
        assert_eq!(p.gf.numerator(), &ints(&[0, 1, -1, 1])[..]);
        assert_eq!(p.gf.one_minus_z_power(), Some(3));
        assert_eq!(p.counts(6), ints(&[1, 2, 4, 7, 11, 16]));
        assert_eq!(p.polynomial.binomial_coeffs, ints(&[1, 0, 1]));
        assert_eq!(p.polynomial.threshold, 1);
        assert_eq!(brute_class_members(&set(&["-3-1-2"]), 4), 7);
    }

    #[test]
    fn increasing_runs_on_312_merge() {
        // The low and middle runs form one increasing interval, so this is
        // the class of +2+1: n permutations of each length.
        let s = set(&["+3+1+2"]);
        let p = polyclass_enumerate(&s).unwrap();
        assert_eq!(p.counts(6), ints(&[1, 2, 3, 4, 5, 6]));
        assert_eq!(brute_class_members(&s, 4), 4);
        assert!(p.partition.iter().all(|c| c.peg != peg("+3+1+2")));
    }

    #[test]
    fn one_block_move_classes() {
        let p = polyclass_enumerate(&set(&["+1-2+3"])).unwrap();
        assert_eq!(p.counts(10), ints(&[1, 2, 4, 7, 11, 16, 22, 29, 37, 46]));
        assert_eq!(p.polynomial.binomial_coeffs, ints(&[1, 0, 1]));
        let p = polyclass_enumerate(&set(&["+1+3+2+4"])).unwrap();
        assert_eq!(p.counts(6), ints(&[1, 2, 5, 11, 21, 36]));
        assert_eq!(p.polynomial.binomial_coeffs, ints(&[1, 0, 1, 1]));
    }

    #[test]
    fn brute_counts() {
        assert_eq!(brute_class_members(&set(&[".1"]), 2), 0);
        assert_eq!(brute_class_members(&set(&[".1"]), 1), 1);
    }

    /// Each restricted class, enumerated directly, contributes its gf
    /// coefficient, the classes are disjoint and together give the brute
    /// count.
    #[test]
    fn partition_is_exact() {
        for s in [
            &["-3-1-2"][..],
            &["+3+1+2"],
            &[".1.2.4.3"],
            &["+2-1", ".1.2.3"],
            &["-3.1+2+4", "+1-2"],
            &["+2.4.1-3"],
        ] {
            let s = set(s);
            let p = polyclass_enumerate(&s).unwrap();
            let counts = p.counts(8);
            for n in 1..=8 {
                let mut seen = HashSet::new();
                for c in &p.partition {
                    let members = c.members(n);
                    assert_eq!(
                        BigInt::from(members.len()),
                        c.gf().unwrap().coefficients(n)[n]
                    );
                    for m in members {
                        assert!(seen.insert(m), "{s:?} n={n}");
                    }
                }
                assert_eq!(seen.len(), brute_class_members(&s, n), "{s:?} n={n}");
                assert_eq!(BigInt::from(seen.len()), counts[n - 1]);
            }
        }
    }
}

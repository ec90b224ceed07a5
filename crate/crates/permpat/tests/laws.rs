use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;

use permpat::genome::{ball_pegs, BlockOp, DEFAULT_CAP};
use permpat::oracle::{class_members, fold_members, occurrence_totals, AvoidanceQuery, Budget};
use permpat::peg::PegPermutation;
use permpat::perm::{
    all_permutations, count_occurrences, del_k_count, gap_report, pattern_counts, stats,
};
use permpat::series::{catalog, exact_formula, formula_min_n};
use permpat::Permutation;

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn query(basis: &[&str], n: usize) -> AvoidanceQuery {
    AvoidanceQuery::new(basis.iter().map(|s| perm(s)).collect(), n).unwrap()
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn coeffs(name: &str, order: usize) -> Vec<BigInt> {
    catalog(name, order)
        .unwrap()
        .univariate()
        .unwrap()
        .to_integers()
        .unwrap()
}

#[test]
fn deleting_k_from_a_spread_permutation_gives_binomially_many() {
    for k in 1..=3 {
        for n in k..=8 {
            for p in all_permutations(n) {
                if n >= 2 && gap_report(&p).unwrap().min_gap >= k + 2 {
                    assert_eq!(del_k_count(&p, k).unwrap(), binom(n, k), "{p} k={k}");
                }
            }
        }
    }
}

#[test]
fn five_patterns_fill_every_triple_of_a_123_avoider() {
    let others: Vec<Permutation> = ["132", "213", "231", "312", "321"]
        .iter()
        .map(|s| perm(s))
        .collect();
    for n in 1..=9 {
        for p in class_members(&query(&["123"], n), &Budget::default()).unwrap() {
            let total: u64 = others.iter().map(|s| count_occurrences(s, &p)).sum();
            assert_eq!(total as usize, binom(n, 3));
        }
    }
}

#[test]
fn skew_indecomposable_213_totals_match_their_series() {
    let series = coeffs("num213_star", 12);
    let pattern = perm("213");
    for n in 1..=12 {
        let total = fold_members(
            &query(&["123"], n),
            &Budget::default(),
            || 0u64,
            |acc, p| {
                let p = Permutation::new(p.to_vec()).unwrap();
                if !p.is_skew_decomposable() {
                    *acc += count_occurrences(&pattern, &p);
                }
            },
            |a, b| a + b,
        )
        .unwrap();
        assert_eq!(BigInt::from(total), series[n], "n = {n}");
    }
}

#[test]
fn totals_of_231_agree_across_the_two_classes() {
    let series = coeffs("num231", 10);
    let budget = Budget::default();
    for n in 0..=10 {
        let in132 = occurrence_totals(&perm("231"), &[perm("132")], n, &budget).unwrap();
        assert_eq!(BigInt::from(in132), series[n], "n = {n}");
    }
}

#[test]
fn decreasing_4321_eventually_dominates_length_four_totals() {
    let budget = Budget::default();
    let target = perm("4321");
    let mut dominant = BTreeMap::new();
    for n in 4..=12 {
        let totals = fold_members(
            &query(&["123"], n),
            &budget,
            BTreeMap::<Permutation, u64>::new,
            |acc, p| {
                let p = Permutation::new(p.to_vec()).unwrap();
                for (pat, c) in pattern_counts(&p, 4) {
                    *acc.entry(pat).or_default() += c;
                }
            },
            |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += v;
                }
                a
            },
        )
        .unwrap();
        let top = totals[&target];
        dominant.insert(n, totals.iter().all(|(p, &c)| *p == target || c < top));
    }
    // Smallest n from which 4321 strictly leads at every tested length.
    let n0 = (4..=12).find(|&n| (n..=12).all(|m| dominant[&m]));
    println!("4321 leads from n = {n0:?}");
    assert_eq!(n0, Some(5));
}

#[test]
fn closed_forms_match_search() {
    let budget = Budget::default();
    let rat = |x: u64| BigRational::from_integer(BigInt::from(x));
    let count = |basis: &[&str], n: usize| {
        permpat::oracle::enumerate_class(&query(basis, n), &budget).unwrap()
    };
    for n in formula_min_n("av123_231").max(1)..=10 {
        assert_eq!(
            exact_formula("av123_231", n).unwrap(),
            rat(count(&["123", "231"], n))
        );
    }
    for n in formula_min_n("layered").max(1)..=10 {
        assert_eq!(
            exact_formula("layered", n).unwrap(),
            rat(count(&["231", "312"], n))
        );
    }
    for n in formula_min_n("catalan").max(1)..=10 {
        assert_eq!(
            exact_formula("catalan", n).unwrap(),
            rat(count(&["132"], n))
        );
    }
    for n in formula_min_n("central_binomial").max(1)..=12 {
        let q = query(&["123"], n).involutions();
        let inv = permpat::oracle::enumerate_class(&q, &budget).unwrap();
        assert_eq!(exact_formula("central_binomial", n).unwrap(), rat(inv));
    }
    for n in formula_min_n("num12").max(1)..=10 {
        let t = occurrence_totals(&perm("12"), &[perm("123")], n, &budget).unwrap();
        assert_eq!(exact_formula("num12", n).unwrap(), rat(t));
    }
    for n in formula_min_n("ascents_total").max(1)..=10 {
        let t: usize = class_members(&query(&["132"], n), &budget)
            .unwrap()
            .iter()
            .map(|p| stats(p).ascents)
            .sum();
        assert_eq!(exact_formula("ascents_total", n).unwrap(), rat(t as u64));
    }
}

fn reverse_complement(p: &PegPermutation) -> PegPermutation {
    let under = p.underlying().reverse().complement();
    let decs = p.decorations().iter().rev().copied().collect();
    PegPermutation::new(under, decs).unwrap()
}

#[test]
fn reversal_balls_are_closed_under_reverse_complement() {
    for k in 1..=2 {
        let set = ball_pegs(BlockOp::BlockReversal, k, DEFAULT_CAP).unwrap();
        let image: BTreeSet<PegPermutation> = set.iter().map(reverse_complement).collect();
        assert_eq!(image, set, "k = {k}");
    }
}

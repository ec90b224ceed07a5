//! Pattern containment and occurrence counting.

use std::collections::HashMap;

use super::{for_each_combination, Permutation};

/// Precomputed value constraints for matching a pattern left to right.
///
/// When the `t`-th pattern entry is placed, only its nearest already-placed
/// neighbours in value (`lo[t]` below, `hi[t]` above) need checking.
struct Matcher {
    k: usize,
    lo: Vec<Option<usize>>,
    hi: Vec<Option<usize>>,
}

impl Matcher {
    fn new(pattern: &Permutation) -> Self {
        let s = pattern.entries();
        let k = s.len();
        let mut lo = vec![None; k];
        let mut hi = vec![None; k];
        for t in 0..k {
            for u in 0..t {
                if s[u] < s[t] && lo[t].map_or(true, |l: usize| s[l] < s[u]) {
                    lo[t] = Some(u);
                }
                if s[u] > s[t] && hi[t].map_or(true, |h: usize| s[h] > s[u]) {
                    hi[t] = Some(u);
                }
            }
        }
        Matcher { k, lo, hi }
    }

    #[inline]
    fn fits(&self, t: usize, v: u32, placed: &[u32]) -> bool {
        self.lo[t].map_or(true, |l| placed[l] < v) && self.hi[t].map_or(true, |h| placed[h] > v)
    }

    fn count(&self, perm: &[u32]) -> u64 {
        let mut placed = vec![0u32; self.k];
        self.count_from(perm, 0, 0, &mut placed)
    }

    fn count_from(&self, perm: &[u32], t: usize, start: usize, placed: &mut [u32]) -> u64 {
        if t == self.k {
            return 1;
        }
        let last = perm.len() + t + 1 - self.k;
        let mut total = 0;
        for p in start..last {
            let v = perm[p];
            if self.fits(t, v, placed) {
                placed[t] = v;
                total += self.count_from(perm, t + 1, p + 1, placed);
            }
        }
        total
    }

    fn find(
        &self,
        perm: &[u32],
        t: usize,
        start: usize,
        placed: &mut [u32],
        at: &mut [usize],
    ) -> bool {
        if t == self.k {
            return true;
        }
        let last = perm.len() + t + 1 - self.k;
        for p in start..last {
            let v = perm[p];
            if self.fits(t, v, placed) {
                placed[t] = v;
                at[t] = p;
                if self.find(perm, t + 1, p + 1, placed, at) {
                    return true;
                }
            }
        }
        false
    }
}

/// Tests for an occurrence of a fixed pattern that uses the last entry of
/// the permutation. Growing a permutation one entry at a time, this is the
/// only kind of occurrence the new entry can create.
pub(crate) struct EndMatcher {
    m: Matcher,
    /// Whether each earlier pattern entry lies below the pattern's last one.
    below: Vec<bool>,
}

impl EndMatcher {
    pub(crate) fn new(pattern: &Permutation) -> Self {
        let s = pattern.entries();
        let last = s.last().copied().unwrap_or(0);
        EndMatcher {
            m: Matcher::new(pattern),
            below: s.iter().map(|&v| v < last).collect(),
        }
    }

    pub(crate) fn matches(&self, perm: &[u32]) -> bool {
        let k = self.m.k;
        if k == 0 || perm.len() < k {
            return k == 0;
        }
        let mut placed = vec![0u32; k];
        self.from(perm, 0, 0, &mut placed, perm[perm.len() - 1])
    }

    fn from(&self, perm: &[u32], t: usize, start: usize, placed: &mut [u32], last: u32) -> bool {
        let k = self.m.k;
        if t == k - 1 {
            return true;
        }
        let end = perm.len() - (k - 1 - t);
        for p in start..end {
            let v = perm[p];
            if (v < last) == self.below[t] && self.m.fits(t, v, placed) {
                placed[t] = v;
                if self.from(perm, t + 1, p + 1, placed, last) {
                    return true;
                }
            }
        }
        false
    }
}

/// Number of occurrences of `pattern` in `perm`, by pruned left-to-right
/// matching.
pub fn count_occurrences(pattern: &Permutation, perm: &Permutation) -> u64 {
    if pattern.len() > perm.len() {
        return 0;
    }
    Matcher::new(pattern).count(perm.entries())
}

/// Number of occurrences of `pattern` in `perm` by scanning all
/// `C(n, k)` index subsets.
pub fn count_occurrences_brute(pattern: &Permutation, perm: &Permutation) -> u64 {
    let mut total = 0;
    for_each_combination(perm.len(), pattern.len(), |idx| {
        if perm.pattern_at(idx) == *pattern {
            total += 1;
        }
    });
    total
}

/// Positions (1-indexed) of the leftmost-first occurrence of `pattern` in `perm`.
pub fn find_occurrence(pattern: &Permutation, perm: &Permutation) -> Option<Vec<usize>> {
    if pattern.len() > perm.len() {
        return None;
    }
    let m = Matcher::new(pattern);
    let mut placed = vec![0u32; m.k];
    let mut at = vec![0usize; m.k];
    m.find(perm.entries(), 0, 0, &mut placed, &mut at)
        .then(|| at.iter().map(|&p| p + 1).collect())
}

pub fn contains(perm: &Permutation, pattern: &Permutation) -> bool {
    find_occurrence(pattern, perm).is_some()
}

pub fn avoids_all(perm: &Permutation, basis: &[Permutation]) -> bool {
    basis.iter().all(|b| !contains(perm, b))
}

/// Total number of occurrences of `pattern` over a set of permutations.
pub fn total_occurrences<'a>(
    pattern: &Permutation,
    set: impl IntoIterator<Item = &'a Permutation>,
) -> u64 {
    let m = Matcher::new(pattern);
    set.into_iter()
        .filter(|p| p.len() >= pattern.len())
        .map(|p| m.count(p.entries()))
        .sum()
}

/// How often each pattern of length `k` occurs in `perm`.
pub fn pattern_counts(perm: &Permutation, k: usize) -> HashMap<Permutation, u64> {
    let mut out = HashMap::new();
    for_each_combination(perm.len(), k, |idx| {
        *out.entry(perm.pattern_at(idx)).or_insert(0) += 1;
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn end_anchored_occurrences() {
        for k in 1..=4 {
            for pattern in all_permutations(k) {
                let end = EndMatcher::new(&pattern);
                for n in 1..=7 {
                    for perm in all_permutations(n) {
                        let mut expected = false;
                        if k <= n {
                            for_each_combination(n - 1, k - 1, |idx| {
                                let mut at = idx.to_vec();
                                at.push(n - 1);
                                expected |= perm.pattern_at(&at) == pattern;
                            });
                        }
                        assert_eq!(end.matches(perm.entries()), expected, "{pattern} in {perm}");
                    }
                }
            }
        }
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_occurrences(&p("213"), &p("462513")), 2);
        assert_eq!(count_occurrences(&p("123"), &p("1234")), 4);
        assert_eq!(count_occurrences(&p("12"), &Permutation::identity(7)), 21);
        let set = [p("2341"), p("4321"), p("1234")];
        assert_eq!(total_occurrences(&p("123"), &set), 5);
        assert_eq!(total_occurrences(&p("123"), &[]), 0);
        let s3: Vec<_> = all_permutations(3).collect();
        assert_eq!(total_occurrences(&p("21"), &s3), 9);
    }

    #[test]
    fn pruned_matches_brute_scan() {
        for n in 0..=7 {
            for perm in all_permutations(n) {
                for k in 1..=4 {
                    for pat in all_permutations(k) {
                        assert_eq!(
                            count_occurrences(&pat, &perm),
                            count_occurrences_brute(&pat, &perm),
                            "{pat} in {perm}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn find_reports_a_real_occurrence() {
        let perm = p("3614725");
        let at = find_occurrence(&p("132"), &perm).unwrap();
        let idx: Vec<usize> = at.iter().map(|i| i - 1).collect();
        assert_eq!(perm.pattern_at(&idx), p("132"));
        assert!(find_occurrence(&p("123"), &p("321")).is_none());
    }

    #[test]
    fn histogram_sums_to_binomial() {
        let perm = p("546981327");
        let h = pattern_counts(&perm, 4);
        assert_eq!(h.values().sum::<u64>(), 126);
        for (pat, c) in h {
            assert_eq!(c, count_occurrences(&pat, &perm));
        }
    }
}

//! Dyck paths and three maps onto them: the recursive bijection from
//! 132-avoiders, the staircase map from 123-avoiders, and the rtl-maxima
//! staircase on skew-indecomposable 123-avoiders whose peak heights count
//! occurrences of 213.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{find_occurrence, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
}

/// A path of up and down steps that starts and ends at height zero and never
/// goes below it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::U { 1 } else { -1 };
            if h < 0 {
                return Err(Error::DyckPath(format!(
                    "step {} goes below the axis",
                    i + 1
                )));
            }
        }
        if h != 0 {
            return Err(Error::DyckPath(format!(
                "{} steps end at height {h}",
                steps.len()
            )));
        }
        Ok(DyckPath { steps })
    }

    pub fn empty() -> Self {
        DyckPath::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Height after each step.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = 0usize;
        self.steps
            .iter()
            .map(|s| {
                match s {
                    Step::U => h += 1,
                    Step::D => h -= 1,
                }
                h
            })
            .collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::U { "u" } else { "d" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'u' | 'U' => Ok(Step::U),
                'd' | 'D' => Ok(Step::D),
                _ => Err(Error::Parse {
                    position: i + 1,
                    message: format!("expected `u` or `d`, found `{c}`"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

fn reject_pattern(perm: &Permutation, pattern: &str) -> Result<()> {
    let pat: Permutation = pattern.parse().unwrap();
    match find_occurrence(&pat, perm) {
        Some(positions) => Err(Error::ContainsPattern {
            pattern: pattern.into(),
            perm: perm.to_string(),
            positions,
        }),
        None => Ok(()),
    }
}

/// `φ(π) = u φ(π₁) d φ(π₂)` where `π = (π₁ ⊕ 1) ⊖ π₂` is split at its maximum.
pub fn phi(perm: &Permutation) -> Result<DyckPath> {
    reject_pattern(perm, "132")?;
    let mut steps = Vec::with_capacity(2 * perm.len());
    phi_rec(perm.entries(), &mut steps);
    Ok(DyckPath { steps })
}

fn phi_rec(e: &[u32], out: &mut Vec<Step>) {
    let Some(m) = e.iter().enumerate().max_by_key(|(_, &v)| v).map(|(i, _)| i) else {
        return;
    };
    out.push(Step::U);
    phi_rec(&e[..m], out);
    out.push(Step::D);
    phi_rec(&e[m + 1..], out);
}

/// Inverse of [`phi`]: split `p = u A d B` at its first return.
pub fn phi_inverse(path: &DyckPath) -> Permutation {
    let mut out = Vec::with_capacity(path.semilength());
    phi_inv_rec(&path.steps, &mut out);
    Permutation::from_vec_unchecked(out)
}

/// Appends the permutation of `steps` using values `1..=|steps|/2`.
fn phi_inv_rec(steps: &[Step], out: &mut Vec<u32>) {
    if steps.is_empty() {
        return;
    }
    let mut h = 0i64;
    let mut ret = 0;
    for (i, s) in steps.iter().enumerate() {
        h += if *s == Step::U { 1 } else { -1 };
        if h == 0 {
            ret = i;
            break;
        }
    }
    let (inner, rest) = (&steps[1..ret], &steps[ret + 1..]);
    let shift = (rest.len() / 2) as u32;
    let start = out.len();
    phi_inv_rec(inner, out);
    for v in &mut out[start..] {
        *v += shift;
    }
    out.push(shift + inner.len() as u32 / 2 + 1);
    phi_inv_rec(rest, out);
}

/// The highest staircase from the top-left to the bottom-right corner of the
/// plot that keeps every entry above and to the right of it. Down steps read
/// as `u`, right steps as `d`. Depends only on the left-to-right minima.
fn ltr_min_staircase(perm: &Permutation) -> DyckPath {
    let n = perm.len() as u32;
    let mut steps = Vec::with_capacity(2 * perm.len());
    let mut y = n;
    let mut min = n + 1;
    for &v in perm.entries() {
        min = min.min(v);
        while y > min - 1 {
            steps.push(Step::U);
            y -= 1;
        }
        steps.push(Step::D);
    }
    DyckPath { steps }
}

/// The staircase map on 123-avoiders.
pub fn phi_prime(perm: &Permutation) -> Result<DyckPath> {
    reject_pattern(perm, "123")?;
    Ok(ltr_min_staircase(perm))
}

/// Inverse of [`phi_prime`]: the left-to-right minima read off the path, the
/// remaining values placed in decreasing order.
pub fn phi_prime_inverse(path: &DyckPath) -> Permutation {
    let n = path.semilength();
    let mut entries = vec![0u32; n];
    let mut used = vec![false; n + 1];
    let mut y = n as u32;
    let mut col = 0;
    let mut last_min = n as u32 + 1;
    for s in &path.steps {
        match s {
            Step::U => y -= 1,
            Step::D => {
                if y + 1 < last_min {
                    last_min = y + 1;
                    entries[col] = last_min;
                    used[last_min as usize] = true;
                }
                col += 1;
            }
        }
    }
    let mut rest = (1..=n as u32).rev().filter(|&v| !used[v as usize]);
    for e in entries.iter_mut().filter(|e| **e == 0) {
        *e = rest.next().unwrap();
    }
    Permutation::from_vec_unchecked(entries)
}

/// The lowest staircase lying weakly above every entry, from `(1, n)` to
/// `(n, 1)`, with right steps read as `u` and down steps as `d`. Each
/// right-to-left maximum with `s` entries to its lower left becomes a peak of
/// height `s`.
pub fn phi_star(perm: &Permutation) -> Result<DyckPath> {
    let n = perm.len();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "needs length at least 2, got {n}"
        )));
    }
    reject_pattern(perm, "123")?;
    if perm.is_skew_decomposable() {
        return Err(Error::InvalidArgument(format!(
            "{perm} is skew decomposable"
        )));
    }
    let e = perm.entries();
    let mut suffix_max = vec![0u32; n + 1];
    for i in (0..n).rev() {
        suffix_max[i] = suffix_max[i + 1].max(e[i]);
    }
    let mut steps = Vec::with_capacity(2 * (n - 1));
    let mut y = n as u32;
    for x in 1..n {
        while y > suffix_max[x] {
            steps.push(Step::D);
            y -= 1;
        }
        steps.push(Step::U);
    }
    while y > 1 {
        steps.push(Step::D);
        y -= 1;
    }
    Ok(DyckPath { steps })
}

/// Heights of the peaks, left to right.
pub fn peak_heights(path: &DyckPath) -> Vec<usize> {
    let h = path.heights();
    path.steps
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == Step::U && w[1] == Step::D)
        .map(|(i, _)| h[i])
        .collect()
}

/// All Dyck paths of semilength `n` in lexicographic order (`u < d`).
pub fn all_dyck(n: usize) -> AllDyck {
    let mut steps = vec![Step::U; n];
    steps.resize(2 * n, Step::D);
    AllDyck {
        n,
        next: Some(steps),
    }
}

pub struct AllDyck {
    n: usize,
    next: Option<Vec<Step>>,
}

impl Iterator for AllDyck {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let cur = self.next.take()?;
        self.next = successor(&cur, self.n);
        Some(DyckPath { steps: cur })
    }
}

fn successor(steps: &[Step], n: usize) -> Option<Vec<Step>> {
    let mut ups_before = vec![0usize; steps.len() + 1];
    for (i, s) in steps.iter().enumerate() {
        ups_before[i + 1] = ups_before[i] + (*s == Step::U) as usize;
    }
    for i in (0..steps.len()).rev() {
        let ups = ups_before[i];
        let height = 2 * ups - i;
        if steps[i] == Step::U && height >= 1 {
            let mut out = steps[..i].to_vec();
            out.push(Step::D);
            let left_up = n - ups;
            out.extend(std::iter::repeat(Step::U).take(left_up));
            out.resize(2 * n, Step::D);
            return Some(out);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_permutations, contains, count_occurrences, stats};
    use std::collections::HashSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn d(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn catalan(n: usize) -> usize {
        (0..n).fold(1usize, |c, i| c * 2 * (2 * i + 1) / (i + 2))
    }

    #[test]
    fn path_validation() {
        assert!("du".parse::<DyckPath>().is_err());
        assert!("uud".parse::<DyckPath>().is_err());
        assert!("uxd".parse::<DyckPath>().is_err());
        assert_eq!(d("uudd").semilength(), 2);
        assert_eq!(d("").semilength(), 0);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&Permutation::empty()).unwrap(), DyckPath::empty());
        assert_eq!(phi(&p("21")).unwrap().to_string(), "udud");
        assert_eq!(phi(&p("1")).unwrap().to_string(), "ud");
        // Unrolled by hand from the split 74352681 = (632415 ⊕ 1) ⊖ 1.
        assert_eq!(phi(&p("74352681")).unwrap().to_string(), "uuduuududdudddud");
        assert_eq!(phi_inverse(&d("ud")), p("1"));
        assert_eq!(phi_inverse(&d("udud")), p("21"));
        assert_eq!(phi_inverse(&d("uuduuududdudddud")), p("74352681"));
        match phi(&p("132")) {
            Err(Error::ContainsPattern { positions, .. }) => assert_eq!(positions, vec![1, 2, 3]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn printed_phi_string_is_not_a_dyck_path() {
        assert!("uuduuududduddud".parse::<DyckPath>().is_err());
    }

    #[test]
    fn phi_round_trip_and_staircase_agree() {
        let q132 = p("132");
        for n in 0..=9 {
            let mut seen = HashSet::new();
            for q in all_permutations(n).filter(|q| !contains(q, &q132)) {
                let path = phi(&q).unwrap();
                assert_eq!(path.semilength(), n);
                assert_eq!(phi_inverse(&path), q);
                // The recursion and the geometric staircase describe one map.
                assert_eq!(ltr_min_staircase(&q), path, "{q}");
                assert!(seen.insert(path));
            }
            assert_eq!(seen.len(), catalan(n));
        }
    }

    #[test]
    fn phi_prime_is_a_bijection_preserving_ltr_minima() {
        let q123 = p("123");
        for n in 0..=9 {
            let mut seen = HashSet::new();
            for q in all_permutations(n).filter(|q| !contains(q, &q123)) {
                let path = phi_prime(&q).unwrap();
                assert_eq!(phi_prime_inverse(&path), q);
                let back = phi_inverse(&path);
                assert_eq!(
                    stats(&back).ltr_minima_positions,
                    stats(&q).ltr_minima_positions
                );
                assert!(seen.insert(path));
            }
            assert_eq!(seen.len(), catalan(n));
        }
        assert_eq!(phi_prime(&p("1")).unwrap().to_string(), "ud");
        assert!(phi_prime(&p("1243")).is_err());
    }

    #[test]
    fn phi_star_examples() {
        let q = p("48371652");
        let path = phi_star(&q).unwrap();
        assert_eq!(path.to_string(), "uduuduududddud");
        assert_eq!(peak_heights(&path), vec![1, 2, 3, 3, 1]);
        let weighted: u64 = peak_heights(&path)
            .iter()
            .map(|&h| (h * (h.saturating_sub(1)) / 2) as u64)
            .sum();
        assert_eq!(weighted, count_occurrences(&p("213"), &q));
        assert_eq!(phi_star(&p("12")).unwrap().to_string(), "ud");
        assert!(phi_star(&p("21")).is_err());
        assert!(phi_star(&p("1")).is_err());
    }

    #[test]
    fn peak_correspondence_exhaustive() {
        let (q123, q213) = (p("123"), p("213"));
        for n in 2..=9 {
            let mut seen = HashSet::new();
            let mut members = 0;
            for q in
                all_permutations(n).filter(|q| !contains(q, &q123) && !q.is_skew_decomposable())
            {
                let path = phi_star(&q).unwrap();
                assert_eq!(path.semilength(), n - 1);
                let weighted: u64 = peak_heights(&path)
                    .iter()
                    .map(|&h| (h * (h - 1) / 2) as u64)
                    .sum();
                assert_eq!(weighted, count_occurrences(&q213, &q), "{q}");
                assert!(seen.insert(path));
                members += 1;
            }
            assert_eq!(members, catalan(n - 1));
        }
    }

    #[test]
    fn enumeration() {
        let counts: Vec<usize> = (0..=7).map(|n| all_dyck(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429]);
        let all: Vec<DyckPath> = all_dyck(4).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(peak_heights(&d("uudd")), vec![2]);
        let weighted: usize = all_dyck(4)
            .flat_map(|q| peak_heights(&q))
            .map(|h| h * (h - 1) / 2)
            .sum();
        assert_eq!(weighted, 38);
    }
}

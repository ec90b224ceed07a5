//! Permutations of `1..=n` and the operations that do not depend on any
//! pattern machinery: standardization, the eight symmetries, sums,
//! involutions and sum/skew decomposability.
//!
//! Positions and values exposed through the public API are 1-indexed.

mod large;
mod pattern;
mod stats;
mod structure;

pub use large::{
    del, del_k_count, del_set, distance, gap_report, ins, ins_set, ins_set_size, is_k_plentiful,
    is_k_plentiful_brute, pairs_at_distance, span, theta, GapReport,
};
pub(crate) use pattern::EndMatcher;
pub use pattern::{
    avoids_all, contains, count_occurrences, count_occurrences_brute, find_occurrence,
    pattern_counts, total_occurrences,
};
pub use stats::{bonds, stats, StatRecord};
pub use structure::{inflate, intervals, is_simple, substitution_decompose, Decomposition};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `1..=n`, stored in one-line notation.
///
/// The empty permutation (n = 0) is a valid value.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<u32>,
}

/// The three generating symmetries of the pattern order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Reverse,
    Complement,
    Inverse,
}

impl Permutation {
    /// Builds a permutation, checking that `entries` is a bijection on `1..=n`.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![usize::MAX; n + 1];
        for (i, &v) in entries.iter().enumerate() {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::NotPermutation(format!(
                    "value {v} at position {} is outside 1..={n}",
                    i + 1
                )));
            }
            if seen[v] != usize::MAX {
                return Err(Error::DuplicateValue(seen[v] + 1, i + 1));
            }
            seen[v] = i;
        }
        Ok(Permutation { entries })
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation { entries }
    }

    pub fn empty() -> Self {
        Permutation::default()
    }

    /// `12…n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            entries: (1..=n as u32).collect(),
        }
    }

    /// `n…21`.
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            entries: (1..=n as u32).rev().collect(),
        }
    }

    /// Relabels distinct values by rank. Equal values are rejected with the
    /// (1-indexed) positions of a clashing pair.
    pub fn standardize<T: PartialOrd>(values: &[T]) -> Result<Self> {
        let mut order: Vec<usize> = (0..values.len()).collect();
        let mut incomparable = false;
        order.sort_by(|&a, &b| {
            values[a].partial_cmp(&values[b]).unwrap_or_else(|| {
                incomparable = true;
                Ordering::Equal
            })
        });
        if incomparable {
            return Err(Error::InvalidArgument(
                "values are not totally ordered".into(),
            ));
        }
        let mut entries = vec![0u32; values.len()];
        for (rank, w) in order.windows(2).enumerate() {
            if values[w[0]] == values[w[1]] {
                let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(Error::DuplicateValue(a + 1, b + 1));
            }
            entries[w[0]] = rank as u32 + 1;
        }
        if let Some(&last) = order.last() {
            entries[last] = values.len() as u32;
        }
        Ok(Permutation { entries })
    }

    /// Standardizes integer values that are known to be distinct.
    pub(crate) fn standardize_distinct(values: &[u32]) -> Self {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_unstable_by_key(|&i| values[i]);
        let mut entries = vec![0u32; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            entries[i] = rank as u32 + 1;
        }
        Permutation { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.entries
    }

    /// Value at 1-indexed position `i`.
    pub fn at(&self, i: usize) -> Result<u32> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        Ok(self.entries[i - 1])
    }

    pub fn reverse(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        Permutation { entries }
    }

    pub fn complement(&self) -> Self {
        let n = self.len() as u32 + 1;
        Permutation {
            entries: self.entries.iter().map(|&v| n - v).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut entries = vec![0u32; self.len()];
        for (i, &v) in self.entries.iter().enumerate() {
            entries[v as usize - 1] = i as u32 + 1;
        }
        Permutation { entries }
    }

    pub fn symmetry(&self, which: Symmetry) -> Self {
        match which {
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::Inverse => self.inverse(),
        }
    }

    /// The images of `self` under all eight symmetries, identity first.
    pub fn symmetry_orbit(&self) -> [Permutation; 8] {
        let r = self.reverse();
        let c = self.complement();
        let rc = r.complement();
        [
            self.clone(),
            r.clone(),
            c.clone(),
            rc.clone(),
            self.inverse(),
            r.inverse(),
            c.inverse(),
            rc.inverse(),
        ]
    }

    /// `self ⊕ other`.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let shift = self.len() as u32;
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().map(|&v| v + shift));
        Permutation { entries }
    }

    /// `self ⊖ other`.
    pub fn skew_sum(&self, other: &Permutation) -> Self {
        let shift = other.len() as u32;
        let mut entries: Vec<u32> = self.entries.iter().map(|&v| v + shift).collect();
        entries.extend_from_slice(&other.entries);
        Permutation { entries }
    }

    pub fn is_involution(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, &v)| self.entries[v as usize - 1] as usize == i + 1)
    }

    /// Lengths of the maximal chain of sum components, left to right.
    pub fn sum_component_lengths(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let (mut start, mut max) = (0usize, 0u32);
        for (i, &v) in self.entries.iter().enumerate() {
            max = max.max(v);
            if max as usize == i + 1 {
                out.push(i + 1 - start);
                start = i + 1;
            }
        }
        out
    }

    /// Lengths of the maximal chain of skew components, left to right.
    pub fn skew_component_lengths(&self) -> Vec<usize> {
        let n = self.len() as u32;
        let mut out = Vec::new();
        let (mut start, mut min) = (0usize, u32::MAX);
        for (i, &v) in self.entries.iter().enumerate() {
            min = min.min(v);
            if min == n - i as u32 {
                out.push(i + 1 - start);
                start = i + 1;
            }
        }
        out
    }

    pub fn is_sum_decomposable(&self) -> bool {
        self.sum_component_lengths().len() > 1
    }

    pub fn is_skew_decomposable(&self) -> bool {
        self.skew_component_lengths().len() > 1
    }

    /// Standardized subsequence at the given 0-indexed positions.
    pub(crate) fn pattern_at(&self, positions: &[usize]) -> Permutation {
        let vals: Vec<u32> = positions.iter().map(|&p| self.entries[p]).collect();
        Permutation::standardize_distinct(&vals)
    }

    /// Permutation with the entries at the given 0-indexed positions removed.
    pub(crate) fn without_positions(&self, positions: &[usize]) -> Permutation {
        let mut keep = Vec::with_capacity(self.len() - positions.len());
        let mut it = positions.iter().peekable();
        for (i, &v) in self.entries.iter().enumerate() {
            if it.peek() == Some(&&i) {
                it.next();
            } else {
                keep.push(v);
            }
        }
        Permutation::standardize_distinct(&keep)
    }
}

/// Every permutation of length `n` in lexicographic order.
pub fn all_permutations(n: usize) -> AllPermutations {
    AllPermutations {
        next: Some((1..=n as u32).collect()),
    }
}

/// Iterator returned by [`all_permutations`].
pub struct AllPermutations {
    next: Option<Vec<u32>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { entries: cur })
    }
}

fn next_lex(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Calls `f` on every increasing `k`-subset of `0..n`.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl fmt::Display for Permutation {
    /// Digits run together when every value is at most 9, space separated
    /// otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.len() <= 9;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts space- or comma-separated values (`2 5 1 4 3`, `2,5,1,4,3`).
    /// A single run of digits with no separator is read one digit per entry
    /// (`25143`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let tokens: Vec<&str> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        let mut values = Vec::new();
        if tokens.len() == 1 && tokens[0].len() > 1 && !s.contains(',') {
            for (i, c) in tokens[0].chars().enumerate() {
                let d = c.to_digit(10).ok_or_else(|| Error::Parse {
                    position: i + 1,
                    message: format!("unexpected character `{c}`"),
                })?;
                values.push(d);
            }
        } else {
            for (i, t) in tokens.iter().enumerate() {
                let v = t.parse::<u32>().map_err(|_| Error::Parse {
                    position: i + 1,
                    message: format!("`{t}` is not a positive integer"),
                })?;
                values.push(v);
            }
        }
        let n = values.len();
        let mut first_at = vec![0usize; n + 1];
        for (i, &v) in values.iter().enumerate() {
            if v == 0 || v as usize > n {
                return Err(Error::Parse {
                    position: i + 1,
                    message: format!("value {v} is outside 1..={n}"),
                });
            }
            if first_at[v as usize] != 0 {
                return Err(Error::Parse {
                    position: i + 1,
                    message: format!("value {v} repeats position {}", first_at[v as usize]),
                });
            }
            first_at[v as usize] = i + 1;
        }
        Ok(Permutation { entries: values })
    }
}

//! Large patterns: single and multiple deletions, insertions, taxicab gaps
//! between plotted entries, and the gap-maximizing family `theta(k)`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::{for_each_combination, Permutation};
use crate::error::{Error, Result};

fn check_index(perm: &Permutation, i: usize) -> Result<()> {
    if i == 0 || i > perm.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: perm.len(),
        });
    }
    Ok(())
}

/// Deletes the entry at 1-indexed position `i` and standardizes.
pub fn del(perm: &Permutation, i: usize) -> Result<Permutation> {
    check_index(perm, i)?;
    Ok(perm.without_positions(&[i - 1]))
}

/// The distinct patterns of length `n - 1`.
pub fn del_set(perm: &Permutation) -> BTreeSet<Permutation> {
    (0..perm.len())
        .map(|i| perm.without_positions(&[i]))
        .collect()
}

/// Number of distinct patterns of length `n - k`, by exhausting all `C(n, k)`
/// deletions.
pub fn del_k_count(perm: &Permutation, k: usize) -> Result<usize> {
    if k > perm.len() {
        return Err(Error::InvalidArgument(format!(
            "cannot delete {k} entries from a permutation of length {}",
            perm.len()
        )));
    }
    let mut seen = HashSet::new();
    for_each_combination(perm.len(), k, |idx| {
        seen.insert(perm.without_positions(idx));
    });
    Ok(seen.len())
}

/// Inserts the value `j - 1/2` immediately left of position `i` (or at the end
/// when `i = n + 1`) and standardizes.
pub fn ins(sigma: &Permutation, i: usize, j: usize) -> Result<Permutation> {
    let n = sigma.len();
    for x in [i, j] {
        if x == 0 || x > n + 1 {
            return Err(Error::IndexOutOfRange {
                index: x,
                len: n + 1,
            });
        }
    }
    let j = j as u32;
    let mut entries: Vec<u32> = sigma
        .entries()
        .iter()
        .map(|&v| if v >= j { v + 1 } else { v })
        .collect();
    entries.insert(i - 1, j);
    Ok(Permutation::from_vec_unchecked(entries))
}

/// Every permutation of length `n + 1` containing `sigma`.
pub fn ins_set(sigma: &Permutation) -> BTreeSet<Permutation> {
    let m = sigma.len() + 1;
    let mut out = BTreeSet::new();
    for i in 1..=m {
        for j in 1..=m {
            out.insert(ins(sigma, i, j).unwrap());
        }
    }
    out
}

pub fn ins_set_size(sigma: &Permutation) -> usize {
    ins_set(sigma).len()
}

/// `|i - j| + |π_i - π_j|` for 1-indexed positions.
pub fn distance(perm: &Permutation, i: usize, j: usize) -> Result<usize> {
    check_index(perm, i)?;
    check_index(perm, j)?;
    let e = perm.entries();
    Ok(i.abs_diff(j) + e[i - 1].abs_diff(e[j - 1]) as usize)
}

/// Minimum taxicab gap between plotted entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapReport {
    pub min_gap: usize,
    /// 1-indexed pairs `(i, j)`, `i < j`, at distance `min_gap`.
    pub witness_pairs: Vec<(usize, usize)>,
    /// Number of unordered pairs at each distance.
    pub pairs_at_distance: BTreeMap<usize, usize>,
}

pub fn gap_report(perm: &Permutation) -> Result<GapReport> {
    let n = perm.len();
    if n < 2 {
        return Err(Error::InvalidArgument(
            "the minimum gap needs at least two entries".into(),
        ));
    }
    let e = perm.entries();
    let mut hist = BTreeMap::new();
    let mut best = usize::MAX;
    let mut witnesses = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = (j - i) + e[i].abs_diff(e[j]) as usize;
            *hist.entry(d).or_insert(0) += 1;
            if d < best {
                best = d;
                witnesses.clear();
            }
            if d == best {
                witnesses.push((i + 1, j + 1));
            }
        }
    }
    Ok(GapReport {
        min_gap: best,
        witness_pairs: witnesses,
        pairs_at_distance: hist,
    })
}

/// Unordered pairs of entries at distance exactly `d`.
pub fn pairs_at_distance(perm: &Permutation, d: usize) -> usize {
    let e = perm.entries();
    let n = e.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if (j - i) + e[i].abs_diff(e[j]) as usize == d {
                count += 1;
            }
        }
    }
    count
}

/// 1-indexed positions of the entries lying strictly between entries `i` and
/// `j` horizontally or vertically.
pub fn span(perm: &Permutation, i: usize, j: usize) -> Result<BTreeSet<usize>> {
    check_index(perm, i)?;
    check_index(perm, j)?;
    if i == j {
        return Err(Error::InvalidArgument(
            "span needs two distinct positions".into(),
        ));
    }
    let (a, b) = (i.min(j), i.max(j));
    let e = perm.entries();
    let (lo, hi) = (e[a - 1].min(e[b - 1]), e[a - 1].max(e[b - 1]));
    Ok((1..=perm.len())
        .filter(|&k| (a < k && k < b) || (lo < e[k - 1] && e[k - 1] < hi))
        .collect())
}

/// `Γ(π) ≥ k + 2`, the gap characterization of having `C(n, k)` distinct
/// patterns of length `n - k`.
pub fn is_k_plentiful(perm: &Permutation, k: usize) -> bool {
    match gap_report(perm) {
        Ok(g) => g.min_gap >= k + 2,
        Err(_) => true,
    }
}

/// The definition itself: all `C(n, k)` deletions give distinct patterns.
pub fn is_k_plentiful_brute(perm: &Permutation, k: usize) -> bool {
    match del_k_count(perm, k) {
        Ok(c) => c as u128 == binomial(perm.len(), k),
        Err(_) => false,
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The permutation of length `(k-1)^2 - 2` with minimum gap `k`: lay out the
/// `(k-1) x (k-1)` grid `π_{i(k-1)+j+1} = i + j(k-1) + 1`, then drop its first
/// and last entries.
pub fn theta(k: usize) -> Result<Permutation> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!(
            "theta needs k >= 3, got {k}"
        )));
    }
    let m = k - 1;
    let mut grid = vec![0u32; m * m];
    for i in 0..m {
        for j in 0..m {
            grid[i * m + j] = (i + j * m + 1) as u32;
        }
    }
    let inner = &grid[1..m * m - 1];
    Ok(Permutation::standardize_distinct(inner))
}

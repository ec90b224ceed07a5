//! Intervals, simple permutations, inflation and the substitution
//! decomposition.

use super::Permutation;
use crate::error::{Error, Result};

/// All intervals of `perm` as inclusive 1-indexed position ranges, ordered by
/// start then end. Singletons and the full range are included.
pub fn intervals(perm: &Permutation) -> Vec<(usize, usize)> {
    let e = perm.entries();
    let mut out = Vec::new();
    for i in 0..e.len() {
        let (mut lo, mut hi) = (e[i], e[i]);
        for j in i..e.len() {
            lo = lo.min(e[j]);
            hi = hi.max(e[j]);
            if (hi - lo) as usize == j - i {
                out.push((i + 1, j + 1));
            }
        }
    }
    out
}

/// True when the only intervals are singletons and the whole permutation.
/// `1`, `12` and `21` are simple; the empty permutation is not.
pub fn is_simple(perm: &Permutation) -> bool {
    let n = perm.len();
    if n == 0 {
        return false;
    }
    intervals(perm)
        .into_iter()
        .all(|(i, j)| i == j || (i == 1 && j == n))
}

/// `sigma[blocks]`: entry `i` of `sigma` is replaced by an interval order
/// isomorphic to `blocks[i]`.
pub fn inflate(sigma: &Permutation, blocks: &[Permutation]) -> Result<Permutation> {
    if blocks.len() != sigma.len() {
        return Err(Error::LengthMismatch {
            expected: sigma.len(),
            got: blocks.len(),
        });
    }
    if let Some(i) = blocks.iter().position(|b| b.is_empty()) {
        return Err(Error::InvalidArgument(format!("block {} is empty", i + 1)));
    }
    let mut base = vec![0u32; sigma.len()];
    let mut acc = 0u32;
    for v in 1..=sigma.len() as u32 {
        let i = sigma.entries().iter().position(|&x| x == v).unwrap();
        base[i] = acc;
        acc += blocks[i].len() as u32;
    }
    let mut entries = Vec::with_capacity(acc as usize);
    for (i, b) in blocks.iter().enumerate() {
        entries.extend(b.entries().iter().map(|&v| v + base[i]));
    }
    Ok(Permutation::from_vec_unchecked(entries))
}

/// A permutation written as `skeleton[blocks]` with a simple skeleton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub skeleton: Permutation,
    pub blocks: Vec<Permutation>,
}

/// The substitution decomposition.
///
/// For a sum decomposable permutation the skeleton is `12` and the first block
/// is the first sum component; skew decomposable permutations are handled the
/// same way with `21`. Otherwise the skeleton is the unique simple permutation
/// of length at least 4 and the blocks are the maximal proper intervals.
pub fn substitution_decompose(perm: &Permutation) -> Result<Decomposition> {
    let n = perm.len();
    if n == 0 {
        return Err(Error::InvalidArgument(
            "the empty permutation has no decomposition".into(),
        ));
    }
    if n == 1 {
        return Ok(Decomposition {
            skeleton: perm.clone(),
            blocks: vec![perm.clone()],
        });
    }
    let split = |first: usize, skeleton: &str| {
        let e = perm.entries();
        Decomposition {
            skeleton: skeleton.parse().unwrap(),
            blocks: vec![
                Permutation::standardize_distinct(&e[..first]),
                Permutation::standardize_distinct(&e[first..]),
            ],
        }
    };
    let sum = perm.sum_component_lengths();
    if sum.len() > 1 {
        return Ok(split(sum[0], "12"));
    }
    let skew = perm.skew_component_lengths();
    if skew.len() > 1 {
        return Ok(split(skew[0], "21"));
    }
    // Neither decomposable: maximal proper intervals tile the positions.
    let proper: Vec<(usize, usize)> = intervals(perm)
        .into_iter()
        .filter(|&(i, j)| !(i == 1 && j == n))
        .collect();
    let mut cuts = Vec::new();
    let mut pos = 1;
    while pos <= n {
        let end = proper
            .iter()
            .filter(|&&(i, _)| i == pos)
            .map(|&(_, j)| j)
            .max()
            .unwrap_or(pos);
        cuts.push((pos, end));
        pos = end + 1;
    }
    let e = perm.entries();
    let blocks = cuts
        .iter()
        .map(|&(i, j)| Permutation::standardize_distinct(&e[i - 1..j]))
        .collect();
    let reps: Vec<u32> = cuts.iter().map(|&(i, _)| e[i - 1]).collect();
    Ok(Decomposition {
        skeleton: Permutation::standardize_distinct(&reps),
        blocks,
    })
}

//! A low-memory route to the generating function of a polynomial class.
//!
//! Pegs of length at most 16 are packed into a `u128`. The completion keeps
//! only compact pegs: after each deletion or weakening, adjacent entries that
//! form a single run (`+1+2`, `+1.2`, `.1+2` and the decreasing mirrors) are
//! merged, which leaves the set of inflations unchanged. Pegs are processed
//! in decreasing order of `len + signs`. Every peg that cleans to `tau` has
//! measure at least that of `tau`, so a cleaned class is final once its level
//! is done, and it is counted and dropped right away.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::gf::{to_binomial_basis, ClassPolynomial, RationalGf};
use super::{Decoration, PegPermutation};
use crate::error::{Error, Result};
#[cfg(test)]
use crate::perm::Permutation;

const MAX_LEN: usize = 16;
const PLUS: u8 = 0;
const MINUS: u8 = 1;
const DOT: u8 = 2;

/// A peg with values `0..len` in `val` and decoration codes in `dec`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Raw {
    len: usize,
    val: [u8; MAX_LEN],
    dec: [u8; MAX_LEN],
}

type Vector = [u8; MAX_LEN];

impl Raw {
    fn from_peg(p: &PegPermutation) -> Option<Raw> {
        if p.len() > MAX_LEN {
            return None;
        }
        let mut r = Raw {
            len: p.len(),
            val: [0; MAX_LEN],
            dec: [0; MAX_LEN],
        };
        for (i, (&v, &d)) in p.values().iter().zip(p.decorations()).enumerate() {
            r.val[i] = (v - 1) as u8;
            r.dec[i] = match d {
                Decoration::Plus => PLUS,
                Decoration::Minus => MINUS,
                Decoration::Dot => DOT,
            };
        }
        Some(r)
    }

    #[cfg(test)]
    fn to_peg(self) -> PegPermutation {
        let vals = self.val[..self.len].iter().map(|&v| v as u32 + 1).collect();
        let decs = self.dec[..self.len]
            .iter()
            .map(|&d| match d {
                PLUS => Decoration::Plus,
                MINUS => Decoration::Minus,
                _ => Decoration::Dot,
            })
            .collect();
        PegPermutation::new(Permutation::new(vals).expect("packed values"), decs)
            .expect("lengths agree")
    }

    fn pack(&self) -> u128 {
        let mut x = self.len as u128;
        for i in 0..self.len {
            x |= ((self.val[i] as u128) | (self.dec[i] as u128) << 4) << (5 + 6 * i);
        }
        x
    }

    fn unpack(x: u128) -> Raw {
        let len = (x & 31) as usize;
        let mut r = Raw {
            len,
            val: [0; MAX_LEN],
            dec: [0; MAX_LEN],
        };
        for i in 0..len {
            let c = (x >> (5 + 6 * i)) as u8;
            r.val[i] = c & 15;
            r.dec[i] = (c >> 4) & 3;
        }
        r
    }

    fn signed(&self) -> usize {
        self.dec[..self.len].iter().filter(|&&d| d != DOT).count()
    }

    fn measure(&self) -> usize {
        self.len + self.signed()
    }

    /// Removes position `i` and closes the gap in the values.
    fn remove(&mut self, i: usize) {
        let v = self.val[i];
        for j in i..self.len - 1 {
            self.val[j] = self.val[j + 1];
            self.dec[j] = self.dec[j + 1];
        }
        self.len -= 1;
        self.val[self.len] = 0;
        self.dec[self.len] = 0;
        for j in 0..self.len {
            if self.val[j] > v {
                self.val[j] -= 1;
            }
        }
    }

    /// Merges runs until no adjacent pair forms a single interval.
    fn normalize(mut self) -> Raw {
        'outer: loop {
            for i in 1..self.len {
                let (a, b) = (self.val[i - 1], self.val[i]);
                let (d, e) = (self.dec[i - 1], self.dec[i]);
                let merged = if b == a + 1 && (d, e) != (DOT, DOT) && d != MINUS && e != MINUS {
                    PLUS
                } else if a == b + 1 && (d, e) != (DOT, DOT) && d != PLUS && e != PLUS {
                    MINUS
                } else {
                    continue;
                };
                self.val[i - 1] = a.min(b);
                self.dec[i - 1] = merged;
                self.remove(i);
                continue 'outer;
            }
            return self;
        }
    }

    fn children(&self) -> impl Iterator<Item = Raw> + '_ {
        let dels = (0..self.len).filter(|_| self.len > 1).map(|i| {
            let mut c = *self;
            c.remove(i);
            c
        });
        let weak = (0..self.len).filter(|&i| self.dec[i] != DOT).map(|i| {
            let mut c = *self;
            c.dec[i] = DOT;
            c
        });
        dels.chain(weak).map(Raw::normalize)
    }

    /// Contracts each maximal dotted run of length `k ≥ 2` to a signed
    /// entry. Returns the cleaned peg and, per coordinate, `k + 1` for
    /// contracted runs and 0 elsewhere.
    fn clean(&self) -> (Raw, Vector) {
        let mut out = Raw {
            len: 0,
            val: [0; MAX_LEN],
            dec: [0; MAX_LEN],
        };
        let mut limits = [0u8; MAX_LEN];
        let mut i = 0;
        while i < self.len {
            let mut j = i + 1;
            if self.dec[i] == DOT && j < self.len && self.dec[j] == DOT {
                let step = self.val[j] as i32 - self.val[i] as i32;
                if step.abs() == 1 {
                    while j < self.len
                        && self.dec[j] == DOT
                        && self.val[j] as i32 - self.val[j - 1] as i32 == step
                    {
                        j += 1;
                    }
                }
            }
            let k = out.len;
            if j - i == 1 {
                out.val[k] = self.val[i];
                out.dec[k] = self.dec[i];
            } else {
                out.val[k] = self.val[i..j].iter().copied().min().expect("nonempty");
                out.dec[k] = if self.val[i + 1] > self.val[i] {
                    PLUS
                } else {
                    MINUS
                };
                limits[k] = (j - i + 1) as u8;
            }
            out.len += 1;
            i = j;
        }
        let mut order: Vec<usize> = (0..out.len).collect();
        order.sort_by_key(|&k| out.val[k]);
        for (rank, k) in order.into_iter().enumerate() {
            out.val[k] = rank as u8;
        }
        (out, limits)
    }
}

/// Forbidden vectors of one cleaned class; empty means every vector.
fn union_basis(a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut joins: Vec<Vector> = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            let mut j = [0u8; MAX_LEN];
            for c in 0..MAX_LEN {
                j[c] = x[c].max(y[c]);
            }
            joins.push(j);
        }
    }
    joins.sort_by_key(|v| (v.iter().map(|&c| c as u32).sum::<u32>(), *v));
    joins.dedup();
    let mut keep: Vec<Vector> = Vec::new();
    for v in joins {
        if !keep.iter().any(|k| k.iter().zip(&v).all(|(p, q)| p <= q)) {
            keep.push(v);
        }
    }
    keep
}

fn axis_basis(limits: &Vector) -> Vec<Vector> {
    (0..MAX_LEN)
        .filter(|&c| limits[c] > 0)
        .map(|c| {
            let mut v = [0u8; MAX_LEN];
            v[c] = limits[c];
            v
        })
        .collect()
}

/// Inclusion–exclusion over the forbidden vectors; adds the numerator over
/// `(1 - z)^s` into `acc[s]`.
fn add_terms(tau: &Raw, basis: &[Vector], acc: &mut [Vec<i64>]) {
    let mut min = [0u8; MAX_LEN];
    for i in 0..tau.len {
        min[i] = if tau.dec[i] == DOT { 1 } else { 2 };
    }
    let mut joins: HashMap<Vector, i64> = HashMap::from([(min, 1)]);
    for b in basis {
        let mut next = joins.clone();
        for (j, c) in &joins {
            let mut x = *j;
            for k in 0..MAX_LEN {
                x[k] = x[k].max(b[k]);
            }
            *next.entry(x).or_default() -= c;
        }
        next.retain(|_, c| *c != 0);
        joins = next;
    }
    let row = &mut acc[tau.signed()];
    for (j, c) in joins {
        if (0..tau.len).any(|i| tau.dec[i] == DOT && j[i] > 1) {
            continue;
        }
        let w: usize = j.iter().map(|&x| x as usize).sum();
        if row.len() <= w {
            row.resize(w + 1, 0);
        }
        row[w] += c;
    }
}

/// Result of [`polyclass_stream`].
#[derive(Clone, Debug)]
pub struct StreamedClass {
    pub gf: RationalGf,
    pub polynomial: ClassPolynomial,
    /// Number of disjoint restricted classes.
    pub classes: usize,
    /// Number of compact pegs in the completion.
    pub completion_size: usize,
}

impl StreamedClass {
    pub fn counts(&self, n_max: usize) -> Vec<BigInt> {
        self.gf.coefficients(n_max)[1..].to_vec()
    }
}

const CHUNK: usize = 1 << 15;

/// Same generating function as [`super::polyclass_enumerate`], without
/// keeping the completion or the partition in memory. Members may have at
/// most 16 entries.
pub fn polyclass_stream(set: &std::collections::BTreeSet<PegPermutation>) -> Result<StreamedClass> {
    if set.is_empty() || set.iter().any(|p| p.is_empty()) {
        return Err(Error::InvalidArgument(
            "peg set must be nonempty with nonempty members".into(),
        ));
    }
    let mut levels: Vec<HashSet<u128>> = vec![HashSet::new(); 2 * MAX_LEN + 1];
    for p in set {
        let r = Raw::from_peg(p)
            .ok_or_else(|| {
                Error::InvalidArgument(format!("peg longer than {MAX_LEN} entries: {p}"))
            })?
            .normalize();
        levels[r.measure()].insert(r.pack());
    }
    // Cleaned classes still open, indexed by their measure.
    let mut open: Vec<HashMap<u128, Vec<Vector>>> = vec![HashMap::new(); 2 * MAX_LEN + 1];
    let mut acc: Vec<Vec<i64>> = vec![Vec::new(); MAX_LEN + 1];
    let mut classes = 0;
    let mut completion_size = 0;
    for level in (1..levels.len()).rev() {
        let current: Vec<u128> = std::mem::take(&mut levels[level]).into_iter().collect();
        completion_size += current.len();
        for chunk in current.chunks(CHUNK) {
            let done: Vec<(Vec<Raw>, Raw, Vector)> = chunk
                .par_iter()
                .map(|&x| {
                    let r = Raw::unpack(x);
                    let (tau, limits) = r.clean();
                    (r.children().collect(), tau, limits)
                })
                .collect();
            for (children, tau, limits) in done {
                for c in children {
                    levels[c.measure()].insert(c.pack());
                }
                let basis = axis_basis(&limits);
                let slot = &mut open[tau.measure()];
                match slot.get_mut(&tau.pack()) {
                    Some(b) => {
                        if !b.is_empty() {
                            *b = union_basis(b, &basis);
                        }
                    }
                    None => {
                        slot.insert(tau.pack(), basis);
                    }
                }
            }
        }
        for slot in open.iter_mut().skip(level) {
            for (tau, basis) in slot.drain() {
                classes += 1;
                add_terms(&Raw::unpack(tau), &basis, &mut acc);
            }
        }
    }
    let terms = acc
        .into_iter()
        .enumerate()
        .filter(|(_, row)| !row.is_empty())
        .map(|(s, row)| (row.into_iter().map(BigInt::from).collect(), s));
    let gf = RationalGf::sum_over_one_minus_z(terms);
    let polynomial = to_binomial_basis(&gf)?;
    Ok(StreamedClass {
        gf,
        polynomial,
        classes,
        completion_size,
    })
}

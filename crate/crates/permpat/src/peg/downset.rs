use std::fmt;

use crate::error::{Error, Result};

/// A vector of nonnegative integers under the componentwise order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<u32>);

impl IntVector {
    pub fn new(components: Vec<u32>) -> Self {
        IntVector(components)
    }

    pub fn zero(d: usize) -> Self {
        IntVector(vec![0; d])
    }

    pub fn components(&self) -> &[u32] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &IntVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn join(&self, other: &IntVector) -> Result<IntVector> {
        check_dim(self.dimension(), other.dimension())?;
        Ok(self.join_unchecked(other))
    }

    pub(crate) fn join_unchecked(&self, other: &IntVector) -> IntVector {
        IntVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn check_dim(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::LengthMismatch {
            expected: a,
            got: b,
        });
    }
    Ok(())
}

/// Componentwise maximum.
pub fn vec_join(v: &IntVector, w: &IntVector) -> Result<IntVector> {
    v.join(w)
}

/// The minimal elements of a set of vectors, sorted and deduplicated.
pub fn antichain_min(vectors: impl IntoIterator<Item = IntVector>) -> Vec<IntVector> {
    let mut all: Vec<IntVector> = vectors.into_iter().collect();
    all.sort_by_key(|v| (v.weight(), v.clone()));
    all.dedup();
    let mut keep: Vec<IntVector> = Vec::new();
    // Sorted by weight, so anything below `v` is already in `keep`.
    for v in all {
        if !keep.iter().any(|k| k.le(&v)) {
            keep.push(v);
        }
    }
    keep.sort();
    keep
}

/// A downward-closed set of vectors in `Z≥0^d`, stored as the antichain of
/// minimal vectors outside it.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VectorDownset {
    dimension: usize,
    basis: Vec<IntVector>,
}

impl VectorDownset {
    pub fn new(dimension: usize, basis: Vec<IntVector>) -> Result<Self> {
        for b in &basis {
            check_dim(dimension, b.dimension())?;
        }
        Ok(VectorDownset {
            dimension,
            basis: antichain_min(basis),
        })
    }

    /// Every vector.
    pub fn full(dimension: usize) -> Self {
        VectorDownset {
            dimension,
            basis: Vec::new(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn basis(&self) -> &[IntVector] {
        &self.basis
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        v.dimension() == self.dimension && !self.basis.iter().any(|b| b.le(v))
    }

    /// Avoiding every basis vector of either side.
    pub fn intersect(&self, other: &VectorDownset) -> Result<VectorDownset> {
        check_dim(self.dimension, other.dimension)?;
        Ok(VectorDownset {
            dimension: self.dimension,
            basis: antichain_min(self.basis.iter().chain(&other.basis).cloned()),
        })
    }

    /// Basis of minimal pairwise joins.
    pub fn union(&self, other: &VectorDownset) -> Result<VectorDownset> {
        check_dim(self.dimension, other.dimension)?;
        let joins = self
            .basis
            .iter()
            .flat_map(|v| other.basis.iter().map(move |w| v.join_unchecked(w)));
        Ok(VectorDownset {
            dimension: self.dimension,
            basis: antichain_min(joins),
        })
    }
}

pub fn downset_union(v: &VectorDownset, w: &VectorDownset) -> Result<VectorDownset> {
    v.union(w)
}

pub fn downset_intersect(v: &VectorDownset, w: &VectorDownset) -> Result<VectorDownset> {
    v.intersect(w)
}

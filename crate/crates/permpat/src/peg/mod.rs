//! Peg permutations: permutations whose entries are decorated `+`, `-` or
//! `.`, standing for an increasing run, a decreasing run, or at most one
//! entry. A set of them generates a polynomial class by inflation, and
//! [`polyclass_enumerate`] counts that class exactly.

mod algorithm;
mod downset;
mod gf;
mod stream;

pub use algorithm::{
    brute_class_members, compact_filter, complete, polyclass_enumerate, restricted_gf, Polyclass,
    RestrictedPegClass,
};
pub use downset::{
    antichain_min, downset_intersect, downset_union, vec_join, IntVector, VectorDownset,
};
pub use gf::{to_binomial_basis, ClassPolynomial, RationalGf};
pub use stream::{polyclass_stream, StreamedClass};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// How an entry of a peg permutation is inflated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoration {
    Plus,
    Minus,
    Dot,
}

impl Decoration {
    pub fn symbol(self) -> char {
        match self {
            Decoration::Plus => '+',
            Decoration::Minus => '-',
            Decoration::Dot => '.',
        }
    }

    pub fn is_signed(self) -> bool {
        self != Decoration::Dot
    }

    /// The decoration after the entry's run is read backwards.
    pub fn flipped(self) -> Self {
        match self {
            Decoration::Plus => Decoration::Minus,
            Decoration::Minus => Decoration::Plus,
            Decoration::Dot => Decoration::Dot,
        }
    }

    /// `self` may stand in a pattern where `host` sits in the larger peg.
    fn compatible_with(self, host: Decoration) -> bool {
        self == Decoration::Dot || self == host
    }
}

/// A permutation with one [`Decoration`] per entry.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PegPermutation {
    underlying: Permutation,
    decorations: Vec<Decoration>,
}

impl PegPermutation {
    pub fn new(underlying: Permutation, decorations: Vec<Decoration>) -> Result<Self> {
        if underlying.len() != decorations.len() {
            return Err(Error::LengthMismatch {
                expected: underlying.len(),
                got: decorations.len(),
            });
        }
        Ok(PegPermutation {
            underlying,
            decorations,
        })
    }

    /// Builds from `(value, decoration)` pairs whose values are distinct but
    /// not necessarily `1..=n`.
    pub(crate) fn from_pairs_standardizing(pairs: &[(u32, Decoration)]) -> Self {
        let values: Vec<u32> = pairs.iter().map(|p| p.0).collect();
        PegPermutation {
            underlying: Permutation::standardize_distinct(&values),
            decorations: pairs.iter().map(|p| p.1).collect(),
        }
    }

    /// `+1`, whose inflations are the increasing permutations.
    pub fn increasing() -> Self {
        PegPermutation {
            underlying: Permutation::identity(1),
            decorations: vec![Decoration::Plus],
        }
    }

    pub fn len(&self) -> usize {
        self.decorations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.decorations.is_empty()
    }

    pub fn underlying(&self) -> &Permutation {
        &self.underlying
    }

    pub fn decorations(&self) -> &[Decoration] {
        &self.decorations
    }

    pub fn values(&self) -> &[u32] {
        self.underlying.entries()
    }

    pub fn pairs(&self) -> Vec<(u32, Decoration)> {
        self.values()
            .iter()
            .copied()
            .zip(self.decorations.iter().copied())
            .collect()
    }

    pub fn signed_count(&self) -> usize {
        self.decorations.iter().filter(|d| d.is_signed()).count()
    }

    pub fn dot_count(&self) -> usize {
        self.len() - self.signed_count()
    }

    /// Drops the entry at 0-indexed position `i` and standardizes.
    pub fn delete(&self, i: usize) -> Self {
        let mut pairs = self.pairs();
        pairs.remove(i);
        PegPermutation::from_pairs_standardizing(&pairs)
    }

    /// Replaces the decoration at 0-indexed position `i` by a dot.
    pub fn weaken(&self, i: usize) -> Self {
        let mut out = self.clone();
        out.decorations[i] = Decoration::Dot;
        out
    }

    /// Replaces entry `i` by an interval of monotone runs, one per inflation
    /// component. The result is a permutation of length `Σ v`.
    pub fn inflate(&self, v: &[u32]) -> Result<Permutation> {
        self.check_vector(v)?;
        Ok(self.inflate_unchecked(v))
    }

    fn check_vector(&self, v: &[u32]) -> Result<()> {
        if v.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: v.len(),
            });
        }
        for (i, (&x, d)) in v.iter().zip(&self.decorations).enumerate() {
            if *d == Decoration::Dot && x > 1 {
                return Err(Error::InvalidArgument(format!(
                    "component {} is {x} at a dotted entry",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    pub(crate) fn inflate_unchecked(&self, v: &[u32]) -> Permutation {
        let vals = self.values();
        let m = self.len();
        // base[value] = number of entries below this entry's block.
        let mut by_value = vec![0usize; m + 1];
        for (i, &a) in vals.iter().enumerate() {
            by_value[a as usize] = i;
        }
        let mut base = vec![0u32; m];
        let mut acc = 0u32;
        for a in 1..=m {
            let i = by_value[a];
            base[i] = acc;
            acc += v[i];
        }
        let mut out = Vec::with_capacity(acc as usize);
        for i in 0..m {
            let run = base[i] + 1..=base[i] + v[i];
            match self.decorations[i] {
                Decoration::Minus => out.extend(run.rev()),
                _ => out.extend(run),
            }
        }
        Permutation::from_vec_unchecked(out)
    }

    /// 1 at each dot, 2 at each sign.
    pub fn min_fill(&self) -> IntVector {
        IntVector::new(
            self.decorations
                .iter()
                .map(|d| if d.is_signed() { 2 } else { 1 })
                .collect(),
        )
    }

    /// Every vector `v` with `self(v) = perm` that is a filling vector: 1 at
    /// dots and at least 2 at signs.
    pub fn fill_vectors(&self, perm: &Permutation) -> Vec<IntVector> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        self.fill_search(perm.entries(), 0, &mut cur, &mut out);
        out
    }

    fn fill_search(
        &self,
        target: &[u32],
        start: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<IntVector>,
    ) {
        let i = cur.len();
        if i == self.len() {
            if start == target.len() && self.inflate_unchecked(cur).entries() == target {
                out.push(IntVector::new(cur.clone()));
            }
            return;
        }
        let rest = target.len() - start;
        let (lo, hi) = match self.decorations[i] {
            Decoration::Dot => (1, 1),
            _ => (2, rest),
        };
        for len in lo..=hi.min(rest) {
            let block = &target[start..start + len];
            let ok = match self.decorations[i] {
                Decoration::Plus => block.windows(2).all(|w| w[1] == w[0] + 1),
                Decoration::Minus => block.windows(2).all(|w| w[0] == w[1] + 1),
                Decoration::Dot => true,
            };
            if !ok {
                // A longer block has this one as a prefix.
                break;
            }
            cur.push(len as u32);
            self.fill_search(target, start + len, cur, out);
            cur.pop();
        }
    }

    pub fn fills(&self, perm: &Permutation) -> bool {
        !self.fill_vectors(perm).is_empty()
    }

    /// The filling vector of `perm`, which is unique when `self` is compact.
    pub fn fill_vector(&self, perm: &Permutation) -> Result<IntVector> {
        if !self.is_compact() {
            return Err(Error::InvalidArgument(format!("{self} is not compact")));
        }
        self.fill_vectors(perm)
            .into_iter()
            .next()
            .ok_or_else(|| Error::InvalidArgument(format!("{perm} does not fill {self}")))
    }

    /// `pattern` occurs in `self` with order-isomorphic values and each
    /// decoration equal or weakened to a dot.
    pub fn contains(&self, pattern: &PegPermutation) -> bool {
        let k = pattern.len();
        if k > self.len() {
            return false;
        }
        if k == 0 {
            return true;
        }
        let mut chosen = Vec::with_capacity(k);
        self.contains_search(pattern, 0, &mut chosen)
    }

    fn contains_search(
        &self,
        pattern: &PegPermutation,
        from: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let j = chosen.len();
        if j == pattern.len() {
            return true;
        }
        let pv = pattern.values();
        let sv = self.values();
        for i in from..=self.len() - (pattern.len() - j) {
            if !pattern.decorations[j].compatible_with(self.decorations[i]) {
                continue;
            }
            let order_ok = chosen
                .iter()
                .zip(pv)
                .all(|(&c, &p)| (p < pv[j]) == (sv[c] < sv[i]));
            if order_ok {
                chosen.push(i);
                if self.contains_search(pattern, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    /// No two adjacent entries with adjacent values can be merged into a
    /// single run: `+1+2`, `+1.2`, `.1+2` and `-2-1`, `-2.1`, `.2-1` are
    /// forbidden as intervals.
    pub fn is_compact(&self) -> bool {
        use Decoration::*;
        let vals = self.values();
        (1..self.len()).all(|i| {
            let (a, b) = (vals[i - 1], vals[i]);
            let (d, e) = (self.decorations[i - 1], self.decorations[i]);
            if b == a + 1 {
                !matches!((d, e), (Plus, Plus) | (Plus, Dot) | (Dot, Plus))
            } else if a == b + 1 {
                !matches!((d, e), (Minus, Minus) | (Minus, Dot) | (Dot, Minus))
            } else {
                true
            }
        })
    }

    /// No interval `.1.2` or `.2.1`.
    pub fn is_clean(&self) -> bool {
        self.dotted_runs().iter().all(|r| r.len() == 1)
    }

    /// Maximal runs of dots at adjacent positions with consecutive values in
    /// one direction, as ranges of positions. Singletons included.
    fn dotted_runs(&self) -> Vec<std::ops::Range<usize>> {
        let vals = self.values();
        let mut runs = Vec::new();
        let mut i = 0;
        while i < self.len() {
            if self.decorations[i] != Decoration::Dot {
                i += 1;
                continue;
            }
            let mut j = i + 1;
            if j < self.len() && self.decorations[j] == Decoration::Dot {
                let step = vals[j] as i64 - vals[i] as i64;
                if step == 1 || step == -1 {
                    while j < self.len()
                        && self.decorations[j] == Decoration::Dot
                        && vals[j] as i64 - vals[j - 1] as i64 == step
                    {
                        j += 1;
                    }
                }
            }
            runs.push(i..j);
            i = j;
        }
        runs
    }

    /// Contracts each maximal dotted run of length `k ≥ 2` to one signed
    /// entry and forbids that coordinate from reaching `k + 1`. The
    /// restricted inflations of the result are exactly the inflations of
    /// `self` together with those of its shorter dotted runs.
    pub fn clean(&self) -> (PegPermutation, VectorDownset) {
        let vals = self.values();
        let mut pairs = Vec::new();
        let mut limits = Vec::new();
        let mut i = 0;
        let runs = self.dotted_runs();
        let mut r = runs.iter().peekable();
        while i < self.len() {
            match r.peek() {
                Some(run) if run.start == i => {
                    let run = r.next().expect("peeked");
                    if run.len() == 1 {
                        pairs.push((vals[i], Decoration::Dot));
                        limits.push(None);
                    } else {
                        let dec = if vals[run.start + 1] > vals[run.start] {
                            Decoration::Plus
                        } else {
                            Decoration::Minus
                        };
                        let low = vals[run.clone()].iter().copied().min().expect("nonempty");
                        pairs.push((low, dec));
                        limits.push(Some(run.len() as u32 + 1));
                    }
                    i = run.end;
                }
                _ => {
                    pairs.push((vals[i], self.decorations[i]));
                    limits.push(None);
                    i += 1;
                }
            }
        }
        let tau = PegPermutation::from_pairs_standardizing(&pairs);
        let d = tau.len();
        let basis = limits
            .iter()
            .enumerate()
            .filter_map(|(c, l)| {
                l.map(|k| {
                    let mut v = vec![0; d];
                    v[c] = k;
                    IntVector::new(v)
                })
            })
            .collect();
        (tau, VectorDownset::new(d, basis).expect("dimensions agree"))
    }

    /// The class `I(self)` up to length `n`: every inflation, dots taking 0
    /// or 1 and signs any length.
    pub fn inflations_of_length(&self, n: usize) -> BTreeSet<Permutation> {
        let mut out = BTreeSet::new();
        let mut cur = vec![0u32; self.len()];
        self.each_vector(0, n as u32, &mut cur, &mut |v| {
            out.insert(self.inflate_unchecked(v));
        });
        out
    }

    fn each_vector(&self, i: usize, rem: u32, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if i == self.len() {
            if rem == 0 {
                f(cur);
            }
            return;
        }
        let hi = if self.decorations[i].is_signed() {
            rem
        } else {
            rem.min(1)
        };
        for t in 0..=hi {
            cur[i] = t;
            self.each_vector(i + 1, rem - t, cur, f);
        }
        cur[i] = 0;
    }
}

/// Free-function form of [`PegPermutation::inflate`].
pub fn inflate_peg(rho: &PegPermutation, v: &IntVector) -> Result<Permutation> {
    rho.inflate(v.components())
}

/// `tau` is a peg pattern of `rho`.
pub fn peg_contains(tau: &PegPermutation, rho: &PegPermutation) -> bool {
    rho.contains(tau)
}

pub fn is_compact(rho: &PegPermutation) -> bool {
    rho.is_compact()
}

pub fn clean_peg(rho: &PegPermutation) -> (PegPermutation, VectorDownset) {
    rho.clean()
}

pub fn fills(perm: &Permutation, rho: &PegPermutation) -> bool {
    rho.fills(perm)
}

pub fn fill_vector(perm: &Permutation, rho: &PegPermutation) -> Result<IntVector> {
    rho.fill_vector(perm)
}

pub fn min_fill(rho: &PegPermutation) -> IntVector {
    rho.min_fill()
}

impl fmt::Display for PegPermutation {
    /// `+3-1.2+4`; entries are space separated once a value needs two digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spaced = self.len() > 9;
        for (i, (v, d)) in self.values().iter().zip(&self.decorations).enumerate() {
            if i > 0 && spaced {
                f.write_str(" ")?;
            }
            write!(f, "{}{v}", d.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PegPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Peg({self})")
    }
}

impl FromStr for PegPermutation {
    type Err = Error;

    /// Reads tokens of a decoration (`+`, `-`, `.`, or the typographic `−`
    /// and `•`) followed by a value, with optional whitespace: `+3 -1 .2 +4`
    /// or `+3-1.2+4`.
    fn from_str(s: &str) -> Result<Self> {
        let mut pairs: Vec<(u32, Decoration)> = Vec::new();
        let mut chars = s.trim().chars().peekable();
        while let Some(c) = chars.next() {
            if c.is_whitespace() {
                continue;
            }
            let position = pairs.len() + 1;
            let dec = match c {
                '+' => Decoration::Plus,
                '-' | '−' => Decoration::Minus,
                '.' | '•' | '·' => Decoration::Dot,
                other => {
                    return Err(Error::Parse {
                        position,
                        message: format!("expected a decoration, found `{other}`"),
                    })
                }
            };
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            let v = digits.parse::<u32>().map_err(|_| Error::Parse {
                position,
                message: format!("decoration `{c}` is not followed by a value"),
            })?;
            pairs.push((v, dec));
        }
        let underlying = Permutation::new(pairs.iter().map(|p| p.0).collect())?;
        PegPermutation::new(underlying, pairs.into_iter().map(|p| p.1).collect())
    }
}

/// Reads a peg-set file: one peg per line, `#` starts a comment.
pub fn parse_peg_set(text: &str) -> Result<BTreeSet<PegPermutation>> {
    let mut out = BTreeSet::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let peg = line.parse::<PegPermutation>().map_err(|e| Error::Parse {
            position: lineno + 1,
            message: format!("line {}: {e}", lineno + 1),
        })?;
        out.insert(peg);
    }
    if out.is_empty() {
        return Err(Error::InvalidArgument("peg set is empty".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn peg(s: &str) -> PegPermutation {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let p = peg("+3 -1 .2 +4");
        assert_eq!(p.to_string(), "+3-1.2+4");
        assert_eq!(peg("+3−1•2+4"), p);
        assert!("+3 x1".parse::<PegPermutation>().is_err());
        assert!("+3 +3".parse::<PegPermutation>().is_err());
        assert!("+".parse::<PegPermutation>().is_err());
    }

    #[test]
    fn inflation() {
        assert_eq!(
            peg("+3-1.2+4").inflate(&[2, 3, 1, 0]).unwrap(),
            perm("563214")
        );
        assert_eq!(peg("+1").inflate(&[5]).unwrap(), Permutation::identity(5));
        assert!(peg(".1").inflate(&[0]).unwrap().is_empty());
        assert!(peg(".1").inflate(&[2]).is_err());
        assert!(peg("+1-2").inflate(&[1]).is_err());
    }

    #[test]
    fn containment() {
        assert!(peg("+1").contains(&peg(".1")));
        assert!(!peg("+1").contains(&peg(".1.2")));
        let rho = peg("+3-1.2+4");
        assert!(rho.contains(&rho));
        assert!(rho.contains(&peg("-1+2")));
        assert!(!rho.contains(&peg("+1-2")));
        assert!(rho.contains(&peg(".2.1")));
        assert!(!rho.contains(&peg("-2.1")));
    }

    #[test]
    fn compactness() {
        assert!(!peg(".2-1").is_compact());
        assert!(peg("-3-1-2").is_compact());
        assert!(!peg("+3+1+2").is_compact());
        assert!(peg(".1").is_compact());
        assert!(peg(".1.2").is_compact());
        assert!(!peg("+1+2").is_compact());
        assert!(peg("-1+2").is_compact());
        assert!(!peg("+2.3-1").is_compact());
    }

    #[test]
    fn cleaning() {
        let (t, v) = peg(".1.2.3.4").clean();
        assert_eq!(t, peg("+1"));
        assert_eq!(v.basis(), &[IntVector::new(vec![5])]);
        let (t, v) = peg("+1").clean();
        assert_eq!(t, peg("+1"));
        assert!(v.basis().is_empty());
        let (t, v) = peg(".2.1+3").clean();
        assert_eq!(t, peg("-1+2"));
        assert_eq!(v.basis(), &[IntVector::new(vec![3, 0])]);
        let (t, v) = peg(".1.2.4.3").clean();
        assert_eq!(t, peg("+1-2"));
        assert_eq!(v.basis().len(), 2);
        assert!(peg(".2.4.1.3").is_clean());
    }

    #[test]
    fn filling() {
        let rho = peg("+3-1.2+4");
        assert!(!rho.fills(&perm("563214")));
        let pi = rho.inflate(&[2, 3, 1, 2]).unwrap();
        assert!(rho.fills(&pi));
        assert_eq!(rho.fill_vector(&pi).unwrap().components(), &[2, 3, 1, 2]);
        assert_eq!(peg("+1-2").min_fill().components(), &[2, 2]);
        assert!(peg(".1").fills(&perm("1")));
        assert!(peg("+1").fill_vector(&perm("21")).is_err());
        assert!(peg("+1+2").fill_vector(&perm("1234")).is_err());
    }

    /// Compact pegs of length at most 4 are exactly those whose filling
    /// permutations arise from a single inflation vector (zeros allowed).
    #[test]
    fn compact_iff_unique_inflation_vector() {
        use std::collections::HashMap;
        use Decoration::*;
        for m in 1..=4 {
            for u in crate::perm::all_permutations(m) {
                for code in 0..3usize.pow(m as u32) {
                    let decs: Vec<Decoration> = (0..m)
                        .map(|i| [Plus, Minus, Dot][code / 3usize.pow(i as u32) % 3])
                        .collect();
                    let rho = PegPermutation::new(u.clone(), decs).unwrap();
                    let mut unique = true;
                    for n in 1..=8 {
                        let mut hits: HashMap<Permutation, usize> = HashMap::new();
                        let mut cur = vec![0u32; m];
                        rho.each_vector(0, n, &mut cur, &mut |v| {
                            *hits.entry(rho.inflate_unchecked(v)).or_default() += 1;
                        });
                        for (pi, c) in hits {
                            if c > 1 && rho.fills(&pi) {
                                unique = false;
                            }
                        }
                    }
                    assert_eq!(rho.is_compact(), unique, "{rho}");
                }
            }
        }
    }

    #[test]
    fn peg_set_file() {
        let s = parse_peg_set("# class\n+3+1+2\n\n+1 # trailing\n").unwrap();
        assert_eq!(s.len(), 2);
        assert!(parse_peg_set("# nothing\n").is_err());
        assert!(parse_peg_set("+1\n+1+1\n").is_err());
    }
}

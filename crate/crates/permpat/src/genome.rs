//! Block moves (reversals, transpositions, interchanges and their prefix and
//! cut-paste variants) acting on peg permutations, and the radius-`k` balls
//! around the identity they generate.
//!
//! A ball is computed symbolically: starting from `{+1}`, each move cuts
//! signed entries into shorter runs where the move needs a cut point, then
//! rearranges whole entries. [`bfs_ball`] recounts the same ball by brute
//! force on `S_n`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::peg::{
    polyclass_enumerate, polyclass_stream, ClassPolynomial, Decoration, PegPermutation, Polyclass,
};
use crate::perm::Permutation;

/// Default bound on the number of pegs kept while growing a ball.
pub const DEFAULT_CAP: usize = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockOp {
    BlockReversal,
    BlockTransposition,
    BlockInterchange,
    PrefixTransposition,
    PrefixReversal,
    CutPaste,
}

impl BlockOp {
    pub const ALL: [BlockOp; 6] = [
        BlockOp::BlockTransposition,
        BlockOp::PrefixTransposition,
        BlockOp::BlockReversal,
        BlockOp::PrefixReversal,
        BlockOp::CutPaste,
        BlockOp::BlockInterchange,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BlockOp::BlockReversal => "block_reversal",
            BlockOp::BlockTransposition => "block_transposition",
            BlockOp::BlockInterchange => "block_interchange",
            BlockOp::PrefixTransposition => "prefix_transposition",
            BlockOp::PrefixReversal => "prefix_reversal",
            BlockOp::CutPaste => "cut_paste",
        }
    }

    /// Cut points one move can place inside a single run.
    pub fn cuts(self) -> usize {
        match self {
            BlockOp::PrefixReversal => 1,
            BlockOp::BlockReversal | BlockOp::PrefixTransposition => 2,
            BlockOp::BlockTransposition | BlockOp::CutPaste => 3,
            BlockOp::BlockInterchange => 4,
        }
    }

    /// Calls `f` on every rearrangement of `s` reachable by one move,
    /// including some that leave `s` unchanged. `flip` is applied to each
    /// element of a reversed block.
    pub fn for_each_move<T: Copy>(self, s: &[T], flip: impl Fn(T) -> T, mut f: impl FnMut(&[T])) {
        self.moves(s, &flip, &mut f);
    }

    fn moves<T: Copy>(self, s: &[T], flip: &dyn Fn(T) -> T, f: &mut dyn FnMut(&[T])) {
        let m = s.len();
        let mut buf: Vec<T> = Vec::with_capacity(m);
        let rev = |buf: &mut Vec<T>, part: &[T]| buf.extend(part.iter().rev().map(|&x| flip(x)));
        match self {
            BlockOp::BlockReversal => {
                // Single entries count: reversing a run flips its sign.
                for i in 0..m {
                    for j in i + 1..=m {
                        buf.clear();
                        buf.extend_from_slice(&s[..i]);
                        rev(&mut buf, &s[i..j]);
                        buf.extend_from_slice(&s[j..]);
                        f(&buf);
                    }
                }
            }
            BlockOp::PrefixReversal => {
                for j in 1..=m {
                    buf.clear();
                    rev(&mut buf, &s[..j]);
                    buf.extend_from_slice(&s[j..]);
                    f(&buf);
                }
            }
            BlockOp::BlockTransposition | BlockOp::CutPaste => {
                for i in 0..m {
                    for j in i + 1..m {
                        for k in j + 1..=m {
                            let (a, b) = (&s[i..j], &s[j..k]);
                            let variants: &[(bool, bool)] = if self == BlockOp::CutPaste {
                                &[(false, false), (true, false), (false, true)]
                            } else {
                                &[(false, false)]
                            };
                            for &(rb, ra) in variants {
                                buf.clear();
                                buf.extend_from_slice(&s[..i]);
                                if rb {
                                    rev(&mut buf, b);
                                } else {
                                    buf.extend_from_slice(b);
                                }
                                if ra {
                                    rev(&mut buf, a);
                                } else {
                                    buf.extend_from_slice(a);
                                }
                                buf.extend_from_slice(&s[k..]);
                                f(&buf);
                            }
                        }
                    }
                }
                if self == BlockOp::CutPaste {
                    // Reversing a block in place is moving it to where it was.
                    BlockOp::BlockReversal.moves(s, flip, f);
                }
            }
            BlockOp::PrefixTransposition => {
                for j in 1..m {
                    for k in j + 1..=m {
                        buf.clear();
                        buf.extend_from_slice(&s[j..k]);
                        buf.extend_from_slice(&s[..j]);
                        buf.extend_from_slice(&s[k..]);
                        f(&buf);
                    }
                }
            }
            BlockOp::BlockInterchange => {
                for i in 0..m {
                    for j in i + 1..m {
                        for k in j..m {
                            for l in k + 1..=m {
                                buf.clear();
                                buf.extend_from_slice(&s[..i]);
                                buf.extend_from_slice(&s[k..l]);
                                buf.extend_from_slice(&s[j..k]);
                                buf.extend_from_slice(&s[i..j]);
                                buf.extend_from_slice(&s[l..]);
                                f(&buf);
                            }
                        }
                    }
                }
            }
        }
    }
}

impl fmt::Display for BlockOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BlockOp {
    type Err = Error;

    /// Full names (`block_reversal`, hyphens allowed) or the short forms
    /// `br`, `bt`, `bi`, `pt`, `pr`, `cp`.
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Ok(match key.as_str() {
            "block_reversal" | "br" => BlockOp::BlockReversal,
            "block_transposition" | "bt" => BlockOp::BlockTransposition,
            "block_interchange" | "bi" => BlockOp::BlockInterchange,
            "prefix_transposition" | "pt" => BlockOp::PrefixTransposition,
            "prefix_reversal" | "pr" => BlockOp::PrefixReversal,
            "cut_paste" | "cp" => BlockOp::CutPaste,
            _ => return Err(Error::UnknownName(s.to_string())),
        })
    }
}

type Pair = (u32, Decoration);

/// Splits the signed entry at `i` into two runs of the same sign, the first
/// lower for `+` and higher for `-`. Values are left unstandardized but
/// distinct: everything above the entry moves up by one.
fn split(pairs: &[Pair], i: usize) -> Vec<Pair> {
    let (a, d) = pairs[i];
    let mut out = Vec::with_capacity(pairs.len() + 1);
    for (j, &(b, e)) in pairs.iter().enumerate() {
        if j == i {
            let (first, second) = if d == Decoration::Minus {
                (a + 1, a)
            } else {
                (a, a + 1)
            };
            out.push((first, d));
            out.push((second, d));
        } else {
            out.push((if b > a { b + 1 } else { b }, e));
        }
    }
    out
}

/// All ways to cut signed entries at most `cuts` times in total.
fn refinements(peg: &[Pair], cuts: usize) -> HashSet<Vec<Pair>> {
    let mut all: HashSet<Vec<Pair>> = HashSet::new();
    all.insert(peg.to_vec());
    let mut frontier = vec![peg.to_vec()];
    for _ in 0..cuts {
        let mut next = Vec::new();
        for p in &frontier {
            for i in 0..p.len() {
                if p[i].1.is_signed() {
                    let q = split(p, i);
                    if all.insert(q.clone()) {
                        next.push(q);
                    }
                }
            }
        }
        frontier = next;
    }
    all
}

/// Joins neighbouring runs that continue each other (`+a +(a+1)` or
/// `-a -(a-1)`) and standardizes.
fn normalize(pairs: &[Pair]) -> PegPermutation {
    let mut cur: Vec<Pair> = pairs.to_vec();
    loop {
        let mut out: Vec<Pair> = Vec::with_capacity(cur.len());
        // Value at the far end of the run being extended.
        let mut tail = 0u32;
        for &(v, d) in &cur {
            if let Some(&mut (ref mut lo, e)) = out.last_mut() {
                let joins = e == d
                    && match d {
                        Decoration::Plus => v == tail + 1,
                        Decoration::Minus => v + 1 == tail,
                        Decoration::Dot => false,
                    };
                if joins {
                    *lo = (*lo).min(v);
                    tail = v;
                    continue;
                }
            }
            out.push((v, d));
            tail = v;
        }
        let peg = PegPermutation::from_pairs_standardizing(&out);
        if out.len() == cur.len() {
            return peg;
        }
        cur = peg.pairs();
    }
}

/// One move applied to every member of `set`.
pub fn apply_to_pegset(op: BlockOp, set: &BTreeSet<PegPermutation>) -> BTreeSet<PegPermutation> {
    let per_member: Vec<HashSet<PegPermutation>> = set
        .par_iter()
        .map(|peg| {
            let mut out = HashSet::new();
            out.insert(peg.clone());
            for r in refinements(&peg.pairs(), op.cuts()) {
                op.for_each_move(
                    &r,
                    |(v, d)| (v, d.flipped()),
                    |mv| {
                        out.insert(normalize(mv));
                    },
                );
            }
            out
        })
        .collect();
    per_member.into_iter().flatten().collect()
}

/// Pegs whose inflations make up every permutation within `k` moves of the
/// identity.
pub fn ball_pegs(op: BlockOp, k: usize, cap: usize) -> Result<BTreeSet<PegPermutation>> {
    let mut all: BTreeSet<PegPermutation> = BTreeSet::new();
    all.insert(PegPermutation::increasing());
    let mut frontier = all.clone();
    for _ in 0..k {
        let next: BTreeSet<PegPermutation> = apply_to_pegset(op, &frontier)
            .into_iter()
            .filter(|p| !all.contains(p))
            .collect();
        all.extend(next.iter().cloned());
        if all.len() > cap {
            return Err(Error::CapExceeded {
                size: all.len(),
                cap,
            });
        }
        frontier = next;
    }
    Ok(all)
}

/// The ball of radius `k` as an enumerated polynomial class.
pub fn ball_class(op: BlockOp, k: usize, cap: usize) -> Result<Polyclass> {
    polyclass_enumerate(&ball_pegs(op, k, cap)?)
}

/// The ball's counting polynomial, through the low-memory completion.
pub fn ball_polynomial(op: BlockOp, k: usize) -> Result<ClassPolynomial> {
    Ok(polyclass_stream(&ball_pegs(op, k, DEFAULT_CAP)?)?.polynomial)
}

/// Packs a permutation of length at most 16 into one word.
fn pack(p: &[u8]) -> u64 {
    p.iter().fold(0u64, |acc, &x| (acc << 4) | x as u64)
}

/// Sizes of the distance spheres around the identity of `S_n`, radius
/// `0..=k`.
pub fn bfs_spheres(op: BlockOp, k: usize, n: usize) -> Result<Vec<usize>> {
    if n > 16 {
        return Err(Error::BudgetExceeded(format!(
            "breadth-first search needs n <= 16, got {n}"
        )));
    }
    let start: Vec<u8> = (0..n as u8).collect();
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(pack(&start));
    let mut frontier = vec![start];
    let mut spheres = vec![1];
    for _ in 0..k {
        let found: Vec<Vec<Vec<u8>>> = frontier
            .par_iter()
            .map(|p| {
                let mut local = Vec::new();
                op.for_each_move(
                    p,
                    |x| x,
                    |q| {
                        if !seen.contains(&pack(q)) {
                            local.push(q.to_vec());
                        }
                    },
                );
                local
            })
            .collect();
        let mut next = Vec::new();
        for q in found.into_iter().flatten() {
            if seen.insert(pack(&q)) {
                next.push(q);
            }
        }
        spheres.push(next.len());
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    spheres.resize(k + 1, 0);
    Ok(spheres)
}

/// Permutations of length `n` at most `k` moves from the identity.
pub fn bfs_ball(op: BlockOp, k: usize, n: usize) -> Result<usize> {
    Ok(bfs_spheres(op, k, n)?.iter().sum())
}

/// Fewest moves turning the identity into `perm`; every move is reversible,
/// so this is also the sorting distance.
pub fn distance(perm: &Permutation, op: BlockOp) -> Result<usize> {
    let n = perm.len();
    if n > 16 {
        return Err(Error::BudgetExceeded(format!(
            "distance needs n <= 16, got {n}"
        )));
    }
    let target: Vec<u8> = perm.entries().iter().map(|&v| v as u8 - 1).collect();
    let goal = pack(&target);
    let start: Vec<u8> = (0..n as u8).collect();
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(pack(&start));
    let mut frontier = vec![start];
    let mut d = 0;
    loop {
        if frontier.iter().any(|p| pack(p) == goal) {
            return Ok(d);
        }
        let mut next = Vec::new();
        for p in &frontier {
            op.for_each_move(
                p,
                |x| x,
                |q| {
                    if seen.insert(pack(q)) {
                        next.push(q.to_vec());
                    }
                },
            );
        }
        if next.is_empty() {
            return Err(Error::InvalidArgument(format!("{perm} is unreachable")));
        }
        frontier = next;
        d += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn peg(s: &str) -> PegPermutation {
        s.parse().unwrap()
    }

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn class_counts(set: &BTreeSet<PegPermutation>, n: usize) -> Vec<BigInt> {
        polyclass_enumerate(set).unwrap().counts(n)
    }

    #[test]
    fn op_names_round_trip() {
        for op in BlockOp::ALL {
            assert_eq!(op.name().parse::<BlockOp>().unwrap(), op);
        }
        assert_eq!("cp".parse::<BlockOp>().unwrap(), BlockOp::CutPaste);
        assert_eq!(
            "block-interchange".parse::<BlockOp>().unwrap(),
            BlockOp::BlockInterchange
        );
        assert!("shuffle".parse::<BlockOp>().is_err());
    }

    #[test]
    fn normalization_joins_runs() {
        let p = normalize(&[
            (1, Decoration::Plus),
            (2, Decoration::Plus),
            (5, Decoration::Minus),
            (4, Decoration::Minus),
        ]);
        assert_eq!(p, peg("+1-2"));
        let p = normalize(&[(2, Decoration::Plus), (1, Decoration::Plus)]);
        assert_eq!(p, peg("+2+1"));
    }

    #[test]
    fn one_move_from_the_identity() {
        let one = |op| {
            let mut s = BTreeSet::new();
            s.insert(PegPermutation::increasing());
            apply_to_pegset(op, &s)
        };
        let single = |s: &str| -> BTreeSet<PegPermutation> { [peg(s)].into_iter().collect() };
        let br = one(BlockOp::BlockReversal);
        assert_eq!(class_counts(&br, 9), class_counts(&single("+1-2+3"), 9));
        let pr = one(BlockOp::PrefixReversal);
        assert_eq!(class_counts(&pr, 9), class_counts(&single("-1+2"), 9));
        let bt = one(BlockOp::BlockTransposition);
        assert_eq!(class_counts(&bt, 9), class_counts(&single("+1+3+2+4"), 9));
    }

    #[test]
    fn two_reversals() {
        let pegs = ball_pegs(BlockOp::BlockReversal, 2, DEFAULT_CAP).unwrap();
        let printed: BTreeSet<PegPermutation> =
            ["+1-4+3-2+5", "+1-2+3-4+5", "+1+4-2-3+5", "+1-3-4+2+5"]
                .iter()
                .map(|s| peg(s))
                .collect();
        assert_eq!(class_counts(&pegs, 9), class_counts(&printed, 9));
    }

    #[test]
    fn ball_counts_match_search() {
        for op in BlockOp::ALL {
            let cls = ball_class(op, 1, DEFAULT_CAP).unwrap();
            let counts = cls.counts(7);
            for n in 1..=7 {
                assert_eq!(
                    counts[n - 1],
                    BigInt::from(bfs_ball(op, 1, n).unwrap()),
                    "{op} n={n}"
                );
            }
        }
    }

    #[test]
    fn small_table_rows() {
        let cp = ball_polynomial(BlockOp::CutPaste, 1).unwrap();
        assert_eq!(
            cp.counts(10),
            ints(&[1, 2, 6, 16, 35, 66, 112, 176, 261, 370])
        );
        assert_eq!(cp.binomial_coeffs, ints(&[0, 1, 0, 3]));
        assert_eq!(bfs_ball(BlockOp::BlockInterchange, 1, 6).unwrap(), 71);
        assert_eq!(bfs_ball(BlockOp::BlockReversal, 2, 7).unwrap(), 288);
        assert_eq!(bfs_ball(BlockOp::CutPaste, 0, 5).unwrap(), 1);
    }

    #[test]
    fn distances() {
        let p: Permutation = "321".parse().unwrap();
        assert_eq!(distance(&p, BlockOp::BlockReversal).unwrap(), 1);
        assert_eq!(
            distance(&Permutation::identity(4), BlockOp::PrefixReversal).unwrap(),
            0
        );
        // Prefix reversals reverse the whole word in one move.
        let p: Permutation = "4321".parse().unwrap();
        assert_eq!(distance(&p, BlockOp::PrefixReversal).unwrap(), 1);
        let p: Permutation = "2143".parse().unwrap();
        assert_eq!(distance(&p, BlockOp::BlockTransposition).unwrap(), 2);
        assert_eq!(distance(&p, BlockOp::BlockReversal).unwrap(), 2);
    }

    #[test]
    fn balls_are_nested() {
        for op in [BlockOp::BlockReversal, BlockOp::PrefixTransposition] {
            let a = ball_class(op, 1, DEFAULT_CAP).unwrap().counts(9);
            let b = ball_class(op, 2, DEFAULT_CAP).unwrap().counts(9);
            assert!(a.iter().zip(&b).all(|(x, y)| x <= y));
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            ball_pegs(BlockOp::BlockInterchange, 2, 10),
            Err(Error::CapExceeded { .. })
        ));
    }
}

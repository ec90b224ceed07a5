//! The acceptance checks, shared by the `verify` subcommand and the
//! integration tests.
//!
//! Each criterion is a list of [`Check`]s. A check may carry a
//! `known_mismatch` note when the expected value is a printed constant that
//! the computation cannot reproduce; such a check is reported as FAIL, and
//! [`CriterionReport::unexpected`] flags it only if it starts passing.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bijection::{peak_heights, phi, phi_prime, phi_star};
use crate::error::{Error, Result};
use crate::genome::{ball_polynomial, bfs_ball, BlockOp};
use crate::oracle::{
    bond_distribution, class_members, enumerate_class, enumerate_involutions, identities,
    identity_suite, occurrence_totals, simple_members, AvoidanceQuery, Budget,
};
use crate::peg::{brute_class_members, polyclass_enumerate, polyclass_stream, PegPermutation};
use crate::perm::{
    bonds, count_occurrences, del_set, gap_report, ins_set_size, is_k_plentiful,
    is_k_plentiful_brute, theta, Permutation,
};
use crate::series::{
    assemble_av1342, assemble_av2341, catalog, exact_formula, formula_min_n, num231_unscaled,
    num321_unscaled,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
    /// Why the expected value is known to be unreachable.
    pub known_mismatch: Option<&'static str>,
}

impl Check {
    fn new(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            passed,
            detail: detail.into(),
            known_mismatch: None,
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(label: impl Into<String>, got: T, expected: T) -> Self {
        let passed = got == expected;
        let detail = if passed {
            format!("{got:?}")
        } else {
            format!("got {got:?}, expected {expected:?}")
        };
        Check::new(label, passed, detail)
    }

    fn known(mut self, why: &'static str) -> Self {
        self.known_mismatch = Some(why);
        self
    }

    /// Passed without a known mismatch, or failed with one.
    pub fn as_expected(&self) -> bool {
        self.passed != self.known_mismatch.is_some()
    }
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Checks whose outcome differs from what is on record.
    pub fn unexpected(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.as_expected()).collect()
    }

    /// One line: verdict, id, title, counts and time.
    pub fn summary(&self) -> String {
        let failed: Vec<&Check> = self.checks.iter().filter(|c| !c.passed).collect();
        let mut s = format!(
            "{} criterion {:>2}: {} ({}/{} checks, {:.1}s)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.checks.len() - failed.len(),
            self.checks.len(),
            self.elapsed.as_secs_f64()
        );
        if !failed.is_empty() {
            let labels: Vec<String> = failed
                .iter()
                .map(|c| match c.known_mismatch {
                    Some(_) => format!("{} [known]", c.label),
                    None => c.label.clone(),
                })
                .collect();
            s.push_str(&format!("; failing: {}", labels.join(", ")));
        }
        s
    }
}

pub const CRITERIA: &[(usize, &str)] = &[
    (1, "Wilf classes of length-four patterns"),
    (2, "occurrence totals in Av(123) and Av(132)"),
    (3, "generating-function prefixes"),
    (4, "series and closed forms against the oracle"),
    (5, "involution classes"),
    (6, "simple involutions avoiding 2341 and 4123"),
    (7, "polynomial class enumeration"),
    (8, "block-move tables"),
    (9, "block-move balls against search"),
    (10, "deletions, insertions, bonds and gaps"),
    (11, "Dyck path bijections"),
    (12, "equivalent forms of the 213 count"),
];

/// Criterion ids in a named suite, or a comma-separated id list.
pub fn suite(name: &str) -> Result<Vec<usize>> {
    match name {
        "all" => Ok(CRITERIA.iter().map(|c| c.0).collect()),
        "quick" => Ok(CRITERIA.iter().map(|c| c.0).filter(|&i| i != 8).collect()),
        list => list
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|i| (1..=CRITERIA.len()).contains(i))
                    .ok_or_else(|| Error::UnknownName(t.trim().to_string()))
            })
            .collect(),
    }
}

pub fn run(id: usize) -> Result<CriterionReport> {
    let title = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .ok_or_else(|| Error::UnknownName(id.to_string()))?
        .1;
    let start = Instant::now();
    let budget = Budget::default();
    let checks = match id {
        1 => wilf_classes(&budget)?,
        2 => occurrence_tables(&budget)?,
        3 => series_prefixes()?,
        4 => series_against_oracle(&budget)?,
        5 => involutions(&budget)?,
        6 => simple_involutions(&budget)?,
        7 => polyclass()?,
        8 => genome_tables()?,
        9 => genome_search()?,
        10 => large_patterns(&budget)?,
        11 => bijections(&budget)?,
        _ => equivalences(&budget)?,
    };
    Ok(CriterionReport {
        id,
        title,
        checks,
        elapsed: start.elapsed(),
    })
}

fn perm(s: &str) -> Permutation {
    s.parse().expect("literal permutation")
}

fn count(basis: &str, n: usize, budget: &Budget) -> Result<u64> {
    enumerate_class(&AvoidanceQuery::new(vec![perm(basis)], n)?, budget)
}

fn wilf_classes(budget: &Budget) -> Result<Vec<Check>> {
    let rows: [(&str, [u64; 8]); 3] = [
        ("1342", [1, 2, 6, 23, 103, 512, 2740, 15485]),
        ("1234", [1, 2, 6, 23, 103, 513, 2761, 15767]),
        ("1324", [1, 2, 6, 23, 103, 513, 2762, 15793]),
    ];
    rows.iter()
        .map(|(b, row)| {
            let got = (1..=8)
                .map(|n| count(b, n, budget))
                .collect::<Result<Vec<_>>>()?;
            Ok(Check::eq(
                format!("|Av_n({b})|, n = 1..8"),
                got,
                row.to_vec(),
            ))
        })
        .collect()
}

fn occurrence_tables(budget: &Budget) -> Result<Vec<Check>> {
    const PATTERNS: [&str; 6] = ["123", "132", "213", "231", "312", "321"];
    let panels: [(&str, [[u64; 6]; 5]); 2] = [
        (
            "123",
            [
                [0, 1, 1, 1, 1, 1],
                [0, 9, 9, 11, 11, 16],
                [0, 57, 57, 81, 81, 144],
                [0, 312, 312, 500, 500, 1016],
                [0, 1578, 1578, 2794, 2794, 6271],
            ],
        ),
        (
            "132",
            [
                [1, 0, 1, 1, 1, 1],
                [10, 0, 11, 11, 11, 13],
                [68, 0, 81, 81, 81, 109],
                [392, 0, 500, 500, 500, 748],
                [2063, 0, 2794, 2794, 2794, 4570],
            ],
        ),
    ];
    let mut out = Vec::new();
    for (basis, rows) in panels {
        for (i, row) in rows.iter().enumerate() {
            let n = i + 3;
            let got = PATTERNS
                .iter()
                .map(|s| occurrence_totals(&perm(s), &[perm(basis)], n, budget))
                .collect::<Result<Vec<_>>>()?;
            out.push(Check::eq(
                format!("Av_{n}({basis}) totals"),
                got,
                row.to_vec(),
            ));
        }
    }
    Ok(out)
}

fn coefficients(name: &str, order: usize) -> Result<Vec<BigInt>> {
    catalog(name, order)?
        .univariate()?
        .to_integers()
        .ok_or_else(|| Error::Series(format!("{name} has non-integer coefficients")))
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn series_prefixes() -> Result<Vec<Check>> {
    // (name, first index, stride, printed values)
    let rows: [(&str, usize, usize, &[i64]); 8] = [
        ("catalan", 0, 1, &[1, 1, 2, 5, 14, 42, 132]),
        ("num213_star", 3, 1, &[1, 7, 38, 187, 874]),
        ("av123_simples", 2, 1, &[1, 0, 2, 2, 7, 14, 37]),
        ("htso", 5, 2, &[2, 2, 10, 22, 68]),
        ("htszero", 8, 2, &[1, 2, 8, 22, 68]),
        ("htstwo", 6, 2, &[3, 4, 15, 36]),
        ("no_bonds", 4, 1, &[2, 14, 90, 646, 5242]),
        ("ascents_total", 2, 1, &[1, 5, 21, 84, 330]),
    ];
    rows.iter()
        .map(|&(name, first, stride, printed)| {
            let last = first + stride * (printed.len() - 1);
            let c = coefficients(name, last)?;
            let got: Vec<BigInt> = (0..printed.len())
                .map(|i| c[first + stride * i].clone())
                .collect();
            Ok(Check::eq(
                format!("{name} from x^{first}"),
                got,
                ints(printed),
            ))
        })
        .collect()
}

fn series_against_oracle(budget: &Budget) -> Result<Vec<Check>> {
    let n_max = 10;
    let b123 = [perm("123")];
    let totals = |pattern: &str| -> Result<Vec<BigInt>> {
        (0..=n_max)
            .map(|n| {
                Ok(BigInt::from(occurrence_totals(
                    &perm(pattern),
                    &b123,
                    n,
                    budget,
                )?))
            })
            .collect()
    };
    let mut out = Vec::new();
    for (name, pattern) in [
        ("num12_av123", "12"),
        ("num213", "213"),
        ("num231", "231"),
        ("num321", "321"),
    ] {
        out.push(Check::eq(
            format!("{name} vs oracle, n <= {n_max}"),
            coefficients(name, n_max)?,
            totals(pattern)?,
        ));
    }
    let as_printed = num231_unscaled(n_max)?.to_integers().unwrap_or_default();
    out.push(
        Check::eq(
            "231 closed form as printed vs oracle",
            as_printed,
            totals("231")?,
        )
        .known("the printed expression has constant term -2; with numerator 1-3z in the first term and a factor 1/2 it gives the totals"),
    );
    let as_printed = num321_unscaled(n_max)?.to_integers().unwrap_or_default();
    out.push(
        Check::eq(
            "321 closed form as printed vs oracle",
            as_printed,
            totals("321")?,
        )
        .known("the printed expression is 2z times the totals"),
    );
    for (name, pattern) in [("a", "132"), ("b", "231"), ("d", "321")] {
        let t = totals(pattern)?;
        let lo = formula_min_n(name);
        let got = (lo..=n_max)
            .map(|n| exact_formula(name, n))
            .collect::<Result<Vec<_>>>()?;
        let want: Vec<BigRational> = t[lo..]
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect();
        out.push(Check::eq(
            format!("formula {name} vs oracle, n = {lo}..{n_max}"),
            got,
            want,
        ));
    }
    Ok(out)
}

type Assembler = fn(usize) -> Result<crate::series::TruncatedSeries>;

fn involutions(budget: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let columns: [(&str, Assembler, [i128; 7]); 2] = [
        (
            "1342",
            assemble_av1342,
            [24, 62, 156, 406, 1040, 2714, 7012],
        ),
        (
            "2341",
            assemble_av2341,
            [25, 66, 170, 441, 1124, 2870, 7273],
        ),
    ];
    for (b, assemble, column) in columns {
        let g = assemble(12)?.to_i128();
        out.push(Check::eq(
            format!("assembled {b} series, n = 5..11"),
            g[5..12].to_vec(),
            column.to_vec(),
        ));
        let oracle = (1..=12)
            .map(|n| {
                enumerate_involutions(&AvoidanceQuery::new(vec![perm(b)], n)?, budget)
                    .map(|c| c as i128)
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(Check::eq(
            format!("assembled {b} series vs oracle, n = 1..12"),
            g[1..=12].to_vec(),
            oracle,
        ));
    }
    let got = (1..=14)
        .map(|n| enumerate_involutions(&AvoidanceQuery::new(vec![perm("123")], n)?, budget))
        .collect::<Result<Vec<_>>>()?;
    let want: Vec<u64> = (1..=14u64)
        .map(|n| (0..n / 2).fold(1, |acc, i| acc * (n - i) / (i + 1)))
        .collect();
    out.push(Check::eq(
        "Av^I_n(123) = C(n, floor(n/2)), n <= 14",
        got,
        want,
    ));
    Ok(out)
}

fn simple_involutions(budget: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let extra = perm("5274163");
    for n in 1..=9 {
        let wide: BTreeSet<Permutation> =
            simple_members(&[perm("2341"), perm("4123")], n, true, None, budget)?
                .into_iter()
                .collect();
        let mut narrow: BTreeSet<Permutation> =
            simple_members(&[perm("123")], n, true, None, budget)?
                .into_iter()
                .collect();
        if n == extra.len() {
            narrow.insert(extra.clone());
        }
        out.push(Check::eq(format!("n = {n}"), wide, narrow));
    }
    Ok(out)
}

fn peg_set(items: &[&str]) -> BTreeSet<PegPermutation> {
    items
        .iter()
        .map(|s| s.parse().expect("literal peg"))
        .collect()
}

fn random_peg(rng: &mut ChaCha8Rng) -> PegPermutation {
    use crate::peg::Decoration::*;
    let len = rng.gen_range(1..=4);
    let mut vals: Vec<u32> = (1..=len).collect();
    vals.shuffle(rng);
    let decs = (0..len)
        .map(|_| [Plus, Minus, Dot][rng.gen_range(0..3)])
        .collect();
    PegPermutation::new(Permutation::new(vals).expect("shuffled"), decs).expect("lengths agree")
}

fn polyclass() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let target_counts: Vec<BigInt> = (1..=10)
        .map(|n: i64| BigInt::from((n * n - n + 2) / 2))
        .collect();
    let literal = polyclass_enumerate(&peg_set(&["+3+1+2"]))?;
    out.push(
        Check::eq("+3+1+2 counts (n^2-n+2)/2, n <= 10", literal.counts(10), target_counts.clone()).known(
            "+1+2 is an ascending interval, so +3+1+2 generates the class of +2+1 with n permutations of each length",
        ),
    );
    out.push(
        Check::eq(
            "+3+1+2 gf (z^3-z^2+z)/(1-z)^3",
            literal.gf.to_string(),
            "(z - z^2 + z^3)/(1-z)^3".to_string(),
        )
        .known("the class of +2+1 has gf z/(1-z)^2"),
    );
    let decreasing = polyclass_enumerate(&peg_set(&["-3-1-2"]))?;
    out.push(Check::eq(
        "-3-1-2 gf (z^3-z^2+z)/(1-z)^3",
        decreasing.gf.to_string(),
        "(z - z^2 + z^3)/(1-z)^3".to_string(),
    ));
    out.push(Check::eq(
        "-3-1-2 counts (n^2-n+2)/2, n <= 10",
        decreasing.counts(10),
        target_counts,
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for t in 0..12 {
        let size = rng.gen_range(1..=3);
        let set: BTreeSet<PegPermutation> = (0..size).map(|_| random_peg(&mut rng)).collect();
        let p = polyclass_enumerate(&set)?;
        let counts = p.counts(9);
        let brute: Vec<BigInt> = (1..=9)
            .map(|n| BigInt::from(brute_class_members(&set, n)))
            .collect();
        // The partition itself: class by class, members are distinct and
        // add up to the brute-force count.
        let mut partition_ok = true;
        for n in 1..=9 {
            let mut seen = HashSet::new();
            for c in &p.partition {
                for m in c.members(n) {
                    partition_ok &= seen.insert(m);
                }
            }
            partition_ok &= BigInt::from(seen.len()) == brute[n - 1];
        }
        let streamed = polyclass_stream(&set)?.gf == p.gf;
        let names: Vec<String> = set.iter().map(|q| q.to_string()).collect();
        out.push(Check::new(
            format!("random set {t} {{{}}}", names.join(", ")),
            counts == brute && partition_ok && streamed,
            format!(
                "counts {:?}",
                counts.iter().map(|c| c.to_string()).collect::<Vec<_>>()
            ),
        ));
    }
    Ok(out)
}

/// A printed row: operation, radius, counts for `n = 1..10`, binomial-basis
/// coefficients.
pub struct TableRow {
    pub op: BlockOp,
    pub k: usize,
    pub counts: [i64; 10],
    pub basis: &'static [i64],
}

pub const GENOME_TABLE: &[TableRow] = &[
    TableRow {
        op: BlockOp::BlockTransposition,
        k: 1,
        counts: [1, 2, 5, 11, 21, 36, 57, 85, 121, 166],
        basis: &[1, 0, 1, 1],
    },
    TableRow {
        op: BlockOp::BlockTransposition,
        k: 2,
        counts: [1, 2, 6, 23, 89, 295, 827, 2017, 4405, 8812],
        basis: &[1, 0, 1, 2, 8, 18, 11],
    },
    TableRow {
        op: BlockOp::BlockTransposition,
        k: 3,
        counts: [1, 2, 6, 24, 120, 675, 3527, 15484, 56917, 179719],
        basis: &[1, 0, 1, 2, 9, 44, 220, 656, 841, 369],
    },
    TableRow {
        op: BlockOp::PrefixTransposition,
        k: 1,
        counts: [1, 2, 4, 7, 11, 16, 22, 29, 37, 46],
        basis: &[1, 0, 1],
    },
    TableRow {
        op: BlockOp::PrefixTransposition,
        k: 2,
        counts: [1, 2, 6, 21, 61, 146, 302, 561, 961, 1546],
        basis: &[1, 0, 1, 2, 6],
    },
    TableRow {
        op: BlockOp::PrefixTransposition,
        k: 3,
        counts: [1, 2, 6, 24, 116, 521, 1877, 5531, 13939, 31156],
        basis: &[1, 0, 1, 2, 9, 40, 90],
    },
    TableRow {
        op: BlockOp::BlockReversal,
        k: 1,
        counts: [1, 2, 4, 7, 11, 16, 22, 29, 37, 46],
        basis: &[1, 0, 1],
    },
    TableRow {
        op: BlockOp::BlockReversal,
        k: 2,
        counts: [1, 2, 6, 22, 63, 145, 288, 516, 857, 1343],
        basis: &[8, -3, 1, 4],
    },
    TableRow {
        op: BlockOp::BlockReversal,
        k: 3,
        counts: [1, 2, 6, 24, 118, 534, 1851, 5158, 12264, 25943],
        basis: &[318, -214, 131, -61, 20, 70, 35],
    },
    TableRow {
        op: BlockOp::PrefixReversal,
        k: 1,
        counts: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
        basis: &[0, 1],
    },
    TableRow {
        op: BlockOp::PrefixReversal,
        k: 2,
        counts: [1, 2, 5, 10, 17, 26, 37, 50, 65, 82],
        basis: &[2, -1, 2],
    },
    TableRow {
        op: BlockOp::PrefixReversal,
        k: 3,
        counts: [1, 2, 6, 21, 52, 105, 186, 301, 456, 657],
        basis: &[-3, 3, -2, 6],
    },
    TableRow {
        op: BlockOp::CutPaste,
        k: 1,
        counts: [1, 2, 6, 16, 35, 66, 112, 176, 261, 370],
        basis: &[0, 1, 0, 3],
    },
    TableRow {
        op: BlockOp::CutPaste,
        k: 2,
        counts: [1, 2, 6, 24, 120, 577, 2208, 6768, 17469, 39603],
        basis: &[-18, 45, -61, 70, -53, 88, 107],
    },
    TableRow {
        op: BlockOp::CutPaste,
        k: 3,
        counts: [1, 2, 6, 24, 120, 720, 5040, 36757, 223898, 1055479],
        basis: &[
            508264, -280036, 140012, -57622, 13839, 4136, -5368, 531, 21125, 12615,
        ],
    },
    TableRow {
        op: BlockOp::BlockInterchange,
        k: 1,
        counts: [1, 2, 6, 16, 36, 71, 127, 211, 331, 496],
        basis: &[1, 0, 1, 2, 1],
    },
    TableRow {
        op: BlockOp::BlockInterchange,
        k: 2,
        counts: [1, 2, 6, 24, 120, 540, 1996, 6196, 16732, 40459],
        basis: &[1, 0, 1, 2, 9, 44, 85, 70, 21],
    },
];

fn genome_tables() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for row in GENOME_TABLE {
        let poly = ball_polynomial(row.op, row.k)?;
        let label = format!("{} k={}", row.op.name(), row.k);
        out.push(Check::eq(
            format!("{label} counts"),
            poly.counts(10),
            ints(&row.counts),
        ));
        let mut check = Check::eq(
            format!("{label} basis"),
            poly.binomial_coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
            row.basis.iter().map(|c| c.to_string()).collect(),
        );
        if row.op == BlockOp::BlockReversal && row.k == 2 {
            check = check.known("the printed basis 8,-3,1,4 lacks a 4*C(n,4) term and gives 6 at n = 4 against the count 22");
        }
        out.push(check);
    }
    Ok(out)
}

fn genome_search() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for op in BlockOp::ALL {
        for k in 1..=2 {
            let poly = ball_polynomial(op, k)?;
            let bfs = (1..=8)
                .map(|n| bfs_ball(op, k, n).map(BigInt::from))
                .collect::<Result<Vec<_>>>()?;
            out.push(Check::eq(
                format!("{} k={k}, n <= 8", op.name()),
                bfs,
                poly.counts(8),
            ));
        }
    }
    Ok(out)
}

fn large_patterns(budget: &Budget) -> Result<Vec<Check>> {
    use crate::perm::all_permutations;
    let mut out = Vec::new();
    let mut del_ok = true;
    let mut ins_ok = true;
    for n in 1..=8 {
        for p in all_permutations(n) {
            del_ok &= del_set(&p).len() == n - bonds(&p);
            if n < 8 {
                ins_ok &= ins_set_size(&p) == n * n + 1;
            }
        }
    }
    out.push(Check::new("|del(pi)| = n - bonds(pi), n <= 8", del_ok, ""));
    out.push(Check::new(
        "|ins(sigma)| = (n-1)^2 + 1 for results of length n <= 8",
        ins_ok,
        "",
    ));
    for k in 1..=3 {
        let mut ok = true;
        for n in k + 1..=8 {
            for p in all_permutations(n) {
                ok &= is_k_plentiful(&p, k) == is_k_plentiful_brute(&p, k);
            }
        }
        out.push(Check::new(
            format!("{k}-plentiful iff gap >= {}, k < n <= 8", k + 2),
            ok,
            "",
        ));
    }
    for n in 2..=9 {
        let d = bond_distribution(n, budget)?;
        out.push(Check::eq(
            format!("bond mean, n = {n}"),
            d.mean,
            exact_formula("bonds_mean", n)?,
        ));
        out.push(Check::eq(
            format!("bond variance, n = {n}"),
            d.variance,
            exact_formula("bonds_variance", n)?,
        ));
    }
    let t = theta(4)?;
    out.push(Check::eq("theta(4)", t.to_string(), "3614725".to_string()));
    out.push(Check::eq("gap of theta(4)", gap_report(&t)?.min_gap, 4));
    Ok(out)
}

fn bijections(budget: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let catalan = |n: usize| (0..n).fold(1usize, |c, i| c * 2 * (2 * i + 1) / (i + 2));
    let mut phi_ok = true;
    let mut prime_ok = true;
    let mut star_ok = true;
    let mut peaks_ok = true;
    for n in 1..=9 {
        let av132 = class_members(&AvoidanceQuery::new(vec![perm("132")], n)?, budget)?;
        let paths: Result<HashSet<_>> = av132.iter().map(phi).collect();
        let paths = paths?;
        phi_ok &= paths.len() == catalan(n) && paths.iter().all(|p| p.semilength() == n);
        let av123 = class_members(&AvoidanceQuery::new(vec![perm("123")], n)?, budget)?;
        let paths: Result<HashSet<_>> = av123.iter().map(phi_prime).collect();
        let paths = paths?;
        prime_ok &= paths.len() == catalan(n) && paths.iter().all(|p| p.semilength() == n);
        if n >= 2 {
            let star: Vec<&Permutation> =
                av123.iter().filter(|p| !p.is_skew_decomposable()).collect();
            let mut seen = HashSet::new();
            for p in &star {
                let path = phi_star(p)?;
                star_ok &= path.semilength() == n - 1;
                let weighted: u64 = peak_heights(&path)
                    .iter()
                    .map(|&h| (h * (h - 1) / 2) as u64)
                    .sum();
                peaks_ok &= weighted == count_occurrences(&perm("213"), p);
                seen.insert(path);
            }
            star_ok &= seen.len() == star.len() && star.len() == catalan(n - 1);
        }
    }
    out.push(Check::new(
        "phi: Av_n(132) onto Dyck paths, n <= 9",
        phi_ok,
        "",
    ));
    out.push(Check::new(
        "phi': Av_n(123) onto Dyck paths, n <= 9",
        prime_ok,
        "",
    ));
    out.push(Check::new(
        "phi*: skew-indecomposable Av_n(123) onto semilength n-1, n <= 9",
        star_ok,
        "",
    ));
    out.push(Check::new(
        "sum of C(h,2) over peaks = num213, n <= 9",
        peaks_ok,
        "",
    ));
    out.push(
        Check::eq("phi(74352681)", phi(&perm("74352681"))?.to_string(), "uuduuududduddud".to_string())
            .known("the printed string has 15 steps and is not a Dyck path; the map gives uuduuududdudddud"),
    );
    out.push(Check::eq(
        "phi*(48371652)",
        phi_star(&perm("48371652"))?.to_string(),
        "uduuduududddud".to_string(),
    ));
    Ok(out)
}

fn equivalences(budget: &Budget) -> Result<Vec<Check>> {
    use identities::*;
    let r = identity_suite(9, budget)?;
    let mut out = Vec::new();
    for name in [INV21_STAR, INV21_FULL, SUM_NEXT, SUM_PREV, SERIES, CROSS] {
        let rows: Vec<_> = r.checks.iter().filter(|c| c.name == name).collect();
        let bad: Vec<String> = rows
            .iter()
            .filter(|c| !c.holds())
            .map(|c| format!("n={}: {} vs {}", c.n, c.lhs, c.rhs))
            .collect();
        let first = rows.first().map_or(0, |c| c.n);
        let last = rows.last().map_or(0, |c| c.n);
        let mut check = Check::new(
            format!("{name}, n = {first}..{last}"),
            bad.is_empty(),
            bad.first().cloned().unwrap_or_default(),
        );
        check = match name {
            INV21_FULL => check.known("with Av_n(123) on the left the sides differ from n = 2; the form over Av*_n(123) holds"),
            SUM_PREV => check.known("with index n-1 the sides differ from n = 3; the index n+1 form holds"),
            _ => check,
        };
        out.push(check);
    }
    out.push(Check::new(
        "ltr-minima positions equidistributed on Av_n(123) and Av_n(132), n <= 9",
        r.ltr_minima.iter().all(|&(_, ok)| ok),
        "",
    ));
    Ok(out)
}

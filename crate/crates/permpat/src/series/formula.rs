use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Names accepted by [`exact_formula`].
pub const FORMULAS: &[(&str, &str)] = &[
    ("a", "occurrences of 132 (equally of 213) over Av_n(123)"),
    ("b", "occurrences of 231 over Av_n(123)"),
    ("d", "occurrences of 321 over Av_n(123)"),
    (
        "num12",
        "occurrences of 12 over Av_n(123), 4^(n-1) - C(2n-1, n)",
    ),
    ("ascents_total", "ascents over Av_n(132), C(2n-1, n-2)"),
    ("av123_231", "|Av_n(123, 231)| = (n^2 - n + 2)/2"),
    ("layered", "layered permutations, 2^(n-1)"),
    (
        "central_binomial",
        "123-avoiding involutions, C(n, floor(n/2))",
    ),
    ("catalan", "C(2n, n)/(n+1)"),
    ("bonds_mean", "mean number of bonds, 2(n-1)/n"),
    ("bonds_variance", "variance of the number of bonds"),
];

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn r(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn b(n: i64, k: i64) -> BigRational {
    r(binom(n, k))
}

fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// `2^e` for possibly negative `e`.
fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        r(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

/// Smallest `n` at which the named formula holds. The `b` formula gives
/// `-1/2` at `n = 1`, where the true count is 0.
pub fn formula_min_n(name: &str) -> usize {
    match name {
        "b" => 2,
        _ => 1,
    }
}

/// Closed-form value of a named sequence at `n >= formula_min_n(name)`.
pub fn exact_formula(name: &str, n: usize) -> Result<BigRational> {
    let lo = formula_min_n(name);
    if n < lo {
        return Err(Error::InvalidArgument(format!(
            "formula `{name}` holds for n >= {lo}"
        )));
    }
    let m = n as i64;
    Ok(match name {
        "a" => frac(m + 2, 4) * b(2 * m, m) - r(3) * pow2(2 * m - 3),
        "b" => {
            r(2 * m - 1) * b(2 * m - 3, m - 2) - r(2 * m + 1) * b(2 * m - 1, m - 1)
                + r(m + 4) * pow2(2 * m - 3)
        }
        "d" => {
            frac(1, 6) * b(2 * m + 5, m + 1) * b(m + 4, 2)
                - frac(5, 3) * b(2 * m + 3, m) * b(m + 3, 2)
                + frac(17, 3) * b(2 * m + 1, m - 1) * b(m + 2, 2)
                - r(6) * b(2 * m - 1, m - 2) * b(m + 1, 2)
                - r(m + 1) * pow2(2 * m - 2)
        }
        "num12" => pow2(2 * m - 2) - b(2 * m - 1, m),
        "ascents_total" => b(2 * m - 1, m - 2),
        "av123_231" => frac(m * m - m + 2, 2),
        "layered" => pow2(m - 1),
        "central_binomial" => b(m, m / 2),
        "catalan" => b(2 * m, m) / r(m + 1),
        "bonds_mean" => frac(2 * (m - 1), m),
        "bonds_variance" => {
            if m == 1 {
                BigRational::zero()
            } else {
                frac(4 * (m - 2) * (m - 2), m * (m - 1)) + frac(2 * (m - 1), m)
                    - frac(4 * (m - 1) * (m - 1), m * m)
            }
        }
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

//! Involution classes assembled from their substitution decompositions: sum
//! and skew decomposable parts plus inflations of the simple 123-avoiding
//! involutions. Each equation is solved for `g` by fixed-point iteration in
//! the series ring.

use super::catalog::{catalan, catalog, simple_involution_forms};
use super::multi::MultiTrunc;
use super::truncated::TruncatedSeries;
use crate::error::{Error, Result};

/// Iterates `g <- step(g)` from `g = 0` until nothing changes. Every pass must
/// lengthen the agreed prefix, otherwise the equation is not contracting.
pub fn solve_fixed_point(
    order: usize,
    step: impl Fn(&TruncatedSeries) -> Result<TruncatedSeries>,
) -> Result<TruncatedSeries> {
    let mut g = TruncatedSeries::zero(order);
    let mut agreed = 0usize;
    for _ in 0..=order + 2 {
        let next = step(&g)?.truncate(order)?;
        if next == g {
            return Ok(g);
        }
        let prefix = (0..=order)
            .take_while(|&k| next.coeff(k) == g.coeff(k))
            .count();
        if prefix <= agreed && agreed > 0 {
            return Err(Error::Series(format!(
                "fixed-point iteration stalled at order {prefix}"
            )));
        }
        agreed = prefix;
        g = next;
    }
    Err(Error::Series(format!(
        "no fixed point within {} passes",
        order + 3
    )))
}

fn poly(c: &[i64], n: usize) -> TruncatedSeries {
    TruncatedSeries::from_ints(c, n)
}

/// `x^2/(1 - x^2)`: a decreasing run paired with its inverse.
fn paired_decreasing(n: usize) -> Result<TruncatedSeries> {
    poly(&[0, 0, 1], n).div(&poly(&[1, 0, -1], n))
}

/// `x/(1 - x)`: a nonempty decreasing run.
fn decreasing(n: usize) -> Result<TruncatedSeries> {
    poly(&[0, 1], n).div(&poly(&[1, -1], n))
}

/// Total degree needed in `(u^2, v^2)` for substitutions of valuation 2 to
/// be exact to `x^n`.
fn uv_degree(n: usize) -> usize {
    n / 2 + 1
}

fn uni(name: &str, n: usize) -> Result<TruncatedSeries> {
    catalog(name, n)?.univariate()
}

/// The pieces of the 1342 equation after substitution, for inspection.
pub struct Av1342Terms {
    pub small_schroder: TruncatedSeries,
    pub zero_fixed: TruncatedSeries,
    pub one_fixed_rtl_max: TruncatedSeries,
    pub one_fixed_ltr_min: TruncatedSeries,
    pub two_fixed: TruncatedSeries,
}

pub fn av1342_terms(n: usize) -> Result<Av1342Terms> {
    let (s0, s1v, s2uv) = simple_involution_forms(uv_degree(n))?;
    let u2 = uni("schroder_large", n)?.dilate(2).truncate(n)?;
    let v2 = paired_decreasing(n)?;
    let sub = |m: &MultiTrunc| -> Result<TruncatedSeries> { m.substitute(&u2, &v2)?.truncate(n) };
    Ok(Av1342Terms {
        small_schroder: uni("schroder_small", n)?.dilate(2).truncate(n)?,
        zero_fixed: sub(&s0)?,
        one_fixed_rtl_max: sub(&s1v)?,
        one_fixed_ltr_min: sub(&s1v.swap())?,
        two_fixed: sub(&s2uv)?,
    })
}

/// 1342-avoiding involutions.
///
/// `g = x + g·x/(1-x) + S(x^2)(1+g) + s0 + (s1/v)·x/(1-x) + (s1'/u)·g
///   + (s2/(uv))·g·x/(1-x)`, with `u^2` the large Schroder series at `x^2`,
/// `v^2 = x^2/(1-x^2)`, `S` the small Schroder series and `s1'` the series
/// `s1` with its variables exchanged.
pub fn assemble_av1342(n: usize) -> Result<TruncatedSeries> {
    let t = av1342_terms(n)?;
    let x = TruncatedSeries::x(n);
    let dec = decreasing(n)?;
    let constant = &(&x + &t.small_schroder) + &(&t.zero_fixed + &(&t.one_fixed_rtl_max * &dec));
    let linear = &(&(&dec + &t.small_schroder) + &t.one_fixed_ltr_min) + &(&t.two_fixed * &dec);
    solve_fixed_point(n, |g| Ok(&constant + &(&linear * g)))
}

/// Skew decomposable 2341-avoiding involutions, `x^2 C(x^2) (B(x) + 1)` with
/// `B` counting 123-avoiding involutions.
pub fn av2341_skew_part(n: usize) -> Result<TruncatedSeries> {
    let c2 = catalan(n)?.dilate(2).truncate(n)?;
    let b = uni("central_binomial_inv", n)?;
    Ok(poly(&[0, 0, 1], n) * c2 * (b + TruncatedSeries::one(n)))
}

/// Everything in the 2341 equation except the sum decomposable part.
pub fn av2341_inhomogeneous(n: usize) -> Result<TruncatedSeries> {
    let (s0, s1v, s2uv) = simple_involution_forms(uv_degree(n))?;
    let w = paired_decreasing(n)?;
    let dec = decreasing(n)?;
    let sub = |m: &MultiTrunc| -> Result<TruncatedSeries> { m.substitute(&w, &w)?.truncate(n) };
    let zero_fixed = sub(&s0)?;
    let one_fixed = sub(&s1v)?.scale_int(2) * &dec;
    let two_fixed = sub(&s2uv)? * &dec * &dec;
    // 5274163: two 2-cycles and three fixed points.
    let exceptional = &w * &w * dec.powi(3)?;
    Ok(TruncatedSeries::x(n)
        + av2341_skew_part(n)?
        + zero_fixed
        + one_fixed
        + two_fixed
        + exceptional)
}

/// 2341-avoiding involutions: `g = g^2/(1+g) + (everything else)`.
pub fn assemble_av2341(n: usize) -> Result<TruncatedSeries> {
    let rest = av2341_inhomogeneous(n)?;
    let one = TruncatedSeries::one(n);
    solve_fixed_point(n, |g| Ok((g * g).div(&(&one + g))? + &rest))
}

/// `t·g^2 + P·g + Q·x` for the printed quadratic satisfied by the 2341
/// series. Vanishes to the order of `g` when `g` is correct.
pub fn av2341_minimal_polynomial_residue(g: &TruncatedSeries) -> TruncatedSeries {
    let n = g.order();
    let p = poly(
        &[
            -1, 8, -17, -24, 151, -162, -221, 624, -231, -684, 801, 60, -627, 334, 101, -158, 48,
        ],
        n,
    );
    let q = poly(
        &[
            1, -5, 3, 28, -60, -11, 159, -131, -130, 256, -48, -169, 125, 16, -51, 18,
        ],
        n,
    );
    let t = poly(
        &[
            -1, 6, -4, -50, 141, -55, -326, 514, 26, -725, 561, 223, -540, 206, 113, -120, 32,
        ],
        n,
    );
    &(&(&t * &(g * g)) + &(&p * g)) + &(&q * &TruncatedSeries::x(n))
}

//! Named generating functions, each built from its closed form.
//!
//! Univariate entries are returned to the requested order `N`. Bivariate
//! entries are returned with every monomial of total degree at most `2N`, which
//! covers all coefficients of `x^n` for `n <= N` whenever the second variable
//! appears with degree at most `n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::multi::MultiTrunc;
use super::truncated::TruncatedSeries;
use crate::error::{Error, Result};

/// A catalog entry's value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogSeries {
    Univariate(TruncatedSeries),
    Bivariate(MultiTrunc),
}

impl CatalogSeries {
    pub fn univariate(self) -> Result<TruncatedSeries> {
        match self {
            CatalogSeries::Univariate(s) => Ok(s),
            CatalogSeries::Bivariate(_) => {
                Err(Error::Series("expected a univariate catalog entry".into()))
            }
        }
    }

    pub fn bivariate(self) -> Result<MultiTrunc> {
        match self {
            CatalogSeries::Bivariate(m) => Ok(m),
            CatalogSeries::Univariate(_) => {
                Err(Error::Series("expected a bivariate catalog entry".into()))
            }
        }
    }
}

pub struct CatalogEntry {
    pub name: &'static str,
    /// Variable names, one or two.
    pub variables: &'static [&'static str],
    pub description: &'static str,
    build: fn(usize) -> Result<CatalogSeries>,
}

impl CatalogEntry {
    pub fn build(&self, order: usize) -> Result<CatalogSeries> {
        (self.build)(order)
    }
}

/// Extra precision used while building, so that divisions by `x` and
/// compositions never run short.
const PAD: usize = 4;

fn uni(f: fn(usize) -> Result<TruncatedSeries>) -> impl Fn(usize) -> Result<CatalogSeries> {
    move |n| Ok(CatalogSeries::Univariate(f(n + PAD)?.truncate(n)?))
}

macro_rules! entry {
    ($name:expr, [$($v:expr),*], $desc:expr, uni $f:expr) => {
        CatalogEntry {
            name: $name,
            variables: &[$($v),*],
            description: $desc,
            build: |n| uni($f)(n),
        }
    };
    ($name:expr, [$($v:expr),*], $desc:expr, bi $f:expr) => {
        CatalogEntry {
            name: $name,
            variables: &[$($v),*],
            description: $desc,
            build: |n| Ok(CatalogSeries::Bivariate($f(2 * n + PAD)?.truncate(2 * n)?)),
        }
    };
}

pub static CATALOG: &[CatalogEntry] = &[
    entry!("catalan", ["x"], "Catalan numbers, (1 - sqrt(1-4x))/(2x)", uni catalan),
    entry!(
        "av123_simples",
        ["x"],
        "simple 123-avoiders from length 3 on, 2x^2/(1-x^2+(1+x)sqrt(1-2x-3x^2))",
        uni av123_simples
    ),
    entry!(
        "motzkin_fixedpoint",
        ["x"],
        "Motzkin numbers shifted by one, (1-x-sqrt(1-2x-3x^2))/(2x)",
        uni motzkin_fixedpoint
    ),
    entry!(
        "simples_compose_check",
        ["x"],
        "motzkin_fixedpoint at x/(1-x), equal to catalan - 1",
        uni simples_compose_check
    ),
    entry!(
        "num12_av123",
        ["x"],
        "total occurrences of 12 over Av_n(123), x^2 C^2/(1-4x)",
        uni num12_av123
    ),
    entry!(
        "num213_star",
        ["x"],
        "total occurrences of 213 over skew-indecomposable Av_n(123), x^3 C/(1-4x)^(3/2)",
        uni num213_star
    ),
    entry!(
        "num213",
        ["x"],
        "total occurrences of 213 over Av_n(123), x^3 C^3/(1-4x)^(3/2)",
        uni num213
    ),
    entry!(
        "num231",
        ["x"],
        "total occurrences of 231 (or 312) over Av_n(123)",
        uni num231
    ),
    entry!("num321", ["x"], "total occurrences of 321 over Av_n(123)", uni num321),
    entry!(
        "peaks_H",
        ["x", "u"],
        "Dyck paths by semilength and peak height, u x C/(1 - u x C - x C)",
        bi peaks_h
    ),
    entry!(
        "ascents_av132",
        ["z", "u"],
        "Av(132) by length and number of ascents",
        bi ascents_av132
    ),
    entry!(
        "ascents_total",
        ["z"],
        "total ascents over Av_n(132), the u-derivative of ascents_av132 at u = 1",
        uni ascents_total
    ),
    entry!(
        "schroder_large",
        ["x"],
        "large Schroder numbers, (1-x-sqrt(1-6x+x^2))/2",
        uni schroder_large
    ),
    entry!(
        "schroder_small",
        ["x"],
        "small Schroder numbers, (1+x-sqrt(1-6x+x^2))/4",
        uni schroder_small
    ),
    entry!(
        "central_binomial_inv",
        ["x"],
        "123-avoiding involutions, C(n, floor(n/2)) for n >= 1",
        uni central_binomial_inv
    ),
    entry!(
        "htso",
        ["x"],
        "simple 123-avoiding involutions with one fixed point",
        uni htso
    ),
    entry!(
        "htszero",
        ["x"],
        "simple 123-avoiding involutions with no fixed points",
        uni htszero
    ),
    entry!(
        "htstwo",
        ["x"],
        "simple 123-avoiding involutions with two fixed points",
        uni htstwo
    ),
    entry!(
        "s0",
        ["u", "v"],
        "simple 123-avoiding involutions with no fixed points; u marks ltr-minima, v rtl-maxima",
        bi s0_uv
    ),
    entry!(
        "s1",
        ["u", "v"],
        "simple 123-avoiding involutions whose one fixed point is a rtl-maximum",
        bi s1_uv
    ),
    entry!(
        "s2",
        ["u", "v"],
        "simple 123-avoiding involutions with two fixed points",
        bi s2_uv
    ),
    entry!(
        "g_1342",
        ["x"],
        "1342-avoiding involutions, x(1-2x+x^2+sqrt(1-6x^2+x^4))/(2(1-3x+x^2))",
        uni g_1342
    ),
    entry!(
        "bonds_f",
        ["z", "u"],
        "permutations by length and number of bonds",
        bi bonds_f
    ),
    entry!(
        "no_bonds",
        ["z"],
        "permutations without bonds",
        uni no_bonds
    ),
    entry!(
        "distinct_patterns_h",
        ["z", "u"],
        "permutations by length and number of distinct one-point deletions, f(zu, 1/u)",
        bi distinct_patterns_h
    ),
];

pub fn lookup(name: &str) -> Result<&'static CatalogEntry> {
    CATALOG
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// The named series to order `n`.
pub fn catalog(name: &str, n: usize) -> Result<CatalogSeries> {
    lookup(name)?.build(n)
}

pub fn names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

fn poly(c: &[i64], n: usize) -> TruncatedSeries {
    TruncatedSeries::from_ints(c, n)
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// `(1 - 4x)^(e/2)`.
fn one_minus_4x_pow_half(e: i64, n: usize) -> Result<TruncatedSeries> {
    poly(&[1, -4], n).pow_half(e)
}

pub fn catalan(n: usize) -> Result<TruncatedSeries> {
    let m = n + 1;
    let r = one_minus_4x_pow_half(1, m)?;
    (poly(&[1], m) - r).div(&poly(&[0, 2], m))
}

/// `x^2/(1 - xM - x^2(M + 1))` with `M` the shifted Motzkin series: the
/// grid iteration `x t/(1 - x y)` after `y -> x(y+1)/(1-xy)`,
/// `t -> x/(1-xy)` and `y -> M`.
fn av123_simples(n: usize) -> Result<TruncatedSeries> {
    let m = motzkin_fixedpoint(n)?;
    let den = poly(&[1], n) - poly(&[0, 1], n) * &m - poly(&[0, 0, 1], n) * (&m + &poly(&[1], n));
    poly(&[0, 0, 1], n).div(&den)
}

fn motzkin_fixedpoint(n: usize) -> Result<TruncatedSeries> {
    let m = n + 1;
    let q = poly(&[1, -2, -3], m).sqrt()?;
    (poly(&[1, -1], m) - q).div(&poly(&[0, 2], m))
}

fn simples_compose_check(n: usize) -> Result<TruncatedSeries> {
    let inner = poly(&[0, 1], n).div(&poly(&[1, -1], n))?;
    motzkin_fixedpoint(n)?.compose(&inner)
}

fn num12_av123(n: usize) -> Result<TruncatedSeries> {
    let c = catalan(n)?;
    (poly(&[0, 0, 1], n) * &c * &c).div(&poly(&[1, -4], n))
}

fn num213_star(n: usize) -> Result<TruncatedSeries> {
    Ok(poly(&[0, 0, 0, 1], n) * catalan(n)? * one_minus_4x_pow_half(-3, n)?)
}

fn num213(n: usize) -> Result<TruncatedSeries> {
    let c = catalan(n)?;
    Ok(poly(&[0, 0, 0, 1], n) * c.powi(3)? * one_minus_4x_pow_half(-3, n)?)
}

/// `(3z-1)/(1-4z)^2 - (4z^2-5z+1)/(1-4z)^(5/2)`. Flipping the sign of the
/// first numerator and halving gives the 231 totals.
pub fn num231_unscaled(n: usize) -> Result<TruncatedSeries> {
    let a = poly(&[-1, 3], n) * one_minus_4x_pow_half(-4, n)?;
    let b = poly(&[1, -5, 4], n) * one_minus_4x_pow_half(-5, n)?;
    Ok(a - b)
}

/// `((1-3z)/(1-4z)^2 - (4z^2-5z+1)/(1-4z)^(5/2)) / 2`.
fn num231(n: usize) -> Result<TruncatedSeries> {
    let a = poly(&[1, -3], n) * one_minus_4x_pow_half(-4, n)?;
    let b = poly(&[1, -5, 4], n) * one_minus_4x_pow_half(-5, n)?;
    Ok((a - b).scale(&half()))
}

/// `(8z^3-20z^2+8z-1)/(1-4z)^2 - (36z^3-34z^2+10z-1)/(1-4z)^(5/2)`, which
/// is `2z` times the 321 totals.
pub fn num321_unscaled(n: usize) -> Result<TruncatedSeries> {
    let a = poly(&[-1, 8, -20, 8], n) * one_minus_4x_pow_half(-4, n)?;
    let b = poly(&[-1, 10, -34, 36], n) * one_minus_4x_pow_half(-5, n)?;
    Ok(a - b)
}

fn num321(n: usize) -> Result<TruncatedSeries> {
    Ok(num321_unscaled(n + 1)?.unshift(1)?.scale(&half()))
}

fn peaks_h(d: usize) -> Result<MultiTrunc> {
    let c = MultiTrunc::from_univariate(&catalan(d)?, false, d);
    let xc = c.mul_monomial(1, 0).truncate(d)?;
    let uxc = xc.mul_monomial(0, 1).truncate(d)?;
    let den = &(&MultiTrunc::one(d) - &uxc) - &xc;
    uxc.div(&den)
}

/// `f(z,u) = (1 + (u-1)z - sqrt((u-1)^2 z^2 - 2(u+1)z + 1)) / (2uz)`.
fn ascents_av132(d: usize) -> Result<MultiTrunc> {
    let m = d + 2;
    let radicand = MultiTrunc::from_terms(
        &[
            (0, 0, 1),
            (1, 0, -2),
            (1, 1, -2),
            (2, 0, 1),
            (2, 1, -2),
            (2, 2, 1),
        ],
        m,
    );
    let num = &MultiTrunc::from_terms(&[(0, 0, 1), (1, 1, 1), (1, 0, -1)], m) - &radicand.sqrt()?;
    Ok(num.div_monomial(1, 1)?.scale(&half()))
}

/// Evaluates each coefficient of `z^k`, a polynomial in the second variable,
/// at `u = 1`.
fn rows_at_one(m: &MultiTrunc, n: usize) -> TruncatedSeries {
    let coeffs = (0..=n)
        .map(|k| {
            m.row(k)
                .unwrap()
                .iter()
                .fold(BigRational::zero(), |acc, c| acc + c)
        })
        .collect();
    TruncatedSeries::new(coeffs)
}

fn ascents_total(n: usize) -> Result<TruncatedSeries> {
    let f = ascents_av132(2 * n + 2)?;
    Ok(rows_at_one(&f.derivative_y(), n))
}

fn schroder_large(n: usize) -> Result<TruncatedSeries> {
    let q = poly(&[1, -6, 1], n).sqrt()?;
    Ok((poly(&[1, -1], n) - q).scale(&half()))
}

fn schroder_small(n: usize) -> Result<TruncatedSeries> {
    let q = poly(&[1, -6, 1], n).sqrt()?;
    Ok((poly(&[1, 1], n) - q).scale(&BigRational::new(1.into(), 4.into())))
}

fn central_binomial_inv(n: usize) -> Result<TruncatedSeries> {
    let m = n + 1;
    let q = poly(&[1, 0, -4], m).sqrt()?;
    (poly(&[1, 0, -4], m) - q).div(&poly(&[0, -2, 4], m))
}

fn htso(n: usize) -> Result<TruncatedSeries> {
    let q = poly(&[1, 0, -2, 0, -3], n).sqrt()?;
    let num = poly(&[0, 0, 0, 0, 0, 2], n) * (poly(&[1, 0, 1], n) + &q);
    let den = poly(&[1, 0, 1], n).powi(2)? * (poly(&[1, 0, -3], n) + poly(&[1, 0, -2], n) * &q);
    num.div(&den)
}

fn htszero(n: usize) -> Result<TruncatedSeries> {
    let q = poly(&[1, 0, -2, 0, -3], n).sqrt()?;
    let num = poly(&[0, 0, 0, 0, 0, 0, 2], n) * (poly(&[1, 0, 1], n) - &q);
    let den = poly(&[2, 0, -2, 0, -10, 0, -6], n) + poly(&[2, 0, 0, 0, -6, 0, -4], n) * &q;
    num.div(&den)
}

fn htstwo(n: usize) -> Result<TruncatedSeries> {
    let q = poly(&[1, 0, -2, 0, -3], n).sqrt()?;
    let num = poly(&[0, 0, 0, 0, 1], n) * (poly(&[2, 0, 5, 0, 3], n) - poly(&[2, 0, 1], n) * &q);
    let den = poly(&[1, 0, -1, 0, -5, 0, -3], n) + poly(&[1, 0, 2, 0, 1], n) * &q;
    num.div(&den)
}

/// The three simple-involution series written in `U = u^2` (first variable)
/// and `V = v^2` (second), with the monomial factors divided out:
/// `(s0, s1/v, s2/(uv))`.
pub fn simple_involution_forms(d: usize) -> Result<(MultiTrunc, MultiTrunc, MultiTrunc)> {
    let t = |terms: &[(usize, usize, i64)]| MultiTrunc::from_terms(terms, d);
    let big_r = t(&[(0, 0, 1), (1, 1, -6), (1, 2, -4), (2, 1, -4), (2, 2, -3)]);
    let r = big_r.sqrt()?;
    let one = t(&[(0, 0, 1)]);

    let d_main = &big_r + &(t(&[(0, 0, 1), (0, 1, 2), (1, 1, 1)]) * &r);
    let s0_num = t(&[(1, 2, 2), (2, 2, 2)]) * (&t(&[(0, 0, 1), (1, 0, 2), (1, 1, 1)]) - &r);
    let s0_den = (&(&one - &t(&[(1, 1, 1)])) + &r) * &d_main;
    let s0 = s0_num.div(&s0_den)?;

    let s1_num = t(&[(1, 1, 1), (2, 1, 1)]) * (&t(&[(0, 0, 1), (0, 1, 2), (1, 1, 1)]) + &r);
    let s1_den =
        t(&[(0, 0, 1), (0, 1, 1)]) * (&big_r + &(t(&[(0, 0, 1), (1, 1, -3), (2, 1, -2)]) * &r));
    let s1v = s1_num.div(&s1_den)?;

    let s2_num = t(&[(0, 1, 1)])
        * (&t(&[(0, 0, 2), (1, 0, 7), (1, 1, 4), (2, 0, 4), (2, 1, 3)])
            - &(t(&[(0, 0, 2), (1, 0, 1)]) * &r));
    let s2uv = s2_num.div(&d_main)?;
    Ok((s0, s1v, s2uv))
}

fn s0_uv(d: usize) -> Result<MultiTrunc> {
    let (s0, _, _) = simple_involution_forms(d / 2 + 1)?;
    Ok(s0.dilate(2))
}

fn s1_uv(d: usize) -> Result<MultiTrunc> {
    let (_, s1v, _) = simple_involution_forms(d / 2 + 1)?;
    Ok(s1v.dilate(2).mul_monomial(0, 1))
}

fn s2_uv(d: usize) -> Result<MultiTrunc> {
    let (_, _, s2uv) = simple_involution_forms(d / 2 + 1)?;
    Ok(s2uv.dilate(2).mul_monomial(1, 1))
}

fn g_1342(n: usize) -> Result<TruncatedSeries> {
    let q = poly(&[1, 0, -6, 0, 1], n).sqrt()?;
    let num = poly(&[0, 1], n) * (poly(&[1, -2, 1], n) + q);
    num.div(&poly(&[2, -6, 2], n))
}

fn factorial(m: usize) -> BigRational {
    BigRational::from_integer((1..=m).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)))
}

/// `f(z,u) = sum_m m! (z + 2z^2(u-1)/(1 - z(u-1)))^m`.
fn bonds_f(d: usize) -> Result<MultiTrunc> {
    let w = MultiTrunc::from_terms(&[(1, 1, 1), (1, 0, -1)], d);
    let frac =
        MultiTrunc::from_terms(&[(2, 1, 2), (2, 0, -2)], d).div(&(&MultiTrunc::one(d) - &w))?;
    let t = &MultiTrunc::x(d) + &frac;
    let mut out = MultiTrunc::zero(d);
    let mut power = MultiTrunc::one(d);
    for m in 0..=d {
        out = &out + &power.scale(&factorial(m));
        power = &power * &t;
    }
    Ok(out)
}

/// The same sum at `u = 0`, computed in one variable.
fn no_bonds(n: usize) -> Result<TruncatedSeries> {
    let t = poly(&[0, 1], n) - poly(&[0, 0, 2], n).div(&poly(&[1, 1], n))?;
    let mut out = TruncatedSeries::zero(n);
    let mut power = TruncatedSeries::one(n);
    for m in 0..=n {
        out = out + power.scale(&factorial(m));
        power = &power * &t;
    }
    Ok(out)
}

/// `h(z,u) = f(zu, 1/u)`: the coefficient of `z^n u^b` in `f` moves to
/// `z^n u^(n-b)`. A term of total degree `t` in `h` comes from a term of total
/// degree at most `2t` in `f`.
fn distinct_patterns_h(d: usize) -> Result<MultiTrunc> {
    let f = bonds_f(2 * d)?;
    let mut terms = Vec::new();
    for (i, j, c) in f.terms() {
        if j > i {
            return Err(Error::Series(format!("bond count {j} exceeds length {i}")));
        }
        terms.push((i, i - j, c));
    }
    let mut h = MultiTrunc::zero(d);
    for (i, j, c) in terms {
        h = &h + &MultiTrunc::monomial(i, j, c, d);
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::truncated::rat;

    fn coeffs(name: &str, n: usize) -> Vec<i128> {
        catalog(name, n).unwrap().univariate().unwrap().to_i128()
    }

    fn binom(n: i128, k: i128) -> i128 {
        if k < 0 || k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn catalan_and_relatives() {
        assert_eq!(coeffs("catalan", 6), vec![1, 1, 2, 5, 14, 42, 132]);
        assert_eq!(coeffs("motzkin_fixedpoint", 6), vec![0, 1, 1, 2, 4, 9, 21]);
        let mut shifted = coeffs("catalan", 10);
        shifted[0] -= 1;
        assert_eq!(coeffs("simples_compose_check", 10), shifted);
        assert_eq!(
            coeffs("av123_simples", 8),
            vec![0, 0, 1, 0, 2, 2, 7, 14, 37]
        );
        // The same series in simplified form.
        let n = 12;
        let q = poly(&[1, -2, -3], n).sqrt().unwrap();
        let closed = poly(&[0, 0, 2], n)
            .div(&(poly(&[1, 0, -1], n) + poly(&[1, 1], n) * q))
            .unwrap();
        assert_eq!(
            catalog("av123_simples", n).unwrap().univariate().unwrap(),
            closed
        );
    }

    #[test]
    fn pattern_totals_prefixes() {
        assert_eq!(&coeffs("num213_star", 7)[3..], &[1, 7, 38, 187, 874]);
        let n12 = coeffs("num12_av123", 12);
        for n in 1..=12i128 {
            assert_eq!(
                n12[n as usize],
                4i128.pow(n as u32 - 1) - binom(2 * n - 1, n)
            );
        }
    }

    #[test]
    fn num213_is_c_squared_times_star() {
        let n = 12;
        let c = catalan(n).unwrap();
        let star = catalog("num213_star", n).unwrap().univariate().unwrap();
        let full = catalog("num213", n).unwrap().univariate().unwrap();
        assert_eq!(&c * &c * star, full);
    }

    #[test]
    fn length_three_totals_add_up() {
        // Over Av_n(123): 132 and 213 agree, as do 231 and 312, and no 123
        // occurs, so the five totals fill C(n,3) c_n.
        let n = 14;
        let t213 = coeffs("num213", n);
        let t231 = coeffs("num231", n);
        let t321 = coeffs("num321", n);
        let n12 = coeffs("num12_av123", n);
        let cat = coeffs("catalan", n);
        assert_eq!(&t231[..8], &[0, 0, 0, 1, 11, 81, 500, 2794]);
        assert_eq!(&t321[..8], &[0, 0, 0, 1, 16, 144, 1016, 6271]);
        for k in 0..=n {
            let k128 = k as i128;
            assert_eq!(2 * t213[k] + 2 * t231[k] + t321[k], binom(k128, 3) * cat[k]);
            if k >= 2 {
                assert_eq!(4 * t213[k] + 2 * t231[k], (k128 - 2) * n12[k]);
            }
        }
        assert_eq!(num231_unscaled(n).unwrap().to_i128()[0], -2);
        let unscaled = num321_unscaled(n).unwrap().to_i128();
        assert_eq!(unscaled[0], 0);
        assert!(unscaled[1..].iter().zip(&t321).all(|(u, t)| *u == 2 * t));
    }

    #[test]
    fn schroder_and_involutions() {
        assert_eq!(coeffs("schroder_large", 5), vec![0, 1, 2, 6, 22, 90]);
        assert_eq!(coeffs("schroder_small", 5), vec![0, 1, 1, 3, 11, 45]);
        let cb = coeffs("central_binomial_inv", 12);
        for n in 1..=12 {
            assert_eq!(cb[n as usize], binom(n, n / 2));
        }
    }

    #[test]
    fn simple_involution_prefixes() {
        assert_eq!(&coeffs("htso", 13)[5..], &[2, 0, 2, 0, 10, 0, 22, 0, 68]);
        assert_eq!(&coeffs("htszero", 16)[8..], &[1, 0, 2, 0, 8, 0, 22, 0, 68]);
        assert_eq!(&coeffs("htstwo", 12)[6..], &[3, 0, 4, 0, 15, 0, 36]);
    }

    #[test]
    fn bivariate_forms_specialize_to_the_univariate_ones() {
        let n = 14;
        let x = TruncatedSeries::x(n);
        let at = |name: &str| {
            catalog(name, n)
                .unwrap()
                .bivariate()
                .unwrap()
                .substitute(&x, &x)
                .unwrap()
                .truncate(n)
                .unwrap()
        };
        let htso_s = catalog("htso", n).unwrap().univariate().unwrap();
        // s1 records only the involutions whose fixed point is a rtl-maximum;
        // the mirror image doubles it.
        assert_eq!(at("s1").scale_int(2), htso_s);
        assert_eq!(
            at("s0"),
            catalog("htszero", n).unwrap().univariate().unwrap()
        );
        assert_eq!(
            at("s2"),
            catalog("htstwo", n).unwrap().univariate().unwrap()
        );
    }

    #[test]
    fn s1_swap_is_the_ltr_min_version() {
        let s1 = catalog("s1", 7).unwrap().bivariate().unwrap();
        // Both single-fixed-point families have the same total size.
        let x = TruncatedSeries::x(7);
        assert_eq!(
            s1.substitute(&x, &x).unwrap(),
            s1.swap().substitute(&x, &x).unwrap()
        );
    }

    #[test]
    fn ascent_distribution() {
        let f = catalog("ascents_av132", 6).unwrap().bivariate().unwrap();
        let row3: Vec<_> = f.row(3).unwrap()[..3].to_vec();
        assert_eq!(row3, vec![rat(1), rat(3), rat(1)]);
        assert_eq!(f.row(4).unwrap()[..4], [rat(1), rat(6), rat(6), rat(1)]);
        assert_eq!(
            coeffs("ascents_total", 7),
            vec![0, 0, 1, 5, 21, 84, 330, 1287]
        );
        let totals = coeffs("ascents_total", 12);
        for n in 2..=12i128 {
            assert_eq!(totals[n as usize], binom(2 * n - 1, n - 2));
        }
    }

    #[test]
    fn peak_heights_series() {
        let h = catalog("peaks_H", 8).unwrap().bivariate().unwrap();
        // All peaks over paths of semilength n: C(2n-1, n).
        for n in 1..=8i128 {
            let total: BigRational = h.row(n as usize).unwrap().iter().sum();
            assert_eq!(total, rat(binom(2 * n - 1, n) as i64));
        }
        let row4 = h.row(4).unwrap();
        let weighted: BigRational = row4
            .iter()
            .enumerate()
            .map(|(k, c)| c * rat((k * k.saturating_sub(1) / 2) as i64))
            .sum();
        assert_eq!(weighted, rat(38));
    }

    #[test]
    fn bonds() {
        assert_eq!(
            coeffs("no_bonds", 8),
            vec![1, 1, 0, 0, 2, 14, 90, 646, 5242]
        );
        let f = catalog("bonds_f", 8).unwrap().bivariate().unwrap();
        for n in 0..=8 {
            assert_eq!(
                f.coeff(n, 0),
                catalog("no_bonds", 8)
                    .unwrap()
                    .univariate()
                    .unwrap()
                    .coeff(n)
            );
        }
        let h = catalog("distinct_patterns_h", 6)
            .unwrap()
            .bivariate()
            .unwrap();
        // The identity of length 4 and its reverse are the only ones with a
        // single distinct deletion.
        assert_eq!(h.coeff(4, 1), Some(&rat(2)));
    }

    #[test]
    fn g1342_prefix() {
        assert_eq!(
            coeffs("g_1342", 11),
            vec![0, 1, 2, 4, 10, 24, 62, 156, 406, 1040, 2714, 7012]
        );
    }

    #[test]
    fn registry() {
        assert!(matches!(catalog("nope", 3), Err(Error::UnknownName(_))));
        for name in names() {
            catalog(name, 6).unwrap();
        }
    }
}

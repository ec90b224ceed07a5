use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Power series in one variable with exact rational coefficients, known up to
/// and including `x^order`.
///
/// Every operation tracks how many coefficients of its result are actually
/// determined by its inputs; nothing past that point is ever stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TruncatedSeries {
    /// Panics on an empty coefficient list; a series always knows at least
    /// its constant term.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(values: &[i64], order: usize) -> Self {
        let mut coeffs: Vec<BigRational> = values.iter().map(|&v| rat(v)).collect();
        coeffs.resize(order + 1, BigRational::zero());
        coeffs.truncate(order + 1);
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::from_ints(&[], order)
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::from_ints(&[1], order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c·x^k`, or zero when `k > order`.
    pub fn monomial(k: usize, c: BigRational, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The variable `x`.
    pub fn x(order: usize) -> Self {
        TruncatedSeries::monomial(1, rat(1), order)
    }

    /// `1/(1 - x)`.
    pub fn geometric(order: usize) -> Self {
        TruncatedSeries::new(vec![rat(1); order + 1])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^n`, or `None` when `n` is past the known order.
    pub fn coeff(&self, n: usize) -> Option<&BigRational> {
        self.coeffs.get(n)
    }

    /// Index of the first nonzero coefficient, `None` for a series that is
    /// zero as far as it is known.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn val_or_len(&self) -> usize {
        self.valuation().unwrap_or(self.coeffs.len())
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::Series(format!(
                "requested order {order} but only {} is known",
                self.order()
            )));
        }
        Ok(TruncatedSeries::new(self.coeffs[..=order].to_vec()))
    }

    /// All coefficients as integers, if they are.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Coefficients as `i128`, panicking on non-integers or overflow. Meant
    /// for tests and tables.
    pub fn to_i128(&self) -> Vec<i128> {
        self.coeffs
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "coefficient {c} is not an integer");
                i128::try_from(c.to_integer()).expect("coefficient overflows i128")
            })
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries::new(coeffs)
    }

    /// Division by `x^k`; the first `k` coefficients must vanish.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        if self.coeffs.len() <= k {
            return Err(Error::Series(format!(
                "cannot divide a series known to order {} by x^{k}",
                self.order()
            )));
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::Series(format!("series is not divisible by x^{k}")));
        }
        Ok(TruncatedSeries::new(self.coeffs[k..].to_vec()))
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inv(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::Series(
                "inverse of a series with zero constant term".into(),
            ));
        }
        let n = self.coeffs.len();
        let inv0 = a0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(TruncatedSeries::new(out))
    }

    /// Quotient `self / other`. A divisor with valuation `k > 0` is allowed
    /// when the dividend is also divisible by `x^k`; `k` orders of precision
    /// are lost.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let k = other.valuation().ok_or_else(|| {
            Error::Series("division by a series that is zero to its order".into())
        })?;
        let num = self.unshift(k)?;
        let den = other.unshift(k)?;
        Ok(&num * &den.inv()?)
    }

    /// Square root with constant term one after factoring out an even power
    /// of `x`.
    pub fn sqrt(&self) -> Result<Self> {
        let v = self
            .valuation()
            .ok_or_else(|| Error::Series("square root of zero series".into()))?;
        if v % 2 == 1 {
            return Err(Error::Series(format!(
                "square root of a series of odd valuation {v}"
            )));
        }
        let a = self.unshift(v)?;
        if !a.coeffs[0].is_one() {
            return Err(Error::Series(format!(
                "square root needs leading coefficient 1, found {}",
                a.coeffs[0]
            )));
        }
        // s² = a: compare coefficients of x^k to fix s_k one at a time.
        let n = a.coeffs.len();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut s: Vec<BigRational> = Vec::with_capacity(n);
        s.push(BigRational::one());
        for k in 1..n {
            let mut acc = BigRational::zero();
            for j in 1..k {
                acc += &s[j] * &s[k - j];
            }
            s.push((&a.coeffs[k] - acc) * &half);
        }
        Ok(TruncatedSeries::new(s).shift(v / 2))
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = TruncatedSeries::one(base.order());
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &b;
            }
            k >>= 1;
            if k > 0 {
                b = &b * &b;
            }
        }
        Ok(out)
    }

    /// `self^(e/2)` via the square root.
    pub fn pow_half(&self, e: i64) -> Result<Self> {
        self.sqrt()?.powi(e)
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Series(
                "composition needs an inner series with zero constant term".into(),
            ));
        }
        let v = inner.val_or_len();
        let order = inner.order().min((self.order() + 1) * v - 1);
        let g = inner.truncate(order)?;
        let mut out = TruncatedSeries::zero(order);
        for c in self.coeffs.iter().rev() {
            out = (&out * &g).truncate(order)?;
            out.coeffs[0] += c;
        }
        Ok(out)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return TruncatedSeries::zero(0);
        }
        TruncatedSeries::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    /// Substitution `x -> x^k`.
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k >= 1);
        let order = (self.order() + 1) * k - 1;
        let mut out = TruncatedSeries::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i * k] = c.clone();
        }
        out
    }

    /// Keeps only the coefficients at even (`parity = 0`) or odd indices.
    pub fn parity_part(&self, parity: usize) -> Self {
        TruncatedSeries::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if i % 2 == parity {
                        c.clone()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect(),
        )
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{a}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{a}*x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        TruncatedSeries::new((0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect())
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        TruncatedSeries::new((0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect())
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// The product is known up to `min(N_a + v_b, N_b + v_a)`, where `v` is
    /// the valuation.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let (va, vb) = (self.val_or_len(), rhs.val_or_len());
        let order = (self.order() + vb).min(rhs.order() + va);
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().skip(va) {
            if a.is_zero() || i > order {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().skip(vb) {
                if i + j > order {
                    break;
                }
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                (&self).$m(rhs)
            }
        }
        impl $tr<TruncatedSeries> for &TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i128> {
        s.to_i128()
    }

    /// `C(1/2, k)(-4)^k` from the generalized binomial theorem, computed with
    /// rationals independently of the series code.
    fn sqrt_1_minus_4x(n: usize) -> Vec<BigRational> {
        let half = BigRational::new(1.into(), 2.into());
        let mut out = vec![rat(1)];
        let mut binom = rat(1);
        for k in 1..=n {
            binom = binom * (&half - rat(k as i64 - 1)) / rat(k as i64);
            out.push(&binom * rat(-4).pow(k as i32));
        }
        out
    }

    #[test]
    fn sqrt_matches_binomial_expansion() {
        let a = TruncatedSeries::from_ints(&[1, -4], 8);
        let s = a.sqrt().unwrap();
        assert_eq!(s.coeffs(), &sqrt_1_minus_4x(8)[..]);
        assert_eq!(ints(&s.truncate(4).unwrap()), vec![1, -2, -2, -4, -10]);
        assert_eq!(&s * &s, a);
    }

    #[test]
    fn sqrt_rejects_bad_leading_terms() {
        assert!(TruncatedSeries::from_ints(&[2, 1], 4).sqrt().is_err());
        assert!(TruncatedSeries::from_ints(&[0, 1], 4).sqrt().is_err());
        let s = TruncatedSeries::from_ints(&[0, 0, 1, 2], 6).sqrt().unwrap();
        assert_eq!(s.valuation(), Some(1));
        assert_eq!(s.order(), 5);
    }

    #[test]
    fn catalan_functional_equation() {
        let n = 12;
        let x = TruncatedSeries::x(n + 1);
        let r = (TruncatedSeries::one(n + 1) - x.scale_int(4))
            .sqrt()
            .unwrap();
        let c = (TruncatedSeries::one(n + 1) - r)
            .div(&x.scale_int(2))
            .unwrap();
        assert_eq!(c.order(), n);
        let xs = TruncatedSeries::x(n);
        assert_eq!(&xs * &(&c * &c) + TruncatedSeries::one(n), c);
        assert_eq!(&c * &TruncatedSeries::one(n), c);
    }

    #[test]
    fn division_and_inverse() {
        let g = TruncatedSeries::geometric(6);
        let one_minus_x = TruncatedSeries::from_ints(&[1, -1], 6);
        assert_eq!(&g * &one_minus_x, TruncatedSeries::one(6));
        assert_eq!(one_minus_x.inv().unwrap(), g);
        let x2 = TruncatedSeries::from_ints(&[0, 0, 1], 6);
        let q = x2.div(&TruncatedSeries::from_ints(&[0, 1, -1], 6)).unwrap();
        assert_eq!(ints(&q), vec![0, 1, 1, 1, 1, 1]);
        assert!(TruncatedSeries::one(3).div(&x2).is_err());
        assert!(TruncatedSeries::zero(3).inv().is_err());
    }

    #[test]
    fn composition_and_calculus() {
        let g = TruncatedSeries::geometric(8);
        let x_over = TruncatedSeries::from_ints(&[1, -1], 8)
            .inv()
            .unwrap()
            .shift(1)
            .truncate(8)
            .unwrap();
        // 1/(1-y) at y = x/(1-x) is (1-x)/(1-2x).
        let composed = g.compose(&x_over).unwrap();
        assert_eq!(ints(&composed), vec![1, 1, 2, 4, 8, 16, 32, 64, 128]);
        assert!(g.compose(&g).is_err());
        assert_eq!(ints(&g.derivative()), vec![1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(
            ints(&g.truncate(2).unwrap().dilate(2)),
            vec![1, 0, 1, 0, 1, 0]
        );
        assert_eq!(ints(&g.powi(2).unwrap()), (1..=9).collect::<Vec<_>>());
    }

    #[test]
    fn product_precision_tracks_valuations() {
        let a = TruncatedSeries::from_ints(&[0, 0, 1], 4);
        let b = TruncatedSeries::geometric(4);
        assert_eq!((&a * &b).order(), 4);
        let c = TruncatedSeries::from_ints(&[0, 0, 1], 10);
        assert_eq!((&c * &b).order(), 6);
    }

    #[test]
    fn display() {
        let s = TruncatedSeries::from_ints(&[1, -2, 0, 3], 3);
        assert_eq!(s.to_string(), "1 - 2*x + 3*x^3 + O(x^4)");
    }
}

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::truncated::{rat, TruncatedSeries};
use crate::error::{Error, Result};

/// Power series in two variables, every monomial `x^i y^j` with
/// `i + j <= degree` known exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiTrunc {
    degree: usize,
    /// `rows[i][j]` is the coefficient of `x^i y^j`.
    rows: Vec<Vec<BigRational>>,
}

impl MultiTrunc {
    pub fn zero(degree: usize) -> Self {
        MultiTrunc {
            degree,
            rows: (0..=degree)
                .map(|i| vec![BigRational::zero(); degree - i + 1])
                .collect(),
        }
    }

    pub fn constant(c: BigRational, degree: usize) -> Self {
        let mut m = MultiTrunc::zero(degree);
        m.rows[0][0] = c;
        m
    }

    pub fn one(degree: usize) -> Self {
        MultiTrunc::constant(BigRational::one(), degree)
    }

    /// `c·x^i y^j`, or zero when the monomial is past the truncation.
    pub fn monomial(i: usize, j: usize, c: BigRational, degree: usize) -> Self {
        let mut m = MultiTrunc::zero(degree);
        if i + j <= degree {
            m.rows[i][j] = c;
        }
        m
    }

    /// The first variable.
    pub fn x(degree: usize) -> Self {
        MultiTrunc::monomial(1, 0, rat(1), degree)
    }

    /// The second variable.
    pub fn y(degree: usize) -> Self {
        MultiTrunc::monomial(0, 1, rat(1), degree)
    }

    /// Builds from integer coefficients `(i, j, c)`.
    pub fn from_terms(terms: &[(usize, usize, i64)], degree: usize) -> Self {
        let mut m = MultiTrunc::zero(degree);
        for &(i, j, c) in terms {
            if i + j <= degree {
                m.rows[i][j] += rat(c);
            }
        }
        m
    }

    /// A univariate series in the first (`second = false`) or second variable.
    pub fn from_univariate(s: &TruncatedSeries, second: bool, degree: usize) -> Self {
        let degree = degree.min(s.order());
        let mut m = MultiTrunc::zero(degree);
        for (k, c) in s.coeffs().iter().enumerate().take(degree + 1) {
            if second {
                m.rows[0][k] = c.clone();
            } else {
                m.rows[k][0] = c.clone();
            }
        }
        m
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, i: usize, j: usize) -> Option<&BigRational> {
        self.rows.get(i).and_then(|r| r.get(j))
    }

    /// Known coefficients of `x^i`, as a polynomial in `y`.
    pub fn row(&self, i: usize) -> Option<&[BigRational]> {
        self.rows.get(i).map(|r| &r[..])
    }

    /// Nonzero terms as `(i, j, c)`, by total degree then `i`.
    pub fn terms(&self) -> Vec<(usize, usize, BigRational)> {
        let mut out = Vec::new();
        for d in 0..=self.degree {
            for i in 0..=d {
                let c = &self.rows[i][d - i];
                if !c.is_zero() {
                    out.push((i, d - i, c.clone()));
                }
            }
        }
        out
    }

    fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.rows[i][j]
    }

    pub fn truncate(&self, degree: usize) -> Result<Self> {
        if degree > self.degree {
            return Err(Error::Series(format!(
                "requested total degree {degree} but only {} is known",
                self.degree
            )));
        }
        let mut m = MultiTrunc::zero(degree);
        for i in 0..=degree {
            for j in 0..=degree - i {
                m.rows[i][j] = self.rows[i][j].clone();
            }
        }
        Ok(m)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        MultiTrunc {
            degree: self.degree,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|a| a * c).collect())
                .collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    /// Exchanges the two variables.
    pub fn swap(&self) -> Self {
        let mut m = MultiTrunc::zero(self.degree);
        for i in 0..=self.degree {
            for j in 0..=self.degree - i {
                m.rows[j][i] = self.rows[i][j].clone();
            }
        }
        m
    }

    /// Multiplication by `x^a y^b`.
    pub fn mul_monomial(&self, a: usize, b: usize) -> Self {
        let mut m = MultiTrunc::zero(self.degree + a + b);
        for i in 0..=self.degree {
            for j in 0..=self.degree - i {
                m.rows[i + a][j + b] = self.rows[i][j].clone();
            }
        }
        m
    }

    /// Division by `x^a y^b`; every known term must be divisible by it.
    pub fn div_monomial(&self, a: usize, b: usize) -> Result<Self> {
        if a + b > self.degree {
            return Err(Error::Series("monomial exceeds the known degree".into()));
        }
        for i in 0..=self.degree {
            for j in 0..=self.degree - i {
                if (i < a || j < b) && !self.rows[i][j].is_zero() {
                    return Err(Error::Series(format!(
                        "term x^{i} y^{j} is not divisible by x^{a} y^{b}"
                    )));
                }
            }
        }
        let d = self.degree - a - b;
        let mut m = MultiTrunc::zero(d);
        for i in 0..=d {
            for j in 0..=d - i {
                m.rows[i][j] = self.rows[i + a][j + b].clone();
            }
        }
        Ok(m)
    }

    /// Substitution `x -> x^k, y -> y^k`.
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut m = MultiTrunc::zero((self.degree + 1) * k - 1);
        for i in 0..=self.degree {
            for j in 0..=self.degree - i {
                m.rows[i * k][j * k] = self.rows[i][j].clone();
            }
        }
        m
    }

    pub fn inv(&self) -> Result<Self> {
        let a00 = self.at(0, 0);
        if a00.is_zero() {
            return Err(Error::Series(
                "inverse of a series with zero constant term".into(),
            ));
        }
        let inv0 = a00.recip();
        let d = self.degree;
        let mut out = MultiTrunc::zero(d);
        out.rows[0][0] = inv0.clone();
        for t in 1..=d {
            for i in 0..=t {
                let j = t - i;
                let mut acc = BigRational::zero();
                for p in 0..=i {
                    for q in 0..=j {
                        if p + q == 0 {
                            continue;
                        }
                        let a = self.at(p, q);
                        if !a.is_zero() {
                            acc += a * out.at(i - p, j - q);
                        }
                    }
                }
                out.rows[i][j] = -acc * &inv0;
            }
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Square root of a series with constant term one.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.at(0, 0).is_one() {
            return Err(Error::Series(format!(
                "square root needs constant term 1, found {}",
                self.at(0, 0)
            )));
        }
        let d = self.degree;
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut s = MultiTrunc::zero(d);
        s.rows[0][0] = BigRational::one();
        // s² = a, solved one total degree at a time.
        for t in 1..=d {
            for i in 0..=t {
                let j = t - i;
                let mut acc = BigRational::zero();
                for p in 0..=i {
                    for q in 0..=j {
                        if (p, q) == (0, 0) || (p, q) == (i, j) {
                            continue;
                        }
                        let a = s.at(p, q);
                        if !a.is_zero() {
                            acc += a * s.at(i - p, j - q);
                        }
                    }
                }
                s.rows[i][j] = (self.at(i, j) - acc) * &half;
            }
        }
        Ok(s)
    }

    /// `self(a(t), b(t))` for univariate series without constant terms.
    pub fn substitute(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
        let (va, vb) = match (a.valuation(), b.valuation()) {
            (Some(va), Some(vb)) if va >= 1 && vb >= 1 => (va, vb),
            _ => {
                return Err(Error::Series(
                    "substituted series need zero constant terms".into(),
                ))
            }
        };
        let order = a
            .order()
            .min(b.order())
            .min((self.degree + 1) * va.min(vb) - 1);
        let a = a.truncate(order)?;
        let b = b.truncate(order)?;
        let powers = |s: &TruncatedSeries| -> Result<Vec<TruncatedSeries>> {
            let mut p = vec![TruncatedSeries::one(order)];
            for _ in 0..self.degree {
                let next = (p.last().unwrap() * s).truncate(order)?;
                p.push(next);
            }
            Ok(p)
        };
        let (pa, pb) = (powers(&a)?, powers(&b)?);
        let mut out = TruncatedSeries::zero(order);
        for i in 0..=self.degree {
            for j in 0..=self.degree - i {
                let c = self.at(i, j);
                if c.is_zero() {
                    continue;
                }
                out = out + (&pa[i] * &pb[j]).truncate(order)?.scale(c);
            }
        }
        Ok(out)
    }

    /// `∂/∂y`.
    pub fn derivative_y(&self) -> Self {
        if self.degree == 0 {
            return MultiTrunc::zero(0);
        }
        let d = self.degree - 1;
        let mut m = MultiTrunc::zero(d);
        for i in 0..=d {
            for j in 0..=d - i {
                m.rows[i][j] = &self.rows[i][j + 1] * rat(j as i64 + 1);
            }
        }
        m
    }
}

impl Add for &MultiTrunc {
    type Output = MultiTrunc;

    fn add(self, rhs: &MultiTrunc) -> MultiTrunc {
        let d = self.degree.min(rhs.degree);
        let mut m = MultiTrunc::zero(d);
        for i in 0..=d {
            for j in 0..=d - i {
                m.rows[i][j] = self.at(i, j) + rhs.at(i, j);
            }
        }
        m
    }
}

impl Sub for &MultiTrunc {
    type Output = MultiTrunc;

    fn sub(self, rhs: &MultiTrunc) -> MultiTrunc {
        self + &(-rhs)
    }
}

impl Neg for &MultiTrunc {
    type Output = MultiTrunc;

    fn neg(self) -> MultiTrunc {
        self.scale(&rat(-1))
    }
}

impl Mul for &MultiTrunc {
    type Output = MultiTrunc;

    fn mul(self, rhs: &MultiTrunc) -> MultiTrunc {
        let d = self.degree.min(rhs.degree);
        let mut m = MultiTrunc::zero(d);
        for i in 0..=d {
            for j in 0..=d - i {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..=d - i - j {
                    for q in 0..=d - i - j - p {
                        let b = rhs.at(p, q);
                        if !b.is_zero() {
                            m.rows[i + p][j + q] += a * b;
                        }
                    }
                }
            }
        }
        m
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiTrunc {
            type Output = MultiTrunc;
            fn $m(self, rhs: MultiTrunc) -> MultiTrunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MultiTrunc> for MultiTrunc {
            type Output = MultiTrunc;
            fn $m(self, rhs: &MultiTrunc) -> MultiTrunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<MultiTrunc> for &MultiTrunc {
            type Output = MultiTrunc;
            fn $m(self, rhs: MultiTrunc) -> MultiTrunc {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_one_minus_x_minus_y() {
        // 1/(1 - x - y) has coefficient C(i + j, i) at x^i y^j.
        let d = 6;
        let a = MultiTrunc::from_terms(&[(0, 0, 1), (1, 0, -1), (0, 1, -1)], d);
        let inv = a.inv().unwrap();
        for i in 0..=d {
            for j in 0..=d - i {
                let binom = (1..=i).fold(1i64, |acc, k| acc * (j + k) as i64 / k as i64);
                assert_eq!(inv.coeff(i, j), Some(&rat(binom)));
            }
        }
        assert_eq!(&inv * &a, MultiTrunc::one(d));
    }

    #[test]
    fn sqrt_squares_back() {
        let a = MultiTrunc::from_terms(&[(0, 0, 1), (1, 1, -6), (2, 1, -4), (1, 2, 3)], 8);
        let s = a.sqrt().unwrap();
        assert_eq!(&s * &s, a);
        assert!(MultiTrunc::constant(rat(4), 3).sqrt().is_err());
    }

    #[test]
    fn monomials_swap_and_dilate() {
        let a = MultiTrunc::from_terms(&[(1, 2, 5)], 4);
        assert_eq!(a.swap().coeff(2, 1), Some(&rat(5)));
        let b = a.mul_monomial(1, 0);
        assert_eq!(b.div_monomial(1, 0).unwrap(), a);
        assert!(a.div_monomial(2, 0).is_err());
        let c = a.dilate(2);
        assert_eq!(c.coeff(2, 4), Some(&rat(5)));
        assert_eq!(c.degree(), 9);
    }

    #[test]
    fn substitution_into_univariate() {
        // 1/(1 - x - y) at x = y = t is 1/(1 - 2t).
        let a = MultiTrunc::from_terms(&[(0, 0, 1), (1, 0, -1), (0, 1, -1)], 7)
            .inv()
            .unwrap();
        let t = TruncatedSeries::x(7);
        let s = a.substitute(&t, &t).unwrap();
        assert_eq!(s.to_i128(), vec![1, 2, 4, 8, 16, 32, 64, 128]);
        let t2 = TruncatedSeries::from_ints(&[0, 0, 1], 20);
        assert_eq!(a.substitute(&t2, &t2).unwrap().order(), 15);
    }
}

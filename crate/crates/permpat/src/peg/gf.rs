use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A rational generating function `numerator / denominator` with integer
/// polynomial coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalGf {
    numerator: Vec<BigInt>,
    denominator: Vec<BigInt>,
}

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn one_minus_z_pow(d: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::one()];
    for _ in 0..d {
        let mut next = vec![BigInt::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c;
        }
        p = next;
    }
    p
}

/// Divides by `1 - z` when it divides exactly.
fn divide_one_minus_z(p: &[BigInt]) -> Option<Vec<BigInt>> {
    if p.is_empty() {
        return Some(Vec::new());
    }
    // q_i = p_0 + … + p_i; exact when the full sum vanishes.
    let mut q = Vec::with_capacity(p.len() - 1);
    let mut acc = BigInt::zero();
    for c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc.clone());
    }
    acc += &p[p.len() - 1];
    if acc.is_zero() {
        Some(q)
    } else {
        None
    }
}

impl RationalGf {
    /// `numerator / (1 - z)^d`, reduced.
    pub fn over_one_minus_z(numerator: Vec<BigInt>, d: usize) -> Self {
        let mut numerator = numerator;
        trim(&mut numerator);
        let mut d = d;
        while d > 0 && !numerator.is_empty() {
            match divide_one_minus_z(&numerator) {
                Some(q) => {
                    numerator = q;
                    trim(&mut numerator);
                    d -= 1;
                }
                None => break,
            }
        }
        if numerator.is_empty() {
            d = 0;
        }
        RationalGf {
            numerator,
            denominator: one_minus_z_pow(d),
        }
    }

    /// An arbitrary quotient, kept as given apart from trailing zeros.
    pub fn new(numerator: Vec<BigInt>, denominator: Vec<BigInt>) -> Result<Self> {
        let (mut numerator, mut denominator) = (numerator, denominator);
        trim(&mut numerator);
        trim(&mut denominator);
        if denominator.first().map_or(true, |c| c.is_zero()) {
            return Err(Error::Series(
                "denominator must have a nonzero constant term".into(),
            ));
        }
        Ok(RationalGf {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[BigInt] {
        &self.denominator
    }

    /// The `d` with denominator `±(1 - z)^d`, if it has that form.
    pub fn one_minus_z_power(&self) -> Option<usize> {
        let d = self.denominator.len().checked_sub(1)?;
        let target = one_minus_z_pow(d);
        if self.denominator == target {
            return Some(d);
        }
        let negated: Vec<BigInt> = target.iter().map(|c| -c).collect();
        (self.denominator == negated).then_some(d)
    }

    /// Coefficients of `z^0 … z^n`.
    pub fn coefficients(&self, n: usize) -> Vec<BigInt> {
        let q0 = &self.denominator[0];
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.numerator.get(k).cloned().unwrap_or_default();
            for j in 1..self.denominator.len().min(k + 1) {
                acc -= &self.denominator[j] * &out[k - j];
            }
            out.push(acc / q0);
        }
        out
    }

    /// `Σ a_i / (1-z)^{d_i}` over a common `(1 - z)^max d_i`.
    pub fn sum_over_one_minus_z(terms: impl IntoIterator<Item = (Vec<BigInt>, usize)>) -> Self {
        let terms: Vec<(Vec<BigInt>, usize)> = terms.into_iter().collect();
        let d = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let mut num: Vec<BigInt> = Vec::new();
        for (p, di) in terms {
            let lift = one_minus_z_pow(d - di);
            for (i, a) in p.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in lift.iter().enumerate() {
                    if num.len() <= i + j {
                        num.resize(i + j + 1, BigInt::zero());
                    }
                    num[i + j] += a * b;
                }
            }
        }
        RationalGf::over_one_minus_z(num, d)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &[BigInt]) -> fmt::Result {
    let mut first = true;
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
        }
        first = false;
        let unit = mag.is_one() && i > 0;
        if !unit {
            write!(f, "{mag}")?;
        }
        match i {
            0 => {}
            1 => f.write_str("z")?,
            _ => write!(f, "z^{i}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for RationalGf {
    /// `(z - z^2 + z^3)/(1-z)^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_poly(f, &self.numerator)?;
        f.write_str(")")?;
        match self.one_minus_z_power() {
            Some(0) if self.denominator[0].is_one() => Ok(()),
            Some(d) if self.denominator[0].is_one() => write!(f, "/(1-z)^{d}"),
            _ => {
                f.write_str("/(")?;
                write_poly(f, &self.denominator)?;
                f.write_str(")")
            }
        }
    }
}

/// An eventually polynomial counting sequence, written in the basis
/// `C(n, k)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassPolynomial {
    /// Coefficient of `C(n, k)` at index `k`.
    pub binomial_coeffs: Vec<BigInt>,
    /// Least `n ≥ 1` from which the polynomial is exact.
    pub threshold: usize,
    /// Counts at `n = 1 .. threshold - 1`.
    pub exceptional_values: Vec<BigInt>,
    pub gf: RationalGf,
}

fn binomial(n: i64, k: usize) -> BigInt {
    // Valid for negative n too: n(n-1)…(n-k+1)/k!.
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

impl ClassPolynomial {
    /// `Σ_k c_k C(n, k)`, ignoring the threshold.
    pub fn polynomial_at(&self, n: usize) -> BigInt {
        self.binomial_coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * binomial(n as i64, k))
            .sum()
    }

    /// The class count at length `n ≥ 1`.
    pub fn count(&self, n: usize) -> BigInt {
        if n >= 1 && n < self.threshold {
            self.exceptional_values[n - 1].clone()
        } else {
            self.polynomial_at(n)
        }
    }

    pub fn counts(&self, n_max: usize) -> Vec<BigInt> {
        (1..=n_max).map(|n| self.count(n)).collect()
    }

    /// `1 - C(n,1) + 3C(n,3)` style rendering.
    pub fn basis_string(&self) -> String {
        let mut s = String::new();
        for (k, c) in self.binomial_coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mag = c.abs();
            if !mag.is_one() {
                s.push_str(&mag.to_string());
            }
            s.push_str(&format!("C(n,{k})"));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

/// Reads off the polynomial a class gf agrees with from some point on.
///
/// The denominator must be a power of `1 - z`; otherwise the class is not
/// polynomial and this fails.
pub fn to_binomial_basis(gf: &RationalGf) -> Result<ClassPolynomial> {
    let d = gf.one_minus_z_power().ok_or_else(|| {
        Error::NotPolynomial(format!("denominator of {gf} is not a power of (1-z)"))
    })?;
    let deg_num = gf.numerator.len().saturating_sub(1);
    // a_n is a polynomial in n for n ≥ start.
    let start = (deg_num + 1).saturating_sub(d);
    let top = start.max(1) + d + 1;
    let a = gf.coefficients(top);
    let coeffs: Vec<BigInt> = if d == 0 {
        Vec::new()
    } else {
        // Newton form at `start`, extended to n = 0 … d-1.
        let mut diffs = Vec::with_capacity(d);
        let mut row: Vec<BigInt> = a[start..start + d].to_vec();
        while !row.is_empty() {
            diffs.push(row[0].clone());
            row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        let p = |n: i64| -> BigInt {
            diffs
                .iter()
                .enumerate()
                .map(|(j, c)| c * binomial(n - start as i64, j))
                .sum()
        };
        let mut row: Vec<BigInt> = (0..d as i64).map(p).collect();
        let mut out = Vec::with_capacity(d);
        while !row.is_empty() {
            out.push(row[0].clone());
            row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        out
    };
    let mut cp = ClassPolynomial {
        binomial_coeffs: coeffs,
        threshold: 1,
        exceptional_values: Vec::new(),
        gf: gf.clone(),
    };
    trim(&mut cp.binomial_coeffs);
    let mut threshold = start.max(1);
    while threshold > 1 && cp.polynomial_at(threshold - 1) == a[threshold - 1] {
        threshold -= 1;
    }
    cp.threshold = threshold;
    cp.exceptional_values = a[1..threshold].to_vec();
    Ok(cp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn reduction_and_expansion() {
        // (z - z^2)/(1-z)^2 = z/(1-z)
        let g = RationalGf::over_one_minus_z(ints(&[0, 1, -1]), 2);
        assert_eq!(g.numerator(), &ints(&[0, 1])[..]);
        assert_eq!(g.one_minus_z_power(), Some(1));
        assert_eq!(g.coefficients(4), ints(&[0, 1, 1, 1, 1]));
        assert_eq!(g.to_string(), "(z)/(1-z)^1");
    }

    #[test]
    fn constant_for_n_at_least_one() {
        let cp = to_binomial_basis(&RationalGf::over_one_minus_z(ints(&[0, 1]), 1)).unwrap();
        assert_eq!(cp.binomial_coeffs, ints(&[1]));
        assert_eq!(cp.threshold, 1);
    }

    #[test]
    fn quadratic_class() {
        let g = RationalGf::over_one_minus_z(ints(&[0, 1, -1, 1]), 3);
        let cp = to_binomial_basis(&g).unwrap();
        assert_eq!(cp.binomial_coeffs, ints(&[1, 0, 1]));
        assert_eq!(cp.threshold, 1);
        assert_eq!(cp.counts(6), ints(&[1, 2, 4, 7, 11, 16]));
        assert_eq!(cp.basis_string(), "C(n,0) + C(n,2)");
    }

    #[test]
    fn late_threshold_keeps_exceptional_values() {
        // 1, 2, then 6, 7, 8, …: the line n + 3 from n = 3.
        let mut a = ints(&[0, 1, 2]);
        let series: Vec<BigInt> = (3..12).map(|n| BigInt::from(n + 3)).collect();
        a.extend(series);
        // (1-z)^2 Σ a_n z^n truncated exactly: numerator of degree ≤ 4.
        let num = {
            let one = one_minus_z_pow(2);
            let mut p = vec![BigInt::zero(); 5];
            for (i, c) in a.iter().enumerate().take(5) {
                for (j, b) in one.iter().enumerate() {
                    if i + j < 5 {
                        p[i + j] += c * b;
                    }
                }
            }
            p
        };
        let g = RationalGf::over_one_minus_z(num, 2);
        assert_eq!(g.coefficients(11), a);
        let cp = to_binomial_basis(&g).unwrap();
        assert_eq!(cp.binomial_coeffs, ints(&[3, 1]));
        assert_eq!(cp.threshold, 3);
        assert_eq!(cp.exceptional_values, ints(&[1, 2]));
        assert_eq!(cp.counts(5), ints(&[1, 2, 6, 7, 8]));
    }

    #[test]
    fn non_polynomial_denominator_is_rejected() {
        let g = RationalGf::new(ints(&[1]), ints(&[1, -2])).unwrap();
        assert!(matches!(
            to_binomial_basis(&g),
            Err(Error::NotPolynomial(_))
        ));
        assert_eq!(g.coefficients(3), ints(&[1, 2, 4, 8]));
    }
}

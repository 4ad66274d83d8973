//! Exact univariate polynomials, Hilbert–Poincaré series and the Hilbert
//! polynomial/coefficients they determine.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinat::binomial;
use crate::error::{Error, Result};

/// Integer-coefficient polynomial in `z`, trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// `1 - z^k`; zero when `k = 0`.
    pub fn one_minus_z_pow(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] += 1;
        coeffs[k] -= 1;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact quotient by `1 - z`, or `None` if `1 - z` does not divide.
    pub fn div_one_minus_z(&self) -> Option<Self> {
        if self.is_zero() || !self.eval_at_one().is_zero() {
            return None;
        }
        // N = (1 - z) Q  =>  Q_k = N_0 + ... + N_k
        let mut acc = BigInt::zero();
        let mut q = Vec::with_capacity(self.coeffs.len() - 1);
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            acc += c;
            q.push(acc.clone());
        }
        Some(Self::new(q))
    }

    /// `i`-th Taylor coefficient at `z = 1`, i.e. `P^(i)(1) / i!`.
    pub fn taylor_at_one(&self, i: usize) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * binomial(j as i64, i as u32))
            .sum()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, "z")
    }
}

fn write_poly<T: fmt::Display + Signed>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[T],
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        let unit = mag.is_one();
        match i {
            0 => write!(f, "{mag}")?,
            1 if unit => write!(f, "{var}")?,
            1 => write!(f, "{mag}{var}")?,
            _ if unit => write!(f, "{var}^{i}")?,
            _ => write!(f, "{mag}{var}^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Polynomial in `t` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![BigRational::from_integer(c)])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let k = BigRational::from_integer(k.clone());
        Self::new(self.coeffs.iter().map(|c| c * &k).collect())
    }

    pub fn eval(&self, t: &BigInt) -> BigRational {
        let t = BigRational::from_integer(t.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    /// `C(t + shift, k)` as a polynomial in `t`.
    pub fn binomial_in_t(shift: impl Into<BigInt>, k: u32) -> Self {
        let shift = shift.into();
        let mut acc = Self::from_i64s(&[1]);
        for i in 0..k {
            let root = BigRational::from_integer(&shift - i);
            acc = acc.mul(&Self::new(vec![root, BigRational::one()]));
        }
        let fact: BigInt = (1..=k).map(BigInt::from).product();
        let inv = BigRational::new(BigInt::one(), fact);
        Self::new(acc.coeffs.iter().map(|c| c * &inv).collect())
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, "t")
    }
}

/// `N(z) / (1 - z)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: IntPoly,
    pub denominator_exponent: usize,
}

impl HilbertSeries {
    pub fn new(numerator: IntPoly, denominator_exponent: usize) -> Self {
        Self {
            numerator,
            denominator_exponent,
        }
    }
}

/// `Q'(z) / (1 - z)^d` with `Q'(1) != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedSeries {
    pub q: IntPoly,
    pub dim: usize,
}

impl ReducedSeries {
    pub fn new(q: IntPoly, dim: usize) -> Self {
        Self { q, dim }
    }

    pub fn as_series(&self) -> HilbertSeries {
        HilbertSeries::new(self.q.clone(), self.dim)
    }

    pub fn coefficient(&self, t: u64) -> BigInt {
        series_coefficient(&self.as_series(), t)
    }
}

/// Hilbert coefficients `e_0, ..., e_k` of a ring of dimension `d` over a base
/// of length `ell`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientVector {
    pub e: Vec<BigInt>,
    pub dim: usize,
    pub ell: u64,
}

impl CoefficientVector {
    pub fn new(e: Vec<BigInt>, dim: usize) -> Self {
        Self { e, dim, ell: 1 }
    }

    pub fn from_i64s(e: &[i64], dim: usize) -> Self {
        Self::new(e.iter().map(|&x| BigInt::from(x)).collect(), dim)
    }

    pub fn with_ell(mut self, ell: u64) -> Self {
        self.ell = ell;
        self
    }

    pub fn len(&self) -> usize {
        self.e.len()
    }

    pub fn is_empty(&self) -> bool {
        self.e.is_empty()
    }

    pub fn e0(&self) -> &BigInt {
        &self.e[0]
    }
}

/// Coefficient of `z^t` in the expansion of `N(z)/(1-z)^n`.
pub fn series_coefficient(hs: &HilbertSeries, t: u64) -> BigInt {
    let n = hs.denominator_exponent;
    if n == 0 {
        return usize::try_from(t)
            .map(|t| hs.numerator.coeff(t))
            .unwrap_or_default();
    }
    hs.numerator
        .coeffs()
        .iter()
        .enumerate()
        .take_while(|(j, _)| *j as u64 <= t)
        .map(|(j, c)| c * binomial((t - j as u64 + n as u64 - 1) as i64, (n - 1) as u32))
        .sum()
}

/// Cancel every factor `1 - z` from the numerator.
pub fn reduce(hs: &HilbertSeries) -> Result<ReducedSeries> {
    if hs.numerator.is_zero() {
        return Err(Error::ZeroSeries);
    }
    let mut q = hs.numerator.clone();
    let mut divisions = 0;
    while let Some(next) = q.div_one_minus_z() {
        if divisions == hs.denominator_exponent {
            return Err(Error::NotAHilbertSeries(hs.denominator_exponent));
        }
        q = next;
        divisions += 1;
    }
    Ok(ReducedSeries::new(q, hs.denominator_exponent - divisions))
}

/// `p(t) = sum_j Q'_j C(t - j + d - 1, d - 1)`.
pub fn hilbert_polynomial(rs: &ReducedSeries) -> Result<RatPoly> {
    if rs.dim == 0 {
        return Err(Error::DimensionZero);
    }
    let d = rs.dim as i64;
    Ok(rs
        .q
        .coeffs()
        .iter()
        .enumerate()
        .fold(RatPoly::zero(), |acc, (j, c)| {
            acc.add(&RatPoly::binomial_in_t(d - 1 - j as i64, (d - 1) as u32).scale(c))
        }))
}

/// Re-expand `sum_i (-1)^i e_i C(t + d - 1 - i, d - 1 - i)` for `i < d`.
pub fn polynomial_from_coefficients(e: &[BigInt], d: usize) -> RatPoly {
    e.iter()
        .take(d)
        .enumerate()
        .fold(RatPoly::zero(), |acc, (i, ei)| {
            let k = (d - 1 - i) as i64;
            let term = RatPoly::binomial_in_t(k, k as u32).scale(ei);
            if i % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            }
        })
}

fn taylor_coefficients(rs: &ReducedSeries, count: usize) -> Vec<BigInt> {
    (0..count).map(|i| rs.q.taylor_at_one(i)).collect()
}

/// `e_0, ..., e_{d-1}` as Taylor coefficients of `Q'` at 1, cross-checked
/// against [`hilbert_polynomial`] through the binomial-basis expansion.
pub fn hilbert_coefficients(rs: &ReducedSeries) -> Result<CoefficientVector> {
    let p = hilbert_polynomial(rs)?;
    let e = taylor_coefficients(rs, rs.dim);
    if polynomial_from_coefficients(&e, rs.dim) != p {
        return Err(Error::Internal(
            "Hilbert coefficients do not re-expand to the Hilbert polynomial".into(),
        ));
    }
    Ok(CoefficientVector::new(e, rs.dim))
}

/// `e_0, ..., e_d` of `Q'(z)/(1-z)^{d+1}`, the series of the ring with one
/// extra variable adjoined.
pub fn cumulative_coefficients(rs: &ReducedSeries) -> Result<CoefficientVector> {
    if rs.dim == 0 {
        return Err(Error::DimensionZero);
    }
    Ok(CoefficientVector::new(
        taylor_coefficients(rs, rs.dim + 1),
        rs.dim,
    ))
}

/// `deg Q' - d`: the last degree where the Hilbert function and polynomial may differ.
pub fn postulation_number(rs: &ReducedSeries) -> i64 {
    let deg = rs.q.degree().unwrap_or(0) as i64;
    let post = deg - rs.dim as i64;
    if let Ok(p) = hilbert_polynomial(rs) {
        let start = (post + 1).max(0) as u64;
        for t in start..=start + rs.dim as u64 {
            assert_eq!(
                p.eval(&BigInt::from(t)),
                BigRational::from_integer(rs.coefficient(t)),
                "Hilbert polynomial disagrees with the series past the postulation number"
            );
        }
    }
    post
}

//! Upper and lower regularity bounds in terms of Hilbert coefficients.
//!
//! Every root or real-valued threshold is evaluated as the least integer
//! satisfying a monotone integer predicate, so all results are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::polyseries::{CoefficientVector, IntPoly, ReducedSeries};

/// `xi_p = max(e_0, |e_1|, ..., |e_p|)`.
pub fn xi(e: &CoefficientVector, p: usize) -> Result<BigInt> {
    if p >= e.len() {
        return Err(Error::IndexOutOfRange {
            index: p,
            len: e.len(),
        });
    }
    Ok(e.e[1..=p]
        .iter()
        .map(Signed::abs)
        .fold(e.e[0].clone(), |m, x| m.max(x)))
}

/// `(xi_k + 1)^(2^k) - 2`.
fn doubly_exponential(e: &CoefficientVector, k: usize) -> Result<BigInt> {
    let base = xi(e, k)? + 1u32;
    Ok(num_traits::pow(base, 1usize << k) - 2u32)
}

/// `reg^p(R/I) <= (xi_{d-p} + 1)^(2^(d-p)) - 2` for `1 <= p <= d`.
pub fn theorem_a_bound(e: &CoefficientVector, p: usize) -> Result<BigInt> {
    let d = e.dim;
    if d == 0 {
        return Err(Error::DimensionZero);
    }
    if p == 0 || p > d {
        return Err(Error::LevelOutOfRange { p, d });
    }
    doubly_exponential(e, d - p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremB {
    /// `(xi_d + 1)^(2^d) - 2`.
    pub general: BigInt,
    /// `(xi_{d-1} + 1)^(2^(d-1)) - 2`, present only for positive depth.
    pub depth_positive: Option<BigInt>,
}

/// Bounds on the regularity of an associated graded ring from its cumulative
/// coefficients `e_0, ..., e_d`.
pub fn theorem_b_bounds(es: &CoefficientVector, depth_positive: bool) -> Result<TheoremB> {
    let d = es.dim;
    if d == 0 {
        return Err(Error::DimensionZero);
    }
    let general = doubly_exponential(es, d)?;
    let depth_positive = if depth_positive {
        Some(doubly_exponential(es, d - 1)?)
    } else {
        None
    };
    Ok(TheoremB {
        general,
        depth_positive,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryC {
    pub index: usize,
    pub lhs: BigInt,
    pub rhs: BigRational,
    pub holds: bool,
}

/// `(-1)^(i-1) e_i < 7/12 (xi_{i-1} + 1)^(2^i) - e_0` on cumulative coefficients.
pub fn corollary_c_check(es: &CoefficientVector, i: usize) -> Result<CorollaryC> {
    if i == 0 || i > es.dim || i >= es.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: es.len(),
        });
    }
    let lhs = if i % 2 == 1 {
        es.e[i].clone()
    } else {
        -&es.e[i]
    };
    let power = num_traits::pow(xi(es, i - 1)? + 1u32, 1usize << i);
    let rhs = BigRational::new(power * 7u32, BigInt::from(12u32))
        - BigRational::from_integer(es.e[0].clone());
    let holds = BigRational::from_integer(lhs.clone()) < rhs;
    Ok(CorollaryC {
        index: i,
        lhs,
        rhs,
        holds,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct D1Check {
    pub holds: bool,
    pub is_equality: bool,
}

/// `e_0 <= ell * C(reg + c, c)`.
pub fn prop_d1_check(e0: &BigInt, ell: u64, c: usize, reg: i64) -> D1Check {
    let rhs = binomial(reg + c as i64, c as u32) * ell;
    D1Check {
        holds: *e0 <= rhs,
        is_equality: *e0 == rhs,
    }
}

/// `sum_{i=0}^{a} ell * C(c + i - 1, i) z^i / (1 - z)^d`: the only series
/// attaining equality in [`prop_d1_check`].
pub fn d1_extremal_series(ell: u64, c: usize, d: usize, a: u32) -> ReducedSeries {
    let q = (0..=a)
        .map(|i| binomial(c as i64 + i64::from(i) - 1, i) * ell)
        .collect();
    ReducedSeries::new(IntPoly::new(q), d)
}

/// Least integer `a >= lo` with `pred(a)`, for `pred` monotone and eventually true.
fn least_satisfying(lo: BigInt, pred: impl Fn(&BigInt) -> bool) -> BigInt {
    if pred(&lo) {
        return lo;
    }
    let mut bad = lo.clone();
    let mut step = BigInt::one();
    let mut good = &lo + &step;
    while !pred(&good) {
        bad = good;
        step *= 2u32;
        good = &lo + &step;
    }
    while &good - &bad > BigInt::one() {
        let mid: BigInt = (&good + &bad) / 2u32;
        if pred(&mid) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    good
}

/// Lower bound from the multiplicity and from each nonzero `e_i`, `1 <= i <= d-1`:
/// the least `a` with `ell (2a + c + 1)^c >= 2^c c! e_0`, and the least `a` with
/// `ell (a + 1)^(c+i) >= |e_i|`; returns the maximum.
pub fn prop_d_lower(e: &CoefficientVector, ell: u64, c: usize) -> BigInt {
    assert!(c >= 1, "codimension must be positive");
    let c32 = c as u32;
    let fact: BigInt = (1..=c32).map(BigInt::from).product();
    let target0 = num_traits::pow(BigInt::from(2u32), c) * fact * e.e0();
    // a + (c+1)/2 >= 0 keeps the predicate monotone
    let lo = -BigInt::from(c.div_ceil(2));
    let mut best = least_satisfying(lo, |a| {
        let base: BigInt = a * 2u32 + c32 + 1u32;
        num_traits::pow(base, c) * ell >= target0
    });
    for (i, ei) in e.e.iter().enumerate().take(e.dim).skip(1) {
        if ei.is_zero() {
            continue;
        }
        let target = ei.abs();
        let li = least_satisfying(-BigInt::one(), |a| {
            let base: BigInt = a + 1u32;
            num_traits::pow(base, c + i) * ell >= target
        });
        best = best.max(li);
    }
    best
}

/// Least `a >= 0` with `ell * C(a + c, c) >= e_0`.
pub fn binomial_lower(e0: &BigInt, ell: u64, c: usize) -> BigInt {
    assert!(c >= 1, "codimension must be positive");
    least_satisfying(BigInt::zero(), |a| binomial(a + c, c as u32) * ell >= *e0)
}

/// `|e_i| <= cap * (a + 1)^i` for `1 <= i <= d-1`.
pub fn coefficient_growth_check(e: &CoefficientVector, cap: &BigInt, a: i64) -> bool {
    let base = BigInt::from(a + 1);
    e.e.iter()
        .enumerate()
        .take(e.dim)
        .skip(1)
        .all(|(i, ei)| ei.abs() <= cap * num_traits::pow(base.clone(), i))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuestionCheck {
    pub depth: usize,
    /// `reg < (xi_{d-t} + 1)^(2^d)`.
    pub regularity: bool,
    /// `|e_i| < (xi_{d-t} + 1)^(2^i)` for all `d-t+1 <= i <= d`.
    pub coefficients: bool,
}

/// Evidence for the open question on cumulative coefficients `e_0..e_d`, at depth `t`.
pub fn question_check(
    es: &CoefficientVector,
    depth: usize,
    oracle_reg: i64,
) -> Result<QuestionCheck> {
    let d = es.dim;
    if depth > d || es.len() < d + 1 {
        return Err(Error::IndexOutOfRange {
            index: depth,
            len: d + 1,
        });
    }
    let base = xi(es, d - depth)? + 1u32;
    let regularity = BigInt::from(oracle_reg) < num_traits::pow(base.clone(), 1usize << d);
    let coefficients =
        (d - depth + 1..=d).all(|i| es.e[i].abs() < num_traits::pow(base.clone(), 1usize << i));
    Ok(QuestionCheck {
        depth,
        regularity,
        coefficients,
    })
}

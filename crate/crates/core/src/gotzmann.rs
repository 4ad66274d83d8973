//! Gotzmann decomposition of Hilbert polynomials.
//!
//! A Hilbert polynomial of a standard graded quotient is uniquely
//!
//! ```text
//! p(t) = C(c_1 + t, c_1) + C(c_2 + t - 1, c_2) + ... + C(c_s + t - s + 1, c_s)
//! ```
//!
//! with `c_1 >= ... >= c_s >= 0`. The counts `B_j = #{i : c_i >= d - 1 - j}`
//! follow from the Hilbert coefficients by the recursion
//!
//! ```text
//! B_j = (-1)^j e_j + C(B_{j-1} + 1, 2) - C(B_{j-2} + 1, 3) + ... + (-1)^{j-1} C(B_0 + 1, j + 1)
//! ```
//!
//! and `reg^p(R/I) <= B_{d-p} - 1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bounds::xi;
use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::polyseries::{CoefficientVector, RatPoly};

/// The c-sequence (run-length encoded, values descending) and the counts
/// `B_0 <= ... <= B_{d-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GotzmannData {
    dim: usize,
    b: Vec<BigInt>,
    /// `(value, multiplicity)` with strictly decreasing values and positive
    /// multiplicities.
    runs: Vec<(u32, BigInt)>,
}

impl GotzmannData {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    pub fn runs(&self) -> &[(u32, BigInt)] {
        &self.runs
    }

    /// Gotzmann number `s = B_{d-1}`.
    pub fn s(&self) -> &BigInt {
        self.b.last().expect("d >= 1")
    }

    /// The c-sequence written out, or `None` if longer than `limit`.
    pub fn c_values(&self, limit: usize) -> Option<Vec<u32>> {
        let s = self.s().to_usize().filter(|&s| s <= limit)?;
        let mut out = Vec::with_capacity(s);
        for (value, mult) in &self.runs {
            let m = mult.to_usize()?;
            out.extend(std::iter::repeat_n(*value, m));
        }
        Some(out)
    }

    /// `sum_i C(c_i + t - i + 1, c_i)` as a polynomial in `t`.
    ///
    /// Each run of equal values telescopes:
    /// `sum_{i=i0}^{i1} C(c + t - i + 1, c) = C(c + t - i0 + 2, c + 1) - C(c + t - i1 + 1, c + 1)`.
    pub fn polynomial(&self) -> RatPoly {
        let mut start = BigInt::one();
        let mut acc = RatPoly::zero();
        for (value, mult) in &self.runs {
            let c = BigInt::from(*value);
            let end = &start + mult - 1u32;
            let upper = RatPoly::binomial_in_t(&c - &start + 2u32, value + 1);
            let lower = RatPoly::binomial_in_t(&c - &end + 1u32, value + 1);
            acc = acc.add(&upper.sub(&lower));
            start = end + 1u32;
        }
        acc
    }
}

/// Term-by-term `sum_i C(c_i + t - i + 1, c_i)`; test oracle for short sequences.
pub fn decomposition_polynomial_direct(c: &[u32]) -> RatPoly {
    c.iter()
        .enumerate()
        .fold(RatPoly::zero(), |acc, (idx, &ci)| {
            let i = idx as i64 + 1;
            acc.add(&RatPoly::binomial_in_t(i64::from(ci) - i + 1, ci))
        })
}

fn alternating_tail(b: &[BigInt], j: usize) -> BigInt {
    // sum_{l=1}^{j} (-1)^{l-1} C(B_{j-l} + 1, l + 1)
    (1..=j)
        .map(|l| {
            let term = binomial(&b[j - l] + 1u32, (l + 1) as u32);
            if l % 2 == 1 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `B_0, ..., B_{d-1}` from `e_0, ..., e_{d-1}`.
pub fn b_sequence(e: &CoefficientVector) -> Result<Vec<BigInt>> {
    let d = e.dim;
    if d == 0 {
        return Err(Error::DimensionZero);
    }
    if e.len() < d {
        return Err(Error::NotAdmissible(format!(
            "need {d} coefficients, got {}",
            e.len()
        )));
    }
    if e.e[0] < BigInt::one() {
        return Err(Error::NotAdmissible(format!("e_0 = {} < 1", e.e[0])));
    }
    let mut b: Vec<BigInt> = Vec::with_capacity(d);
    b.push(e.e[0].clone());
    for j in 1..d {
        let signed = if j % 2 == 0 { e.e[j].clone() } else { -&e.e[j] };
        let bj = signed + alternating_tail(&b, j);
        if bj < b[j - 1] {
            return Err(Error::NotAdmissible(format!(
                "B_{j} = {bj} < B_{} = {}",
                j - 1,
                b[j - 1]
            )));
        }
        b.push(bj);
    }
    Ok(b)
}

/// Inverse of [`b_sequence`]: recover `e_0, ..., e_{d-1}` from the counts.
pub fn coefficients_from_b(b: &[BigInt]) -> Vec<BigInt> {
    (0..b.len())
        .map(|j| {
            let signed = &b[j] - alternating_tail(b, j);
            if j % 2 == 0 {
                signed
            } else {
                -signed
            }
        })
        .collect()
}

/// The c-sequence with `B_0` copies of `d-1` and `B_j - B_{j-1}` copies of `d-1-j`.
pub fn c_sequence(b: &[BigInt], d: usize) -> Result<GotzmannData> {
    if d == 0 {
        return Err(Error::DimensionZero);
    }
    if b.len() != d {
        return Err(Error::NotAdmissible(format!(
            "expected {d} counts, got {}",
            b.len()
        )));
    }
    if b[0] < BigInt::one() {
        return Err(Error::NotAdmissible(format!("B_0 = {} < 1", b[0])));
    }
    let mut runs = Vec::new();
    for j in 0..d {
        let mult = if j == 0 {
            b[0].clone()
        } else {
            &b[j] - &b[j - 1]
        };
        if mult.is_negative() {
            return Err(Error::NotAdmissible(format!("B_{j} < B_{}", j - 1)));
        }
        if !mult.is_zero() {
            runs.push(((d - 1 - j) as u32, mult));
        }
    }
    Ok(GotzmannData {
        dim: d,
        b: b.to_vec(),
        runs,
    })
}

/// Full decomposition of an admissible coefficient vector.
pub fn decompose(e: &CoefficientVector) -> Result<GotzmannData> {
    c_sequence(&b_sequence(e)?, e.dim)
}

pub fn verify_decomposition(g: &GotzmannData, p: &RatPoly) -> bool {
    g.polynomial() == *p
}

/// `reg^p(R/I) <= B_{d-p} - 1`.
pub fn blancafort_bound(g: &GotzmannData, p: usize) -> Result<BigInt> {
    if p == 0 || p > g.dim {
        return Err(Error::LevelOutOfRange { p, d: g.dim });
    }
    Ok(&g.b[g.dim - p] - 1u32)
}

/// `(xi_j + 1)^(2^j) - 1`, the ceiling on `B_j`.
pub fn key_lemma_bound(e: &CoefficientVector, j: usize) -> Result<BigInt> {
    let base = xi(e, j)? + 1u32;
    Ok(num_traits::pow(base, 1usize << j) - 1u32)
}

/// Per-index check of `B_j <= (xi_j + 1)^(2^j) - 1`.
pub fn key_lemma_holds(e: &CoefficientVector, b: &[BigInt]) -> Result<Vec<bool>> {
    b.iter()
        .enumerate()
        .map(|(j, bj)| Ok(*bj <= key_lemma_bound(e, j)?))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn bigs(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| big(x)).collect()
    }

    #[test]
    fn b_sequence_examples() {
        let e = CoefficientVector::from_i64s(&[2, 1], 2);
        assert_eq!(b_sequence(&e).unwrap(), bigs(&[2, 2]));
        let e = CoefficientVector::from_i64s(&[6, 8], 2);
        assert_eq!(b_sequence(&e).unwrap(), bigs(&[6, 13]));
        let e = CoefficientVector::from_i64s(&[1], 1);
        assert_eq!(b_sequence(&e).unwrap(), bigs(&[1]));
    }

    #[test]
    fn b_sequence_rejects_inadmissible() {
        let e = CoefficientVector::from_i64s(&[0, 0], 2);
        assert!(matches!(b_sequence(&e), Err(Error::NotAdmissible(_))));
        // B_1 = -5 + 3 < B_0
        let e = CoefficientVector::from_i64s(&[2, 5], 2);
        assert!(matches!(b_sequence(&e), Err(Error::NotAdmissible(_))));
        let e = CoefficientVector::from_i64s(&[1], 0);
        assert_eq!(b_sequence(&e), Err(Error::DimensionZero));
    }

    #[test]
    fn c_sequence_examples() {
        let g = c_sequence(&bigs(&[2, 2]), 2).unwrap();
        assert_eq!(g.c_values(100).unwrap(), vec![1, 1]);
        assert_eq!(g.s(), &big(2));
        let g = c_sequence(&bigs(&[6, 13]), 2).unwrap();
        let mut expected = vec![1; 6];
        expected.extend([0; 7]);
        assert_eq!(g.c_values(100).unwrap(), expected);
        assert_eq!(g.s(), &big(13));
        assert!(g.c_values(12).is_none());
        let g = c_sequence(&bigs(&[1]), 1).unwrap();
        assert_eq!(g.c_values(10).unwrap(), vec![0]);
        assert!(matches!(
            c_sequence(&bigs(&[3, 2]), 2),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn d_equals_one_edge() {
        let g = decompose(&CoefficientVector::from_i64s(&[5], 1)).unwrap();
        assert_eq!(g.c_values(10).unwrap(), vec![0; 5]);
        assert_eq!(g.polynomial(), RatPoly::from_i64s(&[5]));
    }

    #[test]
    fn verify_examples() {
        let g = c_sequence(&bigs(&[2, 2]), 2).unwrap();
        assert!(verify_decomposition(&g, &RatPoly::from_i64s(&[1, 2])));
        let g = c_sequence(&bigs(&[6, 13]), 2).unwrap();
        assert!(verify_decomposition(&g, &RatPoly::from_i64s(&[-2, 6])));
        let g = c_sequence(&bigs(&[1]), 1).unwrap();
        assert!(!verify_decomposition(&g, &RatPoly::from_i64s(&[2])));
    }

    #[test]
    fn telescoped_polynomial_matches_direct_sum() {
        for b in [
            bigs(&[2, 2]),
            bigs(&[6, 13]),
            bigs(&[1, 4, 9]),
            bigs(&[3, 3, 20]),
            bigs(&[2, 7, 7, 30]),
        ] {
            let d = b.len();
            let g = c_sequence(&b, d).unwrap();
            let c = g.c_values(1000).unwrap();
            assert_eq!(g.polynomial(), decomposition_polynomial_direct(&c));
        }
    }

    #[test]
    fn blancafort_examples() {
        let g = c_sequence(&bigs(&[2, 2]), 2).unwrap();
        assert_eq!(blancafort_bound(&g, 1).unwrap(), big(1));
        assert_eq!(blancafort_bound(&g, 2).unwrap(), big(1));
        assert_eq!(
            blancafort_bound(&g, 3),
            Err(Error::LevelOutOfRange { p: 3, d: 2 })
        );
        assert!(blancafort_bound(&g, 0).is_err());
        let g = c_sequence(&bigs(&[6, 13]), 2).unwrap();
        assert_eq!(blancafort_bound(&g, 1).unwrap(), big(12));
    }

    #[test]
    fn inverse_recursion() {
        for e in [vec![2, 1], vec![6, 8], vec![4, 4, 1], vec![3, -2, 7, 0]] {
            let cv = CoefficientVector::from_i64s(&e, e.len());
            if let Ok(b) = b_sequence(&cv) {
                assert_eq!(coefficients_from_b(&b), cv.e);
            }
        }
    }

    /// Exhaustive search over nonincreasing c-lists with entries <= 2 and
    /// length <= 15: no two produce the same polynomial, and the recursion
    /// recovers each list from its Hilbert coefficients.
    #[test]
    fn uniqueness_at_desk_scale() {
        fn lists(len: usize, max: u32, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
            if cur.len() == len {
                out.push(cur.clone());
                return;
            }
            let cap = cur.last().copied().unwrap_or(max);
            for v in (0..=cap).rev() {
                cur.push(v);
                lists(len, max, out, cur);
                cur.pop();
            }
        }
        let mut all = Vec::new();
        for len in 1..=15 {
            lists(len, 2, &mut all, &mut Vec::new());
        }
        let mut seen: HashMap<RatPoly, Vec<u32>> = HashMap::new();
        for c in &all {
            let p = decomposition_polynomial_direct(c);
            if let Some(prev) = seen.insert(p.clone(), c.clone()) {
                panic!("{prev:?} and {c:?} share a polynomial");
            }
            let d = c[0] as usize + 1;
            let b: Vec<BigInt> = (0..d)
                .map(|j| big(c.iter().filter(|&&ci| ci as usize + 1 + j >= d).count() as i64))
                .collect();
            let e = CoefficientVector::new(coefficients_from_b(&b), d);
            assert_eq!(crate::polyseries::polynomial_from_coefficients(&e.e, d), p);
            let g = decompose(&e).unwrap();
            assert_eq!(g.c_values(100).unwrap(), *c);
            assert!(key_lemma_holds(&e, g.b()).unwrap().into_iter().all(|ok| ok));
        }
    }
}

//! Binomial coefficients, Macaulay representations and lex segments.
//!
//! Variables are ordered `x1 > x2 > ... > xn` and monomials of equal degree are
//! compared lexicographically on their exponent vectors, left to right.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `C(a, b)` with the falling-factorial convention `a(a-1)...(a-b+1)/b!`.
///
/// Valid for any integer `a`, so `C(-1, 2) = 1` and `C(a, b) = 0` for
/// `0 <= a < b`.
pub fn binomial(a: impl Into<BigInt>, b: u32) -> BigInt {
    let a = a.into();
    let mut acc = BigInt::one();
    for i in 0..b {
        // acc == C(a, i); a product of i+1 consecutive integers is divisible by (i+1)!
        acc = acc * (&a - i) / (i + 1);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// Number of monomials of degree `m` in `n` variables, as a machine integer.
pub fn monomial_count(n: usize, m: u32) -> usize {
    if n == 0 {
        return usize::from(m == 0);
    }
    let c = binomial((n as u64 + m as u64 - 1) as i64, m);
    usize::try_from(c).expect("monomial count exceeds usize")
}

/// A monomial `x1^a1 * ... * xn^an`, stored as its exponent vector.
///
/// The derived `Ord` is lexicographic on exponents, which for monomials of one
/// degree is the lex order with `x1 > ... > xn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    pub fn one(n: usize) -> Self {
        Self {
            exponents: vec![0; n],
        }
    }

    /// The variable `x_{index+1}` (zero-based index).
    pub fn var(n: usize, index: usize) -> Self {
        let mut exponents = vec![0; n];
        exponents[index] = 1;
        Self { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul_var(&self, index: usize) -> Self {
        let mut exponents = self.exponents.clone();
        exponents[index] += 1;
        Self { exponents }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// `self / gcd(self, other)`: the generator of `(self) : (other)`.
    pub fn colon(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Copy with the exponent of variable `index` replaced by `value`.
    pub fn with_exponent(&self, index: usize, value: u32) -> Self {
        let mut exponents = self.exponents.clone();
        exponents[index] = value;
        Self { exponents }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of degree `m` in `n` variables, in descending lex order.
pub fn monomials_of_degree(n: usize, m: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(monomial_count(n, m));
    let mut current = vec![0u32; n];
    fill_descending(&mut current, 0, m, &mut out);
    out
}

fn fill_descending(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    let n = current.len();
    if pos + 1 >= n {
        if n == 0 {
            if remaining == 0 {
                out.push(Monomial::new(Vec::new()));
            }
            return;
        }
        current[n - 1] = remaining;
        out.push(Monomial::new(current.clone()));
        current[n - 1] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill_descending(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}

/// Macaulay's `m`-th representation `h = C(a_m, m) + C(a_{m-1}, m-1) + ... + C(a_j, j)`
/// with `a_m > a_{m-1} > ... > a_j >= j >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    degree: u32,
    /// `(i, a_i)` pairs from `i = degree` downwards.
    terms: Vec<(u32, u64)>,
}

impl MacaulayRep {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &[(u32, u64)] {
        &self.terms
    }

    pub fn value(&self) -> BigInt {
        self.terms.iter().map(|&(i, a)| binomial(a, i)).sum()
    }

    /// `h^<m>`: the maximal Hilbert-function value allowed in degree `m + 1`.
    pub fn growth(&self) -> BigInt {
        self.terms
            .iter()
            .map(|&(i, a)| binomial(a + 1, i + 1))
            .sum()
    }
}

/// Greedy Macaulay representation of `h >= 1` in degree `m >= 1`.
pub fn macaulay_rep(h: u64, m: u32) -> MacaulayRep {
    assert!(h >= 1 && m >= 1, "macaulay_rep needs h >= 1 and m >= 1");
    let mut rest = BigInt::from(h);
    let mut terms = Vec::new();
    let mut i = m;
    while !rest.is_zero() && i >= 1 {
        // largest a with C(a, i) <= rest; C(i, i) = 1 <= rest so a >= i
        let mut lo = u64::from(i);
        let mut hi = lo + 1;
        while binomial(hi, i) <= rest {
            lo = hi;
            hi *= 2;
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if binomial(mid, i) <= rest {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let a = lo;
        rest -= binomial(a, i);
        terms.push((i, a));
        i -= 1;
    }
    MacaulayRep { degree: m, terms }
}

pub fn macaulay_bound(h: u64, m: u32) -> BigInt {
    macaulay_rep(h, m).growth()
}

/// An initial lex segment of a single degree.
///
/// Holds the monomials explicitly; [`LexSegment::from_last`] rebuilds one from
/// its compact description (the last monomial).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexSegment {
    nvars: usize,
    degree: u32,
    monomials: Vec<Monomial>,
}

impl LexSegment {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn into_monomials(self) -> Vec<Monomial> {
        self.monomials
    }

    pub fn last(&self) -> Option<&Monomial> {
        self.monomials.last()
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        // descending order, so binary search on the reversed comparison
        self.monomials.binary_search_by(|v| u.cmp(v)).is_ok()
    }

    /// The segment ending at `last` (inclusive).
    pub fn from_last(last: &Monomial) -> Self {
        let n = last.nvars();
        let degree = last.degree();
        let monomials: Vec<Monomial> = monomials_of_degree(n, degree)
            .into_iter()
            .take_while(|u| u >= last)
            .collect();
        Self {
            nvars: n,
            degree,
            monomials,
        }
    }

    /// Degree-`(m+1)` multiples `x_j * u` of the segment, deduplicated and in
    /// descending lex order.
    pub fn shadow(&self) -> Result<LexSegment> {
        let set: BTreeSet<Monomial> = self
            .monomials
            .iter()
            .flat_map(|u| (0..self.nvars).map(move |j| u.mul_var(j)))
            .collect();
        let monomials: Vec<Monomial> = set.into_iter().rev().collect();
        let degree = self.degree + 1;
        let expected = lex_segment(self.nvars, degree, monomials.len())
            .map_err(|_| Error::NotALexSegment { degree })?;
        if expected.monomials != monomials {
            return Err(Error::NotALexSegment { degree });
        }
        Ok(LexSegment {
            nvars: self.nvars,
            degree,
            monomials,
        })
    }
}

/// The first `k` monomials of degree `m` in descending lex order.
pub fn lex_segment(n: usize, m: u32, k: usize) -> Result<LexSegment> {
    let available = monomial_count(n, m);
    if k > available {
        return Err(Error::SegmentTooLarge {
            requested: k,
            available,
            degree: m,
        });
    }
    let mut monomials = monomials_of_degree(n, m);
    monomials.truncate(k);
    Ok(LexSegment {
        nvars: n,
        degree: m,
        monomials,
    })
}

/// Shadow of an explicit list of degree-`m` monomials in `n` variables.
pub fn shadow(n: usize, m: u32, segment: &[Monomial]) -> Result<Vec<Monomial>> {
    let seg = LexSegment {
        nvars: n,
        degree: m,
        monomials: segment.to_vec(),
    };
    Ok(seg.shadow()?.into_monomials())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(-7, 0), BigInt::one());
        assert_eq!(binomial(123, 0), BigInt::one());
        assert_eq!(binomial(-1, 2), BigInt::one());
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(0, 1), BigInt::zero());
        assert_eq!(binomial(-2, 3), BigInt::from(-4));
    }

    #[test]
    fn pascal_rule() {
        for a in 1..=30i64 {
            for b in 1..=a as u32 {
                assert_eq!(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b));
            }
        }
    }

    #[test]
    fn macaulay_examples() {
        assert_eq!(macaulay_rep(8, 3).terms(), &[(3, 4), (2, 3), (1, 1)]);
        assert_eq!(macaulay_rep(6, 2).terms(), &[(2, 4)]);
        for m in 1..=6 {
            assert_eq!(macaulay_rep(1, m).terms(), &[(m, u64::from(m))]);
            assert_eq!(macaulay_bound(1, m), BigInt::one());
        }
        assert_eq!(macaulay_bound(3, 1), BigInt::from(6));
        assert_eq!(macaulay_bound(6, 2), BigInt::from(10));
    }

    #[test]
    fn macaulay_round_trip_and_shape() {
        for m in 1..=6u32 {
            for h in 1..=10_000u64 {
                let rep = macaulay_rep(h, m);
                assert_eq!(rep.value(), BigInt::from(h), "h={h} m={m}");
                let t = rep.terms();
                for w in t.windows(2) {
                    assert!(w[0].1 > w[1].1);
                    assert_eq!(w[0].0, w[1].0 + 1);
                }
                let &(j, aj) = t.last().unwrap();
                assert!(aj >= u64::from(j) && j >= 1);
            }
        }
    }

    #[test]
    fn lex_segment_examples() {
        let seg = lex_segment(4, 2, 2).unwrap();
        assert_eq!(seg.monomials(), &[mono(&[2, 0, 0, 0]), mono(&[1, 1, 0, 0])]);
        assert!(lex_segment(3, 4, 0).unwrap().is_empty());
        let all = lex_segment(2, 3, 4).unwrap();
        assert_eq!(
            all.monomials(),
            &[mono(&[3, 0]), mono(&[2, 1]), mono(&[1, 2]), mono(&[0, 3])]
        );
        assert!(matches!(
            lex_segment(2, 3, 5),
            Err(Error::SegmentTooLarge {
                requested: 5,
                available: 4,
                ..
            })
        ));
    }

    #[test]
    fn lex_segment_exhaustive_properties() {
        for n in 1..=4usize {
            for m in 0..=5u32 {
                let all = monomials_of_degree(n, m);
                assert_eq!(all.len(), monomial_count(n, m));
                for k in 0..=all.len() {
                    let seg = lex_segment(n, m, k).unwrap();
                    assert_eq!(seg.len(), k);
                    assert!(seg.monomials().windows(2).all(|w| w[0] > w[1]));
                    if let Some(last) = seg.last() {
                        for excluded in all.iter().filter(|u| !seg.monomials().contains(u)) {
                            assert!(last > excluded);
                        }
                        assert_eq!(LexSegment::from_last(last), seg);
                    }
                }
            }
        }
    }

    #[test]
    fn shadow_examples() {
        let seg = lex_segment(4, 2, 2).unwrap();
        let sh = seg.shadow().unwrap();
        let expected = [
            [3, 0, 0, 0],
            [2, 1, 0, 0],
            [2, 0, 1, 0],
            [2, 0, 0, 1],
            [1, 2, 0, 0],
            [1, 1, 1, 0],
            [1, 1, 0, 1],
        ];
        assert_eq!(
            sh.monomials(),
            expected.iter().map(|e| mono(e)).collect::<Vec<_>>()
        );
        assert!(lex_segment(3, 2, 0).unwrap().shadow().unwrap().is_empty());
        let full = lex_segment(3, 3, monomial_count(3, 3)).unwrap();
        assert_eq!(
            full.shadow().unwrap().monomials(),
            monomials_of_degree(3, 4)
        );
    }

    #[test]
    fn shadow_of_non_segment_is_rejected() {
        let err = shadow(2, 1, &[mono(&[0, 1])]).unwrap_err();
        assert_eq!(err, Error::NotALexSegment { degree: 2 });
    }

    #[test]
    fn shadow_size_monotone_in_k() {
        for n in 1..=4usize {
            for m in 1..=4u32 {
                let mut prev = 0;
                for k in 0..=monomial_count(n, m) {
                    let s = lex_segment(n, m, k).unwrap().shadow().unwrap().len();
                    assert!(s >= prev);
                    prev = s;
                }
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(mono(&[2, 1, 0]).to_string(), "x1^2*x2");
        assert_eq!(mono(&[0, 0]).to_string(), "1");
    }
}

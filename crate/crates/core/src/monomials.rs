//! Monomial ideals over a field: minimal generators, Hilbert-series numerators
//! by pivot recursion, saturation and intersection.

use std::fmt;

use num_bigint::BigInt;

use crate::combinat::{monomials_of_degree, Monomial};
use crate::error::{Error, Result};
use crate::polyseries::{reduce, HilbertSeries, IntPoly};

/// A monomial ideal given by its minimal generators, sorted in descending lex
/// order.
///
/// The unit ideal only arises from saturation or colon and is represented by
/// the single generator `1`; check [`MonomialIdeal::is_unit`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// How the Hilbert-series recursion picks its pivot monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotStrategy {
    /// Variable in the most generators, raised to the lower median of its
    /// positive exponents.
    #[default]
    MostFrequentMedian,
    /// First variable shared by two generators, to the first power.
    FirstSharedLinear,
}

fn minimal_subset(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    /// Minimal generating set of the ideal spanned by `gens`.
    pub fn minimalize(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != nvars {
                return Err(Error::VariableMismatch {
                    left: nvars,
                    right: g.nvars(),
                });
            }
            if g.degree() == 0 {
                return Err(Error::UnitIdeal);
            }
        }
        Ok(Self::from_gens(nvars, gens))
    }

    pub fn from_exponents(nvars: usize, gens: &[Vec<u32>]) -> Result<Self> {
        Self::minimalize(nvars, gens.iter().cloned().map(Monomial::new).collect())
    }

    /// Like [`minimalize`](Self::minimalize) but allows the unit ideal.
    fn from_gens(nvars: usize, gens: Vec<Monomial>) -> Self {
        Self {
            nvars,
            gens: minimal_subset(gens),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        Self {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Largest degree of a minimal generator; 0 for the zero ideal.
    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_generator(&self, u: &Monomial) -> Self {
        let mut gens: Vec<Monomial> = self
            .gens
            .iter()
            .filter(|g| !u.divides(g))
            .cloned()
            .collect();
        if !self.contains(u) {
            gens.push(u.clone());
        }
        Self::from_gens(self.nvars, gens)
    }

    /// `I : (u)`.
    pub fn colon(&self, u: &Monomial) -> Self {
        Self::from_gens(self.nvars, self.gens.iter().map(|g| g.colon(u)).collect())
    }

    /// `I : x_j^inf`: every generator with its `x_j` exponent set to zero.
    pub fn colon_var_infinity(&self, j: usize) -> Self {
        Self::from_gens(
            self.nvars,
            self.gens.iter().map(|g| g.with_exponent(j, 0)).collect(),
        )
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        let gens = self
            .gens
            .iter()
            .flat_map(|u| other.gens.iter().map(move |v| u.lcm(v)))
            .collect();
        Ok(Self::from_gens(self.nvars, gens))
    }

    /// `I : (x_1, ..., x_n)^inf = ∩_j (I : x_j^inf)`.
    pub fn saturation(&self) -> Self {
        if self.is_zero() || self.nvars == 0 {
            return self.clone();
        }
        (1..self.nvars).fold(self.colon_var_infinity(0), |acc, j| {
            acc.intersect(&self.colon_var_infinity(j))
                .expect("same ring")
        })
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation() == *self
    }

    pub fn numerator(&self) -> IntPoly {
        self.numerator_with(PivotStrategy::default())
    }

    /// `N(z)` with `HS_{R/I}(z) = N(z)/(1-z)^n`.
    pub fn numerator_with(&self, strategy: PivotStrategy) -> IntPoly {
        numerator_rec(self.nvars, self.gens.clone(), strategy)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::new(self.numerator(), self.nvars)
    }

    /// Krull dimension of `R/I`.
    pub fn dimension(&self) -> Result<usize> {
        Ok(reduce(&self.hilbert_series())?.dim)
    }

    /// Brute-force count of degree-`t` monomials outside `I`.
    pub fn count_standard_monomials(&self, t: u32) -> BigInt {
        let count = monomials_of_degree(self.nvars, t)
            .iter()
            .filter(|u| !self.contains(u))
            .count();
        BigInt::from(count)
    }
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    gens.iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)))
}

fn choose_pivot(nvars: usize, gens: &[Monomial], strategy: PivotStrategy) -> Monomial {
    let occurrences = |j: usize| gens.iter().filter(|g| g.exponents()[j] > 0).count();
    let var = match strategy {
        PivotStrategy::MostFrequentMedian => (0..nvars)
            .max_by_key(|&j| (occurrences(j), std::cmp::Reverse(j)))
            .expect("at least one variable"),
        PivotStrategy::FirstSharedLinear => (0..nvars)
            .find(|&j| occurrences(j) >= 2)
            .expect("non-coprime generators share a variable"),
    };
    let exponent = match strategy {
        PivotStrategy::FirstSharedLinear => 1,
        PivotStrategy::MostFrequentMedian => {
            let mut exps: Vec<u32> = gens
                .iter()
                .map(|g| g.exponents()[var])
                .filter(|&e| e > 0)
                .collect();
            exps.sort_unstable();
            // lower median; with >= 2 entries it stays below the pure power
            // x_var^f if one is a generator, so the pivot is not in I
            exps[(exps.len() - 1) / 2]
        }
    };
    Monomial::one(nvars).with_exponent(var, exponent)
}

fn numerator_rec(nvars: usize, gens: Vec<Monomial>, strategy: PivotStrategy) -> IntPoly {
    if gens.is_empty() {
        return IntPoly::one();
    }
    if gens.iter().any(Monomial::is_one) {
        return IntPoly::zero();
    }
    if pairwise_coprime(&gens) {
        return gens.iter().fold(IntPoly::one(), |acc, g| {
            acc.mul(&IntPoly::one_minus_z_pow(g.degree() as usize))
        });
    }
    let pivot = choose_pivot(nvars, &gens, strategy);
    let ideal = MonomialIdeal { nvars, gens };
    debug_assert!(!ideal.contains(&pivot));
    // 0 -> R/(I:p)(-deg p) -> R/I -> R/(I + (p)) -> 0
    let sum = ideal.add_generator(&pivot);
    let quotient = ideal.colon(&pivot);
    let n_sum = numerator_rec(nvars, sum.gens, strategy);
    let n_quot = numerator_rec(nvars, quotient.gens, strategy);
    n_sum.add(&n_quot.shift(pivot.degree() as usize))
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

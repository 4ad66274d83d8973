//! Ideal families with known invariants and exact regularity oracles.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;

use crate::combinat::{lex_segment, macaulay_bound, monomial_count, Monomial};
use crate::error::{Error, Result};
use crate::gotzmann::b_sequence;
use crate::monomials::MonomialIdeal;
use crate::polyseries::{
    hilbert_coefficients, postulation_number, reduce, series_coefficient, HilbertSeries, IntPoly,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// A regular sequence of forms of the given degrees in `nvars` variables.
    CompleteIntersection {
        nvars: usize,
        degrees: Vec<u32>,
    },
    /// `(x_1, ..., x_c)^(a+1)`.
    Powers {
        nvars: usize,
        c: usize,
        a: u32,
    },
    /// Intersection of all ideals generated by `nvars - dim` variables.
    CyclicPolytope {
        nvars: usize,
        dim: usize,
    },
    /// Lex-segment ideal with the Hilbert function of `source`.
    LexOf {
        source: Box<FamilySpec>,
        max_degree: Option<u32>,
    },
    Explicit(MonomialIdeal),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMethod {
    ClosedForm,
    EliahouKervaire,
}

impl OracleMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::ClosedForm => "closedForm",
            Self::EliahouKervaire => "eliahouKervaire",
        }
    }
}

/// Exact `reg(R/I)` and `reg^1(R/I)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleResult {
    pub reg: i64,
    pub reg1: i64,
    pub method: OracleMethod,
}

impl FamilySpec {
    pub fn nvars(&self) -> usize {
        match self {
            Self::CompleteIntersection { nvars, .. }
            | Self::Powers { nvars, .. }
            | Self::CyclicPolytope { nvars, .. } => *nvars,
            Self::LexOf { source, .. } => source.nvars(),
            Self::Explicit(ideal) => ideal.nvars(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::CompleteIntersection { nvars, degrees } => {
                if degrees.len() > *nvars {
                    return Err(Error::TooManyForms {
                        forms: degrees.len(),
                        vars: *nvars,
                    });
                }
                if degrees.contains(&0) {
                    return Err(Error::InvalidSpec("form degrees must be positive".into()));
                }
            }
            Self::Powers { nvars, c, .. } => {
                if *c == 0 || c > nvars {
                    return Err(Error::InvalidSpec(format!(
                        "powers ideal needs 1 <= c <= n, got c = {c}, n = {nvars}"
                    )));
                }
            }
            Self::CyclicPolytope { nvars, dim } => {
                if *dim == 0 || dim >= nvars {
                    return Err(Error::InvalidSpec(format!(
                        "cyclic polytope ideal needs 1 <= d <= n - 1, got d = {dim}, n = {nvars}"
                    )));
                }
            }
            Self::LexOf { source, .. } => source.validate()?,
            Self::Explicit(_) => {}
        }
        if self.nvars() == 0 {
            return Err(Error::InvalidSpec(
                "at least one variable is required".into(),
            ));
        }
        Ok(())
    }

    /// The monomial ideal, or `None` for complete intersections.
    pub fn ideal(&self) -> Result<Option<MonomialIdeal>> {
        self.validate()?;
        Ok(match self {
            Self::CompleteIntersection { .. } => None,
            Self::Powers { nvars, c, a } => Some(powers_ideal(*nvars, *c, *a)?),
            Self::CyclicPolytope { nvars, dim } => Some(cyclic_polytope_ideal(*nvars, *dim)?),
            Self::LexOf { source, max_degree } => Some(lexify(source, *max_degree)?),
            Self::Explicit(ideal) => Some(ideal.clone()),
        })
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        match self {
            Self::CompleteIntersection { nvars, degrees } => Ok(ci_series(*nvars, degrees)?.0),
            _ => Ok(self.ideal()?.expect("monomial family").hilbert_series()),
        }
    }

    /// Exact regularity where the family supports one.
    pub fn oracle(&self) -> Result<Option<OracleResult>> {
        match self {
            Self::CompleteIntersection { nvars, degrees } => {
                Ok(Some(ci_series(*nvars, degrees)?.1))
            }
            Self::CyclicPolytope { dim, .. } => {
                self.validate()?;
                Ok(Some(OracleResult {
                    reg: *dim as i64,
                    reg1: *dim as i64,
                    method: OracleMethod::ClosedForm,
                }))
            }
            _ => {
                let ideal = self.ideal()?.expect("monomial family");
                if is_strongly_stable(&ideal) {
                    stable_regularity(&ideal).map(Some)
                } else {
                    Ok(None)
                }
            }
        }
    }

    /// Depth of `R/I` when the family is known to be Cohen–Macaulay.
    pub fn known_depth(&self) -> Option<usize> {
        match self {
            Self::CompleteIntersection { nvars, degrees } => Some(nvars - degrees.len()),
            Self::Powers { nvars, c, .. } => Some(nvars - c),
            Self::CyclicPolytope { dim, .. } => Some(*dim),
            _ => None,
        }
    }
}

/// `prod (1 - z^delta_i) / (1 - z)^n`, with `reg = reg^1 = sum (delta_i - 1)`.
pub fn ci_series(nvars: usize, degrees: &[u32]) -> Result<(HilbertSeries, OracleResult)> {
    FamilySpec::CompleteIntersection {
        nvars,
        degrees: degrees.to_vec(),
    }
    .validate()?;
    let numerator = degrees.iter().fold(IntPoly::one(), |acc, &d| {
        acc.mul(&IntPoly::one_minus_z_pow(d as usize))
    });
    let hs = HilbertSeries::new(numerator, nvars);
    if degrees.len() < nvars {
        let rs = reduce(&hs)?;
        let e0 = rs.q.eval_at_one();
        let product: u64 = degrees.iter().map(|&d| u64::from(d)).product();
        if e0 != product.into() {
            return Err(Error::Internal(format!(
                "complete intersection multiplicity {e0} != {product}"
            )));
        }
    }
    let reg: i64 = degrees.iter().map(|&d| i64::from(d) - 1).sum();
    Ok((
        hs,
        OracleResult {
            reg,
            reg1: reg,
            method: OracleMethod::ClosedForm,
        },
    ))
}

/// All monomials of degree `a + 1` in `x_1, ..., x_c`.
pub fn powers_ideal(nvars: usize, c: usize, a: u32) -> Result<MonomialIdeal> {
    FamilySpec::Powers { nvars, c, a }.validate()?;
    let gens = crate::combinat::monomials_of_degree(c, a + 1)
        .into_iter()
        .map(|u| {
            let mut e = u.exponents().to_vec();
            e.resize(nvars, 0);
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::minimalize(nvars, gens)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Squarefree monomials of degree `dim + 1`: the intersection of all ideals
/// generated by `nvars - dim` of the variables.
pub fn cyclic_polytope_ideal(nvars: usize, dim: usize) -> Result<MonomialIdeal> {
    FamilySpec::CyclicPolytope { nvars, dim }.validate()?;
    let gens = subsets(nvars, dim + 1)
        .into_iter()
        .map(|s| {
            let mut e = vec![0; nvars];
            for i in s {
                e[i] = 1;
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::minimalize(nvars, gens)
}

/// The same ideal built literally as an intersection of linear ideals.
pub fn cyclic_polytope_by_intersection(nvars: usize, dim: usize) -> Result<MonomialIdeal> {
    FamilySpec::CyclicPolytope { nvars, dim }.validate()?;
    let mut acc: Option<MonomialIdeal> = None;
    for s in subsets(nvars, nvars - dim) {
        let linear = MonomialIdeal::minimalize(
            nvars,
            s.into_iter().map(|i| Monomial::var(nvars, i)).collect(),
        )?;
        acc = Some(match acc {
            None => linear,
            Some(prev) => prev.intersect(&linear)?,
        });
    }
    Ok(acc.expect("at least one subset"))
}

/// Lex-segment ideal with the Hilbert function of `source`.
pub fn lexify(source: &FamilySpec, max_degree: Option<u32>) -> Result<MonomialIdeal> {
    source.validate()?;
    lexify_series(&source.hilbert_series()?, max_degree)
}

/// Least sound truncation degree `max(postulation + 1, s, 1)`, with `s` the
/// Gotzmann number. The lex ideal has no minimal generators above it.
pub fn min_lex_degree(hs: &HilbertSeries) -> Result<u32> {
    let rs = reduce(hs)?;
    let mut m = (postulation_number(&rs) + 1).max(1);
    if rs.dim >= 1 {
        let b = b_sequence(&hilbert_coefficients(&rs)?)?;
        let s = b.last().expect("d >= 1").to_i64().ok_or_else(|| {
            Error::InvalidSpec("Gotzmann number too large for lexification".into())
        })?;
        m = m.max(s);
    }
    u32::try_from(m).map_err(|_| Error::InvalidSpec("truncation degree too large".into()))
}

/// Default truncation degree `max(postulation + 2, B_{d-1} + 1)`.
pub fn default_lex_degree(hs: &HilbertSeries) -> Result<u32> {
    Ok(min_lex_degree(hs)? + 1)
}

/// Degree-by-degree lex construction from a Hilbert series `N(z)/(1-z)^n`.
pub fn lexify_series(hs: &HilbertSeries, max_degree: Option<u32>) -> Result<MonomialIdeal> {
    let n = hs.denominator_exponent;
    let top = match max_degree {
        Some(m) => m,
        None => default_lex_degree(hs)?,
    };
    if top < min_lex_degree(hs)? {
        return Err(Error::TruncationUnsound(top));
    }

    let h: Vec<u64> = (0..=u64::from(top) + 1)
        .map(|t| {
            series_coefficient(hs, t)
                .to_u64()
                .ok_or(Error::NotAnOSequence { degree: t as u32 })
        })
        .collect::<Result<_>>()?;
    if h[0] != 1 {
        return Err(Error::NotAnOSequence { degree: 0 });
    }
    for m in 1..=top {
        let (cur, next) = (h[m as usize], h[m as usize + 1]);
        if cur as usize > monomial_count(n, m) {
            return Err(Error::NotAnOSequence { degree: m });
        }
        let allowed = if cur == 0 {
            0u32.into()
        } else {
            macaulay_bound(cur, m)
        };
        if num_bigint::BigInt::from(next) > allowed {
            return Err(Error::NotAnOSequence { degree: m + 1 });
        }
    }
    if h[1] as usize > n {
        return Err(Error::NotAnOSequence { degree: 1 });
    }

    let mut gens = Vec::new();
    let mut prev = lex_segment(n, 0, 0)?;
    for m in 1..=top {
        let k = monomial_count(n, m) - h[m as usize] as usize;
        let seg = lex_segment(n, m, k)?;
        let shadow = prev.shadow()?;
        if shadow.len() > seg.len() || seg.monomials()[..shadow.len()] != *shadow.monomials() {
            return Err(Error::NotAnOSequence { degree: m });
        }
        gens.extend_from_slice(&seg.monomials()[shadow.len()..]);
        prev = seg;
    }
    let beyond = monomial_count(n, top + 1) - h[top as usize + 1] as usize;
    if prev.shadow()?.len() != beyond {
        return Err(Error::Internal(format!(
            "lex ideal needs generators in degree {} past the Gotzmann bound",
            top + 1
        )));
    }
    let ideal = MonomialIdeal::minimalize(n, gens)?;
    if !is_strongly_stable(&ideal) {
        return Err(Error::Internal("lex ideal is not strongly stable".into()));
    }
    Ok(ideal)
}

/// Minimal generators grouped by degree.
pub fn generators_by_degree(ideal: &MonomialIdeal) -> Vec<(u32, Vec<Monomial>)> {
    let mut out: Vec<(u32, Vec<Monomial>)> = Vec::new();
    let mut gens = ideal.generators().to_vec();
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    for g in gens {
        match out.last_mut() {
            Some((deg, list)) if *deg == g.degree() => list.push(g),
            _ => out.push((g.degree(), vec![g])),
        }
    }
    out
}

/// `x_i u / x_j` for `i < j`, whenever `x_j | u`.
fn borel_moves(u: &Monomial) -> impl Iterator<Item = Monomial> + '_ {
    let n = u.nvars();
    (1..n)
        .filter(move |&j| u.exponents()[j] > 0)
        .flat_map(move |j| {
            (0..j).map(move |i| {
                let mut e = u.exponents().to_vec();
                e[j] -= 1;
                e[i] += 1;
                Monomial::new(e)
            })
        })
}

pub fn is_strongly_stable(ideal: &MonomialIdeal) -> bool {
    ideal
        .generators()
        .iter()
        .all(|u| borel_moves(u).all(|v| ideal.contains(&v)))
}

/// Smallest strongly stable ideal containing `ideal`.
pub fn strongly_stable_closure(ideal: &MonomialIdeal) -> MonomialIdeal {
    let mut seen: BTreeSet<Monomial> = ideal.generators().iter().cloned().collect();
    let mut frontier: Vec<Monomial> = seen.iter().cloned().collect();
    while let Some(u) = frontier.pop() {
        for v in borel_moves(&u) {
            if seen.insert(v.clone()) {
                frontier.push(v);
            }
        }
    }
    MonomialIdeal::minimalize(ideal.nvars(), seen.into_iter().collect())
        .expect("closure of a proper ideal is proper")
}

/// Eliahou–Kervaire: `reg(I)` is the top generator degree of a strongly stable
/// ideal. `reg^1` comes from the saturation `I : x_n^inf`.
pub fn stable_regularity(ideal: &MonomialIdeal) -> Result<OracleResult> {
    if !is_strongly_stable(ideal) {
        return Err(Error::NotStronglyStable);
    }
    if ideal.is_zero() {
        return Ok(OracleResult {
            reg: 0,
            reg1: 0,
            method: OracleMethod::EliahouKervaire,
        });
    }
    let sat = ideal.colon_var_infinity(ideal.nvars() - 1);
    if sat != ideal.saturation() {
        return Err(Error::Internal(
            "saturation of a strongly stable ideal is not I : x_n^inf".into(),
        ));
    }
    Ok(OracleResult {
        reg: i64::from(ideal.max_degree()) - 1,
        reg1: i64::from(sat.max_degree()) - 1,
        method: OracleMethod::EliahouKervaire,
    })
}

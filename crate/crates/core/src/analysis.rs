//! End-to-end evaluation of one graded quotient: series, coefficients,
//! Gotzmann data, every bound, the oracle comparison and the verdicts.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bounds::{
    binomial_lower, coefficient_growth_check, corollary_c_check, d1_extremal_series, prop_d1_check,
    prop_d_lower, question_check, theorem_a_bound, theorem_b_bounds, xi, CorollaryC, QuestionCheck,
    TheoremB,
};
use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::families::{FamilySpec, OracleResult};
use crate::gotzmann::{
    b_sequence, blancafort_bound, c_sequence, key_lemma_holds, verify_decomposition, GotzmannData,
};
use crate::monomials::MonomialIdeal;
use crate::polyseries::{
    cumulative_coefficients, hilbert_coefficients, hilbert_polynomial, postulation_number, reduce,
    series_coefficient, CoefficientVector, HilbertSeries, RatPoly, ReducedSeries,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DepthPositive {
    #[default]
    Auto,
    Yes,
    No,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub ell: u64,
    pub depth_positive: DepthPositive,
    /// Levels `p` reported for the Theorem A and Blancafort maps; all when `None`.
    pub levels: Option<Vec<usize>>,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            ell: 1,
            depth_positive: DepthPositive::Auto,
            levels: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NoOracle,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::NoOracle => "no-oracle",
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Self::Pass
        } else {
            Self::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub claim: String,
    pub status: Status,
    pub detail: String,
}

impl Verdict {
    fn new(claim: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Self {
            claim: claim.into(),
            status,
            detail: detail.into(),
        }
    }

    /// Failures of these claims mean the implementation is broken, not that
    /// a bound was violated.
    pub fn is_internal(&self) -> bool {
        self.claim == "gotzmann.roundTrip"
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D1Report {
    pub holds: bool,
    pub is_equality: bool,
    pub extremal: ReducedSeries,
    pub matches_extremal: bool,
}

/// Every bound evaluated for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub dim: usize,
    pub codim: usize,
    pub ell: u64,
    /// `xi_0, ..., xi_d` over the cumulative coefficients.
    pub xi: Vec<BigInt>,
    pub theorem_a: Vec<(usize, BigInt)>,
    pub blancafort: Vec<(usize, BigInt)>,
    pub theorem_b: TheoremB,
    pub corollary_c: Vec<CorollaryC>,
    pub lower_roots: Option<BigInt>,
    pub lower_binomial: Option<BigInt>,
    /// `lower_binomial >= lower_roots - 1`.
    pub lower_window: Option<bool>,
    pub d1: Option<D1Report>,
    pub coefficient_growth: Option<bool>,
    pub question: Option<QuestionCheck>,
}

impl BoundsReport {
    pub fn theorem_a_at(&self, p: usize) -> Option<&BigInt> {
        self.theorem_a.iter().find(|(q, _)| *q == p).map(|(_, b)| b)
    }

    pub fn blancafort_at(&self, p: usize) -> Option<&BigInt> {
        self.blancafort
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, b)| b)
    }
}

/// Invariants that exist only in positive dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub polynomial: RatPoly,
    pub e: CoefficientVector,
    pub es: CoefficientVector,
    pub gotzmann: GotzmannData,
    pub decomposition_verified: bool,
    pub key_lemma: Vec<bool>,
    pub bounds: BoundsReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub nvars: usize,
    pub series: HilbertSeries,
    pub reduced: ReducedSeries,
    pub postulation: i64,
    /// `h(0), ..., h(max(postulation, 0) + 2)`.
    pub h_values: Vec<BigInt>,
    pub ideal: Option<MonomialIdeal>,
    pub oracle: Option<OracleResult>,
    pub depth_positive: Option<bool>,
    /// `None` in dimension zero.
    pub invariants: Option<Invariants>,
    pub verdicts: Vec<Verdict>,
}

impl Analysis {
    pub fn dim(&self) -> usize {
        self.reduced.dim
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.status == Status::Fail)
    }

    /// `(reg^1 + 2) / (theorem A bound at p = 1 + 2)`.
    pub fn sharpness(&self) -> Option<BigRational> {
        let oracle = self.oracle?;
        let bound = self.invariants.as_ref()?.bounds.theorem_a_at(1)?;
        Some(BigRational::new(
            BigInt::from(oracle.reg1 + 2),
            bound + 2u32,
        ))
    }
}

/// Run the full pipeline on a family.
pub fn analyze_family(family: &FamilySpec, opts: &Options) -> Result<Analysis> {
    family.validate()?;
    let ideal = family.ideal()?;
    let series = match &ideal {
        Some(i) => i.hilbert_series(),
        None => family.hilbert_series()?,
    };
    let oracle = family.oracle()?;
    let depth_positive = match opts.depth_positive {
        DepthPositive::Yes => Some(true),
        DepthPositive::No => Some(false),
        DepthPositive::Auto => match (family, &ideal) {
            (FamilySpec::Explicit(i), _) => Some(i.is_saturated()),
            (FamilySpec::CompleteIntersection { .. }, _) => Some(true),
            _ => None,
        },
    };
    let depth = family.known_depth().or(depth_positive.map(usize::from));
    analyze_series(series, ideal, oracle, depth_positive, depth, opts)
}

/// Pipeline for a monomial ideal with the Eliahou–Kervaire oracle when it applies.
pub fn analyze_ideal(ideal: &MonomialIdeal, opts: &Options) -> Result<Analysis> {
    analyze_family(&FamilySpec::Explicit(ideal.clone()), opts)
}

/// Pipeline on an explicit series. `depth` is a lower estimate for the
/// depth of the ring, used only for the open-question evidence.
pub fn analyze_series(
    series: HilbertSeries,
    ideal: Option<MonomialIdeal>,
    oracle: Option<OracleResult>,
    depth_positive: Option<bool>,
    depth: Option<usize>,
    opts: &Options,
) -> Result<Analysis> {
    if opts.ell == 0 {
        return Err(Error::InvalidSpec("ell must be positive".into()));
    }
    let nvars = series.denominator_exponent;
    let reduced = reduce(&series)?;
    let postulation = postulation_number(&reduced);
    let top = postulation.max(0) as u64 + 2;
    let h_values = (0..=top).map(|t| series_coefficient(&series, t)).collect();

    let mut analysis = Analysis {
        nvars,
        series,
        reduced,
        postulation,
        h_values,
        ideal,
        oracle,
        depth_positive,
        invariants: None,
        verdicts: Vec::new(),
    };
    if analysis.reduced.dim == 0 {
        return Ok(analysis);
    }
    let invariants = invariants(&analysis, depth, opts)?;
    analysis.verdicts = verdicts(&analysis, &invariants);
    analysis.invariants = Some(invariants);
    Ok(analysis)
}

fn invariants(a: &Analysis, depth: Option<usize>, opts: &Options) -> Result<Invariants> {
    let rs = &a.reduced;
    let d = rs.dim;
    let ell = opts.ell;
    let polynomial = hilbert_polynomial(rs)?;
    let e = hilbert_coefficients(rs)?.with_ell(ell);
    let es = cumulative_coefficients(rs)?.with_ell(ell);
    let b = b_sequence(&e)?;
    let gotzmann = c_sequence(&b, d)?;
    let decomposition_verified = verify_decomposition(&gotzmann, &polynomial);
    let key_lemma = key_lemma_holds(&e, &b)?;

    let levels: Vec<usize> = match &opts.levels {
        Some(l) => l.clone(),
        None => (1..=d).collect(),
    };
    let mut theorem_a = Vec::with_capacity(levels.len());
    let mut blancafort = Vec::with_capacity(levels.len());
    for &p in &levels {
        theorem_a.push((p, theorem_a_bound(&e, p)?));
        blancafort.push((p, blancafort_bound(&gotzmann, p)?));
    }
    let xi_table = (0..=d).map(|p| xi(&es, p)).collect::<Result<Vec<_>>>()?;
    let theorem_b = theorem_b_bounds(&es, a.depth_positive == Some(true))?;
    let corollary_c = (1..=d)
        .map(|i| corollary_c_check(&es, i))
        .collect::<Result<Vec<_>>>()?;

    let codim = a.nvars - d;
    let (lower_roots, lower_binomial) = if codim >= 1 {
        (
            Some(prop_d_lower(&e, ell, codim)),
            Some(binomial_lower(e.e0(), ell, codim)),
        )
    } else {
        (None, None)
    };
    let lower_window = match (&lower_roots, &lower_binomial) {
        (Some(r), Some(b)) => Some(*b >= r - 1u32),
        _ => None,
    };

    let (d1, coefficient_growth, question) = match a.oracle {
        Some(o) if o.reg >= 0 => {
            let check = prop_d1_check(e.e0(), ell, codim, o.reg);
            let extremal = d1_extremal_series(ell, codim, d, o.reg as u32);
            let matches_extremal = extremal == *rs;
            let cap = binomial(o.reg + codim as i64, codim as u32) * ell;
            let question = depth
                .map(|t| question_check(&es, t.min(d), o.reg))
                .transpose()?;
            (
                Some(D1Report {
                    holds: check.holds,
                    is_equality: check.is_equality,
                    extremal,
                    matches_extremal,
                }),
                Some(coefficient_growth_check(&e, &cap, o.reg)),
                question,
            )
        }
        _ => (None, None, None),
    };

    Ok(Invariants {
        polynomial,
        e,
        es,
        gotzmann,
        decomposition_verified,
        key_lemma,
        bounds: BoundsReport {
            dim: d,
            codim,
            ell,
            xi: xi_table,
            theorem_a,
            blancafort,
            theorem_b,
            corollary_c,
            lower_roots,
            lower_binomial,
            lower_window,
            d1,
            coefficient_growth,
            question,
        },
    })
}

fn verdicts(a: &Analysis, inv: &Invariants) -> Vec<Verdict> {
    let mut out = Vec::new();
    let d = a.reduced.dim;
    let bounds = &inv.bounds;
    out.push(Verdict::new(
        "gotzmann.roundTrip",
        Status::from_bool(inv.decomposition_verified),
        "c-sequence re-expands to the Hilbert polynomial",
    ));
    out.push(Verdict::new(
        "gotzmann.keyLemma",
        Status::from_bool(inv.key_lemma.iter().all(|&ok| ok)),
        "B_j <= (xi_j + 1)^(2^j) - 1 for all j",
    ));
    // ordering is a theorem about the formulas; it needs no oracle
    for p in 1..=d {
        let ta = theorem_a_bound(&inv.e, p).expect("level in range");
        let bl = blancafort_bound(&inv.gotzmann, p).expect("level in range");
        out.push(Verdict::new(
            format!("ordering.p{p}"),
            Status::from_bool(ta >= bl),
            format!("theorem A {ta} >= Blancafort {bl}"),
        ));
    }
    for c in &bounds.corollary_c {
        out.push(Verdict::new(
            format!("corollaryC.i{}", c.index),
            Status::from_bool(c.holds),
            format!("{} < {}", c.lhs, c.rhs),
        ));
    }

    let ta1 = theorem_a_bound(&inv.e, 1).expect("d >= 1");
    let bl1 = blancafort_bound(&inv.gotzmann, 1).expect("d >= 1");
    let Some(o) = a.oracle else {
        for claim in [
            "theoremA.p1",
            "blancafort.p1",
            "theoremB.general",
            "propD1",
            "propD.lower",
            "binomialLower",
        ] {
            out.push(Verdict::new(
                claim,
                Status::NoOracle,
                "no regularity oracle",
            ));
        }
        return out;
    };
    let reg1 = BigInt::from(o.reg1);
    let reg = BigInt::from(o.reg);
    out.push(Verdict::new(
        "theoremA.p1",
        Status::from_bool(reg1 <= ta1),
        format!("reg^1 {reg1} <= {ta1}"),
    ));
    out.push(Verdict::new(
        "blancafort.p1",
        Status::from_bool(reg1 <= bl1),
        format!("reg^1 {reg1} <= {bl1}"),
    ));
    out.push(Verdict::new(
        "theoremB.general",
        Status::from_bool(reg <= bounds.theorem_b.general),
        format!("reg {reg} <= {}", bounds.theorem_b.general),
    ));
    if let Some(dp) = &bounds.theorem_b.depth_positive {
        out.push(Verdict::new(
            "theoremB.depthPositive",
            Status::from_bool(reg <= *dp),
            format!("reg {reg} <= {dp}"),
        ));
    }
    if let Some(d1) = &bounds.d1 {
        out.push(Verdict::new(
            "propD1",
            Status::from_bool(d1.holds),
            format!(
                "e_0 {} <= ell * C(reg + c, c){}",
                inv.e.e0(),
                if d1.is_equality { " with equality" } else { "" }
            ),
        ));
        if d1.is_equality {
            out.push(Verdict::new(
                "propD1.extremal",
                Status::from_bool(d1.matches_extremal),
                "equality forces the extremal Hilbert series",
            ));
        }
    }
    if let (Some(roots), Some(binom)) = (&bounds.lower_roots, &bounds.lower_binomial) {
        out.push(Verdict::new(
            "propD.lower",
            Status::from_bool(*roots <= reg),
            format!("{roots} <= reg {reg}"),
        ));
        out.push(Verdict::new(
            "binomialLower",
            Status::from_bool(*binom <= reg),
            format!("{binom} <= reg {reg}"),
        ));
    }
    if let Some(ok) = bounds.coefficient_growth {
        out.push(Verdict::new(
            "coefficientGrowth",
            Status::from_bool(ok),
            "|e_i| <= ell * C(reg + c, c) * (reg + 1)^i",
        ));
    }
    out
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "lex segment of size {requested} exceeds the {available} monomials of degree {degree}"
    )]
    SegmentTooLarge {
        requested: usize,
        available: usize,
        degree: u32,
    },
    #[error("shadow of a lex segment is not a lex segment (degree {degree})")]
    NotALexSegment { degree: u32 },
    #[error("monomials live in different polynomial rings ({left} vs {right} variables)")]
    VariableMismatch { left: usize, right: usize },
    #[error("a degree-0 generator makes the ideal the unit ideal")]
    UnitIdeal,
    #[error("the Hilbert series numerator is identically zero")]
    ZeroSeries,
    #[error("the numerator vanishes at z = 1 to order above the denominator exponent {0}")]
    NotAHilbertSeries(usize),
    #[error("dimension 0: the Hilbert polynomial vanishes and no bound applies")]
    DimensionZero,
    #[error("coefficient vector is not admissible: {0}")]
    NotAdmissible(String),
    #[error("level p = {p} outside 1..={d}")]
    LevelOutOfRange { p: usize, d: usize },
    #[error("index {index} outside the valid range 0..{len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("{forms} forms cannot form a regular sequence in {vars} variables")]
    TooManyForms { forms: usize, vars: usize },
    #[error("Hilbert function violates Macaulay growth at degree {degree}")]
    NotAnOSequence { degree: u32 },
    #[error("lexification truncated at degree {0} is below the Gotzmann and postulation bound; raise the maximal degree")]
    TruncationUnsound(u32),
    #[error("ideal is not strongly stable")]
    NotStronglyStable,
    #[error("invalid input: {0}")]
    InvalidSpec(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Versioned JSON input documents.
//!
//! ```json
//! {
//!   "version": "1",
//!   "ring": { "vars": 3 },
//!   "ideal": { "kind": "completeIntersection", "degrees": [2] },
//!   "options": { "ell": 1, "depthPositive": "auto", "maxLexDegree": null, "levels": [1, 2] }
//! }
//! ```
//!
//! Ideal kinds: `completeIntersection {degrees}`, `powers {c, a}`,
//! `cyclicPolytope {d}`, `lexOf {source}`, `explicit {generators}` with each
//! generator an exponent vector. Integers may be given as numbers or decimal
//! strings.

use serde::{Deserialize, Serialize};

use crate::analysis::{DepthPositive, Options};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::monomials::MonomialIdeal;

pub const FORMAT_VERSION: &str = "1";

/// Read from a number or a decimal string, always written as a string.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
pub enum Int {
    Number(u64),
    Text(#[serde(deserialize_with = "decimal::deserialize")] u64),
}

impl PartialEq for Int {
    fn eq(&self, other: &Self) -> bool {
        self.get() == other.get()
    }
}

impl Eq for Int {}

impl Serialize for Int {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.get().to_string())
    }
}

mod decimal {
    use serde::{Deserialize, Deserializer};

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u64, D::Error> {
        let s = String::deserialize(d)?;
        s.trim().parse().map_err(serde::de::Error::custom)
    }
}

impl Int {
    pub fn get(self) -> u64 {
        match self {
            Self::Number(v) | Self::Text(v) => v,
        }
    }
}

impl From<u64> for Int {
    fn from(v: u64) -> Self {
        Self::Number(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Ring {
    pub vars: Int,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase", deny_unknown_fields)]
pub enum IdealSpec {
    CompleteIntersection { degrees: Vec<Int> },
    Powers { c: Int, a: Int },
    CyclicPolytope { d: Int },
    LexOf { source: Box<IdealSpec> },
    Explicit { generators: Vec<Vec<Int>> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DepthFlag {
    Flag(bool),
    Word(AutoWord),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AutoWord {
    Auto,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SpecOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<Int>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth_positive: Option<DepthFlag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_lex_degree: Option<Int>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<Int>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    pub version: String,
    pub ring: Ring,
    pub ideal: IdealSpec,
    #[serde(default)]
    pub options: SpecOptions,
}

fn small(v: Int, what: &str) -> Result<u32> {
    u32::try_from(v.get()).map_err(|_| Error::InvalidSpec(format!("{what} {} too large", v.get())))
}

impl InputSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: Self =
            serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    /// Accept either a spec or a report/failure dump that echoes one under `input`.
    pub fn from_json_or_report(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        let inner = match value.get("input") {
            Some(input) => input.clone(),
            None => value,
        };
        let spec: Self =
            serde_json::from_value(inner).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("spec serializes")
    }

    pub fn validate(&self) -> Result<()> {
        if self.version != FORMAT_VERSION {
            return Err(Error::InvalidSpec(format!(
                "unsupported version {:?}, expected {FORMAT_VERSION:?}",
                self.version
            )));
        }
        if self.ring.vars.get() == 0 {
            return Err(Error::InvalidSpec("ring.vars must be at least 1".into()));
        }
        if self.options.ell.is_some_and(|e| e.get() == 0) {
            return Err(Error::InvalidSpec("options.ell must be at least 1".into()));
        }
        self.family()?.validate()
    }

    pub fn nvars(&self) -> usize {
        self.ring.vars.get() as usize
    }

    pub fn family(&self) -> Result<FamilySpec> {
        let max_degree = self
            .options
            .max_lex_degree
            .map(|m| small(m, "maxLexDegree"))
            .transpose()?;
        build_family(&self.ideal, self.nvars(), max_degree)
    }

    pub fn options(&self) -> Result<Options> {
        Ok(Options {
            ell: self.options.ell.map_or(1, Int::get),
            depth_positive: match self.options.depth_positive {
                None | Some(DepthFlag::Word(AutoWord::Auto)) => DepthPositive::Auto,
                Some(DepthFlag::Flag(true)) => DepthPositive::Yes,
                Some(DepthFlag::Flag(false)) => DepthPositive::No,
            },
            levels: self
                .options
                .levels
                .as_ref()
                .map(|l| l.iter().map(|p| p.get() as usize).collect()),
        })
    }

    /// Spec for an explicit monomial ideal.
    pub fn explicit(ideal: &MonomialIdeal) -> Self {
        Self {
            version: FORMAT_VERSION.into(),
            ring: Ring {
                vars: (ideal.nvars() as u64).into(),
            },
            ideal: IdealSpec::Explicit {
                generators: ideal
                    .generators()
                    .iter()
                    .map(|g| g.exponents().iter().map(|&e| u64::from(e).into()).collect())
                    .collect(),
            },
            options: SpecOptions::default(),
        }
    }
}

fn build_family(ideal: &IdealSpec, n: usize, max_degree: Option<u32>) -> Result<FamilySpec> {
    Ok(match ideal {
        IdealSpec::CompleteIntersection { degrees } => FamilySpec::CompleteIntersection {
            nvars: n,
            degrees: degrees
                .iter()
                .map(|&d| small(d, "degree"))
                .collect::<Result<_>>()?,
        },
        IdealSpec::Powers { c, a } => FamilySpec::Powers {
            nvars: n,
            c: c.get() as usize,
            a: small(*a, "a")?,
        },
        IdealSpec::CyclicPolytope { d } => FamilySpec::CyclicPolytope {
            nvars: n,
            dim: d.get() as usize,
        },
        IdealSpec::LexOf { source } => FamilySpec::LexOf {
            source: Box::new(build_family(source, n, max_degree)?),
            max_degree,
        },
        IdealSpec::Explicit { generators } => {
            let gens = generators
                .iter()
                .map(|g| {
                    if g.len() != n {
                        return Err(Error::InvalidSpec(format!(
                            "generator has {} exponents, ring has {n} variables",
                            g.len()
                        )));
                    }
                    g.iter().map(|&e| small(e, "exponent")).collect()
                })
                .collect::<Result<Vec<Vec<u32>>>>()?;
            FamilySpec::Explicit(
                MonomialIdeal::from_exponents(n, &gens).map_err(|e| match e {
                    Error::UnitIdeal => Error::InvalidSpec(
                        "a degree-0 generator makes the ideal the unit ideal".into(),
                    ),
                    other => other,
                })?,
            )
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        let ci = r#"{"version":"1","ring":{"vars":3},"ideal":{"kind":"completeIntersection","degrees":[2]}}"#;
        let spec = InputSpec::from_json(ci).unwrap();
        assert_eq!(
            spec.family().unwrap(),
            FamilySpec::CompleteIntersection {
                nvars: 3,
                degrees: vec![2]
            }
        );
        let powers =
            r#"{"version":"1","ring":{"vars":"3"},"ideal":{"kind":"powers","c":2,"a":"1"}}"#;
        assert_eq!(
            InputSpec::from_json(powers).unwrap().family().unwrap(),
            FamilySpec::Powers {
                nvars: 3,
                c: 2,
                a: 1
            }
        );
        let lex = r#"{"version":"1","ring":{"vars":4},
            "ideal":{"kind":"lexOf","source":{"kind":"completeIntersection","degrees":[2,2]}},
            "options":{"maxLexDegree":7,"depthPositive":"auto","ell":1,"levels":[1]}}"#;
        let spec = InputSpec::from_json(lex).unwrap();
        assert!(matches!(
            spec.family().unwrap(),
            FamilySpec::LexOf {
                max_degree: Some(7),
                ..
            }
        ));
        assert_eq!(spec.options().unwrap().levels, Some(vec![1]));
        let explicit = r#"{"version":"1","ring":{"vars":2},"ideal":{"kind":"explicit","generators":[[2,0],[1,1]]},"options":{"depthPositive":false}}"#;
        let spec = InputSpec::from_json(explicit).unwrap();
        assert_eq!(spec.options().unwrap().depth_positive, DepthPositive::No);
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            r#"{"version":"2","ring":{"vars":3},"ideal":{"kind":"powers","c":2,"a":1}}"#,
            r#"{"version":"1","ring":{"vars":0},"ideal":{"kind":"powers","c":2,"a":1}}"#,
            r#"{"version":"1","ring":{"vars":3},"ideal":{"kind":"powers","c":4,"a":1}}"#,
            r#"{"version":"1","ring":{"vars":2},"ideal":{"kind":"explicit","generators":[[1,0,0]]}}"#,
            r#"{"version":"1","ring":{"vars":2},"ideal":{"kind":"explicit","generators":[[0,0]]}}"#,
            r#"{"version":"1","ring":{"vars":2},"ideal":{"kind":"circle"}}"#,
            r#"{"version":"1","ring":{"vars":2},"ideal":{"kind":"powers","c":1,"a":1},"options":{"ell":0}}"#,
            r#"{"version":"1","ring":{"vars":2},"ideal":{"kind":"powers","c":1,"a":1},"options":{"depthPositive":"maybe"}}"#,
            "not json",
        ] {
            assert!(
                matches!(InputSpec::from_json(bad), Err(Error::InvalidSpec(_))),
                "{bad}"
            );
        }
        let too_many = r#"{"version":"1","ring":{"vars":1},"ideal":{"kind":"completeIntersection","degrees":[2,2]}}"#;
        assert!(matches!(
            InputSpec::from_json(too_many),
            Err(Error::TooManyForms { .. })
        ));
    }

    #[test]
    fn explicit_round_trip() {
        let ideal = MonomialIdeal::from_exponents(3, &[vec![2, 0, 0], vec![0, 1, 1]]).unwrap();
        let spec = InputSpec::explicit(&ideal);
        let text = serde_json::to_string(&spec).unwrap();
        let back = InputSpec::from_json(&text).unwrap();
        assert_eq!(back.family().unwrap(), FamilySpec::Explicit(ideal));
    }
}

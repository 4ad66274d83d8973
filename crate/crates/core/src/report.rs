//! Canonical JSON reports.
//!
//! Object keys are sorted and every integer is written as a decimal string,
//! rationals as `"n/d"`. Two runs on the same input give byte-identical text.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::analysis::{Analysis, Status};
use crate::input::{InputSpec, FORMAT_VERSION};
use crate::monomials::MonomialIdeal;
use crate::polyseries::IntPoly;
use crate::sweep::{Failure, SweepSummary, GENERATOR_ID};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

fn int(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

fn ints<T: std::fmt::Display>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

fn rational(r: &BigRational) -> Value {
    if r.is_integer() {
        int(r.numer())
    } else {
        Value::String(format!("{}/{}", r.numer(), r.denom()))
    }
}

fn poly(p: &IntPoly) -> Value {
    ints(p.coeffs())
}

fn opt<T>(x: &Option<T>, f: impl FnOnce(&T) -> Value) -> Value {
    x.as_ref().map_or(Value::Null, f)
}

fn ideal_value(ideal: &MonomialIdeal) -> Value {
    json!({
        "nvars": int(ideal.nvars()),
        "generators": ideal
            .generators()
            .iter()
            .map(|g| ints(g.exponents()))
            .collect::<Vec<_>>(),
        "text": ideal.to_string(),
    })
}

fn level_map(levels: &[(usize, BigInt)]) -> Value {
    let mut m = Map::new();
    for (p, b) in levels {
        m.insert(p.to_string(), int(b));
    }
    Value::Object(m)
}

pub fn analysis_value(a: &Analysis) -> Value {
    let mut root = Map::new();
    root.insert("version".into(), Value::String(FORMAT_VERSION.into()));
    root.insert(
        "hilbert".into(),
        json!({
            "numerator": poly(&a.series.numerator),
            "reducedNumerator": poly(&a.reduced.q),
            "d": int(a.reduced.dim),
            "c": int(a.nvars - a.reduced.dim),
            "postulation": int(a.postulation),
            "hValues": ints(&a.h_values),
        }),
    );
    root.insert("ideal".into(), opt(&a.ideal, ideal_value));
    root.insert(
        "depthPositive".into(),
        opt(&a.depth_positive, |b| Value::Bool(*b)),
    );
    root.insert(
        "oracle".into(),
        match &a.oracle {
            Some(o) => json!({
                "reg": int(o.reg),
                "reg1": int(o.reg1),
                "method": o.method.as_str(),
            }),
            None => Value::String("none".into()),
        },
    );
    match &a.invariants {
        None => {
            root.insert("coefficients".into(), Value::Null);
            root.insert("gotzmann".into(), Value::Null);
            root.insert("bounds".into(), json!({ "error": "DimensionZero" }));
        }
        Some(inv) => {
            root.insert(
                "coefficients".into(),
                json!({
                    "e": ints(&inv.e.e),
                    "eS": ints(&inv.es.e),
                    "ell": int(inv.e.ell),
                    "polynomial": inv.polynomial.coeffs().iter().map(rational).collect::<Vec<_>>(),
                }),
            );
            let g = &inv.gotzmann;
            root.insert(
                "gotzmann".into(),
                json!({
                    "B": ints(g.b()),
                    "cRuns": g.runs().iter().map(|(v, k)| json!([int(v), int(k)])).collect::<Vec<_>>(),
                    "s": int(g.s()),
                    "verified": inv.decomposition_verified,
                    "keyLemma": inv.key_lemma,
                }),
            );
            let b = &inv.bounds;
            root.insert(
                "bounds".into(),
                json!({
                    "dim": int(b.dim),
                    "codim": int(b.codim),
                    "ell": int(b.ell),
                    "xi": ints(&b.xi),
                    "theoremA": level_map(&b.theorem_a),
                    "blancafort": level_map(&b.blancafort),
                    "theoremB": {
                        "general": int(&b.theorem_b.general),
                        "depthPositive": opt(&b.theorem_b.depth_positive, |x| int(x)),
                    },
                    "corollaryC": b.corollary_c.iter().map(|c| json!({
                        "index": int(c.index),
                        "lhs": int(&c.lhs),
                        "rhs": rational(&c.rhs),
                        "holds": c.holds,
                    })).collect::<Vec<_>>(),
                    "propDLower": opt(&b.lower_roots, |x| int(x)),
                    "binomialLower": opt(&b.lower_binomial, |x| int(x)),
                    "lowerWindow": opt(&b.lower_window, |x| Value::Bool(*x)),
                    "propD1": opt(&b.d1, |d| json!({
                        "holds": d.holds,
                        "equality": d.is_equality,
                        "extremalNumerator": poly(&d.extremal.q),
                        "matchesExtremal": d.matches_extremal,
                    })),
                    "coefficientGrowth": opt(&b.coefficient_growth, |x| Value::Bool(*x)),
                    "question": opt(&b.question, |q| json!({
                        "depth": int(q.depth),
                        "regularity": q.regularity,
                        "coefficients": q.coefficients,
                    })),
                }),
            );
        }
    }
    root.insert(
        "verdicts".into(),
        Value::Array(
            a.verdicts
                .iter()
                .map(|v| {
                    json!({
                        "claim": v.claim,
                        "status": v.status.as_str(),
                        "detail": v.detail,
                    })
                })
                .collect(),
        ),
    );
    let count = |s: Status| a.verdicts.iter().filter(|v| v.status == s).count();
    root.insert(
        "summary".into(),
        json!({
            "pass": int(count(Status::Pass)),
            "fail": int(count(Status::Fail)),
            "noOracle": int(count(Status::NoOracle)),
            "sharpness": opt(&a.sharpness(), rational),
        }),
    );
    Value::Object(root)
}

/// Full report for an input document.
pub fn report_value(spec: &InputSpec, a: &Analysis) -> Value {
    let mut v = analysis_value(a);
    v.as_object_mut()
        .expect("object")
        .insert("input".into(), spec.to_value());
    v
}

/// Canonical text: sorted keys, two-space indent, trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(&sort_keys(v)).expect("value serializes");
    s.push('\n');
    s
}

fn sort_keys(v: &Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut entries: Vec<_> = m.iter().collect();
            entries.sort_by(|a, b| a.0.cmp(b.0));
            Value::Object(
                entries
                    .into_iter()
                    .map(|(k, v)| (k.clone(), sort_keys(v)))
                    .collect(),
            )
        }
        Value::Array(xs) => Value::Array(xs.iter().map(sort_keys).collect()),
        other => other.clone(),
    }
}

pub fn exit_code(a: &Analysis) -> i32 {
    if a.failures().any(|v| v.is_internal()) {
        EXIT_INTERNAL
    } else if a.failures().next().is_some() {
        EXIT_VERDICT_FAILED
    } else {
        EXIT_OK
    }
}

/// A replayable failure: the report schema plus the generator state.
pub fn failure_dump(summary: &SweepSummary, f: &Failure) -> Value {
    let spec = InputSpec::explicit(&f.ideal);
    let mut v = match &f.analysis {
        Some(a) => report_value(&spec, a),
        None => json!({ "version": FORMAT_VERSION, "input": spec.to_value() }),
    };
    let c = &summary.config;
    let obj = v.as_object_mut().expect("object");
    obj.insert(
        "seedState".into(),
        json!({
            "generator": GENERATOR_ID,
            "seed": int(c.seed),
            "stream": int(f.index),
            "nMin": int(c.n_min),
            "nMax": int(c.n_max),
            "maxDeg": int(c.max_gen_degree),
            "maxGens": int(c.max_gens),
            "stableOnly": c.stable_only,
        }),
    );
    obj.insert(
        "failure".into(),
        json!({ "claim": f.claim, "detail": f.detail }),
    );
    v
}

pub fn sweep_value(s: &SweepSummary) -> Value {
    let c = &s.config;
    let mut checks = Map::new();
    for (name, t) in &s.checks {
        checks.insert(
            name.clone(),
            json!({
                "pass": int(t.pass),
                "fail": int(t.fail),
                "noOracle": int(t.no_oracle),
            }),
        );
    }
    json!({
        "version": FORMAT_VERSION,
        "config": {
            "generator": GENERATOR_ID,
            "seed": int(c.seed),
            "count": int(c.count),
            "nMin": int(c.n_min),
            "nMax": int(c.n_max),
            "maxDeg": int(c.max_gen_degree),
            "maxGens": int(c.max_gens),
            "stableOnly": c.stable_only,
        },
        "instances": int(s.instances),
        "withOracle": int(s.with_oracle),
        "checks": Value::Object(checks),
        "sharpness": opt(&s.max_sharpness, |(r, i)| json!({
            "max": rational(r),
            "instance": int(i),
        })),
        "question": {
            "evaluated": int(s.question.evaluated),
            "regularity": int(s.question.regularity_true),
            "coefficients": int(s.question.coefficients_true),
        },
        "failures": s.failures.iter().map(|f| json!({
            "index": int(f.index),
            "claim": f.claim,
            "detail": f.detail,
            "ideal": f.ideal.to_string(),
        })).collect::<Vec<_>>(),
    })
}

pub fn sweep_exit_code(s: &SweepSummary) -> i32 {
    let internal = s
        .failures
        .iter()
        .any(|f| f.claim == "admissibility" || f.claim == "gotzmann.roundTrip");
    if internal {
        EXIT_INTERNAL
    } else if !s.failures.is_empty() {
        EXIT_VERDICT_FAILED
    } else {
        EXIT_OK
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{analyze_family, Options};

    fn report(text: &str) -> String {
        let spec = InputSpec::from_json(text).unwrap();
        let a = analyze_family(&spec.family().unwrap(), &spec.options().unwrap()).unwrap();
        to_canonical_string(&report_value(&spec, &a))
    }

    #[test]
    fn deterministic_and_sorted() {
        let text = r#"{"version":"1","ring":{"vars":4},"ideal":{"kind":"cyclicPolytope","d":2}}"#;
        let a = report(text);
        assert_eq!(a, report(text));
        let v: Value = serde_json::from_str(&a).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(v["coefficients"]["e"], json!(["6", "8"]));
        assert_eq!(v["gotzmann"]["s"], json!("13"));
        assert_eq!(v["bounds"]["theoremA"]["1"], json!("79"));
        assert_eq!(v["oracle"]["reg"], json!("2"));
    }

    #[test]
    fn dimension_zero_marks_bounds() {
        let text = r#"{"version":"1","ring":{"vars":2},"ideal":{"kind":"powers","c":2,"a":1}}"#;
        let v: Value = serde_json::from_str(&report(text)).unwrap();
        assert_eq!(v["bounds"]["error"], json!("DimensionZero"));
        assert_eq!(v["verdicts"], json!([]));
    }

    #[test]
    fn report_replays_as_input() {
        let text = r#"{"version":"1","ring":{"vars":3},"ideal":{"kind":"completeIntersection","degrees":[2]}}"#;
        let out = report(text);
        let spec = InputSpec::from_json_or_report(&out).unwrap();
        assert_eq!(spec, InputSpec::from_json(text).unwrap());
    }

    #[test]
    fn exit_codes() {
        let spec = InputSpec::from_json(
            r#"{"version":"1","ring":{"vars":3},"ideal":{"kind":"completeIntersection","degrees":[2]}}"#,
        )
        .unwrap();
        let a = analyze_family(&spec.family().unwrap(), &Options::default()).unwrap();
        assert_eq!(exit_code(&a), EXIT_OK);
        let mut broken = a.clone();
        broken.verdicts[1].status = Status::Fail;
        assert_eq!(exit_code(&broken), EXIT_VERDICT_FAILED);
        broken.verdicts[0].status = Status::Fail;
        assert_eq!(exit_code(&broken), EXIT_INTERNAL);
    }
}

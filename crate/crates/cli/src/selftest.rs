use regbound::analysis::analyze_family;
use regbound::exec::Execution;
use regbound::input::InputSpec;
use regbound::monomials::PivotStrategy;
use regbound::report::{report_value, to_canonical_string};
use regbound::sweep::{generate_batch, sweep, SweepConfig};
use serde_json::{json, Value};

const FIXTURES: [(&str, &str); 4] = [
    ("quadric", include_str!("../../../fixtures/quadric.json")),
    (
        "cyclic_polytope",
        include_str!("../../../fixtures/cyclic_polytope.json"),
    ),
    ("powers", include_str!("../../../fixtures/powers.json")),
    ("lex_ci22", include_str!("../../../fixtures/lex_ci22.json")),
];

fn expectations(name: &str) -> Vec<(&'static str, Value)> {
    match name {
        "quadric" => vec![
            ("/coefficients/e", json!(["2", "1"])),
            ("/gotzmann/B", json!(["2", "2"])),
            ("/gotzmann/cRuns", json!([["1", "2"]])),
            ("/bounds/blancafort/1", json!("1")),
            ("/bounds/theoremA/1", json!("7")),
            ("/oracle/reg", json!("1")),
        ],
        "cyclic_polytope" => vec![
            ("/coefficients/e", json!(["6", "8"])),
            ("/gotzmann/s", json!("13")),
            ("/bounds/theoremA/1", json!("79")),
            ("/bounds/propDLower", json!("2")),
            ("/bounds/propD1/equality", json!(true)),
            ("/bounds/propD1/matchesExtremal", json!(true)),
            ("/oracle/reg", json!("2")),
        ],
        "powers" => vec![
            ("/coefficients/e/0", json!("3")),
            ("/bounds/binomialLower", json!("1")),
            ("/bounds/propD1/equality", json!(true)),
            ("/oracle/reg", json!("1")),
            ("/oracle/method", json!("eliahouKervaire")),
        ],
        "lex_ci22" => vec![
            ("/bounds/blancafort/1", json!("5")),
            ("/bounds/theoremA/1", json!("23")),
        ],
        _ => Vec::new(),
    }
}

struct Tally {
    ok: usize,
    bad: usize,
}

impl Tally {
    fn check(&mut self, ok: bool, what: &str) {
        if ok {
            self.ok += 1;
            println!("ok    {what}");
        } else {
            self.bad += 1;
            println!("FAIL  {what}");
        }
    }
}

fn fixture(t: &mut Tally, name: &str, text: &str) {
    let spec = match InputSpec::from_json(text) {
        Ok(s) => s,
        Err(e) => return t.check(false, &format!("{name}: parse: {e}")),
    };
    let analysis = match spec
        .family()
        .and_then(|f| analyze_family(&f, &spec.options()?))
    {
        Ok(a) => a,
        Err(e) => return t.check(false, &format!("{name}: analyze: {e}")),
    };
    let report = report_value(&spec, &analysis);
    for (pointer, want) in expectations(name) {
        let got = report.pointer(pointer).cloned().unwrap_or(Value::Null);
        t.check(got == want, &format!("{name}: {pointer} = {want}"));
    }
    t.check(analysis.all_pass(), &format!("{name}: all verdicts pass"));
    if let Some(oracle) = analysis.oracle {
        if name == "lex_ci22" {
            t.check(
                oracle.reg1 <= 5,
                &format!("{name}: reg^1 {} <= 5", oracle.reg1),
            );
        }
    }
    let again = to_canonical_string(&report_value(&spec, &analysis));
    t.check(
        again == to_canonical_string(&report),
        &format!("{name}: report is canonical"),
    );
}

fn series_properties(t: &mut Tally) {
    let config = SweepConfig {
        seed: 5,
        count: 30,
        n_min: 2,
        n_max: 4,
        max_gen_degree: 5,
        max_gens: 6,
        stable_only: false,
    };
    let ideals = generate_batch(&config, Execution::Parallel);
    let counts_agree = ideals.iter().all(|i| {
        let hs = i.hilbert_series();
        (0..=8u32).all(|k| {
            regbound::polyseries::series_coefficient(&hs, u64::from(k))
                == i.count_standard_monomials(k)
        })
    });
    t.check(counts_agree, "series matches monomial counts for t <= 8");
    let pivots_agree = ideals.iter().all(|i| {
        i.numerator_with(PivotStrategy::MostFrequentMedian)
            == i.numerator_with(PivotStrategy::FirstSharedLinear)
    });
    t.check(pivots_agree, "numerator independent of pivot strategy");
}

fn sweep_properties(t: &mut Tally) {
    for stable_only in [false, true] {
        let config = SweepConfig {
            count: 100,
            stable_only,
            ..SweepConfig::default()
        };
        let s = sweep(&config, Execution::Parallel);
        t.check(
            s.passed(),
            &format!(
                "sweep seed {} count {}{}: {} failures",
                config.seed,
                config.count,
                if stable_only { " stable" } else { "" },
                s.failures.len()
            ),
        );
    }
}

/// Exit code 0 when every check passes, 1 otherwise.
pub fn run() -> i32 {
    let mut t = Tally { ok: 0, bad: 0 };
    for (name, text) in FIXTURES {
        fixture(&mut t, name, text);
    }
    series_properties(&mut t);
    sweep_properties(&mut t);
    println!("{} passed, {} failed", t.ok, t.bad);
    i32::from(t.bad > 0)
}

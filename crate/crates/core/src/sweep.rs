//! Seeded random monomial ideals and the sweep that checks every
//! theorem-backed inequality on them.
//!
//! Instance `i` of a sweep with seed `s` draws from a ChaCha8 generator seeded
//! with `s` on stream `i`, so batches are identical whether evaluated
//! sequentially or in parallel.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analysis::{analyze_ideal, Analysis, Options, Status};
use crate::combinat::{monomials_of_degree, Monomial};
use crate::error::Error;
use crate::exec::{map_indices, Execution};
use crate::families::strongly_stable_closure;
use crate::monomials::MonomialIdeal;

/// Identifier of the pseudo-random scheme; recorded in every dump.
pub const GENERATOR_ID: &str = "chacha8-seed_from_u64-stream_per_instance";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub seed: u64,
    pub count: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub max_gen_degree: u32,
    pub max_gens: usize,
    /// Replace each sampled ideal by its strongly stable closure so that the
    /// regularity oracle applies to every instance.
    pub stable_only: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            seed: 7,
            count: 100,
            n_min: 2,
            n_max: 4,
            max_gen_degree: 5,
            max_gens: 6,
            stable_only: false,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Error::InvalidSpec(format!(
                "need 1 <= n-min <= n-max, got {}..{}",
                self.n_min, self.n_max
            )));
        }
        if self.max_gen_degree == 0 || self.max_gens == 0 {
            return Err(Error::InvalidSpec(
                "max-deg and max-gens must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// The random stream for instance `index`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Draw generators uniformly among monomials of degree `1..=max_gen_degree`,
/// minimalize, and redraw until `R/I` has positive dimension.
pub fn random_monomial_ideal(rng: &mut ChaCha8Rng, config: &SweepConfig) -> MonomialIdeal {
    loop {
        let n = rng.gen_range(config.n_min..=config.n_max);
        let pool: Vec<Monomial> = (1..=config.max_gen_degree)
            .flat_map(|m| monomials_of_degree(n, m))
            .collect();
        let k = rng.gen_range(1..=config.max_gens);
        let gens = (0..k)
            .map(|_| pool[rng.gen_range(0..pool.len())].clone())
            .collect();
        let mut ideal = MonomialIdeal::minimalize(n, gens).expect("positive-degree generators");
        if config.stable_only {
            ideal = strongly_stable_closure(&ideal);
        }
        if ideal.dimension().is_ok_and(|d| d >= 1) {
            return ideal;
        }
    }
}

pub fn instance(config: &SweepConfig, index: u64) -> MonomialIdeal {
    random_monomial_ideal(&mut instance_rng(config.seed, index), config)
}

pub fn generate_batch(config: &SweepConfig, exec: Execution) -> Vec<MonomialIdeal> {
    map_indices(config.count, exec, |i| instance(config, i))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub index: u64,
    pub ideal: MonomialIdeal,
    pub claim: String,
    pub detail: String,
    pub analysis: Option<Box<Analysis>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub pass: u64,
    pub fail: u64,
    pub no_oracle: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QuestionTally {
    pub evaluated: u64,
    pub regularity_true: u64,
    pub coefficients_true: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub config: SweepConfig,
    pub instances: u64,
    pub with_oracle: u64,
    pub checks: BTreeMap<String, CheckTally>,
    /// Largest `(reg^1 + 2) / (theorem A bound + 2)` and the instance attaining it.
    pub max_sharpness: Option<(BigRational, u64)>,
    pub question: QuestionTally,
    pub failures: Vec<Failure>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn tally(&self, check: &str) -> CheckTally {
        self.checks.get(check).cloned().unwrap_or_default()
    }
}

/// `corollaryC.i2` -> `corollaryC`, `theoremA.p1` -> `theoremA`.
fn check_family(claim: &str) -> &str {
    if let Some((head, tail)) = claim.rsplit_once('.') {
        let mut chars = tail.chars();
        if matches!(chars.next(), Some('i' | 'p'))
            && !chars.as_str().is_empty()
            && chars.all(|c| c.is_ascii_digit())
        {
            return head;
        }
    }
    claim
}

enum Outcome {
    Analyzed(Box<Analysis>),
    Errored(MonomialIdeal, Error),
}

pub fn sweep(config: &SweepConfig, exec: Execution) -> SweepSummary {
    let outcomes = map_indices(config.count, exec, |i| {
        let ideal = instance(config, i);
        match analyze_ideal(&ideal, &Options::default()) {
            Ok(a) => Outcome::Analyzed(Box::new(a)),
            Err(e) => Outcome::Errored(ideal, e),
        }
    });

    let mut summary = SweepSummary {
        config: config.clone(),
        instances: config.count,
        with_oracle: 0,
        checks: BTreeMap::new(),
        max_sharpness: None,
        question: QuestionTally::default(),
        failures: Vec::new(),
    };
    for (index, outcome) in (0u64..).zip(outcomes) {
        let analysis = match outcome {
            Outcome::Analyzed(a) => a,
            Outcome::Errored(ideal, err) => {
                summary
                    .checks
                    .entry("admissibility".into())
                    .or_default()
                    .fail += 1;
                summary.failures.push(Failure {
                    index,
                    ideal,
                    claim: "admissibility".into(),
                    detail: err.to_string(),
                    analysis: None,
                });
                continue;
            }
        };
        summary
            .checks
            .entry("admissibility".into())
            .or_default()
            .pass += 1;
        if analysis.oracle.is_some() {
            summary.with_oracle += 1;
        }
        // per-instance tallies: one entry per check family
        let mut per_family: BTreeMap<&str, Status> = BTreeMap::new();
        for v in &analysis.verdicts {
            let fam = check_family(&v.claim);
            let slot = per_family.entry(fam).or_insert(v.status);
            if v.status == Status::Fail {
                *slot = Status::Fail;
            }
        }
        for (fam, status) in per_family {
            let t = summary.checks.entry(fam.to_string()).or_default();
            match status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::NoOracle => t.no_oracle += 1,
            }
        }
        if let Some(ratio) = analysis.sharpness() {
            let better = summary
                .max_sharpness
                .as_ref()
                .is_none_or(|(best, _)| ratio > *best);
            if better {
                summary.max_sharpness = Some((ratio, index));
            }
        }
        if let Some(q) = analysis
            .invariants
            .as_ref()
            .and_then(|inv| inv.bounds.question.as_ref())
        {
            summary.question.evaluated += 1;
            summary.question.regularity_true += u64::from(q.regularity);
            summary.question.coefficients_true += u64::from(q.coefficients);
        }
        for v in analysis.failures() {
            summary.failures.push(Failure {
                index,
                ideal: analysis
                    .ideal
                    .clone()
                    .expect("sweep instances are monomial"),
                claim: v.claim.clone(),
                detail: v.detail.clone(),
                analysis: Some(analysis.clone()),
            });
        }
    }
    summary
}

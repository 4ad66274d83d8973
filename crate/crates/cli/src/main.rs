use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use regbound::analysis::{analyze_family, Analysis};
use regbound::exec::Execution;
use regbound::families::{generators_by_degree, lexify, FamilySpec};
use regbound::input::{InputSpec, Int};
use regbound::report::{
    exit_code, failure_dump, report_value, sweep_exit_code, sweep_value, to_canonical_string,
    EXIT_INTERNAL, EXIT_INVALID_INPUT,
};
use regbound::sweep::{sweep, SweepConfig, SweepSummary};
use regbound::Error;

mod selftest;

#[derive(Parser)]
#[command(
    name = "regbound",
    version,
    about = "Hilbert coefficients and regularity bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one input document (a report or failure dump is also accepted).
    Analyze {
        spec: PathBuf,
        /// Write the canonical JSON report here; `-` for stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Levels p for the per-level bounds, e.g. `1,2`.
        #[arg(long, value_delimiter = ',')]
        levels: Option<Vec<u64>>,
        #[arg(long)]
        max_lex_degree: Option<u64>,
    },
    /// Print the minimal generators of the lex ideal, by degree.
    Lexify {
        spec: PathBuf,
        #[arg(long)]
        max_lex_degree: Option<u64>,
    },
    /// Check every bound on seeded random monomial ideals.
    Sweep {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 5)]
        max_deg: u32,
        #[arg(long, default_value_t = 6)]
        max_gens: usize,
        /// Use the strongly stable closure of each sampled ideal.
        #[arg(long)]
        stable_only: bool,
        /// Evaluate on one thread.
        #[arg(long)]
        sequential: bool,
        /// Write the summary as canonical JSON.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Directory for one replayable dump per failure.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
    },
    /// Run the shipped fixtures and the property checks.
    Selftest,
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(match err {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_INVALID_INPUT,
    } as u8)
}

fn read_spec(path: &Path) -> Result<InputSpec, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))?;
    InputSpec::from_json_or_report(&text)
}

fn write_out(path: &Path, text: &str) -> Result<(), Error> {
    if path == Path::new("-") {
        print!("{text}");
        return Ok(());
    }
    fs::write(path, text).map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn print_analysis(a: &Analysis) {
    let d = a.dim();
    println!(
        "n = {}  d = {}  c = {}  postulation = {}",
        a.nvars,
        d,
        a.nvars - d,
        a.postulation
    );
    println!("numerator  {}", a.series.numerator);
    println!("reduced    {}  over (1 - z)^{d}", a.reduced.q);
    println!("h          {}", join(&a.h_values));
    if let Some(ideal) = &a.ideal {
        println!("ideal      {ideal}");
    }
    match &a.oracle {
        Some(o) => println!(
            "oracle     reg = {}  reg^1 = {}  ({})",
            o.reg,
            o.reg1,
            o.method.as_str()
        ),
        None => println!("oracle     none"),
    }
    let Some(inv) = &a.invariants else {
        println!("bounds     dimension zero, none apply");
        return;
    };
    println!("polynomial {}", inv.polynomial);
    println!("e          {}", join(&inv.e.e));
    println!("eS         {}", join(&inv.es.e));
    println!("B          {}", join(inv.gotzmann.b()));
    let runs: Vec<String> = inv
        .gotzmann
        .runs()
        .iter()
        .map(|(v, k)| format!("{v}^{k}"))
        .collect();
    println!("c runs     {}  s = {}", runs.join(" "), inv.gotzmann.s());
    let b = &inv.bounds;
    println!();
    println!("{:>4}  {:>24}  {:>24}", "p", "theorem A", "Blancafort");
    for ((p, ta), (_, bl)) in b.theorem_a.iter().zip(&b.blancafort) {
        println!("{p:>4}  {ta:>24}  {bl:>24}");
    }
    println!();
    println!("theorem B  general {}", b.theorem_b.general);
    if let Some(dp) = &b.theorem_b.depth_positive {
        println!("theorem B  depth > 0 {dp}");
    }
    if let (Some(r), Some(l)) = (&b.lower_roots, &b.lower_binomial) {
        println!("lower      {r} (roots)  {l} (binomial)");
    }
    if let Some(d1) = &b.d1 {
        println!(
            "D1         holds {}  equality {}  extremal {}",
            d1.holds, d1.is_equality, d1.matches_extremal
        );
    }
    if let Some(r) = a.sharpness() {
        println!("sharpness  {r}");
    }
    println!();
    for v in &a.verdicts {
        println!("{:<9} {:<24} {}", v.status.as_str(), v.claim, v.detail);
    }
}

fn run_analyze(
    path: &Path,
    report: Option<&Path>,
    levels: Option<Vec<u64>>,
    max_lex_degree: Option<u64>,
) -> Result<i32, Error> {
    let mut spec = read_spec(path)?;
    if let Some(l) = levels {
        spec.options.levels = Some(l.into_iter().map(Int::from).collect());
    }
    if let Some(m) = max_lex_degree {
        spec.options.max_lex_degree = Some(m.into());
    }
    spec.validate()?;
    let analysis = analyze_family(&spec.family()?, &spec.options()?)?;
    let text = to_canonical_string(&report_value(&spec, &analysis));
    match report {
        Some(p) if p == Path::new("-") => print!("{text}"),
        Some(p) => {
            write_out(p, &text)?;
            print_analysis(&analysis);
        }
        None => print_analysis(&analysis),
    }
    Ok(exit_code(&analysis))
}

fn run_lexify(path: &Path, max_lex_degree: Option<u64>) -> Result<i32, Error> {
    let mut spec = read_spec(path)?;
    if let Some(m) = max_lex_degree {
        spec.options.max_lex_degree = Some(m.into());
    }
    let (source, max_degree) = match spec.family()? {
        FamilySpec::LexOf { source, max_degree } => (*source, max_degree),
        other => (
            other,
            spec.options
                .max_lex_degree
                .map(|m| u32::try_from(m.get()))
                .transpose()
                .map_err(|_| Error::InvalidSpec("maxLexDegree too large".into()))?,
        ),
    };
    let ideal = lexify(&source, max_degree)?;
    for (deg, gens) in generators_by_degree(&ideal) {
        let list: Vec<String> = gens.iter().map(ToString::to_string).collect();
        println!("degree {deg}: {}", list.join(", "));
    }
    Ok(0)
}

fn print_sweep(s: &SweepSummary) {
    let c = &s.config;
    println!(
        "seed {}  instances {}  n {}..{}  max degree {}  max gens {}{}",
        c.seed,
        s.instances,
        c.n_min,
        c.n_max,
        c.max_gen_degree,
        c.max_gens,
        if c.stable_only { "  stable only" } else { "" }
    );
    println!("with oracle {}", s.with_oracle);
    println!();
    println!(
        "{:<24} {:>8} {:>8} {:>10}",
        "check", "pass", "fail", "no-oracle"
    );
    for (name, t) in &s.checks {
        println!("{name:<24} {:>8} {:>8} {:>10}", t.pass, t.fail, t.no_oracle);
    }
    println!();
    match &s.max_sharpness {
        Some((r, i)) => println!("max (reg^1 + 2) / (theorem A + 2) = {r}  at instance {i}"),
        None => println!("max (reg^1 + 2) / (theorem A + 2) = n/a"),
    }
    println!(
        "question evidence: {} evaluated, regularity holds {}, coefficients hold {}",
        s.question.evaluated, s.question.regularity_true, s.question.coefficients_true
    );
    for f in &s.failures {
        println!("FAIL #{} {} {}: {}", f.index, f.ideal, f.claim, f.detail);
    }
}

fn run_sweep(
    config: SweepConfig,
    sequential: bool,
    report: Option<&Path>,
    dump_dir: Option<&Path>,
) -> Result<i32, Error> {
    config.validate()?;
    let exec = if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let summary = sweep(&config, exec);
    print_sweep(&summary);
    if let Some(p) = report {
        write_out(p, &to_canonical_string(&sweep_value(&summary)))?;
    }
    if let Some(dir) = dump_dir {
        if !summary.failures.is_empty() {
            fs::create_dir_all(dir)
                .map_err(|e| Error::InvalidSpec(format!("{}: {e}", dir.display())))?;
        }
        for (k, f) in summary.failures.iter().enumerate() {
            let path = dir.join(format!("failure-{}-{}-{k}.json", config.seed, f.index));
            write_out(&path, &to_canonical_string(&failure_dump(&summary, f)))?;
        }
    }
    Ok(sweep_exit_code(&summary))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            spec,
            report,
            levels,
            max_lex_degree,
        } => run_analyze(&spec, report.as_deref(), levels, max_lex_degree),
        Command::Lexify {
            spec,
            max_lex_degree,
        } => run_lexify(&spec, max_lex_degree),
        Command::Sweep {
            seed,
            count,
            n_min,
            n_max,
            max_deg,
            max_gens,
            stable_only,
            sequential,
            report,
            dump_dir,
        } => run_sweep(
            SweepConfig {
                seed,
                count,
                n_min,
                n_max,
                max_gen_degree: max_deg,
                max_gens,
                stable_only,
            },
            sequential,
            report.as_deref(),
            dump_dir.as_deref(),
        ),
        Command::Selftest => Ok(selftest::run()),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => fail(&e),
    }
}

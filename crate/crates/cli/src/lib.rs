//! `monogamy` command line: figure tables, lemma grids and bound sweeps.
//!
//! Exit codes: 0 on success, 1 when a claimed inequality fails beyond
//! tolerance, 2 on usage or output errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monogamy_core::verify::{self, exponent_grid, LemmaGrid, LemmaKind, ARITH_SLACK_TOL, STATE_SLACK_TOL};
use monogamy_core::{
    BoundReport, CoeffParams, Direction, EoaConfig, Measure, SweepConfig, SweepMode, SweepResult, VectorSampler,
};
use serde_json::{json, Value};

pub mod output;

pub use output::{emit_report, format_float, Format};
use output::{render, report_row, report_table, write_atomic, Cell, Table, REPORT_COLUMNS};

/// Largest accepted gap between closed-form and first-principles family values.
pub const FAMILY_RESIDUAL_TOL: f64 = 1e-10;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

fn usage(flag: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("invalid {flag}: {e}"))
}

#[derive(Debug, Parser)]
#[command(name = "monogamy", version, about = "Hamming-weight monogamy and polygamy bound checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Concurrence figure table (alpha, y0, y1, y2).
    Fig1(Fig1Args),
    /// Tsallis-2 assistance figure table (beta, z0, z1, z2).
    Fig2(Fig2Args),
    /// Scalar lemma slacks on a parameter grid.
    Lemmas(LemmaArgs),
    /// Concurrence monogamy on Haar-random three-qubit states.
    SweepStates(StatesArgs),
    /// Algebraic bounds on random correlation vectors.
    SweepVectors(VectorArgs),
    /// Closed-form family values against first-principles measures.
    Family(FamilyArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct CoeffArgs {
    #[arg(long)]
    pub k: Option<f64>,
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
}

impl CoeffArgs {
    fn resolve(&self, k: f64, delta: f64, gamma: f64) -> Result<CoeffParams, CliError> {
        let (k, delta, gamma) = (self.k.unwrap_or(k), self.delta.unwrap_or(delta), self.gamma.unwrap_or(gamma));
        CoeffParams::new(k, delta, gamma).map_err(|e| usage("--k/--delta/--gamma", e))
    }
}

#[derive(Debug, Args)]
pub struct Fig1Args {
    #[arg(long, default_value_t = 2.0)]
    pub alpha_min: f64,
    #[arg(long, default_value_t = 5.0)]
    pub alpha_max: f64,
    #[arg(long, default_value_t = 0.05)]
    pub step: f64,
    #[command(flatten)]
    pub coeffs: CoeffArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct Fig2Args {
    #[arg(long, default_value_t = 0.0)]
    pub beta_min: f64,
    #[arg(long, default_value_t = 1.0)]
    pub beta_max: f64,
    #[arg(long, default_value_t = 0.01)]
    pub step: f64,
    #[command(flatten)]
    pub coeffs: CoeffArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridChoice {
    Default,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    #[arg(long, value_enum, default_value = "default")]
    pub grid: GridChoice,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct StatesArgs {
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Comma-separated; defaults to 2,2.5,3,4.
    #[arg(long, value_delimiter = ',')]
    pub exponents: Vec<f64>,
    #[command(flatten)]
    pub coeffs: CoeffArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SamplerArg {
    SortedUniform,
    GeometricChain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Monogamy,
    Polygamy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureArg {
    Concurrence,
    Tsallis2Assist,
}

#[derive(Debug, Args)]
pub struct VectorArgs {
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Vector length N.
    #[arg(long, default_value_t = 4)]
    pub parties: usize,
    #[arg(long, value_enum, default_value = "geometric-chain")]
    pub sampler: SamplerArg,
    #[arg(long, value_enum, default_value = "monogamy")]
    pub direction: DirectionArg,
    /// Comma-separated; defaults to gamma * {1, 1.5, 2, 3} or gamma * {0.25, 0.5, 0.75, 1}.
    #[arg(long, value_delimiter = ',')]
    pub exponents: Vec<f64>,
    #[command(flatten)]
    pub coeffs: CoeffArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, value_enum, default_value = "concurrence")]
    pub measure: MeasureArg,
    /// Comma-separated; defaults to 2,2.5,3,4 (concurrence) or 0.25,0.5,0.75,1 (tsallis2-assist).
    #[arg(long, value_delimiter = ',')]
    pub exponents: Vec<f64>,
    /// Restarts for the assistance search diagnostic; 0 skips it.
    #[arg(long, default_value_t = 0)]
    pub eoa_restarts: usize,
    #[command(flatten)]
    pub coeffs: CoeffArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Computed output plus any violations found along the way.
struct Outcome {
    table: Table,
    config: Value,
    violations: Vec<String>,
    summary: Option<String>,
}

/// Parses `argv` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let output = match &cli.command {
        Command::Fig1(a) => &a.output,
        Command::Fig2(a) => &a.output,
        Command::Lemmas(a) => &a.output,
        Command::SweepStates(a) => &a.output,
        Command::SweepVectors(a) => &a.output,
        Command::Family(a) => &a.output,
    };
    let result = execute(&cli.command).and_then(|outcome| {
        let mut config = outcome.config;
        config["seed"] = json!(output.seed);
        config["format"] = json!(output.format);
        let bytes = render(&outcome.table, output.format, &config)?;
        write_atomic(&bytes, output.out.as_deref())?;
        Ok((outcome.violations, outcome.summary))
    });
    match result {
        Ok((violations, summary)) => {
            if let Some(s) = summary {
                eprintln!("{s}");
            }
            for v in &violations {
                eprintln!("violation: {v}");
            }
            if violations.is_empty() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Fig1(a) => fig1(a),
        Command::Fig2(a) => fig2(a),
        Command::Lemmas(a) => lemmas(a),
        Command::SweepStates(a) => sweep_states(a),
        Command::SweepVectors(a) => sweep_vectors(a),
        Command::Family(a) => family(a),
    }
}

fn coeff_json(p: &CoeffParams) -> Value {
    json!({ "k": p.k(), "delta": p.delta(), "gamma": p.gamma() })
}

fn figure_outcome(table: verify::FigureTable, descending: bool, config: Value) -> Outcome {
    let violations = if table.ordering_holds(descending, ARITH_SLACK_TOL) {
        Vec::new()
    } else {
        vec![format!("{} ordering fails on the grid", table.exponent_name)]
    };
    let mut columns: Vec<&'static str> = Vec::new();
    columns.push(if table.exponent_name == "alpha" { "alpha" } else { "beta" });
    columns.extend(if descending { ["y0", "y1", "y2"] } else { ["z0", "z1", "z2"] });
    let rows = table
        .rows
        .iter()
        .map(|(x, vals)| std::iter::once(Cell::Float(*x)).chain(vals.iter().map(|v| Cell::Float(*v))).collect())
        .collect();
    Outcome { table: Table { columns, rows }, config, violations, summary: None }
}

fn fig1(a: &Fig1Args) -> Result<Outcome, CliError> {
    let p = a.coeffs.resolve(0.9, 2.0, 2.0)?;
    let grid =
        exponent_grid(a.alpha_min, a.alpha_max, a.step).map_err(|e| usage("--alpha-min/--alpha-max/--step", e))?;
    let table = verify::figure1_data_with(&grid, &p).map_err(|e| usage("--alpha-min", e))?;
    let config = json!({
        "command": "fig1",
        "alpha_min": a.alpha_min,
        "alpha_max": a.alpha_max,
        "step": a.step,
        "coeffs": coeff_json(&p),
    });
    Ok(figure_outcome(table, true, config))
}

fn fig2(a: &Fig2Args) -> Result<Outcome, CliError> {
    let p = a.coeffs.resolve(0.8, 2.0, 1.0)?;
    let grid = exponent_grid(a.beta_min, a.beta_max, a.step).map_err(|e| usage("--beta-min/--beta-max/--step", e))?;
    let table = verify::figure2_data_with(&grid, &p).map_err(|e| usage("--beta-min/--beta-max", e))?;
    let config = json!({
        "command": "fig2",
        "beta_min": a.beta_min,
        "beta_max": a.beta_max,
        "step": a.step,
        "coeffs": coeff_json(&p),
    });
    Ok(figure_outcome(table, false, config))
}

fn lemmas(a: &LemmaArgs) -> Result<Outcome, CliError> {
    let grid = match a.grid {
        GridChoice::Default => LemmaGrid::default(),
    };
    let rows = verify::lemma_grid(&grid).map_err(|e| usage("--grid", e))?;
    let violations = rows
        .iter()
        .filter(|r| r.slack < -ARITH_SLACK_TOL)
        .map(|r| serde_json::to_string(r).unwrap_or_default())
        .collect();
    let table = Table {
        columns: vec!["kind", "k", "delta", "t", "exponent", "slack"],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    Cell::Text(match r.kind {
                        LemmaKind::Lower => "lower",
                        LemmaKind::Upper => "upper",
                    }),
                    Cell::Float(r.k),
                    Cell::Float(r.delta),
                    Cell::Float(r.t),
                    Cell::Float(r.exponent),
                    Cell::Float(r.slack),
                ]
            })
            .collect(),
    };
    let config = json!({ "command": "lemmas", "grid": grid_json(&grid) });
    Ok(Outcome { table, config, violations, summary: None })
}

fn grid_json(g: &LemmaGrid) -> Value {
    serde_json::to_value(g).unwrap_or(Value::Null)
}

fn check_samples(samples: usize) -> Result<(), CliError> {
    if samples == 0 {
        return Err(usage("--samples", "must be at least 1"));
    }
    Ok(())
}

fn check_exponents(exponents: &[f64], lo: f64, hi: f64) -> Result<(), CliError> {
    match exponents.iter().find(|x| !(**x >= lo && **x <= hi)) {
        Some(x) => Err(usage("--exponents", format!("{x} outside [{lo}, {hi}]"))),
        None => Ok(()),
    }
}

fn sweep_violations(result: &SweepResult, tol: f64, seed: u64) -> Vec<String> {
    result
        .reports
        .iter()
        .filter(|r| r.violates(tol) || !r.chain_holds || r.residual.is_some_and(|x| x > FAMILY_RESIDUAL_TOL))
        .map(|r| describe(r, seed))
        .collect()
}

fn describe(r: &BoundReport, seed: u64) -> String {
    format!(
        "seed {seed} sample {} exponent {}: {}",
        r.sample_index,
        format_float(r.exponent),
        serde_json::to_string(r).unwrap_or_default()
    )
}

fn summary(name: &str, r: &SweepResult) -> String {
    format!(
        "{name}: {} attempts, {} passed the hypothesis, {} failed, acceptance {:.4}",
        r.attempts,
        r.condition_passed,
        r.condition_failed,
        r.acceptance_rate()
    )
}

fn sweep_config(
    mode: SweepMode,
    samples: usize,
    num_parties: usize,
    coeffs: CoeffParams,
    exponents: Vec<f64>,
    seed: u64,
) -> SweepConfig {
    SweepConfig {
        mode,
        samples,
        num_parties,
        coeffs,
        exponents,
        seed,
        measure: Measure::Concurrence,
        direction: Direction::Monogamy,
        sampler: VectorSampler::GeometricChain,
        eoa: None,
    }
}

fn sweep_states(a: &StatesArgs) -> Result<Outcome, CliError> {
    check_samples(a.samples)?;
    let p = a.coeffs.resolve(0.9, 2.0, 2.0)?;
    let exponents = if a.exponents.is_empty() { vec![2.0, 2.5, 3.0, 4.0] } else { a.exponents.clone() };
    check_exponents(&exponents, p.gamma(), f64::MAX)?;
    let config = sweep_config(SweepMode::States, a.samples, 3, p, exponents, a.output.seed);
    let result = verify::sweep_random_states(&config).map_err(|e| usage("sweep-states", e))?;
    Ok(Outcome {
        table: report_table(&result.reports),
        violations: sweep_violations(&result, STATE_SLACK_TOL, a.output.seed),
        summary: Some(summary("sweep-states", &result)),
        config: json!({
            "command": "sweep-states",
            "samples": a.samples,
            "exponents": config.exponents,
            "coeffs": coeff_json(&p),
        }),
    })
}

fn sweep_vectors(a: &VectorArgs) -> Result<Outcome, CliError> {
    check_samples(a.samples)?;
    if a.parties == 0 || a.parties > 64 {
        return Err(usage("--parties", "must lie in 1..=64"));
    }
    let p = a.coeffs.resolve(0.9, 2.0, 2.0)?;
    let g = p.gamma();
    let (direction, defaults, lo, hi) = match a.direction {
        DirectionArg::Monogamy => (Direction::Monogamy, [1.0, 1.5, 2.0, 3.0], g, f64::MAX),
        DirectionArg::Polygamy => (Direction::Polygamy, [0.25, 0.5, 0.75, 1.0], 0.0, g),
    };
    let exponents = if a.exponents.is_empty() { defaults.iter().map(|r| r * g).collect() } else { a.exponents.clone() };
    check_exponents(&exponents, lo, hi)?;
    let mut config = sweep_config(SweepMode::Vectors, a.samples, a.parties, p, exponents, a.output.seed);
    config.direction = direction;
    config.sampler = match a.sampler {
        SamplerArg::SortedUniform => VectorSampler::SortedUniform,
        SamplerArg::GeometricChain => VectorSampler::GeometricChain,
    };
    let result = verify::sweep_random_vectors(&config).map_err(|e| usage("sweep-vectors", e))?;
    let violations = sweep_violations(&result, STATE_SLACK_TOL, a.output.seed);
    if result.condition_passed < a.samples {
        eprintln!(
            "warning: only {} of {} requested vectors satisfied the hypothesis",
            result.condition_passed, a.samples
        );
    }
    Ok(Outcome {
        table: report_table(&result.reports),
        violations,
        summary: Some(summary("sweep-vectors", &result)),
        config: json!({
            "command": "sweep-vectors",
            "samples": a.samples,
            "parties": a.parties,
            "sampler": a.sampler.to_possible_value().map(|v| v.get_name().to_string()),
            "direction": config.direction,
            "exponents": config.exponents,
            "coeffs": coeff_json(&p),
        }),
    })
}

fn family(a: &FamilyArgs) -> Result<Outcome, CliError> {
    check_samples(a.samples)?;
    let (measure, p, defaults) = match a.measure {
        MeasureArg::Concurrence => (Measure::Concurrence, a.coeffs.resolve(0.9, 2.0, 2.0)?, vec![2.0, 2.5, 3.0, 4.0]),
        MeasureArg::Tsallis2Assist => {
            (Measure::Tsallis2Assist, a.coeffs.resolve(0.8, 2.0, 1.0)?, vec![0.25, 0.5, 0.75, 1.0])
        }
    };
    let exponents = if a.exponents.is_empty() { defaults } else { a.exponents.clone() };
    match measure.direction() {
        Direction::Monogamy => check_exponents(&exponents, p.gamma(), f64::MAX)?,
        Direction::Polygamy => check_exponents(&exponents, 0.0, p.gamma())?,
    }
    let mut config = sweep_config(SweepMode::Family, a.samples, 3, p, exponents, a.output.seed);
    config.measure = measure;
    config.direction = measure.direction();
    if a.eoa_restarts > 0 && measure == Measure::Tsallis2Assist {
        config.eoa = Some(EoaConfig { restarts: a.eoa_restarts, seed: a.output.seed, ..EoaConfig::default() });
    }
    let result = verify::family_sweep(&config).map_err(|e| usage("family", e))?;
    let mut columns = REPORT_COLUMNS.to_vec();
    columns.extend(["residual", "diagnostic_residual"]);
    let rows = result
        .reports
        .iter()
        .map(|r| {
            let mut row = report_row(r);
            row.push(Cell::OptFloat(r.residual));
            row.push(Cell::OptFloat(r.diagnostic_residual));
            row
        })
        .collect();
    Ok(Outcome {
        table: Table { columns, rows },
        violations: sweep_violations(&result, STATE_SLACK_TOL, a.output.seed),
        summary: Some(summary("family", &result)),
        config: json!({
            "command": "family",
            "samples": a.samples,
            "measure": config.measure,
            "exponents": config.exponents,
            "eoa_restarts": a.eoa_restarts,
            "coeffs": coeff_json(&p),
        }),
    })
}

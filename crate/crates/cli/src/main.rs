//! `qwalk`: run memory walks, emit distributions and cross-check the
//! simulator, the path oracle and the closed-form amplitudes.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qwalk_core::closed_form::audit::{class_counts, deviations_report, PartKey};
use qwalk_core::closed_form::catalog::{corrected_parts, literal_parts};
use qwalk_core::cluster::{cluster_mask, phase_from_profile, profile};
use qwalk_core::init_file::parse_init;
use qwalk_core::oracle::{oracle_state_with, path_sign, DEFAULT_ORACLE_CAP};
use qwalk_core::peaks::find_peaks;
use qwalk_core::walk::{preset_init, run};
use qwalk_core::{BasisIndex, Catalog, DirectionSequence, Distribution, Execution, MemoryOrder, Preset, StateVector};

const OK: u8 = 0;
const MISMATCH: u8 = 1;
const INVALID: u8 = 2;

#[derive(Parser)]
#[command(name = "qwalk", version, about = "Exact Hadamard walks with zero-, one- and two-step memory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve an initial state and write the position distribution
    Simulate(WalkArgs),
    /// Check simulator, path oracle and closed form against each other for n = 1..steps
    Verify(VerifyArgs),
    /// Print the cluster mask, cluster statistics and phase of a direction sequence
    Profile { sequence: String },
    /// List the local maxima of a distribution
    Peaks(WalkArgs),
    /// Distribution of the two-step walk from |0,1,0,0⟩ by the closed-form amplitudes
    ClosedForm(ClosedFormArgs),
    /// Distribution of the two-step walk from |0,1,0,0⟩ by path enumeration
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Significant digits of decimal probabilities
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
    precision: u32,
}

#[derive(Args)]
struct WalkArgs {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(0..=2))]
    memory: u8,
    #[arg(long)]
    steps: usize,
    /// `single`, `symmetric` or `file:PATH`
    #[arg(long, default_value = "single")]
    init: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CatalogArgs {
    /// Use the parts exactly as published, without corrections
    #[arg(long)]
    published: bool,
    /// Negate one part (by id, e.g. a5.1) to exercise the checks
    #[arg(long, value_name = "PART")]
    negate_part: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 16)]
    steps: usize,
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    max_oracle: usize,
    #[command(flatten)]
    catalog: CatalogArgs,
}

#[derive(Args)]
struct ClosedFormArgs {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=2))]
    memory: u8,
    #[arg(long)]
    steps: usize,
    #[arg(long, default_value = "single", value_parser = ["single"])]
    init: String,
    /// Print the corrections applied to the published parts, checked for n = 1..steps
    #[arg(long)]
    deviations: bool,
    #[command(flatten)]
    catalog: CatalogArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=2))]
    memory: u8,
    #[arg(long)]
    steps: usize,
    #[arg(long, default_value = "single", value_parser = ["single"])]
    init: String,
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    max_oracle: usize,
    #[command(flatten)]
    output: OutputArgs,
}

struct Failure {
    code: u8,
    message: String,
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure { code: INVALID, message: message.into() }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Simulate(args) => simulate(&args),
        Command::Verify(args) => verify(&args),
        Command::Profile { sequence } => profile_cmd(&sequence),
        Command::Peaks(args) => peaks(&args),
        Command::ClosedForm(args) => closed_form(&args),
        Command::Oracle(args) => oracle(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn initial_state(memory: u8, init: &str) -> Result<StateVector, Failure> {
    let order = MemoryOrder::from_u8(memory).map_err(|e| invalid(e.to_string()))?;
    if let Some(path) = init.strip_prefix("file:") {
        let text = fs::read_to_string(path).map_err(|e| invalid(format!("{path}: {e}")))?;
        let v = parse_init(&text).map_err(|e| invalid(format!("{path}: {e}")))?;
        if v.order() != order {
            return Err(invalid(format!(
                "{path}: file declares memory {} but --memory is {memory}",
                v.order().as_u8()
            )));
        }
        return Ok(v);
    }
    let preset: Preset = init.parse().map_err(|e: qwalk_core::walk::WalkError| invalid(e.to_string()))?;
    Ok(preset_init(preset, order))
}

fn emit(dist: &Distribution, memory: u8, steps: usize, out: &OutputArgs) -> Result<(), Failure> {
    let text = match out.format {
        Format::Csv => output::to_csv(dist, out.precision as usize),
        Format::Json => output::to_json(dist, memory, steps),
    };
    match &out.out {
        Some(path) => fs::write(path, text).map_err(|e| invalid(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Only positions of the reachable parity, zeros included.
fn on_lattice(dist: &Distribution, v: &StateVector, steps: usize) -> Distribution {
    let parity: Vec<i64> = v.positions().map(|k| k.rem_euclid(2)).collect();
    let keep = parity.first().copied().unwrap_or(steps as i64 % 2);
    let lo = v.positions().next().unwrap_or(0);
    let hi = v.positions().last().unwrap_or(0);
    let all = (lo..=hi).filter(|k| k.rem_euclid(2) == keep).map(|k| (k, dist.get(k))).collect();
    Distribution::from_map(all)
}

fn simulate(args: &WalkArgs) -> CmdResult {
    let v = run(&initial_state(args.memory, &args.init)?, args.steps);
    let dist = v.distribution();
    let mixed_parity = v.positions().map(|k| k.rem_euclid(2)).collect::<std::collections::BTreeSet<_>>().len() > 1;
    let dist = if mixed_parity { dist } else { on_lattice(&dist, &v, args.steps) };
    emit(&dist, args.memory, args.steps, &args.output)?;
    Ok(OK)
}

fn peaks(args: &WalkArgs) -> CmdResult {
    let v = run(&initial_state(args.memory, &args.init)?, args.steps);
    let report = find_peaks(&v.distribution());
    let digits = args.output.precision as usize;
    let text = match args.output.format {
        Format::Csv => {
            let mut s = String::from("position,probability\n");
            for p in &report.peaks {
                s.push_str(&format!("{},{}\n", p.position, output::format_decimal(&p.probability, digits)));
            }
            s.push_str(&format!("# symmetric: {}\n", report.symmetric));
            s
        }
        Format::Json => {
            let peaks: Vec<_> = report
                .peaks
                .iter()
                .map(|p| {
                    serde_json::json!({"k": p.position, "p": format!("{}/{}", p.probability.numer(), p.probability.denom())})
                })
                .collect();
            let doc = serde_json::json!({"memory": args.memory, "steps": args.steps, "symmetric": report.symmetric, "peaks": peaks});
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
    };
    match &args.output.out {
        Some(path) => fs::write(path, text).map_err(|e| invalid(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(OK)
}

fn catalog(args: &CatalogArgs) -> Result<Catalog, Failure> {
    let mut specs = if args.published { literal_parts() } else { corrected_parts() };
    if let Some(id) = &args.negate_part {
        specs = Catalog::specs_with_negated_part(&specs, id).map_err(|e| invalid(e.to_string()))?;
    }
    Catalog::from_specs(&specs).map_err(|e| invalid(e.to_string()))
}

fn closed_form(args: &ClosedFormArgs) -> CmdResult {
    if args.deviations {
        let report = deviations_report(args.steps, Execution::default()).map_err(|e| invalid(e.to_string()))?;
        match &args.output.out {
            Some(path) => fs::write(path, report).map_err(|e| invalid(format!("{}: {e}", path.display())))?,
            None => print!("{report}"),
        }
        return Ok(OK);
    }
    let cat = catalog(&args.catalog)?;
    let v = cat.state(args.steps, Execution::default()).map_err(|e| Failure { code: MISMATCH, message: e.to_string() })?;
    let dist = on_lattice(&v.distribution(), &v, args.steps);
    emit(&dist, args.memory, args.steps, &args.output)?;
    Ok(OK)
}

fn oracle(args: &OracleArgs) -> CmdResult {
    let v = oracle_state_with(args.steps, args.max_oracle, Execution::default()).map_err(|e| invalid(e.to_string()))?;
    let dist = on_lattice(&v.distribution(), &v, args.steps);
    emit(&dist, args.memory, args.steps, &args.output)?;
    Ok(OK)
}

fn show(v: &StateVector, k: i64, j: BasisIndex) -> String {
    format!("{}", v.amplitude(k, j).value)
}

fn verify(args: &VerifyArgs) -> CmdResult {
    if args.steps > args.max_oracle {
        return Err(invalid(format!("--steps {} exceeds --max-oracle {}", args.steps, args.max_oracle)));
    }
    let cat = catalog(&args.catalog)?;
    let init = preset_init(Preset::Single, MemoryOrder::Two);
    let mut sim = init;
    for n in 1..=args.steps {
        sim = qwalk_core::step(&sim);
        let orc = oracle_state_with(n, args.max_oracle, Execution::default()).map_err(|e| invalid(e.to_string()))?;
        let closed = match cat.state(n, Execution::default()) {
            Ok(v) => v,
            Err(e) => {
                println!("FAIL n={n}: closed form could not be evaluated: {e}");
                return Ok(MISMATCH);
            }
        };
        if sim == orc && orc == closed {
            continue;
        }
        for k in -(n as i64)..=n as i64 {
            for j in (0..8).map(BasisIndex::new) {
                let (a, b, c) = (sim.get(k, j), orc.get(k, j), closed.get(k, j));
                if a == b && b == c {
                    continue;
                }
                println!(
                    "FAIL n={n} k={k} j={j}: simulator {} oracle {} closed-form {} (all over √2^{n})",
                    show(&sim, k, j),
                    show(&orc, k, j),
                    show(&closed, k, j)
                );
                for line in failing_parts(&cat, n, k, j) {
                    println!("  {line}");
                }
                return Ok(MISMATCH);
            }
        }
    }
    println!("PASS n=1..{}: simulator, path oracle and closed form agree on every amplitude", args.steps);
    Ok(OK)
}

/// Parts of basis `j` whose value at `(n, k)` differs from the signed count
/// of the paths they claim.
fn failing_parts(cat: &Catalog, n: usize, k: i64, j: BasisIndex) -> Vec<String> {
    let counts = class_counts(n);
    cat.parts()
        .iter()
        .filter(|p| p.basis() == j.get())
        .filter_map(|p| {
            let expected = counts.get(&(k, PartKey::of(p.spec()))).copied().unwrap_or(0) as i128;
            match p.signed_count(n, k) {
                Ok(got) if got == expected => None,
                Ok(got) => Some(format!("part {} gives {got}, its paths count {expected}", p.id())),
                Err(e) => Some(format!("part {}: {e}", p.id())),
            }
        })
        .collect()
}

fn profile_cmd(text: &str) -> CmdResult {
    let s: DirectionSequence = text.parse().map_err(|e: qwalk_core::oracle::OracleError| invalid(e.to_string()))?;
    let p = profile(&s).map_err(|e| invalid(e.to_string()))?;
    println!("mask: {}", cluster_mask(&s));
    println!("profile: {p}");
    let phase = phase_from_profile(&p);
    println!("phase: {phase:+}");
    if s.has_walk_prefix() && s.len() >= 3 {
        let sign = path_sign(&s).expect("prefix checked");
        let verdict = if sign == phase { "match" } else { "MISMATCH" };
        println!("path sign: {sign:+} ({verdict})");
        if sign != phase {
            return Ok(MISMATCH);
        }
    }
    Ok(OK)
}

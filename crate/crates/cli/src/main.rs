//! `filtra`: enumeration, filtration, hierarchy, and sweep commands over
//! finite topologies. All structured output goes to stdout as JSON Lines
//! with a final JSON summary object; progress and errors go to stderr.
//! Exit codes: 0 = no failures, 1 = fail verdicts found, 2 = usage or
//! input error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use filtra_core::{
    compute_slight, count_topologies, enumerate_topologies, is_filtration, search_counterexamples,
    slowest_filtration, stabilization_ordinal, sweep, CheckReport, DroppedHypothesis,
    HierarchySnapshot, SetFamily, SweepConfig, SweepSummary, TheoremSelection, Topology,
    MAX_ENUMERATION_N, XI_CONVENTION,
};

#[derive(Parser)]
#[command(
    name = "filtra",
    version,
    about = "Finite-topology laboratory: enumeration, filtrations, hierarchies, and exhaustive theorem sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate every topology on n points in canonical order
    Enumerate(EnumerateArgs),
    /// Slowest filtration between a comparable pair of topologies
    Filtration(FiltrationArgs),
    /// Hierarchy classes of a single topology
    Hierarchy(HierarchyArgs),
    /// Slight families along the slowest filtration of a pair
    Slight(SlightArgs),
    /// Run the stabilization and lemma checks over all pairs on n points
    Check(CheckArgs),
    /// Drop one hypothesis and report pairs where the conclusion fails
    Search(SearchArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Ground size (0 ≤ n ≤ 6; n = 6 needs --allow-slow)
    #[arg(long)]
    n: usize,
    /// Print only the final count summary
    #[arg(long)]
    count_only: bool,
    /// Unlock the long-running n = 6 enumeration
    #[arg(long)]
    allow_slow: bool,
}

#[derive(Args)]
struct FiltrationArgs {
    /// Path to a pair file: {"sigma": {...}, "tau": {...}}
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct HierarchyArgs {
    /// Path to a topology file: {"n": ..., "opens": [[...], ...]}
    #[arg(long)]
    input: PathBuf,
    /// Largest class index to print (default: stabilization index + 1)
    #[arg(long)]
    xi_max: Option<usize>,
}

#[derive(Args)]
struct SlightArgs {
    /// Path to a pair file: {"sigma": {...}, "tau": {...}}
    #[arg(long)]
    input: PathBuf,
    /// Union-arity bound for the slight families
    #[arg(long, default_value_t = 2)]
    nu: usize,
}

#[derive(Args)]
struct CheckArgs {
    /// Ground size to sweep (0 ≤ n ≤ 5; n = 5 needs --allow-slow)
    #[arg(long)]
    n: usize,
    /// Which checks to run
    #[arg(long, default_value = "all")]
    theorem: TheoremSelection,
    /// Worker threads
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Union-arity bound for hierarchy levels and slight families
    #[arg(long, default_value_t = 2)]
    nu: usize,
    /// Unlock the long-running regimes (n = 5, lemma sweeps at n ≥ 4)
    #[arg(long)]
    allow_slow: bool,
    /// Attach per-pair wall-clock micros to reports (breaks byte-identity
    /// across runs; off by default)
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// Ground size to sweep (0 ≤ n ≤ 5; n = 5 needs --allow-slow)
    #[arg(long)]
    n: usize,
    /// Hypothesis to drop: semiregularity | pi-semiregularity | basis-level
    #[arg(long)]
    drop: DroppedHypothesis,
    /// Worker threads
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Unlock the long-running n = 5 sweep
    #[arg(long)]
    allow_slow: bool,
}

/// Input form of a comparable pair.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairInput {
    sigma: Topology,
    tau: Topology,
}

#[derive(Serialize)]
struct EnumerateLine<'a> {
    index: usize,
    topology: &'a Topology,
}

#[derive(Serialize)]
struct EnumerateSummary {
    command: &'static str,
    n: usize,
    count: u64,
}

#[derive(Serialize)]
struct FiltrationOutput<'a> {
    command: &'static str,
    n: usize,
    sigma: &'a Topology,
    tau: &'a Topology,
    stages: &'a [Topology],
    /// Least stage index equal to tau; null when the sequence never gets there.
    stabilization: Option<usize>,
    is_filtration: bool,
}

#[derive(Serialize)]
struct ClassLine {
    xi: usize,
    pi: SetFamily,
    sigma: SetFamily,
}

#[derive(Serialize)]
struct HierarchyOutput<'a> {
    command: &'static str,
    n: usize,
    topology: &'a Topology,
    xi_convention: &'static str,
    stabilization_xi: usize,
    classes: Vec<ClassLine>,
    borel: SetFamily,
}

#[derive(Serialize)]
struct SlightFamilyLine {
    xi: usize,
    minus: SetFamily,
    plus: SetFamily,
}

#[derive(Serialize)]
struct SlightOutput<'a> {
    command: &'static str,
    n: usize,
    nu: usize,
    sigma: &'a Topology,
    tau: &'a Topology,
    stage_count: usize,
    families: Vec<SlightFamilyLine>,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    let stdout = std::io::stdout().lock();
    let mut out = std::io::BufWriter::new(stdout);
    let code = match cli.command {
        Command::Enumerate(args) => cmd_enumerate(&mut out, args)?,
        Command::Filtration(args) => cmd_filtration(&mut out, args)?,
        Command::Hierarchy(args) => cmd_hierarchy(&mut out, args)?,
        Command::Slight(args) => cmd_slight(&mut out, args)?,
        Command::Check(args) => cmd_check(&mut out, args)?,
        Command::Search(args) => cmd_search(&mut out, args)?,
    };
    out.flush()?;
    Ok(code)
}

fn emit_line(out: &mut impl Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn emit_reports(
    out: &mut impl Write,
    reports: &[CheckReport],
    summary: &SweepSummary,
) -> Result<ExitCode> {
    for report in reports {
        emit_line(out, report)?;
    }
    emit_line(out, summary)?;
    Ok(if summary.fail > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn read_pair(path: &Path) -> Result<PairInput> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing pair file {}", path.display()))
}

fn read_topology(path: &Path) -> Result<Topology> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing topology file {}", path.display()))
}

fn cmd_enumerate(out: &mut impl Write, args: EnumerateArgs) -> Result<ExitCode> {
    if args.n == MAX_ENUMERATION_N && !args.allow_slow {
        bail!("enumeration at n = 6 walks 209527 topologies; pass --allow-slow to run it");
    }
    let count = if args.count_only {
        count_topologies(args.n)?
    } else {
        let mut count = 0u64;
        for (index, topology) in enumerate_topologies(args.n)?.enumerate() {
            emit_line(
                out,
                &EnumerateLine {
                    index,
                    topology: &topology,
                },
            )?;
            count += 1;
        }
        count
    };
    emit_line(
        out,
        &EnumerateSummary {
            command: "enumerate",
            n: args.n,
            count,
        },
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_filtration(out: &mut impl Write, args: FiltrationArgs) -> Result<ExitCode> {
    let pair = read_pair(&args.input)?;
    let f = slowest_filtration(&pair.sigma, &pair.tau)?;
    let output = FiltrationOutput {
        command: "filtration",
        n: pair.sigma.ground().n(),
        sigma: f.sigma(),
        tau: f.tau(),
        stages: f.stages(),
        stabilization: stabilization_ordinal(&f),
        is_filtration: is_filtration(&f),
    };
    let ok = output.is_filtration;
    emit_line(out, &output)?;
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_hierarchy(out: &mut impl Write, args: HierarchyArgs) -> Result<ExitCode> {
    let topology = read_topology(&args.input)?;
    let snapshot = HierarchySnapshot::compute(&topology, 0);
    let xi_max = args.xi_max.unwrap_or(snapshot.stabilization_xi() + 1);
    let classes = (0..=xi_max)
        .map(|xi| ClassLine {
            xi,
            pi: snapshot.pi(xi).clone(),
            sigma: snapshot.sigma(xi).clone(),
        })
        .collect();
    let output = HierarchyOutput {
        command: "hierarchy",
        n: topology.ground().n(),
        topology: &topology,
        xi_convention: XI_CONVENTION,
        stabilization_xi: snapshot.stabilization_xi(),
        classes,
        borel: snapshot.borel().clone(),
    };
    emit_line(out, &output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_slight(out: &mut impl Write, args: SlightArgs) -> Result<ExitCode> {
    let pair = read_pair(&args.input)?;
    let f = slowest_filtration(&pair.sigma, &pair.tau)?;
    let families = compute_slight(&f, args.nu)?;
    let lines = (0..=families.max_xi())
        .map(|xi| SlightFamilyLine {
            xi,
            minus: families.minus(xi).expect("xi in range").clone(),
            plus: families.plus(xi).expect("xi in range").clone(),
        })
        .collect();
    let output = SlightOutput {
        command: "slight",
        n: pair.sigma.ground().n(),
        nu: args.nu,
        sigma: f.sigma(),
        tau: f.tau(),
        stage_count: f.stages().len(),
        families: lines,
    };
    emit_line(out, &output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(out: &mut impl Write, args: CheckArgs) -> Result<ExitCode> {
    let config = SweepConfig {
        n: args.n,
        selection: args.theorem,
        nu: args.nu,
        jobs: args.jobs,
        allow_slow: args.allow_slow,
        timing: args.timing,
    };
    let result = sweep(&config)?;
    emit_reports(out, &result.reports, &result.summary)
}

fn cmd_search(out: &mut impl Write, args: SearchArgs) -> Result<ExitCode> {
    let config = SweepConfig {
        n: args.n,
        jobs: args.jobs,
        allow_slow: args.allow_slow,
        ..SweepConfig::new(args.n)
    };
    let result = search_counterexamples(&config, args.drop)?;
    emit_reports(out, &result.reports, &result.summary)
}

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use partsched::bench::{lb_sweep, random_sweep, run_bench, Algorithm, BenchCase};
use partsched::heuristics::{shrink_solve, spt_available};
use partsched::io;
use partsched::oracle::{brute_force_opt, Graph, OracleOptions, DEFAULT_BUDGET};
use partsched::rational::{self, Rational};
use partsched::reductions::{
    gen_example41, gen_lb_family, gen_mr_gadget, gen_partition2_gadget, gen_random,
    gen_unmovable_gadget, map_to_unrelated, three_partition_certificate, GadgetInstance,
    ThreePartitionInput,
};
use partsched::structure::{
    blocking_pairs, check_spt_order, normalize_tight, slack_table, train_sequences,
};
use partsched::{flow, objective, validate_schedule, Error};

/// Scheduling with exclusive resources: generators, solvers and checks.
#[derive(Parser)]
#[command(name = "partsched", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance (and a `.meta.json` sidecar when -o is given).
    Generate(GenerateArgs),
    /// Solve an instance and write the schedule.
    Solve(SolveArgs),
    /// Check a schedule and print its structure.
    Validate(ValidateArgs),
    /// Run solvers on a batch of instances and emit a CSV of bound checks.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Example41,
    Lb,
    Mr,
    Unmovable,
    Partition2,
    Random,
}

#[derive(clap::Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Output path; the instance goes to stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_parser = parse_rational)]
    eps: Option<Rational>,
    /// Even parameter of the lower-bound family.
    #[arg(long)]
    c: Option<u32>,
    /// Machines (random) or number of triples (3-partition gadgets).
    #[arg(long)]
    m: Option<usize>,
    /// Target triple sum for 3-partition gadgets.
    #[arg(long)]
    b: Option<u64>,
    /// Comma-separated 3-partition elements.
    #[arg(long, value_delimiter = ',')]
    a: Vec<u64>,
    /// Edges as `u-v` pairs, comma-separated.
    #[arg(long, value_delimiter = ',')]
    edges: Vec<String>,
    /// Vertex count; defaults to one past the largest endpoint.
    #[arg(long)]
    vertices: Option<usize>,
    /// Map a machine-subset gadget to unrelated times with this value off-subset.
    #[arg(long, value_parser = parse_rational)]
    unrelated: Option<Rational>,
    /// For the machine-subset gadget: also write the yes-side witness schedule.
    #[arg(long)]
    witness: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    resources: Option<usize>,
    #[arg(long, default_value_t = 4)]
    p_max: u32,
    #[arg(long, default_value_t = 1)]
    q: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveAlgorithm {
    SptAvailable,
    Flow,
    Shrink,
    Oracle,
}

#[derive(clap::Args)]
struct SolveArgs {
    #[arg(short, long, value_enum)]
    algorithm: SolveAlgorithm,
    instance: PathBuf,
    /// Schedule path; defaults to `<instance stem>.schedule.json` next to the instance.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Write the flow network as an arc list (flow only).
    #[arg(long)]
    dump_network: Option<PathBuf>,
    /// Use job weights as flow costs (flow only).
    #[arg(long)]
    weighted: bool,
    /// Processing-time bound for shrink.
    #[arg(long)]
    c: Option<u32>,
    /// Remove idle time from the shrink schedule.
    #[arg(long)]
    compact: bool,
    /// Oracle search-node budget.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(clap::Args)]
struct ValidateArgs {
    instance: PathBuf,
    schedule: PathBuf,
    /// Also write the tight normalization of the schedule here.
    #[arg(long)]
    normalize: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sweep {
    Random,
    Unit,
    Lb,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum BenchAlgorithm {
    SptAvailable,
    Flow,
    Shrink,
    Oracle,
}

#[derive(clap::Args)]
struct BenchArgs {
    /// Instance directory (every `*.json` that is not a sidecar or schedule).
    #[arg(long, conflicts_with = "family")]
    dir: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<Sweep>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "spt-available,flow,shrink,oracle")]
    algorithms: Vec<BenchAlgorithm>,
    #[arg(long, default_value_t = 100)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 6)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long, default_value_t = 4)]
    resources: usize,
    #[arg(long, default_value_t = 4)]
    p_max: u32,
    #[arg(long, default_value_t = 1)]
    q: usize,
    /// Values of c for the lower-bound sweep; also the shrink bound (largest value).
    #[arg(long, value_delimiter = ',', default_value = "2,4")]
    c: Vec<u32>,
    #[arg(long, value_parser = parse_rational, default_value = "1/100")]
    eps: Rational,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// CSV path; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    rational::parse(text).map_err(|e| e.to_string())
}

fn parse_edges(edges: &[String], vertices: Option<usize>) -> anyhow::Result<Graph> {
    let mut pairs = Vec::new();
    for e in edges {
        let (u, v) = e
            .split_once('-')
            .with_context(|| format!("edge {e:?} is not of the form u-v"))?;
        pairs.push((u.trim().parse::<usize>()?, v.trim().parse::<usize>()?));
    }
    let inferred = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Ok(Graph::new(vertices.unwrap_or(inferred), pairs)?)
}

fn require<T>(value: Option<T>, flag: &str, family: &str) -> anyhow::Result<T> {
    value.with_context(|| format!("--{flag} is required for family {family}"))
}

fn sidecar_path(path: &Path) -> PathBuf {
    path.with_extension("meta.json")
}

fn cmd_generate(args: GenerateArgs) -> anyhow::Result<ExitCode> {
    let three_partition = |name: &str| -> anyhow::Result<ThreePartitionInput> {
        Ok(ThreePartitionInput::new(
            require(args.m, "m", name)?,
            require(args.b, "b", name)?,
            args.a.clone(),
        )?)
    };
    let mut gadget: GadgetInstance = match args.family {
        Family::Example41 => gen_example41(require(args.eps, "eps", "example41")?)?,
        Family::Lb => gen_lb_family(require(args.c, "c", "lb")?, require(args.eps, "eps", "lb")?)?,
        Family::Mr => {
            let tp = three_partition("mr")?;
            let cert = three_partition_certificate(&tp);
            if args.witness.is_some() && cert.is_none() {
                bail!("no 3-partition exists, so there is no witness schedule");
            }
            gen_mr_gadget(&tp, cert.as_deref())?
        }
        Family::Unmovable => gen_unmovable_gadget(&three_partition("unmovable")?)?,
        Family::Partition2 => gen_partition2_gadget(&parse_edges(&args.edges, args.vertices)?)?,
        Family::Random => gen_random(
            require(args.m, "m", "random")?,
            require(args.n, "n", "random")?,
            args.resources.unwrap_or(require(args.n, "n", "random")?),
            args.p_max,
            args.q,
            args.seed,
        )?,
    };
    if let Some(t) = args.unrelated {
        gadget = map_to_unrelated(&gadget, t)?;
    }
    if let Some(path) = &args.witness {
        let witness = gadget
            .witness
            .as_ref()
            .context("this family does not produce a witness schedule")?;
        io::write_schedule(path, witness)?;
    }
    match &args.output {
        Some(path) => {
            io::write_instance(path, &gadget.instance)?;
            io::write_metadata(sidecar_path(path), &gadget.metadata()?)?;
            eprintln!(
                "wrote {} ({} jobs, {} machines, {} resources)",
                path.display(),
                gadget.instance.n(),
                gadget.instance.machine_count,
                gadget.instance.resource_count
            );
        }
        None => print!("{}", io::instance_to_string(&gadget.instance)?),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_solve(args: SolveArgs) -> anyhow::Result<ExitCode> {
    let inst = io::read_instance(&args.instance)?;
    if args.dump_network.is_some() && args.algorithm != SolveAlgorithm::Flow {
        bail!("--dump-network only applies to -a flow");
    }
    let sched = match args.algorithm {
        SolveAlgorithm::SptAvailable => spt_available(&inst)?,
        SolveAlgorithm::Flow => {
            let net = flow::build_network(&inst, args.weighted)?;
            if let Some(path) = &args.dump_network {
                fs::write(path, net.dump())?;
            }
            let f = flow::min_cost_flow(&net)?;
            flow::decode(&net, &f)?
        }
        SolveAlgorithm::Shrink => {
            let c = args.c.context("shrink requires --c")?;
            shrink_solve(&inst, c, args.compact)?
        }
        SolveAlgorithm::Oracle => {
            let opts = OracleOptions { budget: args.budget, ..Default::default() };
            brute_force_opt(&inst, opts)?.witness
        }
    };
    let value = objective(&inst, &sched)?;
    let out = args
        .output
        .unwrap_or_else(|| args.instance.with_extension("schedule.json"));
    io::write_schedule(&out, &sched)?;
    println!("objective {value}");
    eprintln!("wrote {}", out.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_validate(args: ValidateArgs) -> anyhow::Result<ExitCode> {
    let inst = io::read_instance(&args.instance)?;
    let sched = io::read_schedule(&args.schedule)?;
    let report = validate_schedule(&inst, &sched);
    if !report.is_ok() {
        println!("infeasible");
        for v in &report.violations {
            println!("  {v}");
        }
        return Ok(ExitCode::from(1));
    }
    println!("feasible");
    println!("objective {}", objective(&inst, &sched)?);
    println!("slack (job d+ d- slack):");
    for s in slack_table(&inst, &sched)? {
        println!("  {} {} {} {}", s.job, s.d_plus, s.d_minus, s.slack);
    }
    println!("blocking pairs (first second tight):");
    for p in blocking_pairs(&inst, &sched)? {
        println!("  {} {} {}", p.first, p.second, p.tight);
    }
    println!("trains (machine resources start end jobs):");
    for t in train_sequences(&inst, &sched)? {
        println!("  {} {:?} {} {} {:?}", t.machine, t.resources, t.start, t.end, t.jobs);
    }
    println!("spt order per resource: {}", check_spt_order(&inst, &sched)?);
    if let Some(path) = &args.normalize {
        let tight = normalize_tight(&inst, &sched)?;
        io::write_schedule(path, &tight)?;
        println!("normalized objective {}", objective(&inst, &tight)?);
    }
    Ok(ExitCode::SUCCESS)
}

fn dir_cases(dir: &Path) -> anyhow::Result<Vec<BenchCase>> {
    let mut cases = Vec::new();
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()?;
    paths.sort();
    for path in paths {
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
        if !name.ends_with(".json") || name.ends_with(".meta.json") || name.ends_with(".schedule.json") {
            continue;
        }
        let instance = io::read_instance(&path).with_context(|| format!("reading {}", path.display()))?;
        let kind = match io::parse_metadata(&fs::read_to_string(sidecar_path(&path)).unwrap_or_default()) {
            Ok(meta) => meta.kind,
            Err(_) => "file".to_string(),
        };
        let id = name.trim_end_matches(".json").to_string();
        cases.push(BenchCase { id, kind, instance });
    }
    Ok(cases)
}

fn cmd_bench(args: BenchArgs) -> anyhow::Result<ExitCode> {
    let cases = match (&args.dir, args.family) {
        (Some(dir), _) => dir_cases(dir)?,
        (None, Some(Sweep::Random)) => {
            random_sweep(args.count, args.m, args.n, args.resources, args.p_max, args.q, args.seed)?
        }
        (None, Some(Sweep::Unit)) => random_sweep(args.count, args.m, args.n, args.resources, 1, args.q, args.seed)?,
        (None, Some(Sweep::Lb)) => lb_sweep(&args.c, args.eps)?,
        (None, None) => bail!("bench needs --dir or --family"),
    };
    let shrink_c = args.c.iter().copied().max().unwrap_or(1);
    let algorithms: Vec<Algorithm> = args
        .algorithms
        .iter()
        .map(|a| match a {
            BenchAlgorithm::SptAvailable => Algorithm::SptAvailable,
            BenchAlgorithm::Flow => Algorithm::Flow,
            BenchAlgorithm::Shrink => Algorithm::Shrink { c: shrink_c },
            BenchAlgorithm::Oracle => Algorithm::Oracle,
        })
        .collect();
    let report = run_bench(&cases, &algorithms, OracleOptions::with_budget(args.budget))?;
    let csv = report.to_csv()?;
    match &args.output {
        Some(path) => fs::write(path, &csv)?,
        None => print!("{csv}"),
    }
    let failures = report.failures();
    for (row, check) in &failures {
        eprintln!("check failed: {check} on {} ({})", row.instance_id, row.algorithm);
    }
    eprintln!("{} rows, {} failed checks", report.rows.len(), failures.len());
    Ok(if failures.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// Exit status for a library error: 1 when the input was understood but the
/// answer is negative, 2 when the request itself cannot be carried out.
fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(
            Error::Infeasible(_)
            | Error::Exhausted
            | Error::BudgetExceeded { .. }
            | Error::InfeasibleNetwork { .. }
            | Error::NotUntangleable(_)
            | Error::NormalizeCap(_),
        ) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Validate(args) => cmd_validate(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

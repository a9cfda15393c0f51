use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use polytree_learning::generators::{
    gen_from_independent_set, gen_from_multicolored_is, gen_random, parse_graph, parse_partition,
};
use polytree_learning::{
    kernelize, parse_instance, solve_with, verify_solution, write_instance, Algorithm, Error, Instance,
    KernelOptions, SolveConfig,
};

const EXIT_NO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_FAILURE: u8 = 3;

#[derive(Parser)]
#[command(name = "polytree", version, about = "Exact maximum-score polytree learning")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance (decision mode unless --optimize).
    Solve(SolveArgs),
    /// Shrink an instance to a kernel.
    Kernelize(KernelizeArgs),
    /// Generate instances.
    #[command(subcommand)]
    Generate(GenerateCommand),
    /// Check an arc list against an instance.
    Verify(VerifyArgs),
    /// Run every line `scorefile t algo` of a suite file.
    Bench(BenchArgs),
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_parser = parse_algo)]
    algo: Algorithm,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    t: Option<u64>,
    /// Report the optimum and ignore t.
    #[arg(long)]
    optimize: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    truncate: bool,
    #[arg(long, default_value_t = polytree_learning::dp::DEFAULT_MAX_N)]
    max_n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct KernelizeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    t: u64,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    map: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Use the exact representation instead of the truncated one.
    #[arg(long)]
    exact: bool,
}

#[derive(Subcommand)]
enum GenerateCommand {
    /// Instance from an Independent Set question (graph, k).
    IsReduction {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Instance from a Multicolored Independent Set question.
    MisReduction {
        #[arg(long)]
        graph: PathBuf,
        /// One class per line, vertex indices separated by spaces.
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random instance.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 100)]
        max_score: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    arcs: PathBuf,
    #[arg(long, default_value_t = 0)]
    t: u64,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    suite: PathBuf,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_algo(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Serialize)]
struct Report {
    algo: String,
    n: usize,
    d: usize,
    p: usize,
    delta: usize,
    best_score: u64,
    decision: Option<bool>,
    arcs: Vec<[String; 2]>,
    wall_ms: f64,
    seed: u64,
}

enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Run(Error::Io(e))
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Run(Error::Invalid(format!("cannot read {}: {e}", path.display()))))
}

fn load(path: &Path, t: u64) -> Result<Instance, Failure> {
    parse_instance(&read(path)?, t)
        .map_err(|e| Failure::Run(Error::Invalid(format!("{}: {e}", path.display()))))
}

fn run_solve(inst: &Instance, algo: Algorithm, cfg: SolveConfig, decide: bool) -> Result<Report, Error> {
    let start = Instant::now();
    let sol = solve_with(inst, algo, cfg)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(Report {
        algo: algo.to_string(),
        n: inst.n(),
        d: inst.dependent_vertices().len(),
        p: inst.max_parent_size(),
        delta: inst.delta(),
        best_score: sol.best_score,
        decision: decide.then(|| sol.best_score >= inst.threshold()),
        arcs: sol
            .best_arcs
            .iter()
            .map(|(u, v)| [inst.name(u).to_string(), inst.name(v).to_string()])
            .collect(),
        wall_ms,
        seed: cfg.seed,
    })
}

fn solve(args: SolveArgs) -> Result<u8, Failure> {
    if !args.optimize && args.t.is_none() {
        return Err(Failure::Usage("--t is required unless --optimize is given".into()));
    }
    let inst = load(&args.input, args.t.unwrap_or(0))?;
    let cfg = SolveConfig { seed: args.seed, truncate: args.truncate, max_n: args.max_n };
    let report = run_solve(&inst, args.algo, cfg, !args.optimize)?;
    if args.json {
        println!("{}", serde_json::to_string(&report).expect("serializable report"));
    } else {
        println!("best_score {}", report.best_score);
        if let Some(yes) = report.decision {
            println!("decision {}", if yes { "yes" } else { "no" });
        }
        for [u, v] in &report.arcs {
            println!("{u} {v}");
        }
    }
    Ok(if report.decision == Some(false) { EXIT_NO } else { 0 })
}

fn kernel(args: KernelizeArgs) -> Result<u8, Failure> {
    let inst = load(&args.input, args.t)?;
    let opts = KernelOptions { seed: args.seed, truncate: !args.exact, ..KernelOptions::default() };
    let k = kernelize(&inst, opts)?;
    fs::write(&args.out, write_instance(&k.reduced))?;
    if let Some(map) = &args.map {
        fs::write(map, k.map_lines(&inst))?;
    }
    println!(
        "vertices {} -> {} (bound {}), max nonempty parent sets {} (bound {})",
        inst.n(),
        k.reduced.n(),
        k.size_bound(),
        k.nonempty_delta(),
        k.delta_bound()
    );
    Ok(0)
}

fn generate(cmd: GenerateCommand) -> Result<u8, Failure> {
    let (inst, out) = match cmd {
        GenerateCommand::IsReduction { graph, k, out } => {
            (gen_from_independent_set(&parse_graph(&read(&graph)?)?, k)?, out)
        }
        GenerateCommand::MisReduction { graph, partition, out } => {
            let g = parse_graph(&read(&graph)?)?;
            (gen_from_multicolored_is(&g, &parse_partition(&read(&partition)?)?)?, out)
        }
        GenerateCommand::Random { n, delta, p, max_score, seed, out } => {
            (gen_random(n, delta, p, max_score, seed)?, out)
        }
    };
    let t_line = format!("t={}", inst.threshold());
    match out {
        Some(path) => {
            fs::write(&path, write_instance(&inst))?;
            let mut sidecar = path.into_os_string();
            sidecar.push(".t");
            fs::write(&sidecar, format!("{t_line}\n"))?;
            println!("{t_line}");
        }
        None => {
            print!("{}", write_instance(&inst));
            eprintln!("{t_line}");
        }
    }
    Ok(0)
}

fn verify(args: VerifyArgs) -> Result<u8, Failure> {
    let inst = load(&args.input, args.t)?;
    let arcs = inst
        .parse_arcs(&read(&args.arcs)?)
        .map_err(|e| Failure::Run(Error::Invalid(format!("{}: {e}", args.arcs.display()))))?;
    let report = verify_solution(&inst, &arcs)?;
    println!("{}", serde_json::to_string(&report).expect("serializable report"));
    Ok(if report.meets_t { 0 } else { EXIT_NO })
}

struct SuiteEntry {
    file: PathBuf,
    t: u64,
    algo: Algorithm,
}

fn parse_suite(path: &Path) -> Result<Vec<SuiteEntry>, Failure> {
    let base = path.parent().unwrap_or(Path::new("."));
    let mut entries = Vec::new();
    for (i, line) in read(path)?.lines().enumerate() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.is_empty() || toks[0].starts_with('#') {
            continue;
        }
        let bad = |msg: String| Failure::Run(Error::Invalid(format!("{}:{}: {msg}", path.display(), i + 1)));
        let [file, t, algo] = toks[..] else {
            return Err(bad("expected `scorefile t algo`".into()));
        };
        entries.push(SuiteEntry {
            file: base.join(file),
            t: t.parse().map_err(|_| bad(format!("bad threshold `{t}`")))?,
            algo: algo.parse().map_err(|e: Error| bad(e.to_string()))?,
        });
    }
    Ok(entries)
}

fn bench(args: BenchArgs) -> Result<u8, Failure> {
    let entries = parse_suite(&args.suite)?;
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<Report, String>>>> =
        Mutex::new((0..entries.len()).map(|_| None).collect());
    let cfg = SolveConfig { seed: args.seed, ..SolveConfig::default() };
    std::thread::scope(|s| {
        for _ in 0..args.threads.max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(entry) = entries.get(i) else { break };
                let outcome = fs::read_to_string(&entry.file)
                    .map_err(|e| format!("{}: {e}", entry.file.display()))
                    .and_then(|text| {
                        parse_instance(&text, entry.t).map_err(|e| format!("{}: {e}", entry.file.display()))
                    })
                    .and_then(|inst| run_solve(&inst, entry.algo, cfg, true).map_err(|e| e.to_string()));
                results.lock().expect("results lock")[i] = Some(outcome);
            });
        }
    });
    let mut failed = false;
    for (entry, outcome) in entries.iter().zip(results.into_inner().expect("results lock")) {
        match outcome.expect("every entry ran") {
            Ok(report) => println!("{}", serde_json::to_string(&report).expect("serializable report")),
            Err(msg) => {
                failed = true;
                eprintln!("error: {} ({}): {msg}", entry.file.display(), entry.algo);
            }
        }
    }
    Ok(if failed { EXIT_FAILURE } else { 0 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(a) => solve(a),
        Command::Kernelize(a) => kernel(a),
        Command::Generate(c) => generate(c),
        Command::Verify(a) => verify(a),
        Command::Bench(a) => bench(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}

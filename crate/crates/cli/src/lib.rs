//! Command-line front end. `run` parses argv, executes one subcommand and
//! returns the process exit code: 0 ok, 1 theorem violation, 2 misuse.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use berge_core::berge::{circumference, longest_berge_path, longest_berge_xy_path};
use berge_core::bounds::{f, fstar, main_cycle_bound, main_path_bound};
use berge_core::connectivity::is_2connected;
use berge_core::constructions::{build_fnkrs, build_hcal, build_hnka, Construction};
use berge_core::disintegration::{disintegrate, kopylov_case};
use berge_core::enumerate::{self, Caps, Dedup, Objective, SearchSpace};
use berge_core::shrink::reduce_to_happy;
use berge_core::verify::{shrink_finding, verify, Grid, Theorem};
use berge_core::{Graph, Hypergraph};
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] berge_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

type Result<T> = std::result::Result<T, CliError>;

/// What a successful subcommand reports.
enum Outcome {
    Ok,
    Violation,
}

#[derive(Parser, Debug)]
#[command(name = "berge", version, about = "Exact search and verification for long Berge cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an extremal construction and write canonical JSON.
    Construct(ConstructArgs),
    /// Report structural predicates of a hypergraph.
    Check(CheckArgs),
    /// Exact longest Berge cycle or path search.
    Search(SearchArgs),
    /// Disintegration core of a graph, with the Kopylov case when --k is given.
    Core(CoreArgs),
    /// Run the shrink engine and write its trace.
    Reduce(ReduceArgs),
    /// One CSV row of bound values.
    Bounds(BoundsArgs),
    /// Enumerate hypergraphs as JSON lines.
    Enumerate(EnumerateArgs),
    /// Check a theorem over a parameter grid and write a CSV report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Hnka,
    Hcal,
    Fnkrs,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    family: FamilyArg,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    sperner: bool,
    #[arg(long)]
    connected: bool,
    #[arg(long = "two-connected")]
    two_connected: bool,
    #[arg(long)]
    happy: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SearchKind {
    Cycle,
    Path,
    Xy,
}

#[derive(Args, Debug)]
struct SearchArgs {
    kind: SearchKind,
    #[arg(long = "in")]
    input: PathBuf,
    /// Stop once a cycle or path of this length is found.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    x: Option<usize>,
    #[arg(long)]
    y: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CoreArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    alpha: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    a: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DedupArg {
    Labeled,
    Isomorph,
    Auto,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    sperner: bool,
    #[arg(long)]
    connected: bool,
    #[arg(long = "two-connected")]
    two_connected: bool,
    /// Keep only hypergraphs with no Berge cycle of this length or longer.
    #[arg(long = "cycle-below", conflicts_with = "path_below")]
    cycle_below: Option<usize>,
    /// Keep only hypergraphs with no Berge path of this length or longer.
    #[arg(long = "path-below")]
    path_below: Option<usize>,
    #[arg(long, value_enum, default_value = "auto")]
    dedup: DedupArg,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    theorem: String,
    #[arg(long, default_value_t = 1)]
    nmin: usize,
    #[arg(long)]
    nmax: usize,
    #[arg(long, value_delimiter = ',')]
    k: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    r: Vec<usize>,
    /// Instances per rank for the sampled theorems.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    report: Option<PathBuf>,
    /// Witness file for a violation.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(p) => write(p, text),
        None => stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn load(path: &Path) -> Result<Hypergraph> {
    Ok(Hypergraph::from_json(&read(path)?)?)
}

fn need(v: Option<usize>, flag: &str) -> Result<usize> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required here")))
}

fn caps(cap: Option<usize>) -> Caps {
    let mut c = Caps::from_env();
    if let Some(v) = cap {
        c.exhaustive = v;
        c.pruned = v;
    }
    c
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes") + "\n"
}

fn construct(a: ConstructArgs, stdout: &mut dyn Write) -> Result<Outcome> {
    let c: Construction = match a.family {
        FamilyArg::Hnka => build_hnka(need(a.n, "n")?, a.k, need(a.a, "a")?)?,
        FamilyArg::Hcal => build_hcal(need(a.n, "n")?, a.k, need(a.r, "r")?, need(a.a, "a")?)?,
        FamilyArg::Fnkrs => build_fnkrs(a.k, need(a.r, "r")?, need(a.s, "s")?)?,
    };
    let text = c.hypergraph.to_json() + "\n";
    match &a.out {
        Some(p) => {
            write(p, &text)?;
            let mut side = p.clone().into_os_string();
            side.push(".partition.json");
            write(Path::new(&side), &(c.partition_json() + "\n"))?;
            writeln!(stdout, "{} edges on {} vertices", c.num_edges(), c.hypergraph.n()).ok();
        }
        None => emit(None, &text, stdout)?,
    }
    Ok(Outcome::Ok)
}

fn check(a: CheckArgs, stdout: &mut dyn Write) -> Result<Outcome> {
    let h = load(&a.input)?;
    let all = !(a.sperner || a.connected || a.two_connected || a.happy);
    let mut lines = Vec::new();
    if all || a.sperner {
        lines.push(format!("sperner: {}", h.is_sperner()));
    }
    if all || a.connected {
        lines.push(format!("connected: {}", h.is_connected()));
    }
    if all || a.two_connected {
        lines.push(format!("two-connected: {}", is_2connected(&h)));
    }
    if all || a.happy {
        lines.push(format!("happy: {}", h.is_happy()));
    }
    writeln!(stdout, "{}", lines.join("\n")).ok();
    Ok(Outcome::Ok)
}

fn search(a: SearchArgs, stdout: &mut dyn Write) -> Result<Outcome> {
    let h = load(&a.input)?;
    let res = match a.kind {
        SearchKind::Cycle => circumference(&h, a.k),
        SearchKind::Path => longest_berge_path(&h, a.k),
        SearchKind::Xy => {
            let (x, y) = (need(a.x, "x")?, need(a.y, "y")?);
            if x >= h.n() || y >= h.n() || x == y {
                return Err(CliError::Usage(format!("--x and --y must be distinct vertices below {}", h.n())));
            }
            longest_berge_xy_path(&h, x, y, a.k)
        }
    };
    emit(a.out.as_deref(), &json(&res), stdout)?;
    Ok(Outcome::Ok)
}

fn core_cmd(a: CoreArgs, stdout: &mut dyn Write) -> Result<Outcome> {
    let g = Graph::from_json(&read(&a.input)?)?;
    let text = match (a.alpha, a.k) {
        (Some(alpha), None) => json(&disintegrate(&g, alpha)),
        (None, Some(k)) => {
            let rep = kopylov_case(&g, k)?;
            let text = json(&rep);
            if !rep.holds() {
                emit(a.out.as_deref(), &text, stdout)?;
                return Ok(Outcome::Violation);
            }
            text
        }
        _ => return Err(CliError::Usage("give exactly one of --alpha and --k".into())),
    };
    emit(a.out.as_deref(), &text, stdout)?;
    Ok(Outcome::Ok)
}

fn reduce(a: ReduceArgs, stdout: &mut dyn Write) -> Result<Outcome> {
    let h = load(&a.input)?;
    let tr = reduce_to_happy(&h, a.k)?;
    emit(a.out.as_deref(), &(tr.to_json() + "\n"), stdout)?;
    if let Some(why) = shrink_finding(&tr) {
        eprintln!("violation: {why}");
        return Ok(Outcome::Violation);
    }
    Ok(Outcome::Ok)
}

fn bounds(a: BoundsArgs, stdout: &mut dyn Write) -> Result<Outcome> {
    let (n, k, r, x) = (a.n, a.k, a.r, a.a);
    let opt = |v: berge_core::Result<num_bigint::BigUint>| v.map(|b| b.to_string()).unwrap_or_default();
    writeln!(stdout, "n,k,r,a,f,fstar,cycle_bound,path_bound").ok();
    writeln!(
        stdout,
        "{n},{k},{r},{x},{},{},{},{}",
        f(n, k, r, x)?,
        fstar(n, k, r, x)?,
        opt(main_cycle_bound(n, k, r)),
        opt(main_path_bound(n, k, r))
    )
    .ok();
    Ok(Outcome::Ok)
}

fn enumerate_cmd(a: EnumerateArgs, stdout: &mut dyn Write) -> Result<Outcome> {
    let mut space = SearchSpace::new(a.n, a.r).dedup(match a.dedup {
        DedupArg::Labeled => Dedup::Labeled,
        DedupArg::Isomorph => Dedup::Isomorph,
        DedupArg::Auto => Dedup::Auto,
    });
    if a.sperner {
        space = space.sperner();
    }
    if a.connected {
        space = space.connected();
    }
    if a.two_connected {
        space = space.two_connected();
    }
    if let Some(k) = a.cycle_below {
        space = space.objective(Objective::CycleBelow(k));
    }
    if let Some(k) = a.path_below {
        space = space.objective(Objective::PathBelow(k));
    }
    if a.workers == 0 {
        return Err(CliError::Usage("--workers must be positive".into()));
    }
    let (hs, stats) = enumerate::collect(&space, &caps(a.cap), a.workers)?;
    let mut text = String::new();
    for h in &hs {
        text.push_str(&h.to_json());
        text.push('\n');
    }
    match &a.out {
        Some(p) => {
            write(p, &text)?;
            writeln!(stdout, "{} hypergraphs, {} pruned subtrees", stats.visited, stats.pruned_subtrees).ok();
        }
        None => emit(None, &text, stdout)?,
    }
    Ok(Outcome::Ok)
}

fn verify_cmd(a: VerifyArgs, stdout: &mut dyn Write) -> Result<Outcome> {
    let theorem: Theorem = a.theorem.parse()?;
    if a.nmax < a.nmin || a.workers == 0 {
        return Err(CliError::Usage("need nmin <= nmax and a positive --workers".into()));
    }
    let sampled = matches!(theorem, Theorem::Lifting | Theorem::Shrink);
    if !sampled && a.k.is_empty() {
        return Err(CliError::Usage("--k is required for this theorem".into()));
    }
    if a.r.is_empty() {
        return Err(CliError::Usage("--r is required".into()));
    }
    let mut grid = Grid::new(a.nmax, &a.k, &a.r);
    grid.nmin = a.nmin;
    grid.seed = a.seed;
    grid.workers = a.workers;
    grid.caps = caps(a.cap);
    if sampled {
        grid.samples = need(a.samples, "samples")?;
    }
    let rep = verify(theorem, &grid)?;
    emit(a.report.as_deref(), &rep.to_csv(), stdout)?;
    let failures: Vec<_> = rep.failures().collect();
    if failures.is_empty() {
        return Ok(Outcome::Ok);
    }
    let path = match (&a.out, &a.report) {
        (Some(p), _) => p.clone(),
        (None, Some(r)) => {
            let mut s = r.clone().into_os_string();
            s.push(".witness.json");
            PathBuf::from(s)
        }
        (None, None) => PathBuf::from("berge-witness.json"),
    };
    write(&path, &json(&failures))?;
    eprintln!("{} violating grid points; witnesses in {}", failures.len(), path.display());
    Ok(Outcome::Violation)
}

/// Runs the CLI on `argv` (including the program name), writing normal
/// output to `stdout`. Returns the exit code.
pub fn run_with(argv: &[String], stdout: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            e.print().ok();
            return code;
        }
    };
    let res = match cli.command {
        Command::Construct(a) => construct(a, stdout),
        Command::Check(a) => check(a, stdout),
        Command::Search(a) => search(a, stdout),
        Command::Core(a) => core_cmd(a, stdout),
        Command::Reduce(a) => reduce(a, stdout),
        Command::Bounds(a) => bounds(a, stdout),
        Command::Enumerate(a) => enumerate_cmd(a, stdout),
        Command::Verify(a) => verify_cmd(a, stdout),
    };
    match res {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Violation) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn run(argv: &[String]) -> i32 {
    run_with(argv, &mut std::io::stdout().lock())
}

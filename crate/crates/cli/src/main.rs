use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use irs_power::code::Role;
use irs_power::keyeq::{build_context, build_pade_problem, coefficient_a};
use irs_power::pade::{solve_minimal, PadeSolutionFile};
use irs_power::radius::{radius_kl, radius_new, radius_wzb};
use irs_power::simlab::{run_trials, to_csv, to_json, Record, TrialConfig};
use irs_power::{decode, CodeSpec, DecodeOutcome, DecoderParams, Field, PadeProblem, WordMatrix};

#[derive(Parser)]
#[command(name = "irs-power", version, about = "Power decoding of interleaved Reed-Solomon codes")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print decoding radii.
    Radius(RadiusArgs),
    /// Decode a received word.
    Decode(DecodeArgs),
    /// Estimate failure rates by simulation.
    Simulate(SimulateArgs),
    /// Print the degree of every key-equation coefficient A_{i,j}.
    KeyeqDump(DumpArgs),
    /// Solve a Padé problem read from a JSON file.
    PadeSolve(PadeArgs),
}

#[derive(Args)]
struct RadiusArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    ell: u32,
    #[arg(long)]
    s: u32,
    /// Also print the KL radius.
    #[arg(long)]
    kl: bool,
    /// Also print the best s = 1 radius over ell <= ell-max.
    #[arg(long, requires = "ell_max")]
    wzb: bool,
    #[arg(long)]
    ell_max: Option<u32>,
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long)]
    code: PathBuf,
    #[arg(long)]
    received: PathBuf,
    #[arg(long)]
    ell: u32,
    #[arg(long)]
    s: u32,
    #[arg(long)]
    tau: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct SimulateArgs {
    /// JSON code file, or inline `p,e,n,k,m`.
    #[arg(long)]
    code: String,
    #[arg(long)]
    ell: u32,
    #[arg(long)]
    s: u32,
    #[arg(long)]
    tau: Option<usize>,
    /// A single weight or an inclusive range `A-B` / `A..B`.
    #[arg(long)]
    errors: String,
    #[arg(long)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct DumpArgs {
    #[arg(long)]
    code: String,
    #[arg(long)]
    received: PathBuf,
    #[arg(long)]
    ell: u32,
    #[arg(long)]
    s: u32,
    #[arg(long)]
    tau: Option<usize>,
}

#[derive(Args)]
struct PadeArgs {
    #[arg(long)]
    problem: PathBuf,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_code(arg: &str) -> Result<CodeSpec> {
    let path = Path::new(arg);
    if path.exists() {
        return Ok(CodeSpec::from_json(&read(path)?)?);
    }
    let parts: Vec<&str> = arg.split(',').map(str::trim).collect();
    let [p, e, n, k, m] = parts[..] else {
        bail!("`{arg}` is neither a file nor an inline p,e,n,k,m spec");
    };
    let field = Field::new(p.parse()?, e.parse()?, None)?;
    Ok(CodeSpec::new(field, n.parse()?, k.parse()?, m.parse()?)?)
}

fn params(code: &CodeSpec, ell: u32, s: u32, tau: Option<usize>) -> Result<DecoderParams> {
    let p = DecoderParams::new(code, ell, s)?;
    let Some(t) = tau else { return Ok(p) };
    let p = p.with_tau(t);
    if p.tau_clamped() {
        eprintln!("warning: tau {t} exceeds the decoding radius; using {}", p.tau());
    }
    Ok(p)
}

fn parse_errors(spec: &str) -> Result<Vec<usize>> {
    let bounds = spec.split_once("..").or_else(|| spec.split_once('-'));
    match bounds {
        None => Ok(vec![spec.trim().parse()?]),
        Some((a, b)) => {
            let (a, b): (usize, usize) = (a.trim().parse()?, b.trim().parse()?);
            if a > b {
                bail!("empty error range {spec}");
            }
            Ok((a..=b).collect())
        }
    }
}

fn radius(a: RadiusArgs) -> Result<ExitCode> {
    println!("tau_new {}", radius_new(a.n, a.k, a.m, a.ell, a.s)?);
    if a.kl {
        println!("tau_kl {}", radius_kl(a.n, a.k, a.m));
    }
    if a.wzb {
        let ell_max = a.ell_max.expect("enforced by clap");
        println!("tau_wzb {}", radius_wzb(a.n, a.k, a.m, ell_max)?);
    }
    Ok(ExitCode::SUCCESS)
}

fn run_decode(a: DecodeArgs) -> Result<ExitCode> {
    let code = CodeSpec::from_json(&read(&a.code)?)?;
    let r = WordMatrix::parse(&read(&a.received)?, &code, Role::Received)?;
    let p = params(&code, a.ell, a.s, a.tau)?;
    match decode(&r, &code, &p)? {
        DecodeOutcome::Success { message, .. } => {
            println!("success");
            for (t, f) in message.polys.iter().enumerate() {
                println!("f{t} {:?}", f.coeffs());
            }
            Ok(ExitCode::SUCCESS)
        }
        DecodeOutcome::Fail(stage) => {
            println!("fail {stage}");
            Ok(ExitCode::from(2))
        }
    }
}

fn simulate(a: SimulateArgs) -> Result<ExitCode> {
    let code = load_code(&a.code)?;
    let p = params(&code, a.ell, a.s, a.tau)?;
    let mut records = Vec::new();
    for eps in parse_errors(&a.errors)? {
        let cfg = TrialConfig {
            code: code.clone(),
            params: p,
            eps,
            trials: a.trials,
            master_seed: a.seed,
            workers: a.workers,
        };
        let stats = run_trials(&cfg)?;
        records.push(Record::new(&cfg, &stats));
    }
    let text = match a.format {
        Format::Csv => to_csv(&records),
        Format::Json => to_json(&records) + "\n",
    };
    match a.out {
        Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn keyeq_dump(a: DumpArgs) -> Result<ExitCode> {
    let code = load_code(&a.code)?;
    let r = WordMatrix::parse(&read(&a.received)?, &code, Role::Received)?;
    let p = params(&code, a.ell, a.s, a.tau)?;
    let ctx = build_context(&r, &code, p.ell(), p.s(), p.tau())?;
    let problem = build_pade_problem(&ctx);
    for i in problem.row_indices() {
        for j in problem.col_indices() {
            if !i.precedes(j) {
                continue;
            }
            let a = coefficient_a(i, j, &ctx)?;
            let deg = a.degree().map_or("-inf".to_string(), |d| d.to_string());
            println!("{:?} {:?} {deg}", i.entries(), j.entries());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn pade_solve(a: PadeArgs) -> Result<ExitCode> {
    let problem = PadeProblem::from_json(&read(&a.problem)?)?;
    match solve_minimal(&problem) {
        Some(sol) => println!("{}", serde_json::to_string(&PadeSolutionFile::from(&sol))?),
        None => println!("none"),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Command::Radius(a) => radius(a),
        Command::Decode(a) => run_decode(a),
        Command::Simulate(a) => simulate(a),
        Command::KeyeqDump(a) => keyeq_dump(a),
        Command::PadeSolve(a) => pade_solve(a),
    };
    res.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::FAILURE
    })
}

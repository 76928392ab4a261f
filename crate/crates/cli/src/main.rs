//! `nonret`: build witnesses, run operations and atoms on DFA files, and
//! verify the predicted maxima.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use nonret_core::atoms::{
    all_atom_complexities, atom_bound, atom_bound_printed, atom_dfa, binary_search,
    BinarySearchOptions,
};
use nonret_core::automata::{is_non_returning, text};
use nonret_core::harness::{self, Format, Range, RunConfig};
use nonret_core::ops::{self, OpId};
use nonret_core::transform::{
    check_generates_full_nonreturning, closure_with, ClosureOptions, Transformation,
};
use nonret_core::{build_witness, complexity, Dfa, Error, GammaVariant, OpMode, WitnessId};

#[derive(Parser)]
#[command(name = "nonret", version, about = "State complexity of non-returning regular languages")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run registered claims and report predicted against measured values.
    Verify(VerifyArgs),
    /// Run a single claim and print its table.
    Table(VerifyArgs),
    /// Print a witness DFA in the text format.
    Witness(WitnessArgs),
    /// Atoms of a DFA, or the exhaustive binary search.
    Atoms(AtomsArgs),
    /// Apply an operation to DFA files.
    Op(OpArgs),
    /// Size of a transformation semigroup.
    Semigroup(SemigroupArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim id; repeat for several. All claims when omitted.
    #[arg(long = "claim")]
    claims: Vec<String>,
    /// Range of n, e.g. 4..6.
    #[arg(long)]
    n: Option<String>,
    /// Range of m for binary claims.
    #[arg(long)]
    m: Option<String>,
    #[arg(long, default_value = "text")]
    format: String,
    /// Larger default ranges.
    #[arg(long)]
    long: bool,
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    /// Samples for randomized claims.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// List claim ids and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    n: usize,
    /// Positional roles a,b,c,d then optional G; `-` deletes a role.
    #[arg(long, default_value = "a,b,c,d,G")]
    dialect: String,
    /// Use the printed Γ' instead of the corrected one.
    #[arg(long)]
    printed_gamma: bool,
    /// Print role assignments and validity instead of the DFA.
    #[arg(long)]
    info: bool,
}

#[derive(Args)]
struct AtomsArgs {
    /// DFA file in the text format.
    #[arg(long)]
    dfa: Option<PathBuf>,
    /// Comma-separated subset S, e.g. 0,3.
    #[arg(long)]
    set: Option<String>,
    /// Report every subset.
    #[arg(long)]
    all: bool,
    /// Include the atom bounds.
    #[arg(long)]
    bounds: bool,
    /// Exhaustive search over binary non-returning DFAs.
    #[arg(long)]
    exhaustive_binary: bool,
    #[arg(long)]
    n: Option<usize>,
    /// Disable orbit canonicalization in the exhaustive search.
    #[arg(long)]
    plain: bool,
    #[arg(long)]
    long: bool,
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Dfa,
    Count,
    Json,
}

#[derive(Args)]
struct OpArgs {
    /// reverse, star, product, union, intersection, difference or symdiff.
    op: String,
    #[arg(long)]
    dfa: Option<PathBuf>,
    #[arg(long)]
    left: Option<PathBuf>,
    #[arg(long)]
    right: Option<PathBuf>,
    #[arg(long)]
    unrestricted: bool,
    #[arg(long, value_enum, default_value = "count")]
    emit: Emit,
}

#[derive(Args)]
struct SemigroupArgs {
    #[arg(long)]
    n: usize,
    /// File with one transformation per line, e.g. `[1,2,3,1]`.
    #[arg(long)]
    generators: Option<PathBuf>,
    /// Witness dialect to take the letters from when no file is given.
    #[arg(long, default_value = "a,b,c,d,G")]
    dialect: String,
    #[arg(long)]
    printed_gamma: bool,
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    #[arg(long, default_value = "text")]
    format: String,
}

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

fn read_dfa(path: &Path) -> CliResult<Dfa> {
    let src = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(text::parse(&src).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn config(args: &VerifyArgs) -> CliResult<RunConfig> {
    Ok(RunConfig {
        n: args.n.as_deref().map(str::parse::<Range>).transpose()?,
        m: args.m.as_deref().map(str::parse::<Range>).transpose()?,
        budget: args.budget,
        format: args.format.parse()?,
        seed: args.seed,
        long: args.long,
        samples: args.samples,
    })
}

fn verify(args: &VerifyArgs) -> CliResult<ExitCode> {
    if args.list {
        for c in harness::registry() {
            println!("{:<42} {}", c.id, c.summary);
        }
        return Ok(ExitCode::SUCCESS);
    }
    let cfg = config(args)?;
    let outcome = harness::verify_many(&args.claims, &cfg)?;
    print!("{}", harness::render(&outcome, cfg.format));
    Ok(ExitCode::from(outcome.exit_code() as u8))
}

fn table(args: &VerifyArgs) -> CliResult<ExitCode> {
    let [claim] = args.claims.as_slice() else {
        return Err("table needs exactly one --claim".into());
    };
    let cfg = config(args)?;
    let reports = harness::verify(claim, &cfg)?;
    let failed = reports.iter().any(|r| !r.passed());
    let outcome = harness::Outcome {
        reports,
        errors: Vec::new(),
    };
    print!("{}", harness::render(&outcome, cfg.format));
    Ok(if failed { ExitCode::FAILURE } else { ExitCode::SUCCESS })
}

fn gamma(printed: bool) -> GammaVariant {
    if printed {
        GammaVariant::Printed
    } else {
        GammaVariant::Corrected
    }
}

fn witness(args: &WitnessArgs) -> CliResult<ExitCode> {
    let id = WitnessId::new(args.n, &args.dialect)?.with_gamma(gamma(args.printed_gamma));
    let w = build_witness(&id)?;
    if args.info {
        println!("{}", id.name());
        for (role, letter) in w.roles() {
            let t = role.transformation(args.n);
            let ty = t.type_of().map_or("-".to_string(), |p| p.to_string());
            println!("  {letter:<8} {role:<10} {:<24} type {ty}", t.cycle_notation());
        }
        println!("complexity {} of {} states", w.complexity, w.dfa.states());
        println!("non-returning {}", is_non_returning(&w.dfa));
    } else {
        print!("{}", text::print(&w.dfa));
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_set(s: &str) -> CliResult<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(s
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("bad --set '{s}': {e}"))?)
}

fn atoms(args: &AtomsArgs) -> CliResult<ExitCode> {
    let format: Format = args.format.parse()?;
    if args.exhaustive_binary {
        let n = args.n.ok_or("--exhaustive-binary needs --n")?;
        let summary = binary_search(BinarySearchOptions {
            canonicalize: !args.plain,
            allow_large: args.long,
            ..BinarySearchOptions::new(n)
        })?;
        let report = summary.report();
        if format == Format::Json {
            let value = json!({
                "schema": 1,
                "n": n,
                "canonicalized": summary.canonicalized,
                "total_dfas": summary.total_dfas,
                "pairs_visited": summary.pairs_visited,
                "minimal": summary.minimal,
                "non_minimal": summary.non_minimal,
                "max_atoms": summary.max_atoms,
                "max_count": summary.max_count,
                "report": report,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        } else {
            println!("n = {n}: {} DFAs, {} minimal", summary.total_dfas, summary.minimal);
            println!("maximum atoms {} (bound 2^n = {}), attained by {}", summary.max_atoms, 1u64 << n, summary.max_count);
            if let Some(d) = &summary.example {
                println!("example:");
                print!("{}", text::print(d));
            }
            println!("status {}", report.status.as_str());
        }
        return Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE });
    }

    let path = args.dfa.as_ref().ok_or("atoms needs --dfa or --exhaustive-binary")?;
    let d = read_dfa(path)?;
    let n = d.states();
    let rows: Vec<(Vec<usize>, Option<usize>)> = match (&args.set, args.all) {
        (Some(s), _) => {
            let set = parse_set(s)?;
            let ad = atom_dfa(&d, &set)?;
            let kappa = ad.accepts_something().then(|| nonret_core::minimize(&ad.dfa).states());
            vec![(set, kappa)]
        }
        (None, _) => all_atom_complexities(&d)?,
    };
    let rows: Vec<_> = if args.all || args.set.is_some() {
        rows
    } else {
        rows.into_iter().filter(|(_, k)| k.is_some()).collect()
    };
    let atoms_total = rows.iter().filter(|(_, k)| k.is_some()).count();
    let entry = |set: &Vec<usize>, k: &Option<usize>| {
        let bound = atom_bound(n, set.len());
        json!({
            "n": n,
            "S": set,
            "is_atom": k.is_some(),
            "complexity": k,
            "bound": bound,
            "bound_printed": atom_bound_printed(n, set.len()),
            "tight": k.map(|k| k as u64 == bound),
        })
    };
    match format {
        Format::Json => {
            let list: Vec<_> = rows.iter().map(|(s, k)| entry(s, k)).collect();
            println!("{}", serde_json::to_string_pretty(&json!({ "schema": 1, "atoms": list }))?);
        }
        _ => {
            for (set, k) in &rows {
                let kappa = k.map_or("empty".to_string(), |k| k.to_string());
                if args.bounds {
                    let b = atom_bound(n, set.len());
                    println!("S={set:?} complexity {kappa} bound {b} printed {}", atom_bound_printed(n, set.len()));
                } else {
                    println!("S={set:?} complexity {kappa}");
                }
            }
            if args.set.is_none() {
                println!("{atoms_total} atoms");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn op(args: &OpArgs) -> CliResult<ExitCode> {
    let id: OpId = args.op.parse()?;
    let mode = if args.unrestricted {
        OpMode::Unrestricted
    } else {
        OpMode::Restricted
    };
    let (result, sizes) = match id {
        OpId::Reverse | OpId::Star => {
            let d = read_dfa(args.dfa.as_ref().ok_or("unary operations need --dfa")?)?;
            let r = if id == OpId::Reverse { ops::reverse(&d) } else { ops::star(&d) };
            (r, (0, complexity(&d)))
        }
        OpId::Product(_) | OpId::Boolean(..) => {
            let l = read_dfa(args.left.as_ref().ok_or("binary operations need --left")?)?;
            let r = read_dfa(args.right.as_ref().ok_or("binary operations need --right")?)?;
            let out = match id {
                OpId::Boolean(op, _) => ops::boolean(&l, &r, op, mode)?,
                _ => ops::product(&l, &r, mode)?,
            };
            (out, (complexity(&l), complexity(&r)))
        }
    };
    let full_id = match id {
        OpId::Product(_) => OpId::Product(mode),
        OpId::Boolean(op, _) => OpId::Boolean(op, mode),
        other => other,
    };
    match args.emit {
        Emit::Dfa => print!("{}", text::print(&result)),
        Emit::Count => println!("{}", result.states()),
        Emit::Json => {
            let bound = ops::formula_for(full_id);
            let value = json!({
                "schema": 1,
                "op": full_id.to_string(),
                "m": sizes.0,
                "n": sizes.1,
                "complexity": result.states(),
                "alphabet": result.alphabet().names(),
                "bound_formula": bound.formula,
                "bound": bound.eval(sizes.0, sizes.1),
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_generators(src: &str) -> CliResult<Vec<Transformation>> {
    let mut out = Vec::new();
    for (i, line) in src.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let t = line
            .parse::<Transformation>()
            .or_else(|_| {
                let images = line
                    .split_whitespace()
                    .map(|x| x.parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| Error::Parse {
                        line: i + 1,
                        message: e.to_string(),
                    })?;
                Transformation::new(images)
            })
            .map_err(|e| format!("line {}: {e}", i + 1))?;
        out.push(t);
    }
    Ok(out)
}

fn semigroup(args: &SemigroupArgs) -> CliResult<ExitCode> {
    let gens = match &args.generators {
        Some(path) => parse_generators(&fs::read_to_string(path)?)?,
        None => {
            let id = WitnessId::new(args.n, &args.dialect)?.with_gamma(gamma(args.printed_gamma));
            let w = build_witness(&id)?;
            w.dfa.letter_transformations().into_iter().map(|(_, t)| t).collect()
        }
    };
    if let Some(g) = gens.iter().find(|g| g.degree() != args.n) {
        return Err(format!("generator {g} has degree {}, expected {}", g.degree(), args.n).into());
    }
    let s = closure_with(
        &gens,
        ClosureOptions {
            budget: args.budget,
            ..ClosureOptions::default()
        },
    )?;
    let full = (args.n as u64 - 1).pow(args.n as u32);
    let all_nonreturning = gens.iter().all(Transformation::is_non_returning);
    let report = if all_nonreturning {
        Some(check_generates_full_nonreturning(&gens, args.n)?)
    } else {
        None
    };
    if args.format == "json" {
        let value = json!({
            "schema": 1,
            "n": args.n,
            "generators": gens.len(),
            "size": s.len(),
            "full_nonreturning": full,
            "report": report,
        });
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        println!("{} generators, semigroup size {}", gens.len(), s.len());
        if let Some(r) = &report {
            println!("(n-1)^n = {full}, status {}", r.status.as_str());
            for note in &r.notes {
                println!("  {note}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn configure_threads() -> CliResult<()> {
    if let Ok(v) = std::env::var("NONRET_THREADS") {
        let threads: usize = v.parse().map_err(|_| format!("NONRET_THREADS='{v}' is not a number"))?;
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    configure_threads()?;
    match &cli.command {
        Command::Verify(a) => verify(a),
        Command::Table(a) => table(a),
        Command::Witness(a) => witness(a),
        Command::Atoms(a) => atoms(a),
        Command::Op(a) => op(a),
        Command::Semigroup(a) => semigroup(a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

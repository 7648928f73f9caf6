use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use semidual::census::{census_with_progress, CSV_HEADER};
use semidual::classify::VerdictReport;
use semidual::enumerate::EnumerateOptions;
use semidual::probe::{builtin_alter_ego, ic_probe, ic_probe_sampled};
use semidual::witness::{
    build_plane, closure_with, derive_template_nilpotent, find_template_commutator, find_template_raw,
    ghost, ghost_membership, ind_bookkeeping_check, line_generators, line_identity_holds, ClosureReport,
    TemplateT, WitnessError, DEFAULT_BUDGET,
};
use semidual::{catalog, classify, FiniteGroup, FiniteSemigroup};

/// Input errors and rejected flags.
const EXIT_USAGE: u8 = 2;
/// A run that completed with a negative answer (no template, budget hit,
/// a morphism without a term function).
const EXIT_NEGATIVE: u8 = 1;

#[derive(Parser)]
#[command(name = "semidual", version, about = "Nondualisability checks for finite semigroups")]
struct Cli {
    /// Not supported: every computation is deterministic.
    #[arg(long, global = true, hide = true)]
    seed: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a semigroup given as a table file or `catalog:NAME`.
    Analyze {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Build the plane witness over PG(2, q) and report on the ghost.
    Witness {
        input: String,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value_t = Mode::Raw)]
        mode: Mode,
        /// Maximum closure size.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
    /// Counts and criterion rates over all semigroups of order n, as CSV.
    Census {
        n: usize,
        /// Allow order 5.
        #[arg(long)]
        unbounded: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the interpolation condition for a built-in alter ego.
    IcProbe {
        input: String,
        #[arg(long)]
        arity: usize,
        /// Substructures tried at arity 3, which is sampled.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Print a catalog entry, or every name with `--list`.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Raw,
    Commutator,
    Nilpotent,
}

struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn usage(error: anyhow::Error) -> Failure {
    Failure { code: EXIT_USAGE, error }
}

fn negative(error: anyhow::Error) -> Failure {
    Failure { code: EXIT_NEGATIVE, error }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.seed.is_some() {
        eprintln!("error: --seed is not accepted; every computation is deterministic");
        return ExitCode::from(EXIT_USAGE);
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Analyze { input, json } => analyze(&input, json),
        Command::Witness { input, q, mode, budget, json } => witness(&input, q, mode, budget, json),
        Command::Census { n, unbounded, json } => census(n, unbounded, json),
        Command::IcProbe { input, arity, samples } => probe(&input, arity, samples),
        Command::Catalog { name, list } => show_catalog(name.as_deref(), list),
    }
}

fn load(input: &str) -> Result<(String, FiniteSemigroup), Failure> {
    if let Some(name) = input.strip_prefix("catalog:") {
        let entry = catalog(name).map_err(|e| usage(e.into()))?;
        return Ok((entry.name, entry.semigroup));
    }
    let path = Path::new(input);
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {input}"))
        .map_err(usage)?;
    let s = FiniteSemigroup::parse_text(&text)
        .with_context(|| format!("parsing {input}"))
        .map_err(usage)?;
    let name = path
        .file_stem()
        .map(|stem| stem.to_string_lossy().into_owned())
        .unwrap_or_else(|| input.to_string());
    Ok((name, s))
}

fn catalog_name(input: &str) -> Result<&str, Failure> {
    input
        .strip_prefix("catalog:")
        .ok_or_else(|| usage(anyhow!("expected catalog:NAME, got {input}")))
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialise"));
}

fn analyze(input: &str, json: bool) -> Result<u8, Failure> {
    let (name, s) = load(input)?;
    let verdict = classify(&s);
    if json {
        print_json(&VerdictReport::new(&name, &s, &verdict));
    } else {
        println!("{name}: order {}, {:?}", s.order(), verdict.status);
        for hit in &verdict.fired_criteria {
            println!("  {:?}  {}", hit.criterion_id, hit.citation);
            println!("      witness: {}", serde_json::to_string(&hit.witness).expect("witness serialises"));
        }
        for note in &verdict.notes {
            println!("  note: {note}");
        }
    }
    Ok(verdict.exit_code() as u8)
}

fn template_for(s: &FiniteSemigroup, mode: Mode) -> Result<TemplateT, Failure> {
    match mode {
        Mode::Raw => find_template_raw(s).ok_or_else(|| negative(anyhow!("no raw template in this semigroup"))),
        Mode::Commutator => {
            let g = FiniteGroup::from_semigroup(s.clone())
                .map_err(|e| usage(anyhow!("commutator mode needs a group: {e}")))?;
            find_template_commutator(&g).ok_or_else(|| negative(anyhow!("the group is abelian")))
        }
        Mode::Nilpotent => s
            .elements()
            .flat_map(|a| s.elements().map(move |c| (a, c)))
            .find_map(|(a, c)| derive_template_nilpotent(s, a, c).ok())
            .ok_or_else(|| negative(anyhow!("no pair (a, c) yields a nondegenerate template"))),
    }
}

fn witness(input: &str, q: usize, mode: Mode, budget: usize, json: bool) -> Result<u8, Failure> {
    let (name, s) = load(input)?;
    let plane = build_plane(q).map_err(|e| usage(e.into()))?;
    let t = template_for(&s, mode)?;
    let generators = line_generators(&t, &plane);
    let result = match closure_with(&s, &generators, t.mode, budget) {
        Ok(r) => r,
        Err(e @ WitnessError::ClosureBudgetExceeded { .. }) => return Err(negative(e.into())),
        Err(e) => return Err(usage(e.into())),
    };
    let report = ClosureReport::new(&name, &plane, &t, &result);
    let membership = ghost_membership(&result, &ghost(&t, &plane));
    let ind = ind_bookkeeping_check(&result, &t, &plane, s.order());
    let identity = line_identity_holds(&s, &t, &plane);
    if json {
        print_json(&serde_json::json!({
            "report": report,
            "line_identity": identity,
            "ghost": membership,
            "ind_check": ind.as_ref().ok(),
            "ind_check_skipped": ind.as_ref().err().map(|e| e.to_string()),
        }));
    } else {
        println!("{name} over PG(2,{q}), template {:?}", t);
        println!("  line identity: {identity}");
        println!("  generators: {}, closure members: {}", report.generator_count, report.member_count);
        match &membership.derivation {
            Some(word) => println!("  ghost is generated: word {word:?}"),
            None => println!("  ghost is not generated"),
        }
        match &ind {
            Ok(r) => println!("  block check over {} coordinates: {}", r.coordinates.len(), r.passed),
            Err(e) => println!("  block check skipped: {e}"),
        }
    }
    Ok(0)
}

fn census(n: usize, unbounded: bool, json: bool) -> Result<u8, Failure> {
    let show_progress = n > semidual::enumerate::BOUNDED_ORDER;
    let progress = |done: usize, total: usize| {
        if show_progress && (done.is_multiple_of(64) || done == total) {
            eprintln!("  {done}/{total} first rows");
        }
    };
    let record = census_with_progress(n, EnumerateOptions { unbounded }, progress).map_err(|e| usage(e.into()))?;
    if json {
        print_json(&record);
    } else {
        println!("{CSV_HEADER}");
        println!("{}", record.csv_row());
    }
    Ok(0)
}

fn probe(input: &str, arity: usize, samples: usize) -> Result<u8, Failure> {
    let name = catalog_name(input)?;
    let (_, s) = load(input)?;
    let ego = builtin_alter_ego(name, &s).map_err(|e| usage(e.into()))?;
    let report = match arity {
        3 => ic_probe_sampled(&s, &ego, samples),
        _ => ic_probe(&s, &ego, arity),
    }
    .map_err(|e| usage(e.into()))?;
    print_json(&report);
    Ok(if report.all_extend { 0 } else { EXIT_NEGATIVE })
}

fn show_catalog(name: Option<&str>, list: bool) -> Result<u8, Failure> {
    match (name, list) {
        (_, true) => {
            for n in semidual::catalog::NAMES {
                println!("{n}");
            }
        }
        (Some(name), false) => {
            let entry = catalog(name).map_err(|e| usage(e.into()))?;
            eprintln!("# {}", entry.provenance);
            print!("{}", entry.semigroup.to_text());
        }
        (None, false) => return Err(usage(anyhow!("give a name or --list"))),
    }
    Ok(0)
}

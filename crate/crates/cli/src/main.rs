use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use omlkit_core::accept::{self, DEFAULT_SEED};
use omlkit_core::equations::resolve;
use omlkit_core::freeoml::{self, apply_binary, canonical_term, diff_table, FreeElem, TABLE_1};
use omlkit_core::hilbert::check_equation_random;
use omlkit_core::model::{
    self, assignment_count, check_equation, check_law, foulis_holland_check,
    iff_characterization, theta_relation, woml20_profile, Law,
};
use omlkit_core::report::{Exit, Report};
use omlkit_core::{CheckResult, ConnIndex, ElemId, Mode, Model, ModelError, Term};

/// Exhaustive checks above this many assignments need `--force`.
const GUARD: u64 = 1 << 30;

#[derive(Parser)]
#[command(name = "omlkit", version, about = "Orthomodular lattice toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Beran number and canonical term of a two-variable expression
    Beran {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Products (a ->i b) ^ (b ->j a) against the reference table
    Table {
        /// Six lines of six Beran numbers to compare against
        #[arg(long)]
        expected: Option<PathBuf>,
    },
    /// Equation, law, characterization and congruence checks on a model
    Check(CheckArgs),
    /// Closure of a seed set under binary operations in the free lattice
    Closure(ClosureArgs),
    /// Load a model and report its laws
    Validate {
        model: String,
        /// Also run the gates of a named profile
        #[arg(long)]
        profile: Option<String>,
    },
    /// Random checks over subspaces of Q^n
    Hilbert {
        #[arg(long)]
        eq: String,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the acceptance suite
    Accept {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Run only these criteria
        #[arg(long = "criterion", value_parser = clap::value_parser!(u8).range(1..=9))]
        criteria: Vec<u8>,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("what").required(true).args(["eq", "law", "iff", "theta", "fh"])))]
struct CheckArgs {
    /// Built-in model name or model file
    model: String,
    /// Equation text or alias EQ1..EQ7
    #[arg(long)]
    eq: Option<String>,
    /// ortholattice, oml or woml
    #[arg(long)]
    law: Option<String>,
    /// p ==i q = 1 iff p = q, for index i
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=5))]
    iff: Option<u8>,
    /// The relation p ==i q = 1
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=5))]
    theta: Option<u8>,
    /// Distributivity on commuting triples
    #[arg(long)]
    fh: bool,
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    mode: ModeArg,
    #[arg(long, default_value_t = 10000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Lift the exhaustive-size guard
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Args)]
struct ClosureArgs {
    /// Comma-separated seeds: terms in a, b (including 0 and 1) or Beran numbers 2..96
    #[arg(long, default_value = "a,b,0,1")]
    from: String,
    /// Binary operation as a term in a, b (repeatable)
    #[arg(long = "op")]
    ops: Vec<String>,
    #[arg(long, value_enum)]
    preset: Option<Preset>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    /// ==0 .. ==5
    Equivalences,
    /// meet and join
    Lattice,
    /// meet, join and complement
    Ortho,
}

/// A usage or input error; reported on stderr with exit status 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(cli.command) {
        Ok(report) => {
            print!("{report}");
            println!("time_ms\t{}", start.elapsed().as_millis());
            ExitCode::from(report.exit() as u8)
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(Exit::Usage as u8)
        }
    }
}

fn run(command: Command) -> Result<Report, Usage> {
    match command {
        Command::Beran { expr } => beran(&expr),
        Command::Table { expected } => table(expected.as_deref()),
        Command::Check(args) => check(args),
        Command::Closure(args) => closure(args),
        Command::Validate { model, profile } => validate(&model, profile.as_deref()),
        Command::Hilbert {
            eq,
            dim,
            trials,
            seed,
        } => hilbert(&eq, dim, trials, seed),
        Command::Accept { seed, criteria } => Ok(accept_report(seed, &criteria)),
    }
}

fn beran(expr: &str) -> Result<Report, Usage> {
    let t = Term::parse(expr)?;
    let n = freeoml::beran_of(&t)?;
    let canonical = canonical_term(usize::from(n))?;
    let mut r = Report::new();
    r.push("command", format!("beran {t}"));
    r.push("beran", n);
    r.push("canonical", &canonical);
    r.push("result", format!("{n}  {canonical}"));
    Ok(r)
}

fn read_table(path: &Path) -> Result<[[u8; 6]; 6], Usage> {
    let text = std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    let rows: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let mut out = [[0u8; 6]; 6];
    if rows.len() != 6 {
        return Err(Usage(format!("expected 6 rows, found {}", rows.len())));
    }
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<&str> = row.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).collect();
        if cells.len() != 6 {
            return Err(Usage(format!("row {}: expected 6 entries", i + 1)));
        }
        for (j, cell) in cells.iter().enumerate() {
            out[i][j] = cell
                .parse()
                .map_err(|_| Usage(format!("row {}: bad entry `{cell}`", i + 1)))?;
        }
    }
    Ok(out)
}

fn table(expected: Option<&Path>) -> Result<Report, Usage> {
    let reference = match expected {
        Some(p) => read_table(p)?,
        None => TABLE_1,
    };
    let computed = freeoml::product_table();
    let mut r = Report::new();
    r.push("command", "table");
    for (i, row) in computed.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            r.push(format!("entry.{i}.{j}"), v);
        }
    }
    let diff = diff_table(&computed, &reference);
    for d in &diff {
        r.push(
            format!("mismatch.{}.{}", d.row, d.col),
            format!("computed {} expected {}", d.computed, d.expected),
        );
    }
    r.push("mismatches", diff.len());
    if !diff.is_empty() {
        r.fail(Exit::Violation);
    }
    Ok(r)
}

fn load_model(source: &str) -> Result<Model, Usage> {
    match model::builtin(source) {
        Ok(m) => Ok(m),
        Err(ModelError::UnknownName(_)) if Path::new(source).is_file() => {
            let text = std::fs::read_to_string(source).map_err(|e| Usage(format!("{source}: {e}")))?;
            Ok(model::load(&text)?)
        }
        Err(e) => Err(e.into()),
    }
}

fn index(i: u8) -> ConnIndex {
    ConnIndex::new(i).expect("range checked by the argument parser")
}

fn push_result(r: &mut Report, m: &Model, result: &CheckResult<ElemId>) {
    r.push("status", result.status);
    r.push("assignments", result.assignments_checked);
    if let Some(w) = &result.witness {
        r.push("witness", w.map(|&e| m.name_of(e).to_string()));
        r.fail(Exit::Violation);
    }
}

fn check(args: CheckArgs) -> Result<Report, Usage> {
    let m = load_model(&args.model)?;
    let mut r = Report::new();
    r.push("model", m.name());
    r.push("elements", m.len());

    if let Some(text) = &args.eq {
        let eq = resolve(text)?;
        let mode = match args.mode {
            ModeArg::Exhaustive => {
                let count = assignment_count(&m, eq.variables().len());
                if !args.force && count.is_none_or(|c| c > GUARD) {
                    return Err(Usage(format!(
                        "{} assignments exceed the exhaustive limit of 2^30; use --force or --mode random",
                        count.map_or("too many".to_string(), |c| c.to_string())
                    )));
                }
                Mode::Exhaustive
            }
            ModeArg::Random => Mode::Random {
                trials: args.trials,
                seed: args.seed,
            },
        };
        r.push("equation", &eq);
        match mode {
            Mode::Exhaustive => r.push("mode", "exhaustive"),
            Mode::Random { trials, seed } => r.push("mode", format!("random trials={trials} seed={seed}")),
        }
        push_result(&mut r, &m, &check_equation(&m, &eq, mode));
    } else if let Some(name) = &args.law {
        let law = Law::parse(name).ok_or_else(|| Usage(format!("unknown law `{name}`")))?;
        r.push("law", name.to_ascii_lowercase());
        push_result(&mut r, &m, &check_law(&m, law));
    } else if let Some(i) = args.iff {
        r.push("iff", i);
        push_result(&mut r, &m, &iff_characterization(&m, index(i)));
    } else if let Some(i) = args.theta {
        let t = theta_relation(&m, index(i));
        let name = |e: ElemId| m.name_of(e).to_string();
        r.push("theta", i);
        r.push("pairs", t.pairs.len());
        r.push("equivalence", t.is_equivalence());
        r.push("congruence", t.is_congruence());
        r.push("identity", t.is_identity());
        if let Some(p) = t.reflexive_failure {
            r.push("reflexive_failure", name(p));
        }
        if let Some((p, q)) = t.symmetric_failure {
            r.push("symmetric_failure", format!("{} {}", name(p), name(q)));
        }
        if let Some((p, q, s)) = t.transitive_failure {
            r.push("transitive_failure", format!("{} {} {}", name(p), name(q), name(s)));
        }
        if let Some(f) = t.congruence_failure {
            let mut text = format!("{} {} {}", f.op, name(f.left.0), name(f.left.1));
            if let Some((p, q)) = f.right {
                text.push_str(&format!(" {} {}", name(p), name(q)));
            }
            r.push("congruence_failure", text);
        }
        if !t.is_congruence() {
            r.fail(Exit::Violation);
        }
    } else {
        r.push("check", "foulis-holland");
        push_result(&mut r, &m, &foulis_holland_check(&m));
    }
    Ok(r)
}

fn seed_elem(item: &str) -> Result<FreeElem, Usage> {
    if let Ok(n) = item.parse::<usize>() {
        if n > 1 {
            return Ok(FreeElem::from_beran(n)?);
        }
    }
    let t = Term::parse(item)?;
    Ok(apply_binary(&t, FreeElem::A, FreeElem::B)?)
}

fn closure(args: ClosureArgs) -> Result<Report, Usage> {
    let seeds = args
        .from
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(seed_elem)
        .collect::<Result<Vec<_>, _>>()?;
    let mut ops: Vec<Term> = match args.preset {
        Some(Preset::Equivalences) => ConnIndex::ALL
            .iter()
            .map(|&i| Term::equiv(i, Term::var("a"), Term::var("b")))
            .collect(),
        Some(Preset::Lattice) => vec![Term::parse("a ^ b")?, Term::parse("a v b")?],
        Some(Preset::Ortho) => vec![Term::parse("a ^ b")?, Term::parse("a v b")?, Term::parse("a'")?],
        None => Vec::new(),
    };
    for text in &args.ops {
        ops.push(Term::parse(text)?);
    }
    let reached = freeoml::closure(&seeds, &ops)?;
    let odd = reached.iter().filter(|e| !e.boolean.is_even()).count();
    let numbers: Vec<String> = reached.iter().map(|e| e.beran().to_string()).collect();

    let mut r = Report::new();
    r.push("command", "closure");
    let shown: Vec<String> = seeds.iter().map(|e| e.beran().to_string()).collect();
    r.push("seeds", shown.join(" "));
    let shown: Vec<String> = ops.iter().map(Term::to_string).collect();
    r.push("ops", shown.join(" ; "));
    r.push("reached", reached.len());
    r.push("elements", numbers.join(" "));
    r.push("odd_weight", odd);
    r.push("parity", if odd == 0 { "even" } else { "mixed" });
    r.push("complete", reached.len() == 96);
    Ok(r)
}

fn validate(source: &str, profile: Option<&str>) -> Result<Report, Usage> {
    let m = load_model(source)?;
    let mut r = Report::new();
    r.push("model", m.name());
    r.push("elements", m.len());
    for (key, law) in [
        ("ortholattice", Law::Ortholattice),
        ("woml", Law::Woml),
        ("oml", Law::Oml),
    ] {
        let result = check_law(&m, law);
        r.push(key, result.status);
        if let Some(w) = &result.witness {
            r.push(format!("{key}.witness"), w.map(|&e| m.name_of(e).to_string()));
        }
    }
    match profile {
        None => {}
        Some("woml20") => {
            for gate in woml20_profile(&m) {
                let verdict = if gate.passed { "pass" } else { "fail" };
                r.push(format!("gate.{}", gate.name), format!("{verdict} {}", gate.detail).trim_end());
                if !gate.passed {
                    r.fail(Exit::Violation);
                }
            }
        }
        Some(other) => return Err(Usage(format!("unknown profile `{other}`"))),
    }
    Ok(r)
}

fn hilbert(text: &str, dim: usize, trials: u64, seed: u64) -> Result<Report, Usage> {
    if dim == 0 {
        return Err(Usage("--dim must be at least 1".into()));
    }
    let eq = resolve(text)?;
    let result = check_equation_random(dim, &eq, trials, seed);
    let mut r = Report::new();
    r.push("equation", &eq);
    r.push("dim", dim);
    r.push("seed", seed);
    r.push("status", result.status);
    r.push("trials", result.assignments_checked);
    if let Some(w) = &result.witness {
        r.push("witness", w);
        r.fail(Exit::Violation);
    }
    Ok(r)
}

fn accept_report(seed: u64, only: &[u8]) -> Report {
    let mut r = Report::new();
    r.push("command", format!("accept seed={seed}"));
    let mut timings = Report::new();
    let mut passed = 0;
    let mut total = 0;
    for &(id, _) in &accept::CRITERIA {
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let outcome = accept::run_criterion(id, seed).expect("listed criterion");
        total += 1;
        let verdict = if outcome.passed {
            passed += 1;
            "pass"
        } else {
            r.fail(Exit::Violation);
            "FAIL"
        };
        r.push(format!("criterion.{id}"), format!("{verdict} {}", outcome.title));
        for (k, v) in outcome.records.records() {
            r.push(format!("{id}.{k}"), v);
        }
        timings.push(format!("time_ms.{id}"), outcome.elapsed.as_millis());
    }
    r.push("passed", format!("{passed}/{total}"));
    r.extend(timings);
    r
}

//! normality — exact monomial-ideal toolkit: ideal arithmetic, integral
//! closures of powers, Rees-cone Hilbert bases, graph cover ideals, and a
//! claim-verification harness.

mod claims;
mod fixtures;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use num::ToPrimitive;
use serde::Serialize;

use normality::closure;
use normality::cone;
use normality::constructions::{self, NamedConstruction};
use normality::graph::SimpleGraph;
use normality::ideal::MonomialIdeal;
use normality::io;
use normality::ExponentVector;

#[derive(Parser)]
#[command(
    name = "normality",
    version,
    about = "Exact monomial-ideal normality toolkit",
    propagate_version = true
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Largest power checked by `closure check`
    #[arg(long, global = true, default_value_t = 4)]
    max_power: u32,

    /// Wall-clock budget in seconds for `verify`; claims that would start
    /// past the budget are reported as not run
    #[arg(long, global = true)]
    timeout: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Read, combine, and write ideals in the text format
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Integral closures of powers via the Newton polyhedron
    #[command(subcommand)]
    Closure(ClosureCmd),
    /// Rees cones and their Hilbert bases
    #[command(subcommand)]
    Rees(ReesCmd),
    /// Graph families, minimal covers, and graph ideals
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Named ideal constructions and witness monomials
    #[command(subcommand)]
    Make(MakeCmd),
    /// Run registered verification claims
    Verify(VerifyArgs),
    /// List and export frozen reference fixtures
    #[command(subcommand)]
    Fixtures(FixturesCmd),
}

#[derive(Args)]
struct InFile {
    /// Ideal file to read
    #[arg(short, long)]
    input: PathBuf,
}

#[derive(Args)]
struct OutFile {
    /// Write here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TwoFiles {
    /// Left operand ideal file
    #[arg(short = 'a', long)]
    left: PathBuf,
    /// Right operand ideal file
    #[arg(short = 'b', long)]
    right: PathBuf,
    #[command(flatten)]
    out: OutFile,
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Print an ideal in canonical form with basic facts
    Show(InFile),
    /// Sum of two ideals
    Sum(TwoFiles),
    /// Product of two ideals
    Product(TwoFiles),
    /// Intersection of two ideals
    Intersect(TwoFiles),
    /// Colon ideal (left : right)
    Colon(TwoFiles),
    /// k-th power
    Power {
        #[command(flatten)]
        input: InFile,
        /// Exponent k >= 1
        #[arg(short = 'k', long)]
        power: u32,
        #[command(flatten)]
        out: OutFile,
    },
}

#[derive(Subcommand)]
enum ClosureCmd {
    /// Minimal generators of the integral closure of the d-th power
    Gens {
        #[command(flatten)]
        input: InFile,
        /// Power d >= 1
        #[arg(short = 'd', long)]
        power: u32,
        #[command(flatten)]
        out: OutFile,
    },
    /// Check closedness of every power up to --max-power
    Check(InFile),
    /// Check (I^(k+1) : I) = I^k for k up to --max-k
    Persistence {
        #[command(flatten)]
        input: InFile,
        /// Largest k checked
        #[arg(long, default_value_t = 2)]
        max_k: u32,
    },
}

#[derive(Subcommand)]
enum ReesCmd {
    /// Hilbert basis of the Rees cone, one row per element, degree last
    Hilbert {
        #[command(flatten)]
        input: InFile,
        #[command(flatten)]
        out: OutFile,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Build a named family: cycle, path, complete, wheel, helm, kss
    Make {
        /// Family name
        family: String,
        /// Size parameter
        n: usize,
        #[command(flatten)]
        out: OutFile,
    },
    /// List all minimal vertex covers
    Covers {
        /// Graph file to read
        #[arg(short, long)]
        graph: PathBuf,
    },
    /// Cover ideal of a graph
    CoverIdeal {
        #[arg(short, long)]
        graph: PathBuf,
        #[command(flatten)]
        out: OutFile,
    },
    /// Edge ideal of a graph
    EdgeIdeal {
        #[arg(short, long)]
        graph: PathBuf,
        #[command(flatten)]
        out: OutFile,
    },
}

#[derive(Subcommand)]
enum MakeCmd {
    /// The cycle-family ideal L_n in n+2 variables
    #[command(alias = "Ln")]
    Ln {
        n: usize,
        #[command(flatten)]
        out: OutFile,
    },
    /// The seven-generator counterexample ideal
    T(OutFile),
    /// The ten-variable two-block counterexample ideal
    Q(OutFile),
    /// Corner intersection of a square-free ideal with fresh variables
    Corner {
        #[command(flatten)]
        input: InFile,
        /// Number of fresh variables
        #[arg(long, default_value_t = 1)]
        extra: usize,
        #[command(flatten)]
        out: OutFile,
    },
    /// Witness monomials: f <n>, h <n> <i>, g <n> <i>
    Witness {
        /// Witness kind: f, h, or g
        kind: String,
        n: usize,
        i: Option<u32>,
        #[command(flatten)]
        out: OutFile,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// "all", a claim id, an id prefix, or a range like thm-4.1-n4..n7
    #[arg(default_value = "all")]
    selector: String,

    /// List registered claims without running them
    #[arg(long)]
    list: bool,
}

#[derive(Subcommand)]
enum FixturesCmd {
    /// Names and descriptions of every fixture
    List,
    /// Print or write one fixture
    Export {
        name: String,
        #[command(flatten)]
        out: OutFile,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Ideal(cmd) => run_ideal(cmd, cli.json),
        Command::Closure(cmd) => run_closure(cmd, cli.json, cli.max_power),
        Command::Rees(cmd) => run_rees(cmd, cli.json),
        Command::Graph(cmd) => run_graph(cmd, cli.json),
        Command::Make(cmd) => run_make(cmd, cli.json),
        Command::Verify(args) => run_verify(args, cli.json, cli.timeout),
        Command::Fixtures(cmd) => run_fixtures(cmd, cli.json),
    }
}

// ------------------------------------------------------------------ helpers

fn err_str(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn load_ideal(path: &PathBuf) -> Result<MonomialIdeal, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    io::read_ideal(&text).map_err(err_str)
}

fn load_graph(path: &PathBuf) -> Result<SimpleGraph, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    io::read_graph(&text).map_err(err_str)
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json<T: Serialize>(value: &T, out: &Option<PathBuf>) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(value).map_err(err_str)?;
    text.push('\n');
    emit(&text, out)
}

#[derive(Serialize)]
struct IdealJson<'a> {
    dim: usize,
    gens: &'a [ExponentVector],
}

fn emit_ideal(ideal: &MonomialIdeal, json: bool, out: &Option<PathBuf>) -> Result<(), String> {
    if json {
        emit_json(
            &IdealJson {
                dim: ideal.dim(),
                gens: ideal.gens(),
            },
            out,
        )
    } else {
        emit(&io::write_ideal(ideal), out)
    }
}

// ----------------------------------------------------------------- commands

fn run_ideal(cmd: IdealCmd, json: bool) -> Result<ExitCode, String> {
    match cmd {
        IdealCmd::Show(input) => {
            let ideal = load_ideal(&input.input)?;
            if json {
                #[derive(Serialize)]
                struct ShowJson<'a> {
                    dim: usize,
                    num_gens: usize,
                    squarefree: bool,
                    zero: bool,
                    unit: bool,
                    gens: &'a [ExponentVector],
                }
                emit_json(
                    &ShowJson {
                        dim: ideal.dim(),
                        num_gens: ideal.num_gens(),
                        squarefree: ideal.is_squarefree(),
                        zero: ideal.is_zero(),
                        unit: ideal.is_unit(),
                        gens: ideal.gens(),
                    },
                    &None,
                )?;
            } else {
                println!(
                    "# {} generators{}{}",
                    ideal.num_gens(),
                    if ideal.is_squarefree() { ", square-free" } else { "" },
                    if ideal.is_unit() {
                        ", unit ideal"
                    } else if ideal.is_zero() {
                        ", zero ideal"
                    } else {
                        ""
                    }
                );
                print!("{}", io::write_ideal(&ideal));
            }
        }
        IdealCmd::Sum(f) => binary_op(&f, json, |a, b| a.sum(b))?,
        IdealCmd::Product(f) => binary_op(&f, json, |a, b| a.product(b))?,
        IdealCmd::Intersect(f) => binary_op(&f, json, |a, b| a.intersect(b))?,
        IdealCmd::Colon(f) => binary_op(&f, json, |a, b| a.colon_ideal(b))?,
        IdealCmd::Power { input, power, out } => {
            let ideal = load_ideal(&input.input)?;
            let result = ideal.power(power).map_err(err_str)?;
            emit_ideal(&result, json, &out.output)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn binary_op(
    files: &TwoFiles,
    json: bool,
    op: impl Fn(&MonomialIdeal, &MonomialIdeal) -> normality::Result<MonomialIdeal>,
) -> Result<(), String> {
    let a = load_ideal(&files.left)?;
    let b = load_ideal(&files.right)?;
    let result = op(&a, &b).map_err(err_str)?;
    emit_ideal(&result, json, &files.out.output)
}

#[derive(Serialize)]
struct PowerLine<'a> {
    power: u32,
    closed: bool,
    witnesses: &'a [ExponentVector],
    growth_directions: &'a [usize],
}

fn run_closure(cmd: ClosureCmd, json: bool, max_power: u32) -> Result<ExitCode, String> {
    match cmd {
        ClosureCmd::Gens { input, power, out } => {
            let ideal = load_ideal(&input.input)?;
            let gens = closure::closure_power_generators(&ideal, power).map_err(err_str)?;
            emit_ideal(&gens, json, &out.output)?;
        }
        ClosureCmd::Check(input) => {
            let ideal = load_ideal(&input.input)?;
            let report = closure::is_normal_up_to(&ideal, max_power).map_err(err_str)?;
            if json {
                let powers: Vec<PowerLine> = report
                    .powers
                    .iter()
                    .map(|p| PowerLine {
                        power: p.power,
                        closed: p.closed,
                        witnesses: p.gap.as_ref().map(|g| g.witnesses.as_slice()).unwrap_or(&[]),
                        growth_directions: p
                            .gap
                            .as_ref()
                            .map(|g| g.growth_directions.as_slice())
                            .unwrap_or(&[]),
                    })
                    .collect();
                #[derive(Serialize)]
                struct CheckJson<'a> {
                    max_power: u32,
                    all_closed: bool,
                    powers: Vec<PowerLine<'a>>,
                }
                emit_json(
                    &CheckJson {
                        max_power: report.max_power,
                        all_closed: report.all_closed,
                        powers,
                    },
                    &None,
                )?;
            } else {
                for p in &report.powers {
                    match &p.gap {
                        None => println!("power {}: closed", p.power),
                        Some(gap) => {
                            let growth: Vec<String> =
                                gap.growth_directions.iter().map(|j| format!("x{j}")).collect();
                            println!(
                                "power {}: NOT closed — {} witness(es) in the search box{}",
                                p.power,
                                gap.witnesses.len(),
                                if growth.is_empty() {
                                    String::new()
                                } else {
                                    format!(
                                        "; witnesses persist after multiplying by: {} (heuristic)",
                                        growth.join(" ")
                                    )
                                }
                            );
                            for w in &gap.witnesses {
                                println!("  {}", io::write_exponents(w));
                            }
                        }
                    }
                }
                println!(
                    "all powers closed through K = {}: {} (bounded evidence only)",
                    report.max_power, report.all_closed
                );
            }
        }
        ClosureCmd::Persistence { input, max_k } => {
            let ideal = load_ideal(&input.input)?;
            let report = closure::strong_persistence_holds(&ideal, max_k).map_err(err_str)?;
            if json {
                emit_json(&report, &None)?;
            } else {
                for c in &report.checks {
                    println!(
                        "k = {}: (I^{} : I) = I^{} {}",
                        c.k,
                        c.k + 1,
                        c.k,
                        if c.holds { "holds" } else { "FAILS" }
                    );
                }
                println!(
                    "strong persistence holds for k = 1..{}: {}",
                    report.max_k, report.all_hold
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_rees(cmd: ReesCmd, json: bool) -> Result<ExitCode, String> {
    match cmd {
        ReesCmd::Hilbert { input, out } => {
            let ideal = load_ideal(&input.input)?;
            let rees = cone::rees_cone(&ideal).map_err(err_str)?;
            let hb = cone::hilbert_basis(&rees).map_err(err_str)?;
            if json {
                let rows: Vec<Vec<i64>> = hb
                    .elements
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|x| x.to_i64().expect("basis entries fit in i64 at desk scale"))
                            .collect()
                    })
                    .collect();
                #[derive(Serialize)]
                struct BasisJson {
                    dim: usize,
                    elements: Vec<Vec<i64>>,
                }
                emit_json(&BasisJson { dim: hb.dim, elements: rows }, &out.output)?;
            } else {
                emit(&io::write_matrix(&hb.elements), &out.output)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_graph(cmd: GraphCmd, json: bool) -> Result<ExitCode, String> {
    match cmd {
        GraphCmd::Make { family, n, out } => {
            let graph = match family.as_str() {
                "cycle" => normality::graph::cycle(n),
                "path" => normality::graph::path(n),
                "complete" => normality::graph::complete(n),
                "wheel" => normality::graph::wheel(n),
                "helm" => normality::graph::helm(n),
                "kss" => normality::graph::kss_graph(n),
                other => return Err(format!("unknown graph family '{other}'")),
            }
            .map_err(err_str)?;
            if json {
                let edges: Vec<(&str, &str)> = graph
                    .edge_indices()
                    .iter()
                    .map(|&(a, b)| (graph.labels()[a].as_str(), graph.labels()[b].as_str()))
                    .collect();
                #[derive(Serialize)]
                struct GraphJson<'a> {
                    vertices: &'a [String],
                    edges: Vec<(&'a str, &'a str)>,
                }
                emit_json(
                    &GraphJson {
                        vertices: graph.labels(),
                        edges,
                    },
                    &out.output,
                )?;
            } else {
                emit(&io::write_graph(&graph), &out.output)?;
            }
        }
        GraphCmd::Covers { graph } => {
            let g = load_graph(&graph)?;
            let covers = g.minimal_vertex_covers();
            let labeled: Vec<Vec<&str>> = covers
                .iter()
                .map(|c| c.iter().map(|&v| g.labels()[v].as_str()).collect())
                .collect();
            if json {
                emit_json(&labeled, &None)?;
            } else {
                for cover in &labeled {
                    println!("{}", cover.join(" "));
                }
            }
        }
        GraphCmd::CoverIdeal { graph, out } => {
            let g = load_graph(&graph)?;
            emit_ideal(&g.cover_ideal().map_err(err_str)?, json, &out.output)?;
        }
        GraphCmd::EdgeIdeal { graph, out } => {
            let g = load_graph(&graph)?;
            emit_ideal(&g.edge_ideal().map_err(err_str)?, json, &out.output)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit_construction(
    built: &NamedConstruction,
    json: bool,
    out: &Option<PathBuf>,
) -> Result<(), String> {
    if json {
        #[derive(Serialize)]
        struct ConstructionJson<'a> {
            id: &'a str,
            provenance: &'a str,
            hypotheses: &'a [String],
            dim: usize,
            gens: &'a [ExponentVector],
        }
        emit_json(
            &ConstructionJson {
                id: &built.id,
                provenance: &built.provenance,
                hypotheses: &built.hypotheses,
                dim: built.ideal.dim(),
                gens: built.ideal.gens(),
            },
            out,
        )
    } else {
        let mut text = format!("# {}\n# provenance: {}\n", built.id, built.provenance);
        for h in &built.hypotheses {
            text.push_str(&format!("# hypothesis: {h}\n"));
        }
        text.push_str(&io::write_ideal(&built.ideal));
        emit(&text, out)
    }
}

fn run_make(cmd: MakeCmd, json: bool) -> Result<ExitCode, String> {
    match cmd {
        MakeCmd::Ln { n, out } => {
            let built = constructions::build_l_n(n).map_err(err_str)?;
            emit_construction(&built, json, &out.output)?;
        }
        MakeCmd::T(out) => emit_construction(&constructions::build_t(), json, &out.output)?,
        MakeCmd::Q(out) => emit_construction(&constructions::build_q(), json, &out.output)?,
        MakeCmd::Corner { input, extra, out } => {
            let ideal = load_ideal(&input.input)?;
            let built = constructions::build_corner(&ideal, extra).map_err(err_str)?;
            emit_construction(&built, json, &out.output)?;
        }
        MakeCmd::Witness { kind, n, i, out } => {
            let witness = match (kind.as_str(), i) {
                ("f", None) => constructions::witness_f(n),
                ("h", Some(i)) => constructions::witness_h(n, i),
                ("g", Some(i)) => constructions::witness_g(n, i),
                ("f", Some(_)) => {
                    return Err("witness f takes only n, e.g. 'make witness f 5'".into())
                }
                ("h" | "g", None) => {
                    return Err(format!("witness {kind} needs n and i, e.g. 'make witness {kind} 4 3'"))
                }
                (other, _) => return Err(format!("unknown witness kind '{other}'")),
            }
            .map_err(err_str)?;
            if json {
                #[derive(Serialize)]
                struct WitnessJson<'a> {
                    monomial: String,
                    exponents: &'a ExponentVector,
                }
                emit_json(
                    &WitnessJson {
                        monomial: witness.to_string(),
                        exponents: &witness,
                    },
                    &out.output,
                )?;
            } else {
                let text = format!(
                    "# monomial: {witness}\n{}\n",
                    io::write_exponents(&witness)
                );
                emit(&text, &out.output)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs, json: bool, timeout: Option<u64>) -> Result<ExitCode, String> {
    if args.list {
        let rows = claims::claim_rows();
        if json {
            #[derive(Serialize)]
            struct ClaimRow {
                id: &'static str,
                description: &'static str,
                bounded: Option<&'static str>,
            }
            let rows: Vec<ClaimRow> = rows
                .iter()
                .map(|&(id, description, bounded)| ClaimRow {
                    id,
                    description,
                    bounded,
                })
                .collect();
            emit_json(&rows, &None)?;
        } else {
            for (id, description, bounded) in rows {
                let note = bounded.map(|b| format!(" [{b}]")).unwrap_or_default();
                println!("{id:20} {description}{note}");
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let selected = claims::select(&args.selector)?;
    let budget = timeout.map(Duration::from_secs);
    let start = Instant::now();
    let mut reports = Vec::with_capacity(selected.len());
    let mut elapsed_lines = Vec::with_capacity(selected.len());
    for claim in &selected {
        if budget.is_some_and(|b| start.elapsed() > b) {
            reports.push(claims::skipped_report(claim));
            elapsed_lines.push(None);
            continue;
        }
        let claim_start = Instant::now();
        reports.push(claims::run_claim(claim));
        elapsed_lines.push(Some(claim_start.elapsed()));
    }

    let confirmed = reports.iter().filter(|r| r.verdict == "confirmed").count();
    let refuted = reports.iter().filter(|r| r.verdict == "refuted").count();
    let errors = reports.iter().filter(|r| r.verdict == "error").count();
    let all_ok = confirmed == reports.len();

    if json {
        emit_json(&reports, &None)?;
    } else {
        for (report, elapsed) in reports.iter().zip(&elapsed_lines) {
            let timing = match elapsed {
                Some(d) => format!(" ({d:.1?})"),
                None => String::new(),
            };
            println!("[{}] {}{}", report.verdict, report.id, timing);
            println!("    {}", report.description);
            for line in &report.evidence {
                println!("    {line}");
            }
            if let Some(b) = &report.bounded {
                println!("    note: {b}");
            }
        }
        println!(
            "{} claim(s): {confirmed} confirmed, {refuted} refuted, {errors} error(s)",
            reports.len()
        );
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_fixtures(cmd: FixturesCmd, json: bool) -> Result<ExitCode, String> {
    match cmd {
        FixturesCmd::List => {
            if json {
                #[derive(Serialize)]
                struct FixtureRow {
                    name: &'static str,
                    description: &'static str,
                    lines: usize,
                }
                let rows: Vec<FixtureRow> = fixtures::ALL
                    .iter()
                    .map(|f| FixtureRow {
                        name: f.name,
                        description: f.description,
                        lines: f.content.lines().count(),
                    })
                    .collect();
                emit_json(&rows, &None)?;
            } else {
                for f in fixtures::ALL {
                    println!(
                        "{:12} {} ({} lines)",
                        f.name,
                        f.description,
                        f.content.lines().count()
                    );
                }
            }
        }
        FixturesCmd::Export { name, out } => {
            let fixture = fixtures::find(&name)
                .ok_or_else(|| format!("unknown fixture '{name}'; see 'fixtures list'"))?;
            emit(fixture.content, &out.output)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

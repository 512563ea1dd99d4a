//! `domkit`: generate graphs, build lexicographic products, solve for
//! minimum `[1,k]`-type sets, evaluate the product theorems and run the
//! Exact-3-Cover reduction.
//!
//! Exit status: 0 success, 1 runtime failure, 2 theorem/oracle disagreement
//! under `--strict`, 3 graph above the solver cap, 64 bad usage.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use domkit::lex_theory::Outcome;
use domkit::npc_reduction::{brute_force_cover, decide_x3c_with};
use domkit::solvers::DEFAULT_CAP;
use domkit::{
    build_gadget, build_standard, closed_form, edge_list, lex_product, ClosedFormKind, DiscrepancyReport, Family,
    Graph, MembershipKind, Mode, ProductKind, SetKind, Solver, Theory, X3CInstance,
};

const EXIT_DISAGREE: u8 = 2;
const EXIT_TOO_LARGE: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "domkit", version, about = "Exact [1,k]-domination toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a standard graph as an edge list.
    Gen {
        family: Family,
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build G∘H from two edge lists.
    Product {
        g: PathBuf,
        h: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Where to write the id → (g, h) map.
        #[arg(long)]
        layer_map: Option<PathBuf>,
    },
    /// Exact minimum set of the given kind.
    Solve {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Do not search sizes above this.
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        out: OutputOpts,
        #[arg(short, long)]
        output: Option<PathBuf>,
        file: PathBuf,
    },
    /// Path/cycle closed-form value.
    ClosedForm {
        family: Family,
        n: usize,
        #[arg(long)]
        kind: ClosedFormKind,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        pretty: bool,
    },
    /// Evaluate a product theorem from the factors.
    #[command(subcommand)]
    Theorem(Theorem),
    /// Build the gadget of an X3C instance.
    Reduce {
        instance: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Sidecar JSON with the budget and vertex roles.
        #[arg(long)]
        roles: Option<PathBuf>,
        #[arg(long)]
        pretty: bool,
    },
    /// Decide an X3C instance by brute force and through the gadget.
    DecideX3c {
        instance: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Subcommand)]
enum Theorem {
    CharacterizeTotal(Membership),
    CharacterizeIndependent(Membership),
    ProductGamma {
        #[arg(long)]
        kind: ProductKind,
        /// Only read by `i1k`.
        #[arg(long, default_value_t = 2)]
        k: usize,
        g: PathBuf,
        h: PathBuf,
        #[command(flatten)]
        cmp: CompareOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    Corollary {
        family_g: Family,
        family_h: Family,
        n: usize,
        m: usize,
        #[arg(long)]
        kind: ProductKind,
        #[command(flatten)]
        cmp: CompareOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Args)]
struct Membership {
    #[arg(long)]
    k: usize,
    g: PathBuf,
    h: PathBuf,
    #[command(flatten)]
    cmp: CompareOpts,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args)]
struct CompareOpts {
    /// Also solve the explicit product and report agreement.
    #[arg(long)]
    compare_oracle: bool,
    /// Exit with status 2 when the oracle disagrees.
    #[arg(long, requires = "compare_oracle")]
    strict: bool,
}

#[derive(Args)]
struct OutputOpts {
    /// Search above the vertex cap.
    #[arg(long)]
    force: bool,
    /// Key/value table instead of JSON.
    #[arg(long)]
    pretty: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("domkit: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<domkit::Error>() {
        Some(domkit::Error::TooLarge { .. }) => EXIT_TOO_LARGE,
        Some(domkit::Error::InvalidKind(_)) => EXIT_USAGE,
        _ => 1,
    }
}

fn solver(force: bool) -> anyhow::Result<Solver> {
    let cap = match std::env::var("DOMKIT_MAX_N") {
        Ok(v) => v.trim().parse().map_err(|_| anyhow!("DOMKIT_MAX_N must be an integer, got `{v}`"))?,
        Err(_) => DEFAULT_CAP,
    };
    Ok(Solver::new().with_cap(cap).force(force))
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    edge_list::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn emit<T: Serialize>(value: &T, pretty: bool) -> anyhow::Result<()> {
    let text =
        if pretty { table(&serde_json::to_value(value)?) } else { format!("{}\n", serde_json::to_string(value)?) };
    std::io::stdout().write_all(text.as_bytes())?;
    Ok(())
}

fn table(value: &Value) -> String {
    let Value::Object(map) = value else {
        return format!("{value}\n");
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    map.iter()
        .map(|(key, v)| {
            let shown = match v {
                Value::String(s) => s.clone(),
                Value::Null => "-".to_string(),
                other => other.to_string(),
            };
            format!("{key:<width$}  {shown}\n")
        })
        .collect()
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Gen { family, n, output } => {
            let text = edge_list::write(&build_standard(family, n)?);
            match output {
                Some(path) => write_file(&path, &text)?,
                None => print!("{text}"),
            }
        }
        Command::Product { g, h, output, layer_map } => {
            let (g, h) = (read_graph(&g)?, read_graph(&h)?);
            let (p, idx) = lex_product(&g, &h);
            let text = edge_list::write(&p);
            match output {
                Some(path) => write_file(&path, &text)?,
                None => print!("{text}"),
            }
            if let Some(path) = layer_map {
                let coords: Vec<[usize; 2]> = (0..idx.order()).map(|id| idx.coords(id).into()).collect();
                let map = json!({ "ng": idx.ng, "nh": idx.nh, "coords": coords });
                write_file(&path, &format!("{map}\n"))?;
            }
        }
        Command::Solve { kind, j, k, limit, out, output, file } => {
            let kind = SetKind::from_code(&kind, j, k)?;
            let g = read_graph(&file)?;
            let result = solver(out.force)?.min_set(&g, kind, limit)?;
            match output {
                Some(path) => write_file(&path, &format!("{}\n", serde_json::to_string(&result)?))?,
                None => emit(&result, out.pretty)?,
            }
        }
        Command::ClosedForm { family, n, kind, k, pretty } => {
            let value = closed_form(family, n, kind, k)?;
            let report = json!({ "family": family, "n": n, "kind": kind.set_kind(k).name(), "k": k, "value": value });
            emit(&report, pretty)?;
        }
        Command::Theorem(t) => return theorem(t),
        Command::Reduce { instance, output, roles, pretty } => {
            let inst = read_instance(&instance)?;
            let (g, meta) = build_gadget(&inst)?;
            write_file(&output, &edge_list::write(&g))?;
            if let Some(path) = roles {
                write_file(&path, &format!("{}\n", serde_json::to_string(&meta.role_map())?))?;
            }
            let summary = json!({
                "vertices": g.n(),
                "edges": g.edge_count(),
                "budget": meta.budget,
                "bipartite": g.is_bipartite(),
            });
            emit(&summary, pretty)?;
        }
        Command::DecideX3c { instance, out } => {
            let inst = read_instance(&instance)?;
            let solver = solver(out.force)?;
            let cover = brute_force_cover(&inst)?;
            let via_gadget = decide_x3c_with(&solver, &inst, Mode::ViaGadget)?;
            let report = json!({
                "brute_force": cover.is_some(),
                "via_gadget": via_gadget,
                "agree": cover.is_some() == via_gadget,
                "cover": cover,
            });
            emit(&report, out.pretty)?;
        }
    }
    Ok(0)
}

fn read_instance(path: &Path) -> anyhow::Result<X3CInstance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    X3CInstance::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn report_exit(report: &DiscrepancyReport, cmp: &CompareOpts, out: &OutputOpts) -> anyhow::Result<u8> {
    emit(report, out.pretty)?;
    if !report.agree {
        eprintln!("domkit: prediction and oracle disagree");
        if cmp.strict {
            return Ok(EXIT_DISAGREE);
        }
    }
    Ok(0)
}

fn theorem(t: Theorem) -> anyhow::Result<u8> {
    match t {
        Theorem::CharacterizeTotal(m) => membership(m, MembershipKind::Total),
        Theorem::CharacterizeIndependent(m) => membership(m, MembershipKind::Independent),
        Theorem::ProductGamma { kind, k, g, h, cmp, out } => {
            let theory = Theory::new(solver(out.force)?);
            let (g, h) = (read_graph(&g)?, read_graph(&h)?);
            if cmp.compare_oracle {
                let report = theory.verify_against_oracle(&g, &h, kind, k)?;
                return report_exit(&report, &cmp, &out);
            }
            emit(&theory.product_gamma(&g, &h, kind, k)?, out.pretty)?;
            Ok(0)
        }
        Theorem::Corollary { family_g, family_h, n, m, kind, cmp, out } => {
            let value = domkit::corollary_value(family_g, family_h, n, m, kind)?;
            if !cmp.compare_oracle {
                let report = json!({
                    "family_g": family_g, "family_h": family_h, "n": n, "m": m,
                    "kind": kind.name(), "value": value,
                });
                emit(&report, out.pretty)?;
                return Ok(0);
            }
            let g = build_standard(family_g, n)?;
            // A two-vertex "cycle" is a single edge.
            let h = if family_h == Family::Cycle && m == 2 {
                build_standard(Family::Path, 2)?
            } else {
                build_standard(family_h, m)?
            };
            let solver = solver(out.force)?;
            solver.check_size(n * m)?;
            let oracle = solver.min_set(&lex_product(&g, &h).0, kind.set_kind(2), None)?;
            let report = DiscrepancyReport {
                kind: kind.name().to_string(),
                k: 2,
                prediction: Outcome::Gamma(value),
                oracle: Outcome::Gamma(oracle.gamma),
                agree: value == oracle.gamma,
                matched_condition: None,
                witness_pred: None,
                witness_oracle: oracle.witness,
                layer_profile: Vec::new(),
            };
            report_exit(&report, &cmp, &out)
        }
    }
}

fn membership(m: Membership, kind: MembershipKind) -> anyhow::Result<u8> {
    let theory = Theory::new(solver(m.out.force)?);
    let (g, h) = (read_graph(&m.g)?, read_graph(&m.h)?);
    if m.cmp.compare_oracle {
        let report = theory.verify_membership(&g, &h, kind, m.k)?;
        return report_exit(&report, &m.cmp, &m.out);
    }
    let analysis = match kind {
        MembershipKind::Total => theory.characterize_total(&g, &h, m.k)?,
        MembershipKind::Independent => theory.characterize_independent(&g, &h, m.k)?,
    };
    emit(&analysis, m.out.pretty)?;
    Ok(0)
}

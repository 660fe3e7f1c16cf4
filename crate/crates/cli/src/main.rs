mod report;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use ribbon_tutte::format::{parse, render, render_graph};
use ribbon_tutte::invariants::{
    classical_tutte, corpus, cross_validate, krushkal_direct, krushkal_quasitree, krushkal_substitution,
    pst_delcon_counted, pst_state_sum, quasi_tree_terms, surface_tutte, DelconStats, PivotRule, QuasiTreeTerm,
};
use ribbon_tutte::packaged::{packaged_dual, PackagedRibbonGraph};
use ribbon_tutte::poly::MultiPoly;
use ribbon_tutte::rg::{activities, enumerate_quasi_trees, partial_dual, EdgeOrder, EdgeSet, RibbonGraph};

#[derive(Parser)]
#[command(name = "rtutte", version, about = "Topological Tutte polynomials of packaged ribbon graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Statesum,
    Delcon,
    Quasitree,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pivot {
    First,
    Last,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Krushkal,
    SurfaceTutte,
    ClassicalTutte,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the packaged polynomial of FILE (`-` reads standard input).
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "statesum")]
        method: Method,
        /// Edge order for the quasi-tree method, lowest first.
        #[arg(long)]
        order: Option<String>,
        /// Pivot rule for deletion and contraction.
        #[arg(long, value_enum, default_value = "first")]
        pivot: Pivot,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare all three methods, the quasi-tree one under random orders.
    Validate {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        orders: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List the quasi-trees.
    Quasitrees { file: PathBuf },
    /// Activities of every edge relative to a quasi-tree.
    Activities {
        file: PathBuf,
        #[arg(long)]
        quasitree: String,
        #[arg(long)]
        order: Option<String>,
    },
    /// Evaluate a specialization of the polynomial.
    Specialize {
        file: PathBuf,
        #[arg(long, value_enum)]
        target: Target,
        /// Edge order for the quasi-tree route of the Krushkal polynomial.
        #[arg(long)]
        order: Option<String>,
    },
    /// Packaged geometric dual.
    Dual { file: PathBuf },
    /// Partial dual with respect to an edge set.
    Pdual {
        file: PathBuf,
        #[arg(long)]
        edges: String,
    },
    /// Emit the corpus of small packaged instances.
    Corpus {
        #[arg(long)]
        max_edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write one file per instance here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Usage and input errors; they exit with status 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure(e.to_string())
    }
}

fn read(file: &PathBuf) -> Result<PackagedRibbonGraph, Failure> {
    let text = if file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| Failure(format!("{}: {e}", file.display())))?
    };
    Ok(parse(&text)?)
}

fn edge_list(g: &RibbonGraph, text: &str) -> Result<Vec<ribbon_tutte::rg::EdgeId>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| g.edge_by_name(name).ok_or_else(|| Failure(format!("unknown edge {name}"))))
        .collect()
}

fn edge_set(g: &RibbonGraph, text: &str) -> Result<EdgeSet, Failure> {
    Ok(edge_list(g, text)?.into_iter().collect())
}

fn order(g: &RibbonGraph, text: Option<&str>) -> Result<EdgeOrder, Failure> {
    match text {
        None => Ok(EdgeOrder::natural(g)),
        Some(t) => Ok(EdgeOrder::new(g, edge_list(g, t)?)?),
    }
}

struct Output {
    text: String,
    json: Value,
    status: u8,
}

fn ok(text: String, json: Value) -> Output {
    Output { text, json, status: 0 }
}

fn compute(pg: &PackagedRibbonGraph, method: Method, ord: Option<&str>, pivot: Pivot, seed: u64) -> Result<Output, Failure> {
    let g = pg.graph();
    let (name, p, counters): (&str, MultiPoly, Value) = match method {
        Method::Statesum => ("statesum", pst_state_sum(pg), json!({ "subsets": 1u64 << g.num_edges() })),
        Method::Delcon => {
            let rule = match pivot {
                Pivot::First => PivotRule::First,
                Pivot::Last => PivotRule::Last,
                Pivot::Random => PivotRule::Random(seed),
            };
            let mut stats = DelconStats::default();
            let p = pst_delcon_counted(pg, rule, &mut stats);
            ("delcon", p, json!({ "nodes": stats.nodes, "leaves": stats.leaves }))
        }
        Method::Quasitree => {
            let o = order(g, ord)?;
            let terms = quasi_tree_terms(pg, &o)?;
            let p: MultiPoly = terms.iter().map(QuasiTreeTerm::contribution).sum();
            let mut doc = report::poly_doc("quasitree", &p, json!({ "quasi_trees": terms.len() }));
            doc["order"] = json!(report::order_text(g, &o));
            doc["quasi_tree_terms"] = terms.iter().map(|t| report::term_doc(g, t)).collect();
            return Ok(ok(format!("{p}\n"), doc));
        }
    };
    let doc = report::poly_doc(name, &p, counters);
    Ok(ok(format!("{p}\n"), doc))
}

fn specialize(pg: &PackagedRibbonGraph, target: Target, ord: Option<&str>) -> Result<Output, Failure> {
    let g = pg.graph();
    match target {
        Target::SurfaceTutte => {
            let p = surface_tutte(g)?;
            Ok(ok(format!("{p}\n"), report::poly_doc("surface-tutte", &p, json!({}))))
        }
        Target::ClassicalTutte => {
            let p = classical_tutte(&g.underlying());
            Ok(ok(format!("{p}\n"), report::poly_doc("classical-tutte", &p, json!({}))))
        }
        Target::Krushkal => {
            let direct = krushkal_direct(g);
            let substitution = krushkal_substitution(g) == direct;
            let quasi = if g.is_connected() { Some(krushkal_quasitree(g, &order(g, ord)?)? == direct) } else { None };
            let agree = substitution && quasi.unwrap_or(true);
            let doc = json!({
                "method": "krushkal",
                "polynomial": direct.to_string(),
                "terms": report::half_terms(&direct),
                "substitution_agrees": substitution,
                "quasitree_agrees": quasi,
                "counters": { "subsets": 1u64 << g.num_edges() },
            });
            let mut text = format!("{direct}\n");
            if !agree {
                text += "routes disagree\n";
            }
            Ok(Output { text, json: doc, status: if agree { 0 } else { 1 } })
        }
    }
}

fn emit_corpus(max_edges: usize, seed: u64, out: Option<&PathBuf>) -> Result<Output, Failure> {
    let items = corpus(max_edges, seed);
    let mut text = String::new();
    let mut docs = Vec::new();
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
    }
    for item in &items {
        let body = render(&item.packaged);
        let name = format!("g{:04}_p{}.rg", item.graph_index, item.variant);
        match out {
            Some(dir) => {
                let path = dir.join(&name);
                std::fs::write(&path, &body)?;
                text += &format!("{}\n", path.display());
            }
            None => text += &format!("# {name}\n{body}\n"),
        }
        docs.push(json!({ "name": name, "graph": item.graph_index, "variant": item.variant, "text": body }));
    }
    Ok(ok(text, json!({ "method": "corpus", "instances": docs, "counters": { "instances": items.len() } })))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Compute { file, method, order: ord, pivot, seed } => {
            compute(&read(file)?, *method, ord.as_deref(), *pivot, *seed)
        }
        Command::Validate { file, orders, seed } => {
            let pg = read(file)?;
            let g = pg.graph();
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let list: Vec<EdgeOrder> = (0..*orders).map(|_| EdgeOrder::random(g, &mut rng)).collect();
            let r = cross_validate(&pg, &list);
            let status = if r.passed() { 0 } else { 1 };
            Ok(Output { text: report::validation_text(g, &r), json: report::validation_doc(g, &r), status })
        }
        Command::Quasitrees { file } => {
            let pg = read(file)?;
            let g = pg.graph();
            let qs = enumerate_quasi_trees(g)?;
            let text = qs.iter().map(|q| format!("{}\n", report::set_text(g, q))).collect();
            let list: Vec<Vec<String>> = qs.iter().map(|q| report::names(g, q.iter().copied())).collect();
            Ok(ok(text, json!({ "method": "quasitrees", "quasi_trees": list, "counters": { "quasi_trees": qs.len() } })))
        }
        Command::Activities { file, quasitree, order: ord } => {
            let pg = read(file)?;
            let g = pg.graph();
            let q = edge_set(g, quasitree)?;
            let o = order(g, ord.as_deref())?;
            let r = activities(g, &q, &o)?;
            let mut doc = report::activity_doc(g, &r);
            doc["method"] = json!("activities");
            doc["order"] = json!(report::order_text(g, &o));
            Ok(ok(report::activity_lines(g, &r), doc))
        }
        Command::Specialize { file, target, order: ord } => specialize(&read(file)?, *target, ord.as_deref()),
        Command::Dual { file } => {
            let text = render(&packaged_dual(&read(file)?));
            Ok(ok(text.clone(), json!({ "method": "dual", "text": text })))
        }
        Command::Pdual { file, edges } => {
            let pg = read(file)?;
            let a = edge_set(pg.graph(), edges)?;
            let text = render_graph(&partial_dual(pg.graph(), &a)?);
            Ok(ok(text.clone(), json!({ "method": "pdual", "text": text })))
        }
        Command::Corpus { max_edges, seed, out } => emit_corpus(*max_edges, *seed, out.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json values serialize") + "\n",
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(out.status)
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

use std::path::PathBuf;
use std::process::{Command, Output};

use ribbon_tutte::format::{parse, EXAMPLE_GRAPH};
use ribbon_tutte::iso::packaged_isomorphic;
use ribbon_tutte::packaged::PackagedRibbonGraph;

const EXAMPLE_POLY: &str = "x^3*x_2*y_0^2 + x^2*y*x_0*y_0^2 + 2*x^2*x_2*y_0 + 3*x*y*x_0*y_0 + y^2*x_0*y_2";

fn file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rtutte-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn rtutte(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rtutte")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_by_every_method() {
    let f = file("compute.rg", EXAMPLE_GRAPH);
    let f = f.to_str().unwrap();
    for args in [
        vec!["compute", f, "--method", "quasitree", "--order", "e,f,g"],
        vec!["compute", f, "--method", "delcon", "--pivot", "random", "--seed", "4"],
        vec!["compute", f],
    ] {
        let o = rtutte(&args);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o), format!("{EXAMPLE_POLY}\n"));
    }
}

#[test]
fn activities_fixture() {
    let f = file("activities.rg", EXAMPLE_GRAPH);
    let o = rtutte(&["activities", f.to_str().unwrap(), "--quasitree", "f", "--order", "e,f,g"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "e: external live orientable\nf: internal live orientable\ng: external dead orientable\n"
    );
    let o = rtutte(&["activities", f.to_str().unwrap(), "--quasitree", "e", "--order", "e,f,g"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn validate_and_quasitrees() {
    let f = file("validate.rg", EXAMPLE_GRAPH);
    let o = rtutte(&["validate", f.to_str().unwrap(), "--orders", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("verdict: pass\n"));
    let o = rtutte(&["quasitrees", f.to_str().unwrap()]);
    assert_eq!(stdout(&o), "{f}\n{g}\n{e,f,g}\n");
}

#[test]
fn parse_errors_exit_two() {
    let cases = [
        ("empty.rg", "", "no vertices"),
        ("boundary.rg", "vertex v:\nbblock 1: b2\n", "unknown boundary id"),
        ("syntax.rg", "edges: e*\nvertex v: e.1 e.2\n", "syntax error at 1:"),
        ("edge.rg", "edges: e+\nvertex v: e.1 f.2\n", "unknown edge"),
        ("partition.rg", "vertex v:\nvertex w:\nvblock 0: v\nvblock 1: v w\n", "partition violation"),
    ];
    for (name, body, prefix) in cases {
        let o = rtutte(&["compute", file(name, body).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(stderr(&o).starts_with(&format!("error: {prefix}")), "{name}: {}", stderr(&o));
    }
    assert_eq!(rtutte(&["compute"]).status.code(), Some(2));
}

#[test]
fn specializations() {
    let mobius = file("mobius.rg", "edges: e-\nvertex v: e.1 e.2\n");
    let m = mobius.to_str().unwrap();
    let o = rtutte(&["specialize", m, "--target", "surface-tutte"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not orientable"));
    let o = rtutte(&["specialize", m, "--target", "krushkal"]);
    assert_eq!(stdout(&o), "a^1/2 + b^1/2\n");
    let triangle = file("triangle.rg", "edges: e+ f+ g+\nvertex u: e.1 g.2\nvertex v: f.1 e.2\nvertex w: g.1 f.2\n");
    let o = rtutte(&["specialize", triangle.to_str().unwrap(), "--target", "classical-tutte"]);
    assert_eq!(stdout(&o), "x^2 + x + y\n");
}

#[test]
fn json_documents() {
    let f = file("json.rg", EXAMPLE_GRAPH);
    let o = rtutte(&["compute", f.to_str().unwrap(), "--method", "quasitree", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["method"], "quasitree");
    assert_eq!(doc["polynomial"], EXAMPLE_POLY);
    assert_eq!(doc["terms"].as_array().unwrap().len(), 5);
    assert_eq!(doc["terms"][3]["coefficient"], "3");
    assert_eq!(doc["counters"]["quasi_trees"], 3);
    assert_eq!(doc["quasi_tree_terms"][0]["prefactor"], "x");
}

#[test]
fn dual_round_trips() {
    let f = file("dual.rg", EXAMPLE_GRAPH);
    let once = stdout(&rtutte(&["dual", f.to_str().unwrap()]));
    let g = file("dual2.rg", &once);
    let twice = stdout(&rtutte(&["dual", g.to_str().unwrap()]));
    let original = PackagedRibbonGraph::discrete(ribbon_tutte::format::parse_graph(EXAMPLE_GRAPH).unwrap());
    assert!(packaged_isomorphic(&parse(&twice).unwrap(), &original));

    let p = stdout(&rtutte(&["pdual", f.to_str().unwrap(), "--edges", "e,f,g"]));
    assert!(packaged_isomorphic(&parse(&p).unwrap(), &parse(&once).unwrap()));
}

#[test]
fn output_is_deterministic() {
    let a = rtutte(&["corpus", "--max-edges", "2", "--seed", "3"]);
    let b = rtutte(&["corpus", "--max-edges", "2", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let instances = text.split("# ").filter(|s| !s.is_empty()).count();
    assert_eq!(instances % 4, 0);
    for chunk in text.split("# ").filter(|s| !s.is_empty()) {
        let body = chunk.split_once('\n').unwrap().1;
        parse(body).unwrap();
    }
    let f = file("det.rg", EXAMPLE_GRAPH);
    let args = ["validate", f.to_str().unwrap(), "--format", "json", "--seed", "9"];
    assert_eq!(rtutte(&args).stdout, rtutte(&args).stdout);
}

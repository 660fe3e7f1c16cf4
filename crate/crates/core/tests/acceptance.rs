//! One line per acceptance criterion; exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use ribbon_tutte::format::{parse_graph, EXAMPLE_GRAPH};
use ribbon_tutte::invariants::{
    corpus, corpus_graphs, cross_validate, krushkal_direct, krushkal_quasitree, krushkal_quasitree_with,
    krushkal_substitution, classical_tutte, plane_specialization, pst_delcon, pst_quasitree, pst_state_sum,
    random_graph, random_packaging, NullityReading, PivotRule,
};
use ribbon_tutte::iso::isomorphic_fixing_names;
use ribbon_tutte::packaged::{packaged_dual, PackagedRibbonGraph};
use ribbon_tutte::rg::{
    activities, contract_edge, dual, enumerate_quasi_trees, euler_genus, is_quasi_tree, partial_dual,
    partial_dual_edge, EdgeId, EdgeOrder, EdgeSet, RibbonGraph,
};

const SEED: u64 = 20_240_611;
const EXAMPLE_POLY: &str = "x^3*x_2*y_0^2 + x^2*y*x_0*y_0^2 + 2*x^2*x_2*y_0 + 3*x*y*x_0*y_0 + y^2*x_0*y_2";

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn example() -> RibbonGraph {
    parse_graph(EXAMPLE_GRAPH).expect("example parses")
}

fn named(g: &RibbonGraph, names: &[&str]) -> Vec<EdgeId> {
    names.iter().map(|n| g.edge_by_name(n).expect("edge exists")).collect()
}

fn efg(g: &RibbonGraph) -> EdgeOrder {
    EdgeOrder::new(g, named(g, &["e", "f", "g"])).expect("permutation")
}

fn subsets(g: &RibbonGraph) -> Vec<EdgeSet> {
    let edges: Vec<EdgeId> = g.edge_ids().collect();
    (0u64..1 << edges.len())
        .map(|mask| edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect())
        .collect()
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn example_reproduction() -> Outcome {
    let start = Instant::now();
    let pg = PackagedRibbonGraph::discrete(example());
    let order = efg(pg.graph());
    let results = [
        ("statesum", pst_state_sum(&pg)),
        ("delcon", pst_delcon(&pg, PivotRule::First)),
        ("quasitree", pst_quasitree(&pg, &order).expect("connected")),
    ];
    let elapsed = start.elapsed();
    let wrong: Vec<&str> = results.iter().filter(|(_, p)| p.to_string() != EXAMPLE_POLY).map(|(n, _)| *n).collect();
    let pass = wrong.is_empty() && elapsed < Duration::from_secs(1);
    outcome(pass, format!("{EXAMPLE_POLY} by all methods in {}; mismatches {:?}", secs(elapsed), wrong))
}

fn activity_fixture() -> Outcome {
    let g = example();
    let order = efg(&g);
    let describe = |q: &[&str]| -> String {
        let q: EdgeSet = named(&g, q).into_iter().collect();
        let r = activities(&g, &q, &order).expect("quasi-tree");
        r.per_edge
            .iter()
            .map(|(&e, a)| {
                format!(
                    "{}:{}-{}-{}",
                    g.edge_name(e),
                    if a.internal { "internal" } else { "external" },
                    if a.live { "live" } else { "dead" },
                    if a.orientable { "orientable" } else { "nonorientable" }
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    let cases = [
        (vec!["f"], "e:external-live-orientable f:internal-live-orientable g:external-dead-orientable"),
        (vec!["g"], "e:external-live-orientable f:external-dead-orientable g:internal-dead-orientable"),
        (vec!["e", "f", "g"], "e:internal-live-orientable f:internal-dead-orientable g:internal-dead-orientable"),
    ];
    let bad: Vec<String> = cases.iter().filter(|(q, want)| describe(q) != *want).map(|(q, _)| q.join("")).collect();
    outcome(bad.is_empty(), format!("Q = f, g, efg under e<f<g; mismatching {:?}", bad))
}

fn quasi_tree_census() -> Outcome {
    let g = example();
    let got: BTreeSet<String> = enumerate_quasi_trees(&g)
        .expect("connected")
        .iter()
        .map(|q| q.iter().map(|&e| g.edge_name(e)).collect::<String>())
        .collect();
    let want: BTreeSet<String> = ["f", "g", "efg"].iter().map(|s| s.to_string()).collect();
    outcome(got == want, format!("quasi-trees {:?}", got))
}

fn three_way_sweep() -> (Outcome, Outcome) {
    let start = Instant::now();
    let items = corpus(4, SEED);
    let results: Vec<(bool, bool)> = items
        .par_iter()
        .enumerate()
        .map(|(i, item)| {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ i as u64);
            let g = item.packaged.graph();
            let orders: Vec<EdgeOrder> = (0..3).map(|_| EdgeOrder::random(g, &mut rng)).collect();
            let report = cross_validate(&item.packaged, &orders);
            (report.delcon_agrees() && report.quasi_tree_agrees(), report.shapes_hold())
        })
        .collect();
    let mismatches = results.iter().filter(|r| !r.0).count();
    let shape_failures = results.iter().filter(|r| !r.1).count();
    let elapsed = start.elapsed();
    let graphs = items.iter().map(|i| i.graph_index).collect::<BTreeSet<_>>().len();
    (
        outcome(
            mismatches == 0 && elapsed < Duration::from_secs(300),
            format!("{} packaged instances over {graphs} graphs, 3 orders each, {mismatches} mismatches, {}", items.len(), secs(elapsed)),
        ),
        outcome(shape_failures == 0, format!("{} instances, {shape_failures} with a failing minor shape", items.len())),
    )
}

fn topological_calibration() -> Outcome {
    let table = [
        ("disc", "vertex v:\n", 1, 0),
        ("annulus", "edges: e+\nvertex v: e.1 e.2\n", 2, 0),
        ("moebius", "edges: e-\nvertex v: e.1 e.2\n", 1, 1),
        ("interlaced handle", "edges: e+ f+\nvertex v: e.1 f.1 e.2 f.2\n", 1, 2),
        ("example", EXAMPLE_GRAPH, 1, 2),
    ];
    let bad: Vec<&str> = table
        .iter()
        .filter(|(_, text, b, gamma)| {
            let g = parse_graph(text).expect("fixture parses");
            g.num_boundaries() != *b || euler_genus(&g) != *gamma
        })
        .map(|(name, ..)| *name)
        .collect();
    outcome(bad.is_empty(), format!("b and gamma for {} surfaces; mismatching {:?}", table.len(), bad))
}

fn structural_identities() -> Outcome {
    let graphs = corpus_graphs(4);
    let failures: Vec<String> = graphs
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, g)| structural_failures(g).into_iter().map(move |f| format!("graph {i}: {f}")))
        .collect();
    let shown: Vec<&String> = failures.iter().take(3).collect();
    outcome(failures.is_empty(), format!("{} graphs, {} failures {:?}", graphs.len(), failures.len(), shown))
}

fn structural_failures(g: &RibbonGraph) -> Vec<String> {
    let mut out = Vec::new();
    let d = dual(g).graph;
    let all = g.edge_set();
    for a in subsets(g) {
        let ac: EdgeSet = all.difference(&a).copied().collect();
        if g.restrict(&a).unwrap().num_boundaries() != d.restrict(&ac).unwrap().num_boundaries() {
            out.push(format!("boundary count of {a:?}"));
        }
        let forward = partial_dual(g, &a).unwrap();
        let backward = a.iter().rev().try_fold(g.clone(), |h, &e| partial_dual_edge(&h, e)).unwrap();
        if !isomorphic_fixing_names(&forward, &backward) {
            out.push(format!("partial dual order for {a:?}"));
        }
        if is_quasi_tree(g, &a).unwrap() != is_quasi_tree(&d, &ac).unwrap() {
            out.push(format!("quasi-tree duality for {a:?}"));
        }
    }
    for e in g.edge_ids() {
        let contracted = contract_edge(g, e).unwrap().graph;
        let via_dual = partial_dual_edge(g, e).unwrap().delete_edge(e).unwrap();
        if !isomorphic_fixing_names(&contracted, &via_dual) {
            out.push(format!("contraction of {e:?}"));
        }
    }
    if !isomorphic_fixing_names(&dual(&d).graph, g) {
        out.push("dual involution".into());
    }
    if !isomorphic_fixing_names(&partial_dual(g, &all).unwrap(), &d) {
        out.push("full partial dual".into());
    }
    let order = EdgeOrder::natural(g);
    for q in enumerate_quasi_trees(g).unwrap() {
        let qc: EdgeSet = all.difference(&q).copied().collect();
        let r = activities(g, &q, &order).unwrap();
        let s = activities(&d, &qc, &order).unwrap();
        let dual_ok = r.per_edge.iter().all(|(e, a)| {
            let b = &s.per_edge[e];
            a.live == b.live && a.internal != b.internal && a.orientable == b.orientable
        });
        if !dual_ok {
            out.push(format!("activity duality at {q:?}"));
        }
    }
    out
}

fn krushkal_consistency() -> Outcome {
    let graphs = corpus_graphs(4);
    let bad = graphs
        .par_iter()
        .filter(|g| {
            let direct = krushkal_direct(g);
            direct != krushkal_substitution(g) || direct != krushkal_quasitree(g, &EdgeOrder::natural(g)).unwrap()
        })
        .count();
    let literal_breaks = graphs.iter().filter(|g| g.num_edges() <= 3).find(|g| {
        krushkal_quasitree_with(g, &EdgeOrder::natural(g), NullityReading::Whole).unwrap() != krushkal_direct(g)
    });
    let witness = match literal_breaks {
        Some(g) => format!("whole-graph nullity breaks on a {}-edge instance", g.num_edges()),
        None => "whole-graph nullity never breaks".into(),
    };
    outcome(bad == 0 && literal_breaks.is_some(), format!("{} graphs, {bad} disagreements; {witness}", graphs.len()))
}

fn plane_specialization_check() -> Outcome {
    let graphs = corpus_graphs(4);
    let plane: Vec<&RibbonGraph> = graphs.iter().filter(|g| euler_genus(g) == 0).collect();
    let bad = plane
        .par_iter()
        .filter(|g| plane_specialization(&krushkal_direct(g)).unwrap() != classical_tutte(&g.underlying()))
        .count();
    outcome(bad == 0, format!("{} plane graphs, {bad} mismatches", plane.len()))
}

fn duality_swap() -> Outcome {
    let items = corpus(4, SEED);
    let bad = items
        .par_iter()
        .filter(|item| pst_state_sum(&packaged_dual(&item.packaged)) != pst_state_sum(&item.packaged).swap_xy())
        .count();
    outcome(bad == 0, format!("{} instances, {bad} mismatches", items.len()))
}

fn scale_check() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let g = random_graph(10, 5, &mut rng);
    let pg = random_packaging(&g, &mut rng);
    let start = Instant::now();
    let p = pst_state_sum(&pg);
    let elapsed = start.elapsed();
    outcome(
        elapsed < Duration::from_secs(30) && !p.is_zero(),
        format!("10 edges, {} vertices, {} terms in {}", g.num_vertices(), p.len(), secs(elapsed)),
    )
}

fn main() -> ExitCode {
    let (sweep, shapes) = three_way_sweep();
    let results = [
        ("example reproduction", example_reproduction()),
        ("activity fixture", activity_fixture()),
        ("quasi-tree census", quasi_tree_census()),
        ("three-way equivalence sweep", sweep),
        ("topological calibration", topological_calibration()),
        ("structural identities sweep", structural_identities()),
        ("minor shape claim", shapes),
        ("krushkal tri-consistency", krushkal_consistency()),
        ("plane specialization", plane_specialization_check()),
        ("duality swap", duality_swap()),
        ("scale check", scale_check()),
    ];
    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        println!("criterion {:>2} [{}] {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

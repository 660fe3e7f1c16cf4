//! Structured output documents.

use serde_json::{json, Map, Value};

use ribbon_tutte::invariants::{Counters, PivotRule, QuasiTreeTerm, ValidationReport};
use ribbon_tutte::poly::{HalfExpPoly, MultiPoly};
use ribbon_tutte::rg::{ActivityReport, EdgeOrder, EdgeSet, RibbonGraph};

pub fn names(g: &RibbonGraph, set: impl IntoIterator<Item = ribbon_tutte::rg::EdgeId>) -> Vec<String> {
    set.into_iter().map(|e| g.edge_name(e).to_string()).collect()
}

pub fn set_text(g: &RibbonGraph, set: &EdgeSet) -> String {
    format!("{{{}}}", names(g, set.iter().copied()).join(","))
}

pub fn order_text(g: &RibbonGraph, order: &EdgeOrder) -> String {
    names(g, order.sequence().iter().copied()).join(",")
}

pub fn pivot_text(rule: PivotRule) -> String {
    match rule {
        PivotRule::First => "first".into(),
        PivotRule::Last => "last".into(),
        PivotRule::Random(seed) => format!("random({seed})"),
    }
}

fn gamma_map(m: &std::collections::BTreeMap<i64, u32>) -> Value {
    Value::Object(m.iter().map(|(i, n)| (i.to_string(), json!(n))).collect::<Map<_, _>>())
}

pub fn poly_terms(p: &MultiPoly) -> Value {
    p.terms()
        .into_iter()
        .map(|(m, c)| {
            json!({
                "coefficient": c.to_string(),
                "x": m.ex(),
                "y": m.ey(),
                "x_gamma": gamma_map(m.xg()),
                "y_gamma": gamma_map(m.yg()),
            })
        })
        .collect()
}

pub fn half_terms(p: &HalfExpPoly) -> Value {
    p.terms()
        .into_iter()
        .map(|(m, c)| {
            json!({
                "coefficient": c.to_string(),
                "alpha": m.alpha,
                "beta": m.beta,
                "a_doubled": m.a2,
                "b_doubled": m.b2,
            })
        })
        .collect()
}

pub fn poly_doc(method: &str, p: &MultiPoly, counters: Value) -> Value {
    json!({ "method": method, "polynomial": p.to_string(), "terms": poly_terms(p), "counters": counters })
}

pub fn activity_doc(g: &RibbonGraph, r: &ActivityReport) -> Value {
    let per_edge: Vec<Value> = r
        .per_edge
        .iter()
        .map(|(&e, a)| {
            json!({
                "edge": g.edge_name(e),
                "internal": a.internal,
                "live": a.live,
                "orientable": a.orientable,
            })
        })
        .collect();
    json!({
        "edges": per_edge,
        "internally_dead": names(g, r.internally_dead()),
        "externally_dead": names(g, r.externally_dead()),
        "internally_live_orientable": names(g, r.internally_live_orientable()),
        "externally_live_orientable": names(g, r.externally_live_orientable()),
        "internally_live_nonorientable": names(g, r.internally_live_nonorientable()),
        "externally_live_nonorientable": names(g, r.externally_live_nonorientable()),
    })
}

pub fn activity_lines(g: &RibbonGraph, r: &ActivityReport) -> String {
    r.per_edge
        .iter()
        .map(|(&e, a)| {
            format!(
                "{}: {} {} {}\n",
                g.edge_name(e),
                if a.internal { "internal" } else { "external" },
                if a.live { "live" } else { "dead" },
                if a.orientable { "orientable" } else { "non-orientable" }
            )
        })
        .collect()
}

pub fn term_doc(g: &RibbonGraph, t: &QuasiTreeTerm) -> Value {
    json!({
        "quasi_tree": names(g, t.quasi_tree.iter().copied()),
        "activities": activity_doc(g, &t.activities),
        "prefactor": MultiPoly::monomial(t.prefactor.clone(), 1).to_string(),
        "minor_polynomial": t.minor_polynomial.to_string(),
        "contribution": t.contribution().to_string(),
        "shape_holds": t.shape_holds,
    })
}

fn structural_counters(c: &Counters) -> Value {
    json!({
        "subsets": c.subsets,
        "delcon_nodes": c.delcon.nodes,
        "delcon_leaves": c.delcon.leaves,
        "quasi_trees": c.quasi_trees,
    })
}

pub fn validation_doc(g: &RibbonGraph, r: &ValidationReport) -> Value {
    let delcon: Vec<Value> = r
        .delcon
        .iter()
        .map(|(rule, p)| json!({ "pivot": pivot_text(*rule), "polynomial": p.to_string(), "equal": *p == r.state_sum }))
        .collect();
    let quasi: Vec<Value> = r
        .quasi_tree
        .iter()
        .map(|run| {
            json!({
                "order": order_text(g, &run.order),
                "polynomial": run.total.to_string(),
                "equal": run.total == r.state_sum,
                "terms": run.terms.iter().map(|t| term_doc(g, t)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "method": "validate",
        "polynomial": r.state_sum.to_string(),
        "terms": poly_terms(&r.state_sum),
        "delcon": delcon,
        "quasitree": quasi,
        "shapes_hold": r.shapes_hold(),
        "passed": r.passed(),
        "counters": structural_counters(&r.counters),
    })
}

pub fn validation_text(g: &RibbonGraph, r: &ValidationReport) -> String {
    let verdict = |ok: bool| if ok { "equal" } else { "DIFFERENT" };
    let mut out = format!("statesum: {}\n", r.state_sum);
    for (rule, p) in &r.delcon {
        out += &format!("delcon {}: {}\n", pivot_text(*rule), verdict(*p == r.state_sum));
    }
    if r.quasi_tree.is_empty() {
        out += "quasitree: skipped (disconnected)\n";
    }
    for run in &r.quasi_tree {
        let shapes = if run.terms.iter().all(|t| t.shape_holds) { "shapes hold" } else { "SHAPE FAILURE" };
        out += &format!(
            "quasitree {}: {} ({} quasi-trees, {shapes})\n",
            order_text(g, &run.order),
            verdict(run.total == r.state_sum),
            run.terms.len()
        );
    }
    out += &format!("verdict: {}\n", if r.passed() { "pass" } else { "FAIL" });
    out
}

use ribbon_tutte::invariants::corpus_graphs;
use ribbon_tutte::iso::isomorphic;
use ribbon_tutte::rg::{activities, dual, enumerate_quasi_trees, partial_dual, EdgeOrder, EdgeSet, RibbonGraph};

fn subsets(g: &RibbonGraph) -> Vec<EdgeSet> {
    let edges: Vec<_> = g.edge_ids().collect();
    (0u32..1 << edges.len())
        .map(|mask| edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect())
        .collect()
}

#[test]
fn partial_duals_compose_by_symmetric_difference() {
    for g in corpus_graphs(3) {
        let all = subsets(&g);
        assert!(isomorphic(&partial_dual(&g, &g.edge_set()).unwrap(), &dual(&g).graph));
        for a in &all {
            let ga = partial_dual(&g, a).unwrap();
            assert!(isomorphic(&partial_dual(&ga, a).unwrap(), &g));
            for b in &all {
                let direct = partial_dual(&g, &a.symmetric_difference(b).copied().collect()).unwrap();
                assert!(isomorphic(&partial_dual(&ga, b).unwrap(), &direct));
            }
        }
    }
}

#[test]
fn activities_swap_under_duality() {
    for g in corpus_graphs(4) {
        let d = dual(&g).graph;
        let order = EdgeOrder::natural(&g);
        let dual_order = EdgeOrder::new(&d, order.sequence().to_vec()).unwrap();
        let qs = enumerate_quasi_trees(&g).unwrap();
        let mut dual_qs = enumerate_quasi_trees(&d).unwrap();
        let mut complements: Vec<EdgeSet> = qs.iter().map(|q| g.edge_set().difference(q).copied().collect()).collect();
        complements.sort();
        dual_qs.sort();
        assert_eq!(complements, dual_qs);
        for q in &qs {
            let here = activities(&g, q, &order).unwrap();
            let there = activities(&d, &g.edge_set().difference(q).copied().collect(), &dual_order).unwrap();
            for (e, a) in &here.per_edge {
                let b = there.per_edge[e];
                assert_eq!((a.internal, a.live, a.orientable), (!b.internal, b.live, b.orientable));
            }
        }
    }
}

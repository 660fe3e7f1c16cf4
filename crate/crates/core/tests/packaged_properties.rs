use ribbon_tutte::invariants::{corpus, pst_state_sum};
use ribbon_tutte::packaged::{
    boundary_packaging, packaged_contract, packaged_delete, packaged_dual, packaging, ContractionCase,
    DeletionCase, PackagedRibbonGraph, PackagingGraph,
};

fn instances() -> Vec<PackagedRibbonGraph> {
    corpus(3, 3).into_iter().map(|i| i.packaged).collect()
}

fn exponents(pg: &PackagedRibbonGraph) -> (Vec<i64>, Vec<i64>) {
    let index = |len: usize, w: u64| 1 - len as i64 + w as i64;
    let mut b: Vec<i64> = pg.bparts().blocks().iter().map(|k| index(k.len(), k.weight)).collect();
    let mut v: Vec<i64> = pg.vparts().blocks().iter().map(|k| index(k.len(), k.weight)).collect();
    b.sort_unstable();
    v.sort_unstable();
    (b, v)
}

fn shape(p: &PackagingGraph) -> (Vec<u64>, Vec<(usize, usize)>, Vec<i64>) {
    let mut edges: Vec<(usize, usize)> = p.edges().iter().map(|&(u, v, _)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    (p.weights().to_vec(), edges, p.gammas())
}

#[test]
fn deletion_cases_and_partitions() {
    let mut seen = std::collections::BTreeSet::new();
    for pg in instances() {
        for e in pg.graph().edge_ids() {
            let (d, case) = packaged_delete(&pg, e).unwrap();
            seen.insert(format!("{case:?}"));
            assert_eq!(d.vparts(), pg.vparts());
            if case == DeletionCase::MergeBlocks {
                let (before, _) = exponents(&pg);
                let (after, _) = exponents(&d);
                assert_eq!(before.iter().sum::<i64>(), after.iter().sum::<i64>());
            }
        }
    }
    assert_eq!(seen.len(), 4, "{seen:?}");
}

#[test]
fn contraction_cases_and_partitions() {
    let mut seen = std::collections::BTreeSet::new();
    for pg in instances() {
        for e in pg.graph().edge_ids() {
            let (c, case) = packaged_contract(&pg, e).unwrap();
            seen.insert(format!("{case:?}"));
            let sizes = |p: &PackagedRibbonGraph| {
                let mut s: Vec<(usize, u64)> = p.bparts().blocks().iter().map(|b| (b.len(), b.weight)).collect();
                s.sort_unstable();
                s
            };
            assert_eq!(sizes(&c), sizes(&pg));
            if case == ContractionCase::MergeBlocks {
                assert_eq!(exponents(&pg).1.iter().sum::<i64>(), exponents(&c).1.iter().sum::<i64>());
            }
        }
    }
    assert_eq!(seen.len(), 4, "{seen:?}");
}

#[test]
fn operations_commute_at_polynomial_level() {
    for pg in instances().into_iter().filter(|pg| pg.graph().num_edges() >= 2) {
        let edges: Vec<_> = pg.graph().edge_ids().collect();
        for &e in &edges {
            for &f in edges.iter().filter(|&&f| f != e) {
                let dd = |a, b| pst_state_sum(&packaged_delete(&packaged_delete(&pg, a).unwrap().0, b).unwrap().0);
                let cc = |a, b| pst_state_sum(&packaged_contract(&packaged_contract(&pg, a).unwrap().0, b).unwrap().0);
                assert_eq!(dd(e, f), dd(f, e));
                assert_eq!(cc(e, f), cc(f, e));
                let dc = pst_state_sum(&packaged_contract(&packaged_delete(&pg, e).unwrap().0, f).unwrap().0);
                let cd = pst_state_sum(&packaged_delete(&packaged_contract(&pg, f).unwrap().0, e).unwrap().0);
                assert_eq!(dc, cd);
            }
        }
    }
}

#[test]
fn dual_exchanges_packagings() {
    for pg in instances() {
        let d = packaged_dual(&pg);
        assert_eq!(shape(&packaging(&d)), shape(&boundary_packaging(&pg)));
        assert_eq!(shape(&boundary_packaging(&d)), shape(&packaging(&pg)));
    }
}

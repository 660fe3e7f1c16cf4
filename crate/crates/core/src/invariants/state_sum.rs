use crate::packaged::{PackagedRibbonGraph, PackagingGraph, WeightedPartition};
use crate::poly::{Monomial, MultiPoly, Var};
use crate::rg::{EdgeId, EdgeSet, RibbonGraph, VertexId};

/// Sum over all edge subsets `A` of
/// `x^n(G(G*|A^c; B)) y^n(G(G|A; V)) prod x_gamma(H) prod y_gamma(K)`.
pub fn pst_state_sum(pg: &PackagedRibbonGraph) -> MultiPoly {
    let (d, dparts) = pg.dual_side();
    let edges: Vec<EdgeId> = pg.graph().edge_ids().collect();
    assert!(edges.len() < 64, "state sum over {} edges is out of reach", edges.len());
    let mut total = MultiPoly::zero();
    for mask in 0u64..(1 << edges.len()) {
        let mut a = EdgeSet::new();
        let mut ac = EdgeSet::new();
        for (i, &e) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.insert(e);
            } else {
                ac.insert(e);
            }
        }
        total.add_term(term(pg, &d, &dparts, &a, &ac), 1.into());
    }
    total
}

/// The monomial contributed by one subset `A`.
pub fn subset_monomial(pg: &PackagedRibbonGraph, a: &EdgeSet) -> Monomial {
    let (d, dparts) = pg.dual_side();
    let ac: EdgeSet = pg.graph().edge_ids().filter(|e| !a.contains(e)).collect();
    term(pg, &d, &dparts, a, &ac)
}

fn term(
    pg: &PackagedRibbonGraph,
    d: &RibbonGraph,
    dparts: &WeightedPartition<VertexId>,
    a: &EdgeSet,
    ac: &EdgeSet,
) -> Monomial {
    let primal = PackagingGraph::of(pg.graph(), pg.vparts(), a);
    let dual = PackagingGraph::of(d, dparts, ac);
    let mut m = Monomial::one().with(Var::X, dual.nullity() as u32).with(Var::Y, primal.nullity() as u32);
    for g in dual.gammas() {
        m = m.with(Var::XG(g), 1);
    }
    for g in primal.gammas() {
        m = m.with(Var::YG(g), 1);
    }
    m
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::packaged::{packaged_contract, packaged_delete, PackagedRibbonGraph};
use crate::poly::{Monomial, MultiPoly, Var};
use crate::rg::{sides_of, trace_boundaries, EdgeId, GraphError};

/// Which edge the recursion expands next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotRule {
    First,
    Last,
    /// Uniform choice from a generator seeded with the value.
    Random(u64),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DelconStats {
    pub nodes: u64,
    pub leaves: u64,
}

/// `prod x_{1 - |b| + w(b)} prod y_{1 - |v| + w(v)}` for an edgeless graph.
pub fn terminal_polynomial(pg: &PackagedRibbonGraph) -> Option<MultiPoly> {
    if pg.graph().num_edges() > 0 {
        return None;
    }
    let index = |len: usize, w: u64| 1 - len as i64 + w as i64;
    let mut m = Monomial::one();
    for b in pg.bparts().blocks() {
        m = m.with(Var::XG(index(b.len(), b.weight)), 1);
    }
    for b in pg.vparts().blocks() {
        m = m.with(Var::YG(index(b.len(), b.weight)), 1);
    }
    Some(MultiPoly::monomial(m, 1))
}

/// Exponents of `x` on the deletion branch and of `y` on the contraction
/// branch: whether the sides of `e` lie on boundaries of one block, and
/// whether its endpoints lie in one vertex block.
pub fn edge_exponents(pg: &PackagedRibbonGraph, e: EdgeId) -> Result<(u32, u32), GraphError> {
    let (u, v) = pg.graph().endpoints(e)?;
    let (ba, bb) = sides_of(&trace_boundaries(pg.graph()), e);
    let alpha = pg.bparts().block_of(ba) == pg.bparts().block_of(bb);
    let beta = pg.vparts().block_of(u) == pg.vparts().block_of(v);
    Ok((alpha as u32, beta as u32))
}

pub fn pst_delcon(pg: &PackagedRibbonGraph, rule: PivotRule) -> MultiPoly {
    pst_delcon_counted(pg, rule, &mut DelconStats::default())
}

pub fn pst_delcon_counted(pg: &PackagedRibbonGraph, rule: PivotRule, stats: &mut DelconStats) -> MultiPoly {
    let mut rng = match rule {
        PivotRule::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    recurse(pg, rule, &mut rng, stats)
}

fn recurse(
    pg: &PackagedRibbonGraph,
    rule: PivotRule,
    rng: &mut Option<ChaCha8Rng>,
    stats: &mut DelconStats,
) -> MultiPoly {
    stats.nodes += 1;
    if let Some(t) = terminal_polynomial(pg) {
        stats.leaves += 1;
        return t;
    }
    let edges: Vec<EdgeId> = pg.graph().edge_ids().collect();
    let e = match (rule, rng.as_mut()) {
        (PivotRule::Random(_), Some(r)) => edges[r.gen_range(0..edges.len())],
        (PivotRule::Last, _) => edges[edges.len() - 1],
        _ => edges[0],
    };

    let (alpha, beta) = edge_exponents(pg, e).expect("pivot is an edge");
    let deleted = packaged_delete(pg, e).expect("pivot is an edge").0;
    let contracted = packaged_contract(pg, e).expect("pivot is an edge").0;
    let mut out = recurse(&deleted, rule, rng, stats).mul_monomial(&Monomial::one().with(Var::X, alpha));
    out += &recurse(&contracted, rule, rng, stats).mul_monomial(&Monomial::one().with(Var::Y, beta));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{parse, parse_graph};
    use crate::invariants::fixtures::{example, EXAMPLE_POLY};

    #[test]
    fn terminal_with_merged_boundaries() {
        let pg = parse("vertex u:\nvertex v:\nbblock 1: b1 b2\n").unwrap();
        assert_eq!(pst_delcon(&pg, PivotRule::First).to_string(), "x_0*y_0^2");
    }

    #[test]
    fn one_edge_path() {
        let pg = PackagedRibbonGraph::discrete(parse_graph("edges: e+\nvertex u: e.1\nvertex v: e.2\n").unwrap());
        let mut stats = DelconStats::default();
        assert_eq!(pst_delcon_counted(&pg, PivotRule::First, &mut stats).to_string(), "x*x_0*y_0^2 + x_0*y_0");
        assert_eq!(stats, DelconStats { nodes: 3, leaves: 2 });
    }

    #[test]
    fn example_under_every_pivot() {
        for rule in [PivotRule::First, PivotRule::Last, PivotRule::Random(7)] {
            assert_eq!(pst_delcon(&example(), rule).to_string(), EXAMPLE_POLY);
        }
    }
}

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use petgraph::unionfind::UnionFind;

use super::{pst_state_sum, InvariantError};
use crate::packaged::{Multigraph, PackagedRibbonGraph};
use crate::poly::{HalfExpPoly, HalfMonomial, MultiPoly, PolyError, Var};
use crate::rg::{activities, dual, enumerate_quasi_trees, euler_genus, EdgeId, EdgeOrder, EdgeSet, End, EndIndex, GraphError, RibbonGraph, VertexId};

/// How the `y - 1` exponent of the rank generating function is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NullityReading {
    /// `n(G|A)`: the Tutte polynomial.
    Subset,
    /// `n(G)` for every `A`.
    Whole,
}

/// Coefficients of `(x-1)^(k(A)-k) (y-1)^n` summed over edge subsets `A`.
pub fn rank_terms(h: &Multigraph, reading: NullityReading) -> BTreeMap<(u32, u32), BigInt> {
    let m = h.num_edges();
    assert!(m < 64, "rank sum over {m} edges is out of reach");
    let k = h.num_components();
    let whole = h.nullity();
    let mut out: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
    for mask in 0u64..(1 << m) {
        let ka = h.components_with(|i| mask >> i & 1 == 1);
        let size = mask.count_ones() as usize;
        let n = match reading {
            NullityReading::Subset => size + ka - h.num_vertices(),
            NullityReading::Whole => whole,
        };
        *out.entry(((ka - k) as u32, n as u32)).or_default() += 1;
    }
    out
}

pub fn classical_tutte(h: &Multigraph) -> MultiPoly {
    classical_tutte_with(h, NullityReading::Subset)
}

/// Expanded in `x` and `y`.
pub fn classical_tutte_with(h: &Multigraph, reading: NullityReading) -> MultiPoly {
    let x1 = &MultiPoly::var(Var::X) - &MultiPoly::one();
    let y1 = &MultiPoly::var(Var::Y) - &MultiPoly::one();
    rank_terms(h, reading).into_iter().map(|((i, j), c)| (&x1.pow(i) * &y1.pow(j)).scale(&c)).sum()
}

/// Discrete weight-zero polynomial with every index halved. Orientable input only.
pub fn surface_tutte(g: &RibbonGraph) -> Result<MultiPoly, InvariantError> {
    if !g.is_orientable() {
        return Err(InvariantError::NonOrientable);
    }
    Ok(pst_state_sum(&PackagedRibbonGraph::discrete(g.clone())).reindex_half()?)
}

fn restricted(g: &RibbonGraph, keep: &EdgeSet) -> RibbonGraph {
    g.restrict(keep).expect("subset of own edges")
}

/// `sum_A alpha^(k(G|A)-k) beta^(k(G*|A^c)-k) a^(gamma(G|A)/2) b^(gamma(G*|A^c)/2)`.
pub fn krushkal_direct(g: &RibbonGraph) -> HalfExpPoly {
    let d = dual(g).graph;
    let edges: Vec<EdgeId> = g.edge_ids().collect();
    assert!(edges.len() < 64, "subset sum over {} edges is out of reach", edges.len());
    let k = g.num_components() as i32;
    let kd = d.num_components() as i32;
    let mut total = HalfExpPoly::zero();
    for mask in 0u64..(1 << edges.len()) {
        let a: EdgeSet = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let ac: EdgeSet = edges.iter().filter(|e| !a.contains(e)).copied().collect();
        let ga = restricted(g, &a);
        let gd = restricted(&d, &ac);
        let m = HalfMonomial {
            alpha: ga.num_components() as i32 - k,
            beta: gd.num_components() as i32 - kd,
            a2: euler_genus(&ga) as u32,
            b2: euler_genus(&gd) as u32,
        };
        total.add_term(m, 1.into());
    }
    total
}

/// `(alpha beta)^(-k)` times the discrete polynomial at `x = y = 1`,
/// `x_g = beta b^(g/2)`, `y_g = alpha a^(g/2)`.
pub fn krushkal_substitution(g: &RibbonGraph) -> HalfExpPoly {
    let t = pst_state_sum(&PackagedRibbonGraph::discrete(g.clone()));
    let genus = |i: i64| u32::try_from(i).expect("weight-zero genera are nonnegative");
    let image = t
        .substitute(|v| -> Result<HalfExpPoly, std::convert::Infallible> {
            Ok(match v {
                Var::X | Var::Y => HalfExpPoly::one(),
                Var::XG(i) => &HalfExpPoly::beta() * &HalfExpPoly::b_half(genus(i)),
                Var::YG(i) => &HalfExpPoly::alpha() * &HalfExpPoly::a_half(genus(i)),
            })
        })
        .unwrap_or_else(|never| match never {});
    let k = g.num_components() as i32;
    image.mul_monomial(HalfMonomial { alpha: -k, beta: -k, ..Default::default() })
}

pub fn krushkal_quasitree(g: &RibbonGraph, order: &EdgeOrder) -> Result<HalfExpPoly, GraphError> {
    krushkal_quasitree_with(g, order, NullityReading::Subset)
}

/// `sum_Q R(G_Q; alpha, a) R(G*_Q*; beta, b) a^(gamma(G|D u N)/2) b^(gamma(G*|D* u N*)/2)`
/// with `R(H; u, v) = sum_A u^(k(A)-k) v^n(A)`, the Tutte polynomial at `(u+1, v+1)`.
pub fn krushkal_quasitree_with(
    g: &RibbonGraph,
    order: &EdgeOrder,
    reading: NullityReading,
) -> Result<HalfExpPoly, GraphError> {
    let d = dual(g).graph;
    let mut total = HalfExpPoly::zero();
    for q in enumerate_quasi_trees(g)? {
        let r = activities(g, &q, order)?;
        let (inner, outer) = (r.contracted(), r.deleted());
        let primal = rank_poly(&quotient(g, &inner, &r.internally_live_orientable()), reading, false);
        let dualp = rank_poly(&quotient(&d, &outer, &r.externally_live_orientable()), reading, true);
        let genus = HalfMonomial {
            a2: euler_genus(&restricted(g, &inner)) as u32,
            b2: euler_genus(&restricted(&d, &outer)) as u32,
            ..Default::default()
        };
        total += &(&primal * &dualp).mul_monomial(genus);
    }
    Ok(total)
}

/// Multigraph whose vertices are the components of `g|contracted` and whose edges are `edges`.
fn quotient(g: &RibbonGraph, contracted: &EdgeSet, edges: &BTreeSet<EdgeId>) -> Multigraph {
    let index: BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let incidence = g.incidence();
    let ends = |e: EdgeId| {
        (index[&incidence[&End::new(e, EndIndex::One)]], index[&incidence[&End::new(e, EndIndex::Two)]])
    };
    let mut uf = UnionFind::<usize>::new(index.len());
    for &e in contracted {
        let (u, v) = ends(e);
        uf.union(u, v);
    }
    let mut class: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..index.len() {
        let next = class.len();
        class.entry(uf.find(i)).or_insert(next);
    }
    let pairs = edges
        .iter()
        .map(|&e| {
            let (u, v) = ends(e);
            (class[&uf.find(u)], class[&uf.find(v)])
        })
        .collect();
    Multigraph::new(class.len(), pairs)
}

fn rank_poly(h: &Multigraph, reading: NullityReading, dual_side: bool) -> HalfExpPoly {
    let mut p = HalfExpPoly::zero();
    for ((i, j), c) in rank_terms(h, reading) {
        let m = if dual_side {
            HalfMonomial { beta: i as i32, b2: 2 * j, ..Default::default() }
        } else {
            HalfMonomial { alpha: i as i32, a2: 2 * j, ..Default::default() }
        };
        p.add_term(m, c);
    }
    p
}

/// Image at `alpha = x - 1`, `beta = y - 1`, `a = b = 1`.
pub fn plane_specialization(k: &HalfExpPoly) -> Result<MultiPoly, PolyError> {
    let x1 = &MultiPoly::var(Var::X) - &MultiPoly::one();
    let y1 = &MultiPoly::var(Var::Y) - &MultiPoly::one();
    k.substitute(&x1, &y1, &MultiPoly::one(), &MultiPoly::one())
}

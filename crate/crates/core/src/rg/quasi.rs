use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{interlaced, partial_dual, EdgeId, EdgeSet, GraphError, RibbonGraph};

/// A total order on the edges of a graph, lowest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeOrder {
    sequence: Vec<EdgeId>,
    rank: BTreeMap<EdgeId, usize>,
}

impl EdgeOrder {
    pub fn new(g: &RibbonGraph, sequence: Vec<EdgeId>) -> Result<EdgeOrder, GraphError> {
        let rank: BTreeMap<EdgeId, usize> = sequence.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        if rank.len() != sequence.len() || rank.len() != g.num_edges() || !rank.keys().all(|&e| g.has_edge(e)) {
            return Err(GraphError::BadOrder);
        }
        Ok(EdgeOrder { sequence, rank })
    }

    /// Edges in id order.
    pub fn natural(g: &RibbonGraph) -> EdgeOrder {
        EdgeOrder::new(g, g.edge_ids().collect()).expect("edge ids form a permutation")
    }

    pub fn reversed(&self) -> EdgeOrder {
        let sequence: Vec<EdgeId> = self.sequence.iter().rev().copied().collect();
        let rank = sequence.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        EdgeOrder { sequence, rank }
    }

    pub fn random<R: Rng + ?Sized>(g: &RibbonGraph, rng: &mut R) -> EdgeOrder {
        let mut sequence: Vec<EdgeId> = g.edge_ids().collect();
        sequence.shuffle(rng);
        EdgeOrder::new(g, sequence).expect("shuffle is a permutation")
    }

    pub fn sequence(&self) -> &[EdgeId] {
        &self.sequence
    }

    pub fn precedes(&self, a: EdgeId, b: EdgeId) -> bool {
        self.rank[&a] < self.rank[&b]
    }
}

pub fn is_quasi_tree(g: &RibbonGraph, a: &EdgeSet) -> Result<bool, GraphError> {
    Ok(g.restrict(a)?.num_boundaries() == 1)
}

/// Every spanning ribbon subgraph with one boundary component, by edge-set
/// bitmask (bit i is the i-th edge in id order).
pub fn enumerate_quasi_trees(g: &RibbonGraph) -> Result<Vec<EdgeSet>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let edges: Vec<EdgeId> = g.edge_ids().collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << edges.len()) {
        let sub = g.restrict_unchecked(|e| {
            let i = edges.binary_search(&e).expect("edge of g");
            mask >> i & 1 == 1
        });
        if sub.num_boundaries() == 1 {
            out.push(edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect());
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Activity {
    pub internal: bool,
    pub live: bool,
    pub orientable: bool,
}

/// Activities of every edge relative to a quasi-tree and an edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActivityReport {
    pub per_edge: BTreeMap<EdgeId, Activity>,
}

impl ActivityReport {
    fn select(&self, pred: impl Fn(&Activity) -> bool) -> EdgeSet {
        self.per_edge.iter().filter(|(_, a)| pred(a)).map(|(&e, _)| e).collect()
    }

    /// Internally dead edges.
    pub fn internally_dead(&self) -> EdgeSet {
        self.select(|a| a.internal && !a.live)
    }

    pub fn externally_dead(&self) -> EdgeSet {
        self.select(|a| !a.internal && !a.live)
    }

    pub fn internally_live_orientable(&self) -> EdgeSet {
        self.select(|a| a.internal && a.live && a.orientable)
    }

    pub fn externally_live_orientable(&self) -> EdgeSet {
        self.select(|a| !a.internal && a.live && a.orientable)
    }

    pub fn internally_live_nonorientable(&self) -> EdgeSet {
        self.select(|a| a.internal && a.live && !a.orientable)
    }

    pub fn externally_live_nonorientable(&self) -> EdgeSet {
        self.select(|a| !a.internal && a.live && !a.orientable)
    }

    /// Edges contracted when forming the quasi-tree minor: `D ∪ N`.
    pub fn contracted(&self) -> EdgeSet {
        self.select(|a| a.internal && !(a.live && a.orientable))
    }

    /// Edges deleted when forming the quasi-tree minor: `D* ∪ N*`.
    pub fn deleted(&self) -> EdgeSet {
        self.select(|a| !a.internal && !(a.live && a.orientable))
    }
}

pub fn activities(g: &RibbonGraph, q: &EdgeSet, order: &EdgeOrder) -> Result<ActivityReport, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if order.sequence.len() != g.num_edges() || !order.sequence.iter().all(|&e| g.has_edge(e)) {
        return Err(GraphError::BadOrder);
    }
    if !is_quasi_tree(g, q)? {
        return Err(GraphError::NotQuasiTree);
    }
    let h = partial_dual(g, q)?;
    debug_assert_eq!(h.num_vertices(), 1);
    let per_edge = g
        .edge_ids()
        .map(|e| {
            let live = !g.edge_ids().any(|f| order.precedes(f, e) && interlaced(&h, e, f));
            let activity = Activity { internal: q.contains(&e), live, orientable: !h.sign(e).is_twisted() };
            (e, activity)
        })
        .collect();
    Ok(ActivityReport { per_edge })
}

use std::collections::BTreeMap;

use petgraph::unionfind::UnionFind;

use super::{PackagedError, WeightedPartition};
use crate::rg::{trace_boundaries, EdgeId, EdgeSet, End, EndIndex, RibbonGraph, VertexId};

/// Abstract multigraph on vertices `0..n`; loops and parallel edges allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Multigraph {
        assert!(edges.iter().all(|&(u, v)| u < n && v < n), "edge endpoint out of range");
        Multigraph { n, edges }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_components(&self) -> usize {
        self.components_with(|_| true)
    }

    /// Components of the spanning subgraph on the edges selected by `keep`.
    pub fn components_with(&self, keep: impl Fn(usize) -> bool) -> usize {
        let mut uf = UnionFind::<usize>::new(self.n);
        let mut k = self.n;
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if keep(i) && uf.union(u, v) {
                k -= 1;
            }
        }
        k
    }

    /// `e - v + k`.
    pub fn nullity(&self) -> usize {
        self.edges.len() + self.num_components() - self.n
    }
}

/// Quotient of a ribbon graph restricted to an edge set by a vertex
/// partition: one vertex per block, one edge per ribbon edge.
#[derive(Clone, Debug)]
pub struct PackagingGraph {
    weights: Vec<u64>,
    block_sizes: Vec<usize>,
    edges: Vec<(usize, usize, EdgeId)>,
    /// Block and boundary count of each component of the restricted ribbon graph.
    ribbon_parts: Vec<(usize, usize)>,
    components: Vec<Vec<usize>>,
}

impl PackagingGraph {
    /// Packaging of `h|edges` by `part`, whose ground set must be `V(h)`.
    pub fn of(h: &RibbonGraph, part: &WeightedPartition<VertexId>, edges: &EdgeSet) -> PackagingGraph {
        let block = part.index();
        debug_assert!(h.vertices().all(|v| block.contains_key(&v)));
        let weights = part.blocks().iter().map(|b| b.weight).collect();
        let block_sizes = part.blocks().iter().map(|b| b.len()).collect();

        let sub = h.restrict_unchecked(|e| edges.contains(&e));
        let incidence = sub.incidence();
        let vindex: BTreeMap<VertexId, usize> = sub.vertices().enumerate().map(|(i, v)| (v, i)).collect();
        let vertices: Vec<VertexId> = sub.vertices().collect();
        let mut ribbon = UnionFind::<usize>::new(vertices.len());
        let mut blocks = UnionFind::<usize>::new(part.len());
        let mut pedges = Vec::new();
        for e in sub.edge_ids() {
            let u = incidence[&End::new(e, EndIndex::One)];
            let v = incidence[&End::new(e, EndIndex::Two)];
            ribbon.union(vindex[&u], vindex[&v]);
            blocks.union(block[&u], block[&v]);
            pedges.push((block[&u], block[&v], e));
        }

        let mut parts: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            parts.entry(ribbon.find(i)).or_insert((block[&v], 0));
        }
        for comp in trace_boundaries(&sub).components() {
            let v = match comp.isolated {
                Some(v) => v,
                None => incidence[&comp.visits[0].end],
            };
            parts.get_mut(&ribbon.find(vindex[&v])).expect("vertex has a component").1 += 1;
        }
        let ribbon_parts = parts.into_values().collect();

        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for b in 0..part.len() {
            groups.entry(blocks.find(b)).or_default().push(b);
        }
        let mut components: Vec<Vec<usize>> = groups.into_values().collect();
        components.sort();
        PackagingGraph { weights, block_sizes, edges: pedges, ribbon_parts, components }
    }

    pub fn num_vertices(&self) -> usize {
        self.weights.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// `(block, block, ribbon edge)` for every edge.
    pub fn edges(&self) -> &[(usize, usize, EdgeId)] {
        &self.edges
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn nullity(&self) -> usize {
        self.edges.len() + self.components.len() - self.weights.len()
    }

    pub fn multigraph(&self) -> Multigraph {
        Multigraph::new(self.weights.len(), self.edges.iter().map(|&(u, v, _)| (u, v)).collect())
    }

    /// `2 + e(K) - v(K) + w(K) - b(G[K])` for a connected set of blocks `K`.
    pub fn component_gamma(&self, k: &[usize]) -> Result<i64, PackagedError> {
        let mut sorted = k.to_vec();
        sorted.sort_unstable();
        if !self.components.contains(&sorted) {
            return Err(PackagedError::NotAComponent);
        }
        let inside = |b: usize| k.contains(&b);
        let e = self.edges.iter().filter(|(u, _, _)| inside(*u)).count() as i64;
        let w: i64 = k.iter().map(|&b| self.weights[b] as i64).sum();
        let boundaries: i64 =
            self.ribbon_parts.iter().filter(|(b, _)| inside(*b)).map(|&(_, n)| n as i64).sum();
        Ok(2 + e - k.len() as i64 + w - boundaries)
    }

    /// Gamma of every component, in component order.
    pub fn gammas(&self) -> Vec<i64> {
        self.components.iter().map(|k| self.component_gamma(k).expect("own component")).collect()
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }
}

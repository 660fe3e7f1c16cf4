//! Ribbon graphs as signed rotation systems.
//!
//! A vertex carries a cyclic sequence of edge ends and every edge carries a
//! sign, `Minus` marking a twisted band. All topological operations
//! (boundary tracing, duality, contraction) go through the corner model in
//! [`corners`], where each end contributes two corners and the surface is
//! described by three perfect matchings on corners.

mod boundary;
mod classify;
pub(crate) mod corners;
mod duality;
mod quasi;

pub use boundary::{trace_boundaries, BoundaryComponent, BoundaryId, Boundaries};
pub use classify::{classify_edge, euler_genus, interlaced, EdgeClass};
pub use duality::{
    contract_edge, delete_edge_tracked, dual, partial_dual, partial_dual_edge, Contraction,
    Deletion, Dual,
};
pub(crate) use duality::sides_of;
pub use quasi::{activities, enumerate_quasi_trees, is_quasi_tree, Activity, ActivityReport, EdgeOrder};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use petgraph::unionfind::UnionFind;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

pub type EdgeSet = BTreeSet<EdgeId>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_twisted(self) -> bool {
        self == Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EndIndex {
    One,
    Two,
}

impl EndIndex {
    pub fn other(self) -> EndIndex {
        match self {
            EndIndex::One => EndIndex::Two,
            EndIndex::Two => EndIndex::One,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            EndIndex::One => 1,
            EndIndex::Two => 2,
        }
    }
}

/// One of the two places where an edge band meets a vertex disc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct End {
    pub edge: EdgeId,
    pub index: EndIndex,
}

impl End {
    pub fn new(edge: EdgeId, index: EndIndex) -> End {
        End { edge, index }
    }

    pub fn opposite(self) -> End {
        End::new(self.edge, self.index.other())
    }
}

/// Corner of an end: `L` faces the predecessor in the vertex rotation,
/// `R` faces the successor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    L,
    R,
}

/// A corner of an edge end; boundary components are cyclic walks of these.
/// The derived order is the canonical (edge, end index, side) order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SideVisit {
    pub end: End,
    pub side: Side,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("end {0} placed twice")]
    DuplicateEnd(String),
    #[error("rotation at {vertex} references unknown edge {edge:?}")]
    DanglingEdge { vertex: VertexId, edge: EdgeId },
    #[error("end {0} is not placed in any rotation")]
    MissingEnd(String),
    #[error("duplicate edge name {0}")]
    DuplicateEdgeName(String),
    #[error("unknown edge {0:?}")]
    UnknownEdge(EdgeId),
    #[error("vertex {0} is not isolated")]
    NotIsolated(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("ribbon graph is not connected")]
    Disconnected,
    #[error("edge set is not a quasi-tree")]
    NotQuasiTree,
    #[error("edge order is not a permutation of the edge set")]
    BadOrder,
}

/// A signed rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonGraph {
    edges: BTreeMap<EdgeId, Edge>,
    rotations: BTreeMap<VertexId, Vec<End>>,
}

impl RibbonGraph {
    pub fn new(
        edges: BTreeMap<EdgeId, Edge>,
        rotations: BTreeMap<VertexId, Vec<End>>,
    ) -> Result<RibbonGraph, GraphError> {
        let g = RibbonGraph { edges, rotations };
        g.validate()?;
        Ok(g)
    }

    pub(crate) fn from_parts_unchecked(
        edges: BTreeMap<EdgeId, Edge>,
        rotations: BTreeMap<VertexId, Vec<End>>,
    ) -> RibbonGraph {
        let g = RibbonGraph { edges, rotations };
        debug_assert_eq!(g.validate(), Ok(()));
        g
    }

    pub fn empty() -> RibbonGraph {
        RibbonGraph { edges: BTreeMap::new(), rotations: BTreeMap::new() }
    }

    /// Checks that every edge has both ends placed exactly once and that
    /// every placed end belongs to a declared edge.
    pub fn validate(&self) -> Result<(), GraphError> {
        let mut names = BTreeSet::new();
        for edge in self.edges.values() {
            if !names.insert(edge.name.as_str()) {
                return Err(GraphError::DuplicateEdgeName(edge.name.clone()));
            }
        }
        let mut seen = BTreeSet::new();
        for (&v, rotation) in &self.rotations {
            for &end in rotation {
                if !self.edges.contains_key(&end.edge) {
                    return Err(GraphError::DanglingEdge { vertex: v, edge: end.edge });
                }
                if !seen.insert(end) {
                    return Err(GraphError::DuplicateEnd(self.end_name(end)));
                }
            }
        }
        for &e in self.edges.keys() {
            for index in [EndIndex::One, EndIndex::Two] {
                let end = End::new(e, index);
                if !seen.contains(&end) {
                    return Err(GraphError::MissingEnd(self.end_name(end)));
                }
            }
        }
        Ok(())
    }

    pub fn end_name(&self, end: End) -> String {
        match self.edges.get(&end.edge) {
            Some(edge) => format!("{}.{}", edge.name, end.index.number()),
            None => format!("#{}.{}", end.edge.0, end.index.number()),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.rotations.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.rotations.keys().copied()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges.keys().copied().collect()
    }

    pub fn edges(&self) -> &BTreeMap<EdgeId, Edge> {
        &self.edges
    }

    pub fn rotations(&self) -> &BTreeMap<VertexId, Vec<End>> {
        &self.rotations
    }

    pub fn rotation(&self, v: VertexId) -> Option<&[End]> {
        self.rotations.get(&v).map(Vec::as_slice)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.rotations.contains_key(&v)
    }

    pub fn sign(&self, e: EdgeId) -> Sign {
        self.edges[&e].sign
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[&e].name
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edges.iter().find(|(_, edge)| edge.name == name).map(|(&id, _)| id)
    }

    pub fn is_isolated(&self, v: VertexId) -> bool {
        self.rotations.get(&v).is_some_and(Vec::is_empty)
    }

    pub fn max_vertex_id(&self) -> Option<VertexId> {
        self.rotations.keys().next_back().copied()
    }

    /// Vertex carrying each placed end.
    pub fn incidence(&self) -> BTreeMap<End, VertexId> {
        self.rotations
            .iter()
            .flat_map(|(&v, rot)| rot.iter().map(move |&end| (end, v)))
            .collect()
    }

    pub fn vertex_of(&self, end: End) -> Option<VertexId> {
        self.rotations.iter().find(|(_, rot)| rot.contains(&end)).map(|(&v, _)| v)
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId), GraphError> {
        if !self.has_edge(e) {
            return Err(GraphError::UnknownEdge(e));
        }
        let u = self.vertex_of(End::new(e, EndIndex::One)).expect("validated");
        let v = self.vertex_of(End::new(e, EndIndex::Two)).expect("validated");
        Ok((u, v))
    }

    pub fn is_loop(&self, e: EdgeId) -> Result<bool, GraphError> {
        let (u, v) = self.endpoints(e)?;
        Ok(u == v)
    }

    /// Spanning ribbon subgraph on the edges of `keep`.
    pub fn restrict(&self, keep: &EdgeSet) -> Result<RibbonGraph, GraphError> {
        if let Some(&e) = keep.iter().find(|e| !self.has_edge(**e)) {
            return Err(GraphError::UnknownEdge(e));
        }
        Ok(self.restrict_unchecked(|e| keep.contains(&e)))
    }

    pub(crate) fn restrict_unchecked(&self, keep: impl Fn(EdgeId) -> bool) -> RibbonGraph {
        let edges = self
            .edges
            .iter()
            .filter(|(e, _)| keep(**e))
            .map(|(&e, edge)| (e, edge.clone()))
            .collect();
        let rotations = self
            .rotations
            .iter()
            .map(|(&v, rot)| (v, rot.iter().copied().filter(|end| keep(end.edge)).collect()))
            .collect();
        RibbonGraph { edges, rotations }
    }

    pub fn delete_edge(&self, e: EdgeId) -> Result<RibbonGraph, GraphError> {
        if !self.has_edge(e) {
            return Err(GraphError::UnknownEdge(e));
        }
        Ok(self.restrict_unchecked(|f| f != e))
    }

    pub fn delete_isolated_vertices(&self, vs: &[VertexId]) -> Result<RibbonGraph, GraphError> {
        for &v in vs {
            match self.rotations.get(&v) {
                None => return Err(GraphError::UnknownVertex(v)),
                Some(rot) if !rot.is_empty() => return Err(GraphError::NotIsolated(v)),
                Some(_) => {}
            }
        }
        let mut g = self.clone();
        for v in vs {
            g.rotations.remove(v);
        }
        Ok(g)
    }

    /// Ribbon subgraph with the given vertices and edges. Every edge must
    /// have both endpoints among `vertices`.
    pub fn induced(&self, vertices: &BTreeSet<VertexId>, edges: &EdgeSet) -> RibbonGraph {
        let sub_edges = self
            .edges
            .iter()
            .filter(|(e, _)| edges.contains(e))
            .map(|(&e, edge)| (e, edge.clone()))
            .collect();
        let rotations = self
            .rotations
            .iter()
            .filter(|(v, _)| vertices.contains(v))
            .map(|(&v, rot)| (v, rot.iter().copied().filter(|end| edges.contains(&end.edge)).collect()))
            .collect();
        RibbonGraph::from_parts_unchecked(sub_edges, rotations)
    }

    /// Vertex partition into connected components, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<BTreeSet<VertexId>> {
        let index: BTreeMap<VertexId, usize> =
            self.rotations.keys().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut uf = UnionFind::<usize>::new(index.len());
        let incidence = self.incidence();
        for &e in self.edges.keys() {
            let u = incidence[&End::new(e, EndIndex::One)];
            let v = incidence[&End::new(e, EndIndex::Two)];
            uf.union(index[&u], index[&v]);
        }
        let mut groups: BTreeMap<usize, BTreeSet<VertexId>> = BTreeMap::new();
        for (&v, &i) in &index {
            groups.entry(uf.find(i)).or_default().insert(v);
        }
        let mut comps: Vec<_> = groups.into_values().collect();
        comps.sort_by_key(|c| *c.iter().next().expect("nonempty"));
        comps
    }

    pub fn num_components(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() == 1
    }

    pub fn num_boundaries(&self) -> usize {
        trace_boundaries(self).len()
    }

    /// `(v, e, k, b)`.
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        (self.num_vertices(), self.num_edges(), self.num_components(), self.num_boundaries())
    }

    /// True iff some choice of vertex reflections makes every sign `Plus`.
    pub fn is_orientable(&self) -> bool {
        let incidence = self.incidence();
        let mut flip: BTreeMap<VertexId, bool> = BTreeMap::new();
        for &root in self.rotations.keys() {
            if flip.contains_key(&root) {
                continue;
            }
            flip.insert(root, false);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                let fv = flip[&v];
                for end in &self.rotations[&v] {
                    let w = incidence[&end.opposite()];
                    let want = fv ^ self.sign(end.edge).is_twisted();
                    match flip.get(&w) {
                        Some(&fw) if fw != want => return false,
                        Some(_) => {}
                        None => {
                            flip.insert(w, want);
                            stack.push(w);
                        }
                    }
                }
            }
        }
        true
    }

    /// Reverses the rotation at `v` and flips the sign of every incident end.
    /// The result presents the same ribbon graph.
    pub fn reflect_vertex(&self, v: VertexId) -> RibbonGraph {
        let mut g = self.clone();
        if let Some(rot) = g.rotations.get_mut(&v) {
            rot.reverse();
            for end in rot.iter() {
                let edge = g.edges.get_mut(&end.edge).expect("validated");
                edge.sign = edge.sign.flip();
            }
        }
        g
    }

    pub fn underlying(&self) -> crate::packaged::Multigraph {
        let index: BTreeMap<VertexId, usize> =
            self.rotations.keys().enumerate().map(|(i, &v)| (v, i)).collect();
        let incidence = self.incidence();
        let edges = self
            .edges
            .keys()
            .map(|&e| {
                (
                    index[&incidence[&End::new(e, EndIndex::One)]],
                    index[&incidence[&End::new(e, EndIndex::Two)]],
                )
            })
            .collect();
        crate::packaged::Multigraph::new(index.len(), edges)
    }
}

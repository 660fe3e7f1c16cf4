//! Packaged ribbon graphs: a ribbon graph with weighted partitions of its
//! vertices and of its boundary components, and the packaged versions of
//! deletion, contraction and duality.

mod packaging;
mod partition;

pub use packaging::{Multigraph, PackagingGraph};
pub use partition::{Block, WeightedPartition};

use std::collections::BTreeSet;

use thiserror::Error;

use crate::rg::{
    contract_edge, delete_edge_tracked, dual, trace_boundaries, BoundaryId, EdgeId, EdgeSet, GraphError,
    RibbonGraph, VertexId,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PackagedError {
    #[error("element {0} lies in two blocks")]
    Overlap(String),
    #[error("element {0} lies in no block")]
    Missing(String),
    #[error("element {0} is not in the ground set")]
    UnknownElement(String),
    #[error("empty block")]
    EmptyBlock,
    #[error("blocks do not form a component of the packaging")]
    NotAComponent,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackagedRibbonGraph {
    graph: RibbonGraph,
    vparts: WeightedPartition<VertexId>,
    bparts: WeightedPartition<BoundaryId>,
}

impl PackagedRibbonGraph {
    pub fn build(
        graph: RibbonGraph,
        vparts: WeightedPartition<VertexId>,
        bparts: WeightedPartition<BoundaryId>,
    ) -> Result<PackagedRibbonGraph, PackagedError> {
        let vground: BTreeSet<VertexId> = graph.vertices().collect();
        let bground: BTreeSet<BoundaryId> = trace_boundaries(&graph).ids().collect();
        let vparts = WeightedPartition::new(vparts.blocks().to_vec(), &vground)?;
        let bparts = WeightedPartition::new(bparts.blocks().to_vec(), &bground)?;
        Ok(PackagedRibbonGraph { graph, vparts, bparts })
    }

    fn from_parts_unchecked(
        graph: RibbonGraph,
        vparts: WeightedPartition<VertexId>,
        bparts: WeightedPartition<BoundaryId>,
    ) -> PackagedRibbonGraph {
        debug_assert_eq!(vparts.ground(), graph.vertices().collect());
        debug_assert_eq!(bparts.ground(), trace_boundaries(&graph).ids().collect());
        PackagedRibbonGraph { graph, vparts, bparts }
    }

    /// Singleton blocks of weight zero on both sides.
    pub fn discrete(graph: RibbonGraph) -> PackagedRibbonGraph {
        let vparts = WeightedPartition::discrete(graph.vertices());
        let bparts = WeightedPartition::discrete(trace_boundaries(&graph).ids());
        PackagedRibbonGraph { graph, vparts, bparts }
    }

    pub fn graph(&self) -> &RibbonGraph {
        &self.graph
    }

    pub fn vparts(&self) -> &WeightedPartition<VertexId> {
        &self.vparts
    }

    pub fn bparts(&self) -> &WeightedPartition<BoundaryId> {
        &self.bparts
    }

    /// The dual ribbon graph with the boundary partition moved onto its vertices.
    pub fn dual_side(&self) -> (RibbonGraph, WeightedPartition<VertexId>) {
        let d = dual(&self.graph);
        let parts = self.bparts.transport(|b| d.vertex_of_boundary[b.index()]);
        (d.graph, parts)
    }
}

/// `G(G; V)`.
pub fn packaging(pg: &PackagedRibbonGraph) -> PackagingGraph {
    PackagingGraph::of(&pg.graph, &pg.vparts, &pg.graph.edge_set())
}

/// `G(G*; B)`.
pub fn boundary_packaging(pg: &PackagedRibbonGraph) -> PackagingGraph {
    let (d, parts) = pg.dual_side();
    PackagingGraph::of(&d, &parts, &d.edge_set())
}

/// `(G(G|A; V), G(G*|A^c; B))`.
pub fn restricted_packagings(
    pg: &PackagedRibbonGraph,
    a: &EdgeSet,
) -> Result<(PackagingGraph, PackagingGraph), GraphError> {
    if let Some(&e) = a.iter().find(|e| !pg.graph.has_edge(**e)) {
        return Err(GraphError::UnknownEdge(e));
    }
    let (d, parts) = pg.dual_side();
    let complement: EdgeSet = pg.graph.edge_ids().filter(|e| !a.contains(e)).collect();
    Ok((PackagingGraph::of(&pg.graph, &pg.vparts, a), PackagingGraph::of(&d, &parts, &complement)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeletionCase {
    /// Sides on two boundary components in distinct blocks.
    MergeBlocks,
    /// Sides on two boundary components of one block.
    SameBlock,
    /// Both sides on one component, which splits in two.
    Split,
    /// Both sides on one component, which stays a single component.
    Persist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ContractionCase {
    MergeBlocks,
    SameBlock,
    OrientableLoop,
    NonOrientableLoop,
}

pub fn packaged_delete(
    pg: &PackagedRibbonGraph,
    e: EdgeId,
) -> Result<(PackagedRibbonGraph, DeletionCase), GraphError> {
    let before = trace_boundaries(&pg.graph);
    if !pg.graph.has_edge(e) {
        return Err(GraphError::UnknownEdge(e));
    }
    let (a, b) = crate::rg::sides_of(&before, e);
    let d = delete_edge_tracked(&pg.graph, e)?;
    let touched: BTreeSet<BoundaryId> = d.touched.iter().copied().collect();
    assert_eq!(touched, BTreeSet::from([a, b]), "deleted edge runs along exactly its side boundaries");

    let block = pg.bparts.index();
    let carry = |members: &BTreeSet<BoundaryId>| -> Vec<BoundaryId> {
        members.iter().filter(|m| !touched.contains(m)).map(|m| d.carried[m.index()].expect("untouched")).collect()
    };
    let (ba, bb) = (block[&a], block[&b]);
    let case = if a != b {
        assert_eq!(d.formed.len(), 1, "two boundary components merge into one");
        if ba != bb {
            DeletionCase::MergeBlocks
        } else {
            DeletionCase::SameBlock
        }
    } else {
        match d.formed.len() {
            2 => DeletionCase::Split,
            1 => DeletionCase::Persist,
            n => panic!("deletion along one boundary formed {n} components"),
        }
    };

    let mut blocks = Vec::with_capacity(pg.bparts.len());
    for (i, blk) in pg.bparts.blocks().iter().enumerate() {
        if i == ba || i == bb {
            continue;
        }
        blocks.push(Block::new(carry(&blk.members), blk.weight));
    }
    let old = &pg.bparts.blocks()[ba];
    let mut members = carry(&old.members);
    members.extend(d.formed.iter().copied());
    let weight = if case == DeletionCase::MergeBlocks {
        let other = &pg.bparts.blocks()[bb];
        members.extend(carry(&other.members));
        old.weight + other.weight
    } else {
        old.weight + 1
    };
    blocks.push(Block::new(members, weight));

    let bparts = WeightedPartition::from_blocks(blocks);
    Ok((PackagedRibbonGraph::from_parts_unchecked(d.graph, pg.vparts.clone(), bparts), case))
}

pub fn packaged_contract(
    pg: &PackagedRibbonGraph,
    e: EdgeId,
) -> Result<(PackagedRibbonGraph, ContractionCase), GraphError> {
    let (u, v) = pg.graph.endpoints(e)?;
    let c = contract_edge(&pg.graph, e)?;
    let bparts = pg.bparts.transport(|b| c.boundary_map[b.index()]);
    let block = pg.vparts.index();
    let (bu, bv) = (block[&u], block[&v]);
    let case = if u != v {
        if bu != bv {
            ContractionCase::MergeBlocks
        } else {
            ContractionCase::SameBlock
        }
    } else if pg.graph.sign(e).is_twisted() {
        ContractionCase::NonOrientableLoop
    } else {
        ContractionCase::OrientableLoop
    };
    let expected_new = if case == ContractionCase::OrientableLoop { 2 } else { 1 };
    assert_eq!(c.new_vertices.len(), expected_new, "contraction case {case:?} creates {expected_new} vertices");

    let gone = [u, v];
    let mut blocks = Vec::with_capacity(pg.vparts.len());
    for (i, blk) in pg.vparts.blocks().iter().enumerate() {
        if i != bu && i != bv {
            blocks.push(blk.clone());
        }
    }
    let old = &pg.vparts.blocks()[bu];
    let mut members: Vec<VertexId> = old.members.iter().copied().filter(|w| !gone.contains(w)).collect();
    members.extend(c.new_vertices.iter().copied());
    let weight = if case == ContractionCase::MergeBlocks {
        let other = &pg.vparts.blocks()[bv];
        members.extend(other.members.iter().copied().filter(|w| !gone.contains(w)));
        old.weight + other.weight
    } else {
        old.weight + 1
    };
    blocks.push(Block::new(members, weight));

    let vparts = WeightedPartition::from_blocks(blocks);
    Ok((PackagedRibbonGraph::from_parts_unchecked(c.graph, vparts, bparts), case))
}

/// Dual ribbon graph with the two partitions exchanged along the
/// vertex/boundary correspondences.
pub fn packaged_dual(pg: &PackagedRibbonGraph) -> PackagedRibbonGraph {
    let d = dual(&pg.graph);
    let vparts = pg.bparts.transport(|b| d.vertex_of_boundary[b.index()]);
    let bparts = pg.vparts.transport(|v| d.boundary_of_vertex[&v]);
    PackagedRibbonGraph::from_parts_unchecked(d.graph, vparts, bparts)
}

/// Deletes every edge of `deleted`, then contracts every edge of `contracted`, in id order.
pub fn packaged_minor(
    pg: &PackagedRibbonGraph,
    deleted: &EdgeSet,
    contracted: &EdgeSet,
) -> Result<PackagedRibbonGraph, GraphError> {
    let mut cur = pg.clone();
    for &e in deleted {
        cur = packaged_delete(&cur, e)?.0;
    }
    for &e in contracted {
        cur = packaged_contract(&cur, e)?.0;
    }
    Ok(cur)
}

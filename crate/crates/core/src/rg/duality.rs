use std::collections::{BTreeMap, BTreeSet};

use super::boundary::trace_with;
use super::corners::{assemble, corner, preserving_ids, reread, Corners};
use super::{trace_boundaries, BoundaryId, EdgeId, EdgeSet, GraphError, RibbonGraph, Side, VertexId};
use crate::rg::EndIndex;

/// Geometric dual together with its correspondences.
#[derive(Clone, Debug)]
pub struct Dual {
    pub graph: RibbonGraph,
    /// Dual vertex capping each boundary component of the source, indexed by boundary id.
    pub vertex_of_boundary: Vec<VertexId>,
    /// Boundary component of the dual that runs around each source vertex.
    pub boundary_of_vertex: BTreeMap<VertexId, BoundaryId>,
}

pub fn dual(g: &RibbonGraph) -> Dual {
    let c = Corners::new(g);
    let boundaries = trace_with(g, &c);
    let all: BTreeSet<EdgeId> = g.edge_ids().collect();
    let r = reread(g, &c, &all);
    // With every edge swapped, orbits are the boundary components in trace order.
    let ids: Vec<VertexId> = (0..r.orbits.len()).map(|i| VertexId(i as u32 + 1)).collect();
    let isolated: Vec<VertexId> = (r.orbits.len()..boundaries.len()).map(|i| VertexId(i as u32 + 1)).collect();
    let graph = assemble(g, &r, &ids, &isolated);
    let vertex_of_boundary: Vec<VertexId> = (0..boundaries.len()).map(|i| VertexId(i as u32 + 1)).collect();
    debug_assert!(r
        .orbits
        .iter()
        .zip(boundaries.components())
        .all(|(o, b)| o.corners.iter().copied().min() == b.visits.first().map(|&v| c.index_of(v))));

    let dual_boundaries = trace_boundaries(&graph);
    let mut boundary_of_vertex = BTreeMap::new();
    for (&v, rot) in g.rotations() {
        let id = match rot.first() {
            Some(end) => {
                let p = corner(c.dense[&end.edge], end.index, Side::L);
                dual_boundaries.containing(r.relabel[p]).expect("relabelled corner is traced")
            }
            None => {
                let b = boundaries.of_isolated(v).expect("isolated vertex has a boundary");
                dual_boundaries
                    .of_isolated(vertex_of_boundary[b.index()])
                    .expect("capped disc is isolated in the dual")
            }
        };
        boundary_of_vertex.insert(v, id);
    }
    Dual { graph, vertex_of_boundary, boundary_of_vertex }
}

/// Partial dual with respect to one edge.
pub fn partial_dual_edge(g: &RibbonGraph, e: EdgeId) -> Result<RibbonGraph, GraphError> {
    if !g.has_edge(e) {
        return Err(GraphError::UnknownEdge(e));
    }
    let c = Corners::new(g);
    let r = reread(g, &c, &BTreeSet::from([e]));
    let (ids, _) = preserving_ids(g, &r);
    let isolated: Vec<VertexId> = g.vertices().filter(|&v| g.is_isolated(v)).collect();
    Ok(assemble(g, &r, &ids, &isolated))
}

/// Partial dual with respect to `a`, formed one edge at a time in id order.
pub fn partial_dual(g: &RibbonGraph, a: &EdgeSet) -> Result<RibbonGraph, GraphError> {
    a.iter().try_fold(g.clone(), |h, &e| partial_dual_edge(&h, e))
}

#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: RibbonGraph,
    /// Boundary of the result matching each boundary of the source, indexed by source id.
    pub boundary_map: Vec<BoundaryId>,
    /// Vertices created by the contraction, in id order.
    pub new_vertices: Vec<VertexId>,
}

/// Contracts `e` as the partial dual at `e` followed by deletion of `e`,
/// tracking corners so the boundary correspondence comes out of the same pass.
pub fn contract_edge(g: &RibbonGraph, e: EdgeId) -> Result<Contraction, GraphError> {
    if !g.has_edge(e) {
        return Err(GraphError::UnknownEdge(e));
    }
    let c = Corners::new(g);
    let before = trace_with(g, &c);
    let r = reread(g, &c, &BTreeSet::from([e]));
    let (ids, new_vertices) = preserving_ids(g, &r);
    let isolated: Vec<VertexId> = g.vertices().filter(|&v| g.is_isolated(v)).collect();
    let dualized = assemble(g, &r, &ids, &isolated);
    let graph = dualized.delete_edge(e)?;
    let after = trace_boundaries(&graph);

    let mut orbit_of_corner = vec![usize::MAX; c.len()];
    for (i, orbit) in r.orbits.iter().enumerate() {
        for &p in &orbit.corners {
            orbit_of_corner[p] = i;
        }
    }

    let mut boundary_map = Vec::with_capacity(before.len());
    for comp in before.components() {
        let target = if let Some(v) = comp.isolated {
            after.of_isolated(v)
        } else if let Some(&visit) = comp.visits.iter().find(|vis| vis.end.edge != e) {
            after.containing(r.relabel[c.index_of(visit)])
        } else {
            // only corners of e: these corners form a vertex of the partial
            // dual that becomes isolated once e is gone
            let p = c.index_of(comp.visits[0]);
            after.of_isolated(ids[orbit_of_corner[p]])
        };
        boundary_map.push(target.expect("contraction preserves boundary components"));
    }
    debug_assert_eq!(
        boundary_map.iter().collect::<BTreeSet<_>>().len(),
        after.len(),
        "boundary correspondence is a bijection"
    );
    Ok(Contraction { graph, boundary_map, new_vertices })
}

#[derive(Clone, Debug)]
pub struct Deletion {
    pub graph: RibbonGraph,
    /// Image of each source boundary not met by the deleted edge.
    pub carried: Vec<Option<BoundaryId>>,
    /// Source boundaries the deleted edge runs along (one or two).
    pub touched: Vec<BoundaryId>,
    /// Result boundaries formed by the deletion.
    pub formed: Vec<BoundaryId>,
}

pub fn delete_edge_tracked(g: &RibbonGraph, e: EdgeId) -> Result<Deletion, GraphError> {
    let graph = g.delete_edge(e)?;
    let before = trace_boundaries(g);
    let after = trace_boundaries(&graph);
    let mut carried = Vec::with_capacity(before.len());
    let mut touched = Vec::new();
    for comp in before.components() {
        if comp.visits.iter().any(|v| v.end.edge == e) {
            carried.push(None);
            touched.push(comp.id);
        } else if let Some(v) = comp.isolated {
            carried.push(after.of_isolated(v));
        } else {
            carried.push(after.containing(comp.visits[0]));
        }
    }
    let images: BTreeSet<BoundaryId> = carried.iter().flatten().copied().collect();
    let formed = after.ids().filter(|b| !images.contains(b)).collect();
    Ok(Deletion { graph, carried, touched, formed })
}

/// Boundaries met by the two long sides of `e`.
pub(crate) fn sides_of(boundaries: &super::Boundaries, e: EdgeId) -> (BoundaryId, BoundaryId) {
    use super::{End, SideVisit};
    let left = SideVisit { end: End::new(e, EndIndex::One), side: Side::L };
    let right = SideVisit { end: End::new(e, EndIndex::One), side: Side::R };
    (
        boundaries.containing(left).expect("edge corners are traced"),
        boundaries.containing(right).expect("edge corners are traced"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{parse_graph, EXAMPLE_GRAPH};
    use crate::iso::isomorphic;
    use crate::rg::interlaced;

    #[test]
    fn dual_of_annulus_is_a_path() {
        let g = parse_graph("edges: e+\nvertex v: e.1 e.2\n").unwrap();
        let d = dual(&g);
        assert_eq!(d.graph.num_vertices(), 2);
        assert_eq!(d.graph.num_edges(), 1);
        assert!(!d.graph.is_loop(EdgeId(0)).unwrap());
        assert_eq!(d.graph.num_boundaries(), 1);
    }

    #[test]
    fn dual_of_disc() {
        let g = parse_graph("vertex v:\n").unwrap();
        let d = dual(&g);
        assert_eq!(d.graph.num_vertices(), 1);
        assert_eq!(d.graph.num_edges(), 0);
        assert_eq!(d.boundary_of_vertex.len(), 1);
    }

    #[test]
    fn dual_of_example_graph() {
        let g = parse_graph(EXAMPLE_GRAPH).unwrap();
        let d = dual(&g);
        assert_eq!(d.graph.num_vertices(), 1);
        assert!(d.graph.edge_ids().all(|e| d.graph.is_loop(e).unwrap()));
        assert_eq!(d.graph.num_boundaries(), g.num_vertices());
        assert!(isomorphic(&dual(&d.graph).graph, &g));
        assert!(isomorphic(&partial_dual(&g, &g.edge_set()).unwrap(), &d.graph));
    }

    #[test]
    fn partial_dual_at_f() {
        let g = parse_graph(EXAMPLE_GRAPH).unwrap();
        let [e, f, gg] = ["e", "f", "g"].map(|n| g.edge_by_name(n).unwrap());
        assert_eq!(partial_dual(&g, &EdgeSet::new()).unwrap(), g);
        let h = partial_dual(&g, &EdgeSet::from([f])).unwrap();
        assert_eq!(h.num_vertices(), 1);
        assert!(!interlaced(&h, e, f));
        assert!(interlaced(&h, gg, f));
        assert!(interlaced(&h, gg, e));
        let back = partial_dual(&h, &EdgeSet::from([f])).unwrap();
        assert!(isomorphic(&back, &g));
    }

    #[test]
    fn contraction_examples() {
        let path = parse_graph("edges: e+\nvertex u: e.1\nvertex v: e.2\n").unwrap();
        let c = contract_edge(&path, EdgeId(0)).unwrap();
        assert_eq!(c.graph.counts(), (1, 0, 1, 1));
        assert_eq!(c.boundary_map, vec![BoundaryId(0)]);
        assert_eq!(c.new_vertices.len(), 1);

        let annulus = parse_graph("edges: e+\nvertex v: e.1 e.2\n").unwrap();
        let c = contract_edge(&annulus, EdgeId(0)).unwrap();
        assert_eq!(c.graph.counts(), (2, 0, 2, 2));
        assert_eq!(c.new_vertices.len(), 2);
        let mut images = c.boundary_map.clone();
        images.sort();
        assert_eq!(images, vec![BoundaryId(0), BoundaryId(1)]);

        let mobius = parse_graph("edges: e-\nvertex v: e.1 e.2\n").unwrap();
        let c = contract_edge(&mobius, EdgeId(0)).unwrap();
        assert_eq!(c.graph.counts(), (1, 0, 1, 1));
        assert_eq!(c.boundary_map, vec![BoundaryId(0)]);
    }

    #[test]
    fn contraction_keeps_untouched_vertices() {
        let g = parse_graph("edges: a+ b+ c-\nvertex u: a.1 b.1\nvertex v: a.2 c.1 c.2\nvertex w: b.2\n").unwrap();
        let c = contract_edge(&g, g.edge_by_name("c").unwrap()).unwrap();
        let u = VertexId(1);
        let w = VertexId(3);
        assert_eq!(c.graph.rotation(u), g.rotation(u));
        assert_eq!(c.graph.rotation(w), g.rotation(w));
        assert!(!c.graph.has_vertex(VertexId(2)));
    }

    #[test]
    fn deletion_tracking_cases() {
        let path = parse_graph("edges: e+\nvertex u: e.1\nvertex v: e.2\n").unwrap();
        let d = delete_edge_tracked(&path, EdgeId(0)).unwrap();
        assert_eq!(d.touched.len(), 1);
        assert_eq!(d.formed.len(), 2);

        let theta = parse_graph("edges: a+ b+\nvertex u: a.1 b.1\nvertex v: a.2 b.2\nvertex w:\n").unwrap();
        let d = delete_edge_tracked(&theta, EdgeId(0)).unwrap();
        assert_eq!(d.touched.len(), 2);
        assert_eq!(d.formed.len(), 1);
        assert_eq!(d.carried.iter().flatten().count(), 1);
    }
}

//! Corner model of a ribbon graph.
//!
//! Every end has two corners, so an edge owns four. Three perfect matchings
//! on corners describe the surface:
//!
//! * `across`: the two corners of one end (the arc where band meets disc);
//! * `band`: corners joined along a long side of the edge band, which
//!   depends on the edge sign;
//! * `vertex`: corners joined along a vertex boundary arc, from the `R`
//!   corner of an end to the `L` corner of its rotation successor.
//!
//! Vertices are orbits of `<vertex, across>`, boundary components are orbits
//! of `<vertex, band>`. Partially dualizing an edge swaps its `across` and
//! `band` matchings, so reading vertices back off the swapped structure
//! gives a new rotation system without any case analysis.

use std::collections::{BTreeMap, BTreeSet};

use super::{Edge, EdgeId, End, EndIndex, RibbonGraph, Side, SideVisit, Sign, VertexId};

pub(crate) struct Corners {
    pub edges: Vec<EdgeId>,
    pub dense: BTreeMap<EdgeId, usize>,
    pub band: Vec<usize>,
    pub vertex: Vec<usize>,
    pub owner: Vec<VertexId>,
}

pub(crate) fn corner(k: usize, index: EndIndex, side: Side) -> usize {
    4 * k
        + match index {
            EndIndex::One => 0,
            EndIndex::Two => 2,
        }
        + match side {
            Side::L => 0,
            Side::R => 1,
        }
}

pub(crate) fn across(p: usize) -> usize {
    p ^ 1
}

impl Corners {
    pub fn new(g: &RibbonGraph) -> Corners {
        let edges: Vec<EdgeId> = g.edge_ids().collect();
        let dense: BTreeMap<EdgeId, usize> = edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        let n = 4 * edges.len();
        let band: Vec<usize> = (0..n)
            .map(|p| match g.sign(edges[p / 4]) {
                Sign::Plus => p ^ 3,
                Sign::Minus => p ^ 2,
            })
            .collect();
        let mut vertex = vec![usize::MAX; n];
        let mut owner = vec![VertexId(0); n];
        for (&v, rot) in g.rotations() {
            let len = rot.len();
            for i in 0..len {
                let a = rot[i];
                let b = rot[(i + 1) % len];
                let ar = corner(dense[&a.edge], a.index, Side::R);
                let bl = corner(dense[&b.edge], b.index, Side::L);
                vertex[ar] = bl;
                vertex[bl] = ar;
                owner[ar] = v;
                owner[ar ^ 1] = v;
            }
        }
        Corners { edges, dense, band, vertex, owner }
    }

    pub fn len(&self) -> usize {
        self.band.len()
    }

    pub fn visit(&self, p: usize) -> SideVisit {
        let index = if p & 2 == 0 { EndIndex::One } else { EndIndex::Two };
        let side = if p & 1 == 0 { Side::L } else { Side::R };
        SideVisit { end: End::new(self.edges[p / 4], index), side }
    }

    pub fn index_of(&self, visit: SideVisit) -> usize {
        corner(self.dense[&visit.end.edge], visit.end.index, visit.side)
    }
}

/// A vertex of a re-read rotation system, expressed over old corners.
pub(crate) struct Orbit {
    pub rotation: Vec<End>,
    pub corners: Vec<usize>,
    /// Old vertex this orbit reproduces exactly, when it touches no swapped edge.
    pub origin: Option<VertexId>,
}

pub(crate) struct Reread {
    pub orbits: Vec<Orbit>,
    /// New label of every old corner.
    pub relabel: Vec<SideVisit>,
    pub signs: BTreeMap<EdgeId, Sign>,
}

/// Reads the rotation system obtained by swapping the `across` and `band`
/// matchings on every edge in `swap`.
pub(crate) fn reread(g: &RibbonGraph, c: &Corners, swap: &BTreeSet<EdgeId>) -> Reread {
    let swapped: Vec<bool> = c.edges.iter().map(|e| swap.contains(e)).collect();
    let new_across = |p: usize| if swapped[p / 4] { c.band[p] } else { across(p) };
    let new_band = |p: usize| if swapped[p / 4] { across(p) } else { c.band[p] };

    let n = c.len();
    let mut seen = vec![false; n];
    let mut relabel: Vec<Option<SideVisit>> = vec![None; n];
    let mut orbits = Vec::new();

    let mut starts: Vec<usize> = Vec::with_capacity(n);
    for rot in g.rotations().values() {
        for end in rot {
            let k = c.dense[&end.edge];
            if !swapped[k] {
                starts.push(corner(k, end.index, Side::L));
            }
        }
    }
    starts.extend(0..n);

    for s in starts {
        if seen[s] {
            continue;
        }
        let mut rotation = Vec::new();
        let mut corners = Vec::new();
        let mut touches = false;
        let mut p = s;
        loop {
            let q = new_across(p);
            let k = p / 4;
            touches |= swapped[k];
            let index = if swapped[k] {
                // the new end is a band pair; it is end One iff it holds old (One, L)
                let one_l = corner(k, EndIndex::One, Side::L);
                if p == one_l || q == one_l {
                    EndIndex::One
                } else {
                    EndIndex::Two
                }
            } else {
                c.visit(p).end.index
            };
            let end = End::new(c.edges[k], index);
            rotation.push(end);
            relabel[p] = Some(SideVisit { end, side: Side::L });
            relabel[q] = Some(SideVisit { end, side: Side::R });
            seen[p] = true;
            seen[q] = true;
            corners.push(p);
            corners.push(q);
            p = c.vertex[q];
            if p == s {
                break;
            }
        }
        let origin = if touches { None } else { Some(c.owner[s]) };
        orbits.push(Orbit { rotation, corners, origin });
    }

    let relabel: Vec<SideVisit> = relabel.into_iter().map(|v| v.expect("every corner is read")).collect();
    let mut signs = BTreeMap::new();
    for (k, &e) in c.edges.iter().enumerate() {
        let p = (4 * k..4 * k + 4)
            .find(|&p| relabel[p].end.index == EndIndex::One && relabel[p].side == Side::R)
            .expect("every end has an R corner");
        let partner = relabel[new_band(p)];
        debug_assert_eq!(partner.end.index, EndIndex::Two);
        let sign = if partner.side == Side::L { Sign::Plus } else { Sign::Minus };
        signs.insert(e, sign);
    }

    Reread { orbits, relabel, signs }
}

/// Rotation system built from a re-read, with vertex ids chosen by `ids`
/// and one isolated vertex per entry of `isolated`.
pub(crate) fn assemble(g: &RibbonGraph, r: &Reread, ids: &[VertexId], isolated: &[VertexId]) -> RibbonGraph {
    let edges: BTreeMap<EdgeId, Edge> = g
        .edges()
        .iter()
        .map(|(&e, edge)| (e, Edge { name: edge.name.clone(), sign: r.signs[&e] }))
        .collect();
    let mut rotations: BTreeMap<VertexId, Vec<End>> = BTreeMap::new();
    for (orbit, &id) in r.orbits.iter().zip(ids) {
        let previous = rotations.insert(id, orbit.rotation.clone());
        debug_assert!(previous.is_none());
    }
    for &v in isolated {
        let previous = rotations.insert(v, Vec::new());
        debug_assert!(previous.is_none());
    }
    RibbonGraph::from_parts_unchecked(edges, rotations)
}

/// Ids keeping every untouched vertex and numbering new ones past the
/// largest id of `g`.
pub(crate) fn preserving_ids(g: &RibbonGraph, r: &Reread) -> (Vec<VertexId>, Vec<VertexId>) {
    let mut next = g.max_vertex_id().map_or(1, |v| v.0 + 1);
    let mut fresh = Vec::new();
    let ids = r
        .orbits
        .iter()
        .map(|o| match o.origin {
            Some(v) => v,
            None => {
                let v = VertexId(next);
                next += 1;
                fresh.push(v);
                v
            }
        })
        .collect();
    (ids, fresh)
}

use super::{contract_edge, EdgeId, End, EndIndex, GraphError, RibbonGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    Bridge,
    Ordinary,
    PlaneLoop,
    NonPlaneLoop,
    NonOrientableLoop,
}

impl EdgeClass {
    pub fn is_loop(self) -> bool {
        matches!(self, EdgeClass::PlaneLoop | EdgeClass::NonPlaneLoop | EdgeClass::NonOrientableLoop)
    }
}

/// `2k - v + e - b`.
pub fn euler_genus(g: &RibbonGraph) -> usize {
    let (v, e, k, b) = g.counts();
    let genus = 2 * k as i64 - v as i64 + e as i64 - b as i64;
    debug_assert!(genus >= 0);
    genus as usize
}

pub fn classify_edge(g: &RibbonGraph, e: EdgeId) -> Result<EdgeClass, GraphError> {
    let (u, v) = g.endpoints(e)?;
    let k = g.num_components();
    if u != v {
        let deleted = g.delete_edge(e)?;
        return Ok(if deleted.num_components() > k { EdgeClass::Bridge } else { EdgeClass::Ordinary });
    }
    // A loop together with its vertex is a Moebius band iff the band is
    // twisted relative to that one vertex; reflections cancel at both ends.
    if g.sign(e).is_twisted() {
        return Ok(EdgeClass::NonOrientableLoop);
    }
    let contracted = contract_edge(g, e)?.graph;
    Ok(if contracted.num_components() > k { EdgeClass::PlaneLoop } else { EdgeClass::NonPlaneLoop })
}

/// True iff `e` and `f` are loops at one vertex whose ends alternate.
pub fn interlaced(g: &RibbonGraph, e: EdgeId, f: EdgeId) -> bool {
    if e == f {
        return false;
    }
    for rot in g.rotations().values() {
        let pos = |end: End| rot.iter().position(|&x| x == end);
        let (Some(e1), Some(e2)) = (pos(End::new(e, EndIndex::One)), pos(End::new(e, EndIndex::Two))) else {
            continue;
        };
        let (Some(f1), Some(f2)) = (pos(End::new(f, EndIndex::One)), pos(End::new(f, EndIndex::Two))) else {
            return false;
        };
        let (lo, hi) = (e1.min(e2), e1.max(e2));
        let inside = |p: usize| lo < p && p < hi;
        return inside(f1) != inside(f2);
    }
    false
}

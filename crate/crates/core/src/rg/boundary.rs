use std::collections::HashMap;
use std::fmt;

use super::corners::Corners;
use super::{RibbonGraph, SideVisit, VertexId};

/// Canonical index of a boundary component. Displayed 1-based as `b1, b2, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryId(pub u32);

impl BoundaryId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for BoundaryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}", self.0 + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryComponent {
    pub id: BoundaryId,
    /// Cyclic walk starting at the least visit, first along its band side.
    pub visits: Vec<SideVisit>,
    /// Set for the empty boundary of an isolated vertex.
    pub isolated: Option<VertexId>,
}

/// All boundary components of a ribbon graph in canonical order: components
/// with visits ordered by their least visit, then isolated vertices by id.
#[derive(Clone, Debug)]
pub struct Boundaries {
    components: Vec<BoundaryComponent>,
    of_visit: HashMap<SideVisit, BoundaryId>,
    of_isolated: HashMap<VertexId, BoundaryId>,
}

impl Boundaries {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[BoundaryComponent] {
        &self.components
    }

    pub fn get(&self, id: BoundaryId) -> &BoundaryComponent {
        &self.components[id.index()]
    }

    pub fn ids(&self) -> impl Iterator<Item = BoundaryId> + '_ {
        self.components.iter().map(|c| c.id)
    }

    pub fn containing(&self, visit: SideVisit) -> Option<BoundaryId> {
        self.of_visit.get(&visit).copied()
    }

    pub fn of_isolated(&self, v: VertexId) -> Option<BoundaryId> {
        self.of_isolated.get(&v).copied()
    }

    pub fn into_components(self) -> Vec<BoundaryComponent> {
        self.components
    }
}

pub fn trace_boundaries(g: &RibbonGraph) -> Boundaries {
    let c = Corners::new(g);
    trace_with(g, &c)
}

pub(crate) fn trace_with(g: &RibbonGraph, c: &Corners) -> Boundaries {
    let n = c.len();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    let mut of_visit = HashMap::with_capacity(n);
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let id = BoundaryId(components.len() as u32);
        let mut visits = Vec::new();
        let mut p = start;
        loop {
            let q = c.band[p];
            for r in [p, q] {
                seen[r] = true;
                let visit = c.visit(r);
                visits.push(visit);
                of_visit.insert(visit, id);
            }
            p = c.vertex[q];
            if p == start {
                break;
            }
        }
        components.push(BoundaryComponent { id, visits, isolated: None });
    }
    let mut of_isolated = HashMap::new();
    for v in g.vertices().filter(|&v| g.is_isolated(v)) {
        let id = BoundaryId(components.len() as u32);
        of_isolated.insert(v, id);
        components.push(BoundaryComponent { id, visits: Vec::new(), isolated: Some(v) });
    }
    Boundaries { components, of_visit, of_isolated }
}

//! Isomorphism of ribbon graphs through the corner model.
//!
//! Two ribbon graphs are isomorphic iff there is a bijection of corners
//! carrying each of the three corner matchings onto the same matching.
//! Vertex reflections only rename the `L`/`R` corners of an end, so they are
//! absorbed automatically.

use std::collections::{BTreeMap, VecDeque};

use crate::packaged::PackagedRibbonGraph;
use crate::rg::corners::{across, Corners};
use crate::rg::{trace_boundaries, BoundaryId, EdgeId, RibbonGraph, VertexId};

/// Complete isomorphism invariant: canonical corner codes of the
/// components in sorted order together with the number of isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    components: Vec<Vec<u32>>,
    isolated: usize,
}

fn matchings(c: &Corners, p: usize) -> [usize; 3] {
    [across(p), c.band[p], c.vertex[p]]
}

/// Corner components, each as the list of its corners.
fn corner_components(c: &Corners) -> Vec<Vec<usize>> {
    let mut seen = vec![false; c.len()];
    let mut out = Vec::new();
    for s in 0..c.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for q in matchings(c, comp[i]) {
                if !seen[q] {
                    seen[q] = true;
                    comp.push(q);
                }
            }
            i += 1;
        }
        out.push(comp);
    }
    out
}

fn rooted_code(c: &Corners, root: usize, label: &mut [u32], order: &mut Vec<usize>) -> Vec<u32> {
    order.clear();
    order.push(root);
    label[root] = 0;
    let mut i = 0;
    while i < order.len() {
        for q in matchings(c, order[i]) {
            if label[q] == u32::MAX {
                label[q] = order.len() as u32;
                order.push(q);
            }
        }
        i += 1;
    }
    let code = order.iter().flat_map(|&p| matchings(c, p).map(|q| label[q])).collect();
    for &p in order.iter() {
        label[p] = u32::MAX;
    }
    code
}

pub fn canonical_code(g: &RibbonGraph) -> CanonicalCode {
    let c = Corners::new(g);
    let mut label = vec![u32::MAX; c.len()];
    let mut order = Vec::new();
    let mut components: Vec<Vec<u32>> = corner_components(&c)
        .into_iter()
        .map(|comp| {
            comp.iter().map(|&s| rooted_code(&c, s, &mut label, &mut order)).min().expect("nonempty component")
        })
        .collect();
    components.sort();
    let isolated = g.vertices().filter(|&v| g.is_isolated(v)).count();
    CanonicalCode { components, isolated }
}

/// Isomorphism as ribbon graphs, edges free to be renamed.
pub fn isomorphic(g: &RibbonGraph, h: &RibbonGraph) -> bool {
    g.num_edges() == h.num_edges() && g.num_vertices() == h.num_vertices() && canonical_code(g) == canonical_code(h)
}

/// An isomorphism sending every edge to the edge of the same name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub edges: BTreeMap<EdgeId, EdgeId>,
    pub vertices: BTreeMap<VertexId, VertexId>,
    pub boundaries: BTreeMap<BoundaryId, BoundaryId>,
}

/// Corner maps of one component extending a bijection of the four corners of its root edge.
fn component_maps(
    cg: &Corners,
    ch: &Corners,
    comp: &[usize],
    edge_map: &BTreeMap<EdgeId, EdgeId>,
) -> Vec<BTreeMap<usize, usize>> {
    let root = comp.iter().copied().min().expect("nonempty component");
    let k = root / 4;
    let target = ch.dense[&edge_map[&cg.edges[k]]];
    let mut out = Vec::new();
    for t in 0..4usize {
        for swap_band in [false, true] {
            // candidate images of the root edge's corners
            let image = |c: usize| -> usize {
                let c = c ^ t;
                let c = if swap_band && c & 2 != 0 { c ^ 1 } else { c };
                4 * target + c
            };
            let mut phi: BTreeMap<usize, usize> = BTreeMap::new();
            let mut used: BTreeMap<usize, usize> = BTreeMap::new();
            let mut queue = VecDeque::new();
            let mut ok = true;
            for c in 0..4 {
                let (p, q) = (4 * k + c, image(c));
                if used.insert(q, p).is_some() {
                    ok = false;
                }
                phi.insert(p, q);
                queue.push_back(p);
            }
            while ok {
                let Some(p) = queue.pop_front() else { break };
                let q = phi[&p];
                for (mp, mq) in matchings(cg, p).into_iter().zip(matchings(ch, q)) {
                    if edge_map[&cg.edges[mp / 4]] != ch.edges[mq / 4] {
                        ok = false;
                        break;
                    }
                    match phi.get(&mp) {
                        Some(&existing) if existing != mq => {
                            ok = false;
                            break;
                        }
                        Some(_) => {}
                        None => {
                            if used.insert(mq, mp).is_some() {
                                ok = false;
                                break;
                            }
                            phi.insert(mp, mq);
                            queue.push_back(mp);
                        }
                    }
                }
            }
            if ok && phi.len() == comp.len() && !out.contains(&phi) {
                out.push(phi);
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for i in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(i, n - 1);
            out.push(p);
        }
    }
    out
}

/// Every isomorphism of `g` onto `h` that preserves edge names.
pub fn name_preserving_isomorphisms(g: &RibbonGraph, h: &RibbonGraph) -> Vec<Isomorphism> {
    if g.num_edges() != h.num_edges() || g.num_vertices() != h.num_vertices() {
        return Vec::new();
    }
    let mut edges = BTreeMap::new();
    for e in g.edge_ids() {
        match h.edge_by_name(g.edge_name(e)) {
            Some(f) => edges.insert(e, f),
            None => return Vec::new(),
        };
    }
    let iso_g: Vec<VertexId> = g.vertices().filter(|&v| g.is_isolated(v)).collect();
    let iso_h: Vec<VertexId> = h.vertices().filter(|&v| h.is_isolated(v)).collect();
    if iso_g.len() != iso_h.len() {
        return Vec::new();
    }
    let cg = Corners::new(g);
    let ch = Corners::new(h);
    let per_component: Vec<Vec<BTreeMap<usize, usize>>> =
        corner_components(&cg).iter().map(|comp| component_maps(&cg, &ch, comp, &edges)).collect();
    if per_component.iter().any(Vec::is_empty) {
        return Vec::new();
    }

    let bg = trace_boundaries(g);
    let bh = trace_boundaries(h);
    let mut out = Vec::new();
    let mut choice = vec![0usize; per_component.len()];
    loop {
        let mut phi = vec![usize::MAX; cg.len()];
        for (maps, &i) in per_component.iter().zip(&choice) {
            for (&p, &q) in &maps[i] {
                phi[p] = q;
            }
        }
        for perm in permutations(iso_g.len()) {
            let mut vertices = BTreeMap::new();
            for (&v, rot) in g.rotations() {
                if let Some(end) = rot.first() {
                    let p = cg.index_of(crate::rg::SideVisit { end: *end, side: crate::rg::Side::L });
                    vertices.insert(v, ch.owner[phi[p]]);
                }
            }
            let mut boundaries = BTreeMap::new();
            for comp in bg.components() {
                let image = match comp.isolated {
                    Some(_) => continue,
                    None => bh.containing(ch.visit(phi[cg.index_of(comp.visits[0])])).expect("traced"),
                };
                boundaries.insert(comp.id, image);
            }
            for (i, &j) in perm.iter().enumerate() {
                vertices.insert(iso_g[i], iso_h[j]);
                let b = bg.of_isolated(iso_g[i]).expect("isolated boundary");
                boundaries.insert(b, bh.of_isolated(iso_h[j]).expect("isolated boundary"));
            }
            out.push(Isomorphism { edges: edges.clone(), vertices, boundaries });
        }
        // next choice in the product
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < per_component[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

pub fn isomorphic_fixing_names(g: &RibbonGraph, h: &RibbonGraph) -> bool {
    !name_preserving_isomorphisms(g, h).is_empty()
}

/// Name-preserving isomorphism that also carries both weighted partitions onto each other.
pub fn packaged_isomorphic(p: &PackagedRibbonGraph, q: &PackagedRibbonGraph) -> bool {
    name_preserving_isomorphisms(p.graph(), q.graph()).iter().any(|iso| {
        p.vparts().transport(|v| iso.vertices[&v]) == *q.vparts()
            && p.bparts().transport(|b| iso.boundaries[&b]) == *q.bparts()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{parse, parse_graph, EXAMPLE_GRAPH};

    #[test]
    fn reflection_and_rotation_are_invisible() {
        let g = parse_graph(EXAMPLE_GRAPH).unwrap();
        let rotated = parse_graph("edges: e+ f+ g+\nvertex v1: f.1 e.2 g.1 e.1\nvertex v2: g.2 f.2\n").unwrap();
        assert!(isomorphic_fixing_names(&g, &rotated));
        for v in g.vertices() {
            assert!(isomorphic_fixing_names(&g, &g.reflect_vertex(v)));
        }
    }

    #[test]
    fn distinguishes_twists_and_interlacing() {
        let annulus = parse_graph("edges: e+\nvertex v: e.1 e.2\n").unwrap();
        let mobius = parse_graph("edges: e-\nvertex v: e.1 e.2\n").unwrap();
        assert!(!isomorphic(&annulus, &mobius));
        let handle = parse_graph("edges: e+ f+\nvertex v: e.1 f.1 e.2 f.2\n").unwrap();
        let flat = parse_graph("edges: e+ f+\nvertex v: e.1 e.2 f.1 f.2\n").unwrap();
        assert!(!isomorphic(&handle, &flat));
        let renamed = parse_graph("edges: a+ b+\nvertex w: b.1 a.1 b.2 a.2\n").unwrap();
        assert!(isomorphic(&handle, &renamed));
        assert!(!isomorphic_fixing_names(&handle, &renamed));
    }

    #[test]
    fn name_preserving_respects_which_edge_is_where() {
        let g = parse_graph("edges: a+ b-\nvertex u: a.1 b.1 b.2 a.2\n").unwrap();
        let h = parse_graph("edges: a- b+\nvertex u: a.1 b.1 b.2 a.2\n").unwrap();
        assert!(isomorphic(&g, &h));
        assert!(!isomorphic_fixing_names(&g, &h));
    }

    #[test]
    fn packaged_partitions_must_match() {
        let p = parse("edges: e+\nvertex u: e.1\nvertex v: e.2\nvblock 1: u\n").unwrap();
        let q = parse("edges: e+\nvertex u: e.1\nvertex v: e.2\nvblock 1: v\n").unwrap();
        // swapping the two ends of a bridge is an isomorphism fixing its name
        assert!(packaged_isomorphic(&p, &q));
        let r = parse("edges: e+\nvertex u: e.1\nvertex v: e.2\nvblock 2: v\n").unwrap();
        assert!(!packaged_isomorphic(&p, &r));
        let isolated = parse("vertex u:\nvertex v:\nvblock 3: v\n").unwrap();
        let swapped = parse("vertex u:\nvertex v:\nvblock 3: u\n").unwrap();
        assert!(packaged_isomorphic(&isolated, &swapped));
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(0).len(), 1);
    }
}

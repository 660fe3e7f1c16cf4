use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::iso::canonical_code;
use crate::packaged::{Block, PackagedRibbonGraph, WeightedPartition};
use crate::rg::{trace_boundaries, Edge, EdgeId, End, EndIndex, RibbonGraph, Sign, VertexId};

pub const CORPUS_MAX_VERTICES: usize = 4;
const RANDOM_PACKAGINGS: usize = 3;

#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub graph_index: usize,
    /// `0` for the discrete weight-zero packaging, then the random ones.
    pub variant: usize,
    pub packaged: PackagedRibbonGraph,
}

/// Rotation system under construction: vertex `i` gets id `i + 1`, edge `i` id `i`.
#[derive(Clone, Debug)]
struct Raw {
    signs: Vec<Sign>,
    rotations: Vec<Vec<End>>,
}

fn edge_name(i: usize) -> String {
    const LETTERS: &[u8] = b"efghijklmnopqrstuvwxyzabcd";
    match LETTERS.get(i) {
        Some(&c) => (c as char).to_string(),
        None => format!("e{i}"),
    }
}

impl Raw {
    fn vertex() -> Raw {
        Raw { signs: Vec::new(), rotations: vec![Vec::new()] }
    }

    fn build(&self) -> RibbonGraph {
        let edges: BTreeMap<EdgeId, Edge> = self
            .signs
            .iter()
            .enumerate()
            .map(|(i, &sign)| (EdgeId(i as u32), Edge { name: edge_name(i), sign }))
            .collect();
        let rotations = self.rotations.iter().enumerate().map(|(i, r)| (VertexId(i as u32 + 1), r.clone())).collect();
        RibbonGraph::new(edges, rotations).expect("growth keeps rotation systems valid")
    }

    fn gaps(&self, v: usize) -> usize {
        self.rotations[v].len().max(1)
    }

    fn insert(&mut self, v: usize, gap: usize, end: End) {
        self.rotations[v].insert(gap, end);
    }

    /// One-edge extensions: a pendant edge to a new vertex or a chord
    /// between two gaps, possibly the same one.
    fn extensions(&self, max_vertices: usize) -> Vec<Raw> {
        let e = EdgeId(self.signs.len() as u32);
        let (one, two) = (End::new(e, EndIndex::One), End::new(e, EndIndex::Two));
        let mut out = Vec::new();
        for u in 0..self.rotations.len() {
            for p in 0..self.gaps(u) {
                let mut first = self.clone();
                first.insert(u, p, one);
                if self.rotations.len() < max_vertices {
                    let mut pendant = first.clone();
                    pendant.rotations.push(vec![two]);
                    pendant.signs.push(Sign::Plus);
                    out.push(pendant);
                }
                for w in 0..first.rotations.len() {
                    for q in 0..first.gaps(w) {
                        for sign in [Sign::Plus, Sign::Minus] {
                            let mut chord = first.clone();
                            chord.insert(w, q, two);
                            chord.signs.push(sign);
                            out.push(chord);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Connected ribbon graphs with at most `max_edges` edges and
/// [`CORPUS_MAX_VERTICES`] vertices, one per isomorphism class, by edge count.
pub fn corpus_graphs(max_edges: usize) -> Vec<RibbonGraph> {
    let mut level = vec![Raw::vertex()];
    let mut out = vec![level[0].build()];
    for _ in 0..max_edges {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for raw in &level {
            for ext in raw.extensions(CORPUS_MAX_VERTICES) {
                let g = ext.build();
                if seen.insert(canonical_code(&g)) {
                    out.push(g);
                    next.push(ext);
                }
            }
        }
        level = next;
    }
    out
}

fn random_partition<T: Ord + Copy + std::fmt::Debug, R: Rng + ?Sized>(ground: &[T], rng: &mut R) -> WeightedPartition<T> {
    let mut groups: BTreeMap<usize, Vec<T>> = BTreeMap::new();
    for &t in ground {
        groups.entry(rng.gen_range(0..ground.len())).or_default().push(t);
    }
    let blocks = groups.into_values().map(|members| Block::new(members, rng.gen_range(0..=2))).collect();
    WeightedPartition::from_blocks(blocks)
}

/// Random vertex and boundary partitions with weights in `0..=2`.
pub fn random_packaging<R: Rng + ?Sized>(g: &RibbonGraph, rng: &mut R) -> PackagedRibbonGraph {
    let vertices: Vec<VertexId> = g.vertices().collect();
    let boundaries: Vec<_> = trace_boundaries(g).ids().collect();
    let vparts = random_partition(&vertices, rng);
    let bparts = random_partition(&boundaries, rng);
    PackagedRibbonGraph::build(g.clone(), vparts, bparts).expect("partitions cover their ground sets")
}

/// Each corpus graph with its discrete packaging and three seeded random ones.
/// The stream depends only on `max_edges` and `seed`.
pub fn corpus(max_edges: usize, seed: u64) -> Vec<CorpusItem> {
    let mut out = Vec::new();
    for (graph_index, g) in corpus_graphs(max_edges).into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(graph_index as u64);
        out.push(CorpusItem { graph_index, variant: 0, packaged: PackagedRibbonGraph::discrete(g.clone()) });
        for variant in 1..=RANDOM_PACKAGINGS {
            out.push(CorpusItem { graph_index, variant, packaged: random_packaging(&g, &mut rng) });
        }
    }
    out
}

/// Random connected ribbon graph grown one edge at a time.
pub fn random_graph<R: Rng + ?Sized>(num_edges: usize, max_vertices: usize, rng: &mut R) -> RibbonGraph {
    let mut raw = Raw::vertex();
    for i in 0..num_edges {
        let e = EdgeId(i as u32);
        let u = rng.gen_range(0..raw.rotations.len());
        let p = rng.gen_range(0..raw.gaps(u));
        raw.insert(u, p, End::new(e, EndIndex::One));
        if raw.rotations.len() < max_vertices && rng.gen_bool(0.4) {
            raw.rotations.push(vec![End::new(e, EndIndex::Two)]);
            raw.signs.push(Sign::Plus);
        } else {
            let w = rng.gen_range(0..raw.rotations.len());
            let q = rng.gen_range(0..raw.gaps(w));
            raw.insert(w, q, End::new(e, EndIndex::Two));
            raw.signs.push(if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus });
        }
    }
    raw.build()
}

//! Line-oriented text format for packaged ribbon graphs.
//!
//! ```text
//! # comment
//! edges: e+ f+ g-
//! vertex v1: e.1 f.1 e.2 g.1
//! vertex v2: f.2 g.2
//! vblock 0: v1 v2
//! bblock 2: b1
//! ```
//!
//! Rotations are read cyclically as written. A block line gives the weight
//! followed by its members; boundary components are named `b1, b2, ...` in
//! canonical trace order. Elements left out of every block become singleton
//! blocks of weight zero.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::packaged::{Block, PackagedError, PackagedRibbonGraph, WeightedPartition};
use crate::rg::{trace_boundaries, BoundaryId, Edge, EdgeId, End, EndIndex, GraphError, RibbonGraph, Sign, VertexId};

/// Two vertices, a loop `e` at the first and two parallel edges `f`, `g`,
/// with `g` interlacing `e`.
pub const EXAMPLE_GRAPH: &str = "edges: e+ f+ g+\nvertex v1: e.1 f.1 e.2 g.1\nvertex v2: f.2 g.2\n";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown edge {name} at line {line}")]
    UnknownEdge { line: usize, name: String },
    #[error("unknown vertex {name} at line {line}")]
    UnknownVertex { line: usize, name: String },
    #[error("unknown boundary id {name} at line {line}")]
    UnknownBoundary { line: usize, name: String },
    #[error("partition violation: {0}")]
    Partition(String),
    #[error("no vertices")]
    NoVertices,
    #[error("invalid ribbon graph: {0}")]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug)]
struct Token {
    text: String,
    line: usize,
    col: usize,
}

impl Token {
    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax { line: self.line, col: self.col, msg: msg.into() }
    }
}

fn tokens(line_no: usize, line: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token { text: line[s..i].to_string(), line: line_no, col: s + 1 });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

enum Record {
    Edges(Vec<Token>),
    Vertex { name: Token, ends: Vec<Token> },
    Block { boundary: bool, weight: Token, members: Vec<Token> },
}

/// Splits each line at its first `:`-terminated token into header and body.
fn records(text: &str) -> Result<Vec<Record>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut toks = tokens(i + 1, content);
        if toks.is_empty() {
            continue;
        }
        let Some(colon) = toks.iter().position(|t| t.text.ends_with(':')) else {
            return Err(toks[0].error("expected ':' after the line keyword"));
        };
        let body = toks.split_off(colon + 1);
        let last = toks.last_mut().expect("header has a token");
        last.text.pop();
        if last.text.is_empty() {
            toks.pop();
        }
        let keyword = &toks[0];
        let record = match (keyword.text.as_str(), toks.len()) {
            ("edges", 1) => Record::Edges(body),
            ("vertex", 2) => {
                if !is_name(&toks[1].text) {
                    return Err(toks[1].error(format!("bad vertex name '{}'", toks[1].text)));
                }
                Record::Vertex { name: toks[1].clone(), ends: body }
            }
            ("vblock" | "bblock", 2) => {
                Record::Block { boundary: keyword.text == "bblock", weight: toks[1].clone(), members: body }
            }
            ("vertex", _) => return Err(keyword.error("expected 'vertex NAME:'")),
            ("vblock" | "bblock", _) => return Err(keyword.error("expected a single weight before ':'")),
            _ => return Err(keyword.error(format!("unknown keyword '{}'", keyword.text))),
        };
        out.push(record);
    }
    Ok(out)
}

fn parse_weight(t: &Token) -> Result<u64, ParseError> {
    match t.text.parse::<i64>() {
        Ok(w) if w < 0 => Err(ParseError::Partition(format!("negative weight {w} at line {}", t.line))),
        Ok(w) => Ok(w as u64),
        Err(_) => Err(t.error(format!("bad weight '{}'", t.text))),
    }
}

fn parse_boundary_name(t: &Token, count: usize) -> Result<BoundaryId, ParseError> {
    let unknown = || ParseError::UnknownBoundary { line: t.line, name: t.text.clone() };
    let n: usize = t
        .text
        .strip_prefix('b')
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| t.error(format!("bad boundary id '{}'", t.text)))?;
    if n == 0 || n > count {
        return Err(unknown());
    }
    Ok(BoundaryId(n as u32 - 1))
}

fn complete<T: Ord + Copy + std::fmt::Debug>(
    blocks: Vec<Block<T>>,
    ground: &BTreeSet<T>,
    describe: impl Fn(T) -> String,
) -> Result<WeightedPartition<T>, ParseError> {
    let mut blocks = blocks;
    let mut covered = BTreeSet::new();
    for b in &blocks {
        for &m in &b.members {
            if !covered.insert(m) {
                return Err(ParseError::Partition(format!("{} lies in two blocks", describe(m))));
            }
        }
    }
    blocks.extend(ground.iter().filter(|m| !covered.contains(m)).map(|&m| Block::new([m], 0)));
    WeightedPartition::new(blocks, ground).map_err(|e| match e {
        PackagedError::Graph(g) => ParseError::Graph(g),
        other => ParseError::Partition(other.to_string()),
    })
}

/// Parses a packaged ribbon graph. Vertices get ids `1, 2, ...` in order of
/// appearance and edges ids `0, 1, ...` in order of declaration.
pub fn parse(text: &str) -> Result<PackagedRibbonGraph, ParseError> {
    let records = records(text)?;

    let mut edges: BTreeMap<EdgeId, Edge> = BTreeMap::new();
    let mut edge_ids: BTreeMap<String, EdgeId> = BTreeMap::new();
    for r in &records {
        let Record::Edges(toks) = r else { continue };
        for t in toks {
            let (name, sign) = match t.text.chars().last() {
                Some('+') => (&t.text[..t.text.len() - 1], Sign::Plus),
                Some('-') => (&t.text[..t.text.len() - 1], Sign::Minus),
                _ => return Err(t.error(format!("edge '{}' needs a sign + or -", t.text))),
            };
            if !is_name(name) {
                return Err(t.error(format!("bad edge name '{name}'")));
            }
            if edge_ids.contains_key(name) {
                return Err(t.error(format!("edge {name} declared twice")));
            }
            let id = EdgeId(edge_ids.len() as u32);
            edge_ids.insert(name.to_string(), id);
            edges.insert(id, Edge { name: name.to_string(), sign });
        }
    }

    let mut vertex_ids: BTreeMap<String, VertexId> = BTreeMap::new();
    let mut rotations: BTreeMap<VertexId, Vec<End>> = BTreeMap::new();
    for r in &records {
        let Record::Vertex { name, ends } = r else { continue };
        if vertex_ids.contains_key(&name.text) {
            return Err(name.error(format!("vertex {} declared twice", name.text)));
        }
        let v = VertexId(vertex_ids.len() as u32 + 1);
        vertex_ids.insert(name.text.clone(), v);
        let mut rot = Vec::with_capacity(ends.len());
        for t in ends {
            let (edge, index) =
                t.text.rsplit_once('.').ok_or_else(|| t.error(format!("end '{}' must be EDGE.1 or EDGE.2", t.text)))?;
            let index = match index {
                "1" => EndIndex::One,
                "2" => EndIndex::Two,
                _ => return Err(t.error(format!("end '{}' must be EDGE.1 or EDGE.2", t.text))),
            };
            let &e = edge_ids
                .get(edge)
                .ok_or_else(|| ParseError::UnknownEdge { line: t.line, name: edge.to_string() })?;
            rot.push(End::new(e, index));
        }
        rotations.insert(v, rot);
    }
    if rotations.is_empty() {
        return Err(ParseError::NoVertices);
    }
    let graph = RibbonGraph::new(edges, rotations)?;
    let boundary_count = trace_boundaries(&graph).len();

    let mut vblocks = Vec::new();
    let mut bblocks = Vec::new();
    for r in &records {
        let Record::Block { boundary, weight, members } = r else { continue };
        let w = parse_weight(weight)?;
        if members.is_empty() {
            return Err(ParseError::Partition(format!("empty block at line {}", weight.line)));
        }
        if *boundary {
            let ms = members.iter().map(|t| parse_boundary_name(t, boundary_count)).collect::<Result<Vec<_>, _>>()?;
            bblocks.push(Block::new(ms, w));
        } else {
            let ms = members
                .iter()
                .map(|t| {
                    vertex_ids
                        .get(&t.text)
                        .copied()
                        .ok_or_else(|| ParseError::UnknownVertex { line: t.line, name: t.text.clone() })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let b = Block::new(ms.iter().copied(), w);
            if b.len() != ms.len() {
                return Err(ParseError::Partition(format!("repeated member in block at line {}", weight.line)));
            }
            vblocks.push(b);
        }
    }
    let names: BTreeMap<VertexId, &str> = vertex_ids.iter().map(|(n, &v)| (v, n.as_str())).collect();
    let vparts = complete(vblocks, &graph.vertices().collect(), |v| names[&v].to_string())?;
    let bparts = complete(bblocks, &(0..boundary_count as u32).map(BoundaryId).collect(), |b| b.to_string())?;
    PackagedRibbonGraph::build(graph, vparts, bparts).map_err(|e| ParseError::Partition(e.to_string()))
}

/// Parses only the ribbon graph; block lines are still checked.
pub fn parse_graph(text: &str) -> Result<RibbonGraph, ParseError> {
    parse(text).map(|pg| pg.graph().clone())
}

pub fn render_graph(g: &RibbonGraph) -> String {
    let mut out = String::new();
    if g.num_edges() > 0 {
        out.push_str("edges:");
        for edge in g.edges().values() {
            let _ = write!(out, " {}{}", edge.name, edge.sign);
        }
        out.push('\n');
    }
    for (&v, rot) in g.rotations() {
        let _ = write!(out, "vertex {v}:");
        for &end in rot {
            let _ = write!(out, " {}", g.end_name(end));
        }
        out.push('\n');
    }
    out
}

/// Text that parses back to an isomorphic packaged ribbon graph. Singleton
/// blocks of weight zero are left implicit.
pub fn render(pg: &PackagedRibbonGraph) -> String {
    let mut out = render_graph(pg.graph());
    for b in pg.vparts().blocks().iter().filter(|b| b.len() > 1 || b.weight > 0) {
        let _ = write!(out, "vblock {}:", b.weight);
        for v in &b.members {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    for b in pg.bparts().blocks().iter().filter(|b| b.len() > 1 || b.weight > 0) {
        let _ = write!(out, "bblock {}:", b.weight);
        for id in &b.members {
            let _ = write!(out, " {id}");
        }
        out.push('\n');
    }
    out
}

//! Resolved MOY graphs of braid closures with a fixed layered embedding.
//!
//! Crossing `l` on strands `k, k+1` occupies heights `8l+2 .. 8l+8`. Its gadget is a
//! ladder: split `A` on the left strand, merge `B` and split `C` on the right
//! strand, merge `D` back on the left. The middle of the left strand carries
//! `i`, the two rungs carry `r - i`, the middle of the right strand `2r - i`.
//! Closure arcs run counter-clockwise around the left side of the braid.

use serde::Serialize;

use super::{BraidWord, DiagramError};

pub type Point = (i64, i64);

/// Per-crossing exchange parameters, each in `0..=r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResolutionIndex {
    pub i: Vec<u32>,
    pub r: u32,
}

impl ResolutionIndex {
    pub fn new(i: Vec<u32>, r: u32) -> Self {
        ResolutionIndex { i, r }
    }

    /// All-`r` index: every crossing smoothed the Seifert way.
    pub fn seifert(crossings: usize, r: u32) -> Self {
        ResolutionIndex { i: vec![r; crossings], r }
    }

    /// Iterates over `{0..r}^crossings` in lexicographic order.
    pub fn all(crossings: usize, r: u32) -> impl Iterator<Item = ResolutionIndex> {
        let total = (r as u64 + 1).checked_pow(crossings as u32).unwrap_or(u64::MAX);
        (0..total).map(move |mut t| {
            let mut i = vec![0; crossings];
            for slot in i.iter_mut().rev() {
                *slot = (t % (r as u64 + 1)) as u32;
                t /= r as u64 + 1;
            }
            ResolutionIndex { i, r }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub gamma: u32,
    /// Interior bend points of the polyline, endpoints excluded.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub bends: Vec<Point>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VertexKind {
    Split,
    Merge,
}

/// A trivalent vertex with the two edges on its thin side ordered left/right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TrivalentVertex {
    pub node: usize,
    pub kind: VertexKind,
    pub left: usize,
    pub right: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct MoyGraph {
    pub nodes: Vec<Point>,
    pub edges: Vec<Edge>,
    pub vertices: Vec<TrivalentVertex>,
}

impl MoyGraph {
    pub fn gamma(&self) -> Vec<u32> {
        self.edges.iter().map(|e| e.gamma).collect()
    }

    /// Full polyline of edge `e` including both endpoints.
    pub fn polyline(&self, e: usize) -> Vec<Point> {
        let edge = &self.edges[e];
        let mut pts = Vec::with_capacity(edge.bends.len() + 2);
        pts.push(self.nodes[edge.from]);
        pts.extend_from_slice(&edge.bends);
        pts.push(self.nodes[edge.to]);
        pts
    }

    pub fn out_edges(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().enumerate().filter(move |(_, e)| e.from == node).map(|(i, _)| i)
    }

    pub fn in_edges(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().enumerate().filter(move |(_, e)| e.to == node).map(|(i, _)| i)
    }

    /// Checks conservation of γ at every node.
    pub fn check_balance(&self) -> Result<(), DiagramError> {
        let mut bal = vec![0i64; self.nodes.len()];
        for e in &self.edges {
            bal[e.from] -= e.gamma as i64;
            bal[e.to] += e.gamma as i64;
        }
        match bal.iter().position(|&b| b != 0) {
            Some(v) => Err(DiagramError::Invariant(format!("flow not conserved at node {v}"))),
            None => Ok(()),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let embedding: Vec<Vec<Point>> = (0..self.edges.len()).map(|e| self.polyline(e)).collect();
        serde_json::json!({
            "nodes": self.nodes,
            "edges": self.edges.iter().map(|e| serde_json::json!({"from": e.from, "to": e.to, "gamma": e.gamma})).collect::<Vec<_>>(),
            "vertices": self.vertices,
            "embedding": embedding,
        })
    }
}

struct Builder {
    nodes: Vec<Point>,
    edges: Vec<Edge>,
}

impl Builder {
    fn node(&mut self, p: Point) -> usize {
        self.nodes.push(p);
        self.nodes.len() - 1
    }

    fn edge(&mut self, from: usize, to: usize, gamma: u32, bends: Vec<Point>) {
        self.edges.push(Edge { from, to, gamma, bends });
    }
}

fn cross(a: Point, b: Point) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn sub(a: Point, b: Point) -> Point {
    (a.0 - b.0, a.1 - b.1)
}

/// Builds `D_i`: the crossing gadgets with parameters `idx`, edges of γ = 0 removed
/// and bivalent nodes kept as plain path nodes.
pub fn resolve(b: &BraidWord, idx: &ResolutionIndex) -> Result<MoyGraph, DiagramError> {
    if idx.i.len() != b.len() {
        return Err(DiagramError::IndexLength { got: idx.i.len(), expected: b.len() });
    }
    let r = idx.r;
    if let Some(&v) = idx.i.iter().find(|&&v| v > r) {
        return Err(DiagramError::IndexValue { value: v, r });
    }
    let n = b.strands();
    let mut bld = Builder { nodes: Vec::new(), edges: Vec::new() };
    let bottom: Vec<usize> = (1..=n as i64).map(|j| bld.node((2 * j, 0))).collect();
    let mut cur = bottom.clone();
    for (l, (&g, &i)) in b.letters().iter().zip(&idx.i).enumerate() {
        let k = g.unsigned_abs() as usize;
        let (x, base) = (2 * k as i64, 8 * l as i64 + 2);
        let a = bld.node((x, base));
        let bb = bld.node((x + 2, base + 2));
        let c = bld.node((x + 2, base + 4));
        let d = bld.node((x, base + 6));
        bld.edge(cur[k - 1], a, r, vec![]);
        bld.edge(cur[k], bb, r, vec![]);
        bld.edge(a, d, i, vec![]);
        bld.edge(a, bb, r - i, vec![]);
        bld.edge(bb, c, 2 * r - i, vec![]);
        bld.edge(c, d, r - i, vec![]);
        cur[k - 1] = d;
        cur[k] = c;
    }
    let t = 8 * b.len() as i64 + 4;
    for j in 0..n {
        let jj = 2 * (j as i64 + 1);
        let top = bld.node((jj, t));
        bld.edge(cur[j], top, r, vec![]);
        bld.edge(top, bottom[j], r, vec![(jj, t + jj), (-jj, t + jj), (-jj, -jj), (jj, -jj)]);
    }
    let Builder { nodes, edges } = bld;
    let edges: Vec<Edge> = edges.into_iter().filter(|e| e.gamma > 0).collect();
    let mut g = MoyGraph { nodes, edges, vertices: Vec::new() };
    g.check_balance()?;
    g.vertices = trivalent_vertices(&g)?;
    Ok(g)
}

/// Left/right on the thin side of each trivalent vertex, read from the embedding:
/// looking along the orientation, the left edge is the one turned counter-clockwise.
fn trivalent_vertices(g: &MoyGraph) -> Result<Vec<TrivalentVertex>, DiagramError> {
    let mut out = Vec::new();
    for v in 0..g.nodes.len() {
        let ins: Vec<usize> = g.in_edges(v).collect();
        let outs: Vec<usize> = g.out_edges(v).collect();
        if ins.len() + outs.len() != 3 {
            if ins.len() != outs.len() || ins.len() > 1 {
                return Err(DiagramError::Invariant(format!("node {v} has degree ({}, {})", ins.len(), outs.len())));
            }
            continue;
        }
        let (kind, pair, dirs) = if outs.len() == 2 {
            let d: Vec<Point> = outs
                .iter()
                .map(|&e| {
                    let p = g.polyline(e);
                    sub(p[1], p[0])
                })
                .collect();
            (VertexKind::Split, outs, d)
        } else {
            let d: Vec<Point> = ins
                .iter()
                .map(|&e| {
                    let p = g.polyline(e);
                    sub(p[p.len() - 2], p[p.len() - 1])
                })
                .collect();
            (VertexKind::Merge, ins, d)
        };
        let c = cross(dirs[0], dirs[1]);
        let first_left = match kind {
            VertexKind::Split => c < 0,
            VertexKind::Merge => c > 0,
        };
        if c == 0 {
            return Err(DiagramError::Invariant(format!("collinear edges at vertex {v}")));
        }
        let (left, right) = if first_left { (pair[0], pair[1]) } else { (pair[1], pair[0]) };
        out.push(TrivalentVertex { node: v, kind, left, right });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_braid;

    #[test]
    fn seifert_smoothing_is_disjoint_circles() {
        let b = parse_braid("1 -2 1 -2").unwrap();
        let g = resolve(&b, &ResolutionIndex::seifert(4, 2)).unwrap();
        assert!(g.vertices.is_empty());
        assert!(g.edges.iter().all(|e| e.gamma == 2));
    }

    #[test]
    fn gadget_vertices() {
        let b = parse_braid("1").unwrap();
        let g = resolve(&b, &ResolutionIndex::new(vec![0], 1)).unwrap();
        // i = 0 drops the left middle: A and D become bivalent, B and C stay trivalent.
        assert_eq!(g.vertices.len(), 2);
        let g = resolve(&b, &ResolutionIndex::new(vec![1], 2)).unwrap();
        assert_eq!(g.vertices.len(), 4);
        for v in &g.vertices {
            let (l, r) = (&g.edges[v.left], &g.edges[v.right]);
            match v.kind {
                VertexKind::Split => assert_eq!(l.from, r.from),
                VertexKind::Merge => assert_eq!(l.to, r.to),
            }
        }
    }

    #[test]
    fn empty_word_circle() {
        let b = parse_braid("").unwrap();
        let g = resolve(&b, &ResolutionIndex::new(vec![], 2)).unwrap();
        assert_eq!(g.edges.len(), 2);
        assert!(g.edges.iter().all(|e| e.gamma == 2));
    }

    #[test]
    fn index_validation() {
        let b = parse_braid("1 1").unwrap();
        assert!(resolve(&b, &ResolutionIndex::new(vec![0], 1)).is_err());
        assert!(resolve(&b, &ResolutionIndex::new(vec![0, 3], 2)).is_err());
        assert_eq!(ResolutionIndex::all(2, 2).count(), 9);
    }
}

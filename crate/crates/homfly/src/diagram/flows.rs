//! Elementary flows, rotation numbers and the intersection pairing.

use serde::Serialize;

use super::{DiagramError, MoyGraph};

/// One closed curve of an elementary flow, as its edges in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlowComponent {
    pub edges: Vec<usize>,
    pub rotation: i64,
}

/// A nonzero {0,1}-circulation on the positive edges of a MOY graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementaryFlow {
    pub support: Vec<u8>,
    pub components: Vec<FlowComponent>,
}

impl ElementaryFlow {
    pub fn rotation(&self) -> i64 {
        self.components.iter().map(|c| c.rotation).sum()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }
}

/// Winding number of a closed polyline given by its successive nonzero steps.
fn winding(dirs: &[(i64, i64)]) -> i64 {
    let mut w = 0;
    for (t, &d0) in dirs.iter().enumerate() {
        let d1 = dirs[(t + 1) % dirs.len()];
        let cr = d0.0 * d1.1 - d0.1 * d1.0;
        if d0.1 < 0 && d1.1 >= 0 && cr > 0 {
            w += 1;
        } else if d0.1 >= 0 && d1.1 < 0 && cr < 0 {
            w -= 1;
        }
    }
    w
}

/// Total turning of a closed edge cycle in units of a full turn.
pub fn rotation_number(g: &MoyGraph, cycle: &[usize]) -> Result<i64, DiagramError> {
    let mut pts = Vec::new();
    for (t, &e) in cycle.iter().enumerate() {
        let next = cycle[(t + 1) % cycle.len()];
        if g.edges[e].to != g.edges[next].from {
            return Err(DiagramError::Invariant(format!("edges {e} and {next} do not chain")));
        }
        let p = g.polyline(e);
        pts.extend_from_slice(&p[..p.len() - 1]);
    }
    let dirs: Vec<(i64, i64)> = (0..pts.len())
        .map(|t| {
            let (p0, p1) = (pts[t], pts[(t + 1) % pts.len()]);
            (p1.0 - p0.0, p1.1 - p0.1)
        })
        .filter(|&d| d != (0, 0))
        .collect();
    let w = winding(&dirs);
    if w.abs() != 1 {
        return Err(DiagramError::Invariant(format!("cycle has rotation {w}")));
    }
    Ok(w)
}

/// `4·⟨d, e⟩` for flow vectors (not necessarily {0,1}) on the edges of `g`.
pub fn pairing_x4<T: Copy + Into<i64>>(g: &MoyGraph, d: &[T], e: &[T]) -> i64 {
    g.vertices
        .iter()
        .map(|v| d[v.left].into() * e[v.right].into() - e[v.left].into() * d[v.right].into())
        .sum()
}

/// Intersection number of two elementary flows, times 4.
pub fn intersection_number(g: &MoyGraph, d: &ElementaryFlow, e: &ElementaryFlow) -> i64 {
    pairing_x4(g, &d.support, &e.support)
}

struct NodeSet(Vec<u64>);

impl NodeSet {
    fn new(n: usize) -> Self {
        NodeSet(vec![0; n.div_ceil(64)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn disjoint(&self, o: &NodeSet) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & b == 0)
    }
    fn union_with(&mut self, o: &NodeSet) {
        self.0.iter_mut().zip(&o.0).for_each(|(a, b)| *a |= b);
    }
    fn remove_all(&mut self, o: &NodeSet) {
        self.0.iter_mut().zip(&o.0).for_each(|(a, b)| *a &= !b);
    }
}

/// Simple directed cycles, each listed once starting from its smallest node.
fn simple_cycles(g: &MoyGraph) -> Vec<Vec<usize>> {
    let n = g.nodes.len();
    let mut outs = vec![Vec::new(); n];
    for (i, e) in g.edges.iter().enumerate() {
        outs[e.from].push(i);
    }
    let mut cycles = Vec::new();
    let mut on_path = vec![false; n];
    let mut path = Vec::new();
    fn dfs(
        g: &MoyGraph,
        outs: &[Vec<usize>],
        start: usize,
        v: usize,
        on_path: &mut [bool],
        path: &mut Vec<usize>,
        cycles: &mut Vec<Vec<usize>>,
    ) {
        for &e in &outs[v] {
            let w = g.edges[e].to;
            if w == start {
                path.push(e);
                cycles.push(path.clone());
                path.pop();
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(e);
                dfs(g, outs, start, w, on_path, path, cycles);
                path.pop();
                on_path[w] = false;
            }
        }
    }
    for s in 0..n {
        on_path[s] = true;
        dfs(g, &outs, s, s, &mut on_path, &mut path, &mut cycles);
        on_path[s] = false;
    }
    cycles
}

/// All elementary flows of `g`, sorted lexicographically by support.
///
/// Every node has total degree at most 3, so a {0,1}-circulation is exactly a
/// union of pairwise vertex-disjoint simple cycles.
/// Split unlinked circles make the flow count (and the sequence sums) grow
/// exponentially; past this many flows evaluation is refused.
pub const MAX_ELEMENTARY_FLOWS: usize = 4096;

pub fn elementary_flows(g: &MoyGraph) -> Result<Vec<ElementaryFlow>, DiagramError> {
    let cycles = simple_cycles(g);
    let n = g.nodes.len();
    let mut comps = Vec::with_capacity(cycles.len());
    let mut sets = Vec::with_capacity(cycles.len());
    for c in cycles {
        let mut s = NodeSet::new(n);
        for &e in &c {
            s.insert(g.edges[e].from);
        }
        let rotation = rotation_number(g, &c)?;
        comps.push(FlowComponent { edges: c, rotation });
        sets.push(s);
    }
    let mut flows = Vec::new();
    let mut chosen = Vec::new();
    let mut used = NodeSet::new(n);
    fn pick(
        t: usize,
        sets: &[NodeSet],
        comps: &[FlowComponent],
        m: usize,
        chosen: &mut Vec<usize>,
        used: &mut NodeSet,
        flows: &mut Vec<ElementaryFlow>,
    ) -> bool {
        if flows.len() > MAX_ELEMENTARY_FLOWS {
            return false;
        }
        if t == sets.len() {
            if !chosen.is_empty() {
                let mut support = vec![0u8; m];
                for &c in chosen.iter() {
                    for &e in &comps[c].edges {
                        support[e] = 1;
                    }
                }
                let components = chosen.iter().map(|&c| comps[c].clone()).collect();
                flows.push(ElementaryFlow { support, components });
            }
            return true;
        }
        if !pick(t + 1, sets, comps, m, chosen, used, flows) {
            return false;
        }
        if used.disjoint(&sets[t]) {
            used.union_with(&sets[t]);
            chosen.push(t);
            let ok = pick(t + 1, sets, comps, m, chosen, used, flows);
            chosen.pop();
            used.remove_all(&sets[t]);
            return ok;
        }
        true
    }
    if !pick(0, &sets, &comps, g.edges.len(), &mut chosen, &mut used, &mut flows) {
        return Err(DiagramError::TooManyFlows { cap: MAX_ELEMENTARY_FLOWS });
    }
    flows.sort_by(|a, b| a.support.cmp(&b.support));
    Ok(flows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_braid, resolve, ResolutionIndex};

    fn hopf(i: [u32; 2]) -> MoyGraph {
        resolve(&parse_braid("1 1").unwrap(), &ResolutionIndex::new(i.to_vec(), 1)).unwrap()
    }

    #[test]
    fn single_circle() {
        let g = resolve(&parse_braid("").unwrap(), &ResolutionIndex::new(vec![], 1)).unwrap();
        let f = elementary_flows(&g).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].rotation(), 1);
    }

    #[test]
    fn hopf_seifert_graph_has_three_flows() {
        let g = hopf([1, 1]);
        let f = elementary_flows(&g).unwrap();
        assert_eq!(f.len(), 3);
        let two: Vec<_> = f.iter().filter(|x| x.components.len() == 2).collect();
        assert_eq!(two.len(), 1);
        for a in &f {
            for b in &f {
                assert_eq!(intersection_number(&g, a, b), 0);
            }
        }
    }

    #[test]
    fn half_intersection_on_mixed_graph() {
        let g = hopf([0, 1]);
        let f = elementary_flows(&g).unwrap();
        let vals: Vec<i64> =
            f.iter().flat_map(|a| f.iter().map(move |b| (a, b))).map(|(a, b)| intersection_number(&g, a, b)).collect();
        assert!(vals.contains(&2) && vals.contains(&-2));
    }

    #[test]
    fn square_orientation() {
        let dirs = [(0, -1), (1, 0), (0, 1), (-1, 0)];
        assert_eq!(winding(&dirs), 1);
        let rev: Vec<_> = dirs.iter().rev().map(|&(x, y)| (-x, -y)).collect();
        assert_eq!(winding(&rev), -1);
    }
}

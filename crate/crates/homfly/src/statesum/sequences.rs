//! Ordered sequences of elementary flows summing to the graph flow.

use std::collections::HashMap;

use crate::diagram::{pairing_x4, ElementaryFlow, MoyGraph};

/// Which elementary flows may appear in a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FlowFilter {
    #[default]
    All,
    /// Only flows whose support is a single closed curve.
    SingleComponent,
}

impl FlowFilter {
    pub fn admits(self, f: &ElementaryFlow) -> bool {
        match self {
            FlowFilter::All => true,
            FlowFilter::SingleComponent => f.is_connected(),
        }
    }
}

/// One sequence: indices into the flow list, `4·w(ε)` and the rotation total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowSequence {
    pub seq: Vec<usize>,
    pub weight_x4: i64,
    pub rot_sum: i64,
}

/// Sequences sharing their rotation pattern and weight contribute identical terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SequenceClass {
    pub rots: Vec<i64>,
    pub weight_x4: i64,
}

fn fits(f: &[u8], rem: &[u32]) -> bool {
    f.iter().zip(rem).all(|(&a, &b)| a as u32 <= b)
}

fn subtract(rem: &[u32], f: &[u8]) -> Vec<u32> {
    rem.iter().zip(f).map(|(&r, &a)| r - a as u32).collect()
}

/// Every ordered sequence explicitly. Exponential; meant for small graphs.
pub fn enumerate_sequences(g: &MoyGraph, flows: &[ElementaryFlow], filter: FlowFilter) -> Vec<FlowSequence> {
    let gamma = g.gamma();
    let mut out = Vec::new();
    let mut seq = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &MoyGraph,
        flows: &[ElementaryFlow],
        filter: FlowFilter,
        gamma: &[u32],
        rem: Vec<u32>,
        seq: &mut Vec<usize>,
        w: i64,
        out: &mut Vec<FlowSequence>,
    ) {
        if rem.iter().all(|&v| v == 0) {
            let rot_sum = seq.iter().map(|&i| flows[i].rotation()).sum();
            out.push(FlowSequence { seq: seq.clone(), weight_x4: w, rot_sum });
            return;
        }
        let prefix: Vec<u32> = gamma.iter().zip(&rem).map(|(a, b)| a - b).collect();
        for (i, f) in flows.iter().enumerate() {
            if !filter.admits(f) || !fits(&f.support, &rem) {
                continue;
            }
            let fv: Vec<u32> = f.support.iter().map(|&v| v as u32).collect();
            let dw = pairing_x4(g, &prefix, &fv);
            seq.push(i);
            go(g, flows, filter, gamma, subtract(&rem, &f.support), seq, w + dw, out);
            seq.pop();
        }
    }
    go(g, flows, filter, &gamma, gamma.clone(), &mut seq, 0, &mut out);
    out
}

/// Counts of sequences by class, by dynamic programming over the remaining flow.
pub fn sequence_classes(g: &MoyGraph, flows: &[ElementaryFlow], filter: FlowFilter) -> Vec<(SequenceClass, u128)> {
    let gamma = g.gamma();
    let admitted: Vec<(&ElementaryFlow, Vec<u32>)> = flows
        .iter()
        .filter(|f| filter.admits(f))
        .map(|f| (f, f.support.iter().map(|&v| v as u32).collect()))
        .collect();
    let mut memo: HashMap<Vec<u32>, HashMap<SequenceClass, u128>> = HashMap::new();
    fn rec(
        g: &MoyGraph,
        gamma: &[u32],
        admitted: &[(&ElementaryFlow, Vec<u32>)],
        rem: Vec<u32>,
        memo: &mut HashMap<Vec<u32>, HashMap<SequenceClass, u128>>,
    ) -> HashMap<SequenceClass, u128> {
        if let Some(v) = memo.get(&rem) {
            return v.clone();
        }
        let mut out: HashMap<SequenceClass, u128> = HashMap::new();
        if rem.iter().all(|&v| v == 0) {
            out.insert(SequenceClass { rots: vec![], weight_x4: 0 }, 1);
        } else {
            let prefix: Vec<u32> = gamma.iter().zip(&rem).map(|(a, b)| a - b).collect();
            for (f, fv) in admitted {
                if !fits(&f.support, &rem) {
                    continue;
                }
                let dw = pairing_x4(g, &prefix, fv);
                let rot = f.rotation();
                for (cls, n) in rec(g, gamma, admitted, subtract(&rem, &f.support), memo) {
                    let mut rots = Vec::with_capacity(cls.rots.len() + 1);
                    rots.push(rot);
                    rots.extend_from_slice(&cls.rots);
                    *out.entry(SequenceClass { rots, weight_x4: cls.weight_x4 + dw }).or_default() += n;
                }
            }
        }
        memo.insert(rem, out.clone());
        out
    }
    let mut v: Vec<(SequenceClass, u128)> = rec(g, &gamma, &admitted, gamma.clone(), &mut memo).into_iter().collect();
    v.sort();
    v
}

//! Direct enumeration of MOY states `⟨Γ,γ⟩_N(q)`.
//!
//! A state gives each label of `A_N = {-(N-1)/2, …, (N-1)/2}` an elementary flow
//! or nothing, such that the flows of all labels add up to `γ`. Its weight is
//! `q^{Σ label·rot} · q^{Σ_{a<b} ⟨f_a, f_b⟩}` with labels in increasing order.

use num_traits::One;

use super::StateSumError;
use crate::algebra::{LaurentX, Rat};
use crate::diagram::{elementary_flows, pairing_x4, MoyGraph};

/// A state as the flow index (or `None`) chosen for each label, lowest first,
/// with its exponent of `x = q^{1/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoyState {
    pub assignment: Vec<Option<usize>>,
    pub x_exp: i64,
}

pub fn moy_states(g: &MoyGraph, n: u32) -> Result<Vec<MoyState>, StateSumError> {
    let flows = elementary_flows(g)?;
    let vecs: Vec<Vec<u32>> = flows.iter().map(|f| f.support.iter().map(|&v| v as u32).collect()).collect();
    let gamma = g.gamma();
    let mut out = Vec::new();
    let mut choice = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &MoyGraph,
        flows: &[crate::diagram::ElementaryFlow],
        vecs: &[Vec<u32>],
        n: u32,
        rem: Vec<u32>,
        used: Vec<u32>,
        twice_rot: i64,
        w4: i64,
        choice: &mut Vec<Option<usize>>,
        out: &mut Vec<(Vec<Option<usize>>, i64, i64)>,
    ) {
        let k = choice.len() as u32;
        if k == n {
            if rem.iter().all(|&v| v == 0) {
                out.push((choice.clone(), twice_rot, w4));
            }
            return;
        }
        let label2 = 2 * k as i64 - (n as i64 - 1);
        choice.push(None);
        go(g, flows, vecs, n, rem.clone(), used.clone(), twice_rot, w4, choice, out);
        choice.pop();
        for (i, f) in vecs.iter().enumerate() {
            if f.iter().zip(&rem).any(|(a, b)| a > b) {
                continue;
            }
            let dw = pairing_x4(g, &used, f);
            let rem2 = rem.iter().zip(f).map(|(a, b)| a - b).collect();
            let used2 = used.iter().zip(f).map(|(a, b)| a + b).collect();
            choice.push(Some(i));
            go(g, flows, vecs, n, rem2, used2, twice_rot + label2 * flows[i].rotation(), w4 + dw, choice, out);
            choice.pop();
        }
    }
    let zero = vec![0; gamma.len()];
    let mut raw = Vec::new();
    go(g, &flows, &vecs, n, gamma, zero, 0, 0, &mut choice, &mut raw);
    for (assignment, twice_rot, w4) in raw {
        if w4 % 2 != 0 {
            return Err(StateSumError::OddWeight(w4));
        }
        // q^{rot} = x^{2·rot}, and 2·rot = twice_rot since labels are halves
        out.push(MoyState { assignment, x_exp: twice_rot + w4 / 2 });
    }
    Ok(out)
}

pub fn moy_bruteforce(g: &MoyGraph, n: u32) -> Result<LaurentX, StateSumError> {
    let states = moy_states(g, n)?;
    Ok(LaurentX::from_terms(states.into_iter().map(|s| (s.x_exp, Rat::one()))))
}

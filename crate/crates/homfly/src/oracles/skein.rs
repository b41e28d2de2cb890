//! `r = 1` HOMFLY through the Hecke algebra and its Markov trace.
//!
//! Generators satisfy `g - g^{-1} = z`. For `x, y ∈ H_{n-1}` the trace obeys
//! `T_n(x) = U·T_{n-1}(x)` and `T_n(x g_{n-1} y) = v^{-1}·T_{n-1}(x y)`, and the
//! invariant is `P = v^{writhe} · T_n(β)`. Each basis element `g_w` is reduced
//! by moving the largest strand to the end: `g_w = g_{w'} g_{n-1} … g_j`.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use super::{t2_formula, ConventionMap, OracleError};
use crate::algebra::{LinkPoly, LinkSum};
use crate::diagram::{stats, BraidWord};

pub const SKEIN_MAX_STRANDS: usize = 6;
pub const SKEIN_MAX_CROSSINGS: usize = 40;

type Perm = Vec<u8>;
type Element = BTreeMap<Perm, LinkPoly>;

struct Hecke {
    conv: ConventionMap,
    z: LinkPoly,
    unknot: LinkPoly,
    trace_memo: HashMap<Perm, LinkPoly>,
}

impl Hecke {
    fn new(conv: ConventionMap) -> Self {
        let z = LinkPoly::from_laurent(conv.z());
        let unknot = conv.unknot();
        Hecke { conv, z, unknot, trace_memo: HashMap::new() }
    }

    fn add_to(e: &mut Element, w: Perm, c: LinkPoly) {
        let slot = e.entry(w).or_insert_with(LinkPoly::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            let w: Vec<Perm> = e.iter().filter(|(_, c)| c.is_zero()).map(|(w, _)| w.clone()).collect();
            for k in w {
                e.remove(&k);
            }
        }
    }

    /// `e · g_i` (0-based `i` swaps positions `i`, `i+1`).
    fn mul_g(&self, e: &Element, i: usize) -> Element {
        let mut out = Element::new();
        for (w, c) in e {
            let mut ws = w.clone();
            ws.swap(i, i + 1);
            if w[i] < w[i + 1] {
                Self::add_to(&mut out, ws, c.clone());
            } else {
                Self::add_to(&mut out, w.clone(), c * &self.z);
                Self::add_to(&mut out, ws, c.clone());
            }
        }
        out
    }

    /// `e · g_i^{-1} = e · g_i - z·e`.
    fn mul_g_inv(&self, e: &Element, i: usize) -> Element {
        let mut out = self.mul_g(e, i);
        for (w, c) in e {
            Self::add_to(&mut out, w.clone(), -(c * &self.z));
        }
        out
    }

    fn trace(&mut self, w: &[u8]) -> LinkPoly {
        if let Some(v) = self.trace_memo.get(w) {
            return v.clone();
        }
        let n = w.len();
        let v = if n == 1 {
            self.unknot.clone()
        } else {
            let top = (n - 1) as u8;
            let j = w.iter().position(|&t| t == top).unwrap();
            if j == n - 1 {
                let t = self.trace(&w[..n - 1]);
                &self.unknot * &t
            } else {
                let mut wp: Perm = w.to_vec();
                let m = wp.remove(j);
                wp.push(m);
                let mut e = Element::new();
                e.insert(wp[..n - 1].to_vec(), LinkPoly::one());
                for i in (j..n - 2).rev() {
                    e = self.mul_g(&e, i);
                }
                let mut acc = LinkSum::new();
                for (u, c) in &e {
                    let t = self.trace(u);
                    acc.add(&(c * &t));
                }
                &self.conv.v_pow(-1) * &acc.finish()
            }
        };
        self.trace_memo.insert(w.to_vec(), v.clone());
        v
    }
}

/// HOMFLY of the closure with an explicit convention.
pub fn homfly_skein_with(b: &BraidWord, conv: &ConventionMap) -> Result<LinkPoly, OracleError> {
    let n = b.strands();
    if n > SKEIN_MAX_STRANDS || b.len() > SKEIN_MAX_CROSSINGS {
        return Err(OracleError::Budget(format!(
            "{n} strands, {} crossings (limits {SKEIN_MAX_STRANDS}, {SKEIN_MAX_CROSSINGS})",
            b.len()
        )));
    }
    let mut h = Hecke::new(conv.clone());
    let mut e = Element::new();
    e.insert((0..n as u8).collect(), LinkPoly::one());
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize - 1;
        e = if l > 0 { h.mul_g(&e, i) } else { h.mul_g_inv(&e, i) };
    }
    let mut acc = LinkSum::new();
    for (w, c) in &e {
        acc.add(&(c * &h.trace(w)));
    }
    Ok(&conv.v_pow(stats(b).writhe) * &acc.finish())
}

/// The convention matching the closed 2-braid formula: `κ` is fixed once so
/// that the unknot equals `t2_formula(1, 1)`.
pub fn calibrated_convention() -> &'static ConventionMap {
    static CONV: OnceLock<ConventionMap> = OnceLock::new();
    CONV.get_or_init(|| {
        let target = t2_formula(1, 1).expect("r = 1");
        [1, -1]
            .into_iter()
            .map(ConventionMap::with_kappa)
            .find(|c| c.unknot() == target)
            .expect("unknot matches for one sign of z")
    })
}

/// `r = 1` HOMFLY in the normalization of the state sums.
pub fn homfly_skein(b: &BraidWord) -> Result<LinkPoly, OracleError> {
    homfly_skein_with(b, calibrated_convention())
}

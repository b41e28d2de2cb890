//! The symmetric evaluation `[Γ,γ](a,q)` and the anti-symmetric `⟨Γ,γ⟩(q,a,b)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use num_traits::{One, Zero};

use super::sequences::{sequence_classes, FlowFilter};
use super::StateSumError;
use crate::algebra::{binomial, LinkPoly, LinkSum, Monomial, Rat};
use crate::diagram::{elementary_flows, MoyGraph};
use crate::qehrhart::chain_ehrhart;

/// Evaluated chain Ehrhart polynomials keyed by rotation pattern. Shared between
/// resolutions and threads; entries are pure functions of the key, so the
/// order of insertion is irrelevant.
#[derive(Default)]
pub struct ChainCache {
    sym: RwLock<HashMap<Vec<i64>, LinkPoly>>,
    anti: RwLock<HashMap<Vec<i64>, BTreeMap<u32, LinkPoly>>>,
}

impl ChainCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `E_{rot,P}(a/q, -1, q)`.
    fn symmetric(&self, rots: &[i64]) -> LinkPoly {
        if let Some(v) = self.sym.read().unwrap().get(rots) {
            return v.clone();
        }
        let v = chain_ehrhart(rots).evaluate(&Monomial::unit(2, -2), -1, false);
        self.sym.write().unwrap().insert(rots.to_vec(), v.clone());
        v
    }

    /// `E_{rot,P}(aq, ·, q^-1)` split by binomial index `i`; the `b`-dependence is
    /// `binom(-b-1+i-1, i-1)`.
    fn antisymmetric(&self, rots: &[i64]) -> BTreeMap<u32, LinkPoly> {
        if let Some(v) = self.anti.read().unwrap().get(rots) {
            return v.clone();
        }
        let e = chain_ehrhart(rots);
        let mut parts: BTreeMap<u32, LinkSum> = BTreeMap::new();
        for t in e.terms() {
            for (i, c) in &t.b_part {
                let f = c.invert_x().mul_monomial(2 * t.a_exp, &Rat::one());
                parts.entry(*i).or_default().add_ratfunc(2 * t.a_exp, &f);
            }
        }
        let v: BTreeMap<u32, LinkPoly> = parts.into_iter().map(|(i, s)| (i, s.finish())).collect();
        self.anti.write().unwrap().insert(rots.to_vec(), v.clone());
        v
    }

    pub fn len(&self) -> usize {
        self.sym.read().unwrap().len() + self.anti.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn half_weight(w4: i64) -> Result<i64, StateSumError> {
    if w4 % 2 != 0 {
        return Err(StateSumError::OddWeight(w4));
    }
    Ok(w4 / 2)
}

fn sign(m: usize) -> Rat {
    if m.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// `[Γ,γ](a,q) = Σ_ε (-1)^{|ε|} (q/a)^{rot/2} q^{-w(ε)} E_{rot,P_ε}(a/q, -1, q)`.
pub fn symmetric_eval(g: &MoyGraph, filter: FlowFilter, cache: &ChainCache) -> Result<LinkPoly, StateSumError> {
    let flows = elementary_flows(g)?;
    let mut acc = LinkSum::new();
    for (cls, count) in sequence_classes(g, &flows, filter) {
        let r: i64 = cls.rots.iter().sum();
        let e = cache.symmetric(&cls.rots);
        let c = sign(cls.rots.len()) * Rat::from_integer((count as i128).into());
        acc.add_scaled(&e, -r, r - half_weight(cls.weight_x4)?, &c);
    }
    Ok(acc.finish())
}

/// `⟨Γ,γ⟩(q,a,b)` as `Σ_i parts[i] · binom(-b-1+i-1, i-1)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct AntisymParts {
    pub parts: BTreeMap<u32, LinkPoly>,
}

impl AntisymParts {
    /// Value at an integer `b`.
    pub fn at(&self, b: i64) -> LinkPoly {
        let mut acc = LinkSum::new();
        for (&i, p) in &self.parts {
            let w = binomial(-b - 1 + i as i64 - 1, i - 1);
            if !w.is_zero() {
                acc.add_scaled(p, 0, 0, &w);
            }
        }
        acc.finish()
    }

    pub fn is_b_independent(&self) -> bool {
        self.parts.iter().all(|(&i, p)| i == 1 || p.is_zero())
    }

    pub fn check(&self) -> Result<LinkPoly, StateSumError> {
        match self.parts.iter().find(|(&i, p)| i >= 2 && !p.is_zero()) {
            Some((&index, _)) => Err(StateSumError::BDependence { index }),
            None => Ok(self.at(0)),
        }
    }

    pub fn add_scaled(&mut self, other: &AntisymParts, alpha: i64, x: i64, c: &Rat) {
        for (&i, p) in &other.parts {
            let mut s = LinkSum::new();
            if let Some(mine) = self.parts.get(&i) {
                s.add(mine);
            }
            s.add_scaled(p, alpha, x, c);
            self.parts.insert(i, s.finish());
        }
        self.parts.retain(|_, p| !p.is_zero());
    }
}

/// `b` is either a concrete integer or checked to drop out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BMode {
    Value(i64),
    Check,
}

/// Terms `(-1)^{|ε|} (qa)^{-rot/2} q^{w(ε)} E_{rot,P_ε}(aq, -b-1, q^-1)`, kept
/// separated by their `b`-dependence.
pub fn antisymmetric_parts(g: &MoyGraph, cache: &ChainCache) -> Result<AntisymParts, StateSumError> {
    let flows = elementary_flows(g)?;
    let mut acc: BTreeMap<u32, LinkSum> = BTreeMap::new();
    for (cls, count) in sequence_classes(g, &flows, FlowFilter::All) {
        let r: i64 = cls.rots.iter().sum();
        let c = sign(cls.rots.len()) * Rat::from_integer((count as i128).into());
        let hw = half_weight(cls.weight_x4)?;
        for (i, p) in cache.antisymmetric(&cls.rots) {
            acc.entry(i).or_default().add_scaled(&p, -r, -r + hw, &c);
        }
    }
    let parts = acc.into_iter().map(|(i, s)| (i, s.finish())).filter(|(_, p)| !p.is_zero()).collect();
    Ok(AntisymParts { parts })
}

pub fn antisymmetric_eval(g: &MoyGraph, b: BMode, cache: &ChainCache) -> Result<LinkPoly, StateSumError> {
    let parts = antisymmetric_parts(g, cache)?;
    match b {
        BMode::Value(b) => Ok(parts.at(b)),
        BMode::Check => parts.check(),
    }
}

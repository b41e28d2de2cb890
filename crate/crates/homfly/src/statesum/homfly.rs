//! `P_r` and `P_{r^t}` of a braid closure as sums over resolutions.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use super::evaluate::{antisymmetric_parts, symmetric_eval, AntisymParts, ChainCache};
use super::sequences::FlowFilter;
use super::StateSumError;
use crate::algebra::{LaurentX, LinkPoly, LinkSum, Rat};
use crate::diagram::{resolve, stats, BraidWord, ResolutionIndex};
use crate::par;

pub const DEFAULT_MAX_RESOLUTIONS: u64 = 65536;
pub const MAX_RESOLUTIONS_ENV: &str = "HOMFLY_MAX_RESOLUTIONS";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalOptions {
    pub parallel: bool,
    pub max_resolutions: u64,
    /// Drop flows with more than one component (only valid for heads of positive words).
    pub prune: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { parallel: true, max_resolutions: DEFAULT_MAX_RESOLUTIONS, prune: false }
    }
}

impl EvalOptions {
    /// Defaults, with the size guard taken from `HOMFLY_MAX_RESOLUTIONS` if set.
    pub fn from_env() -> Self {
        let mut o = Self::default();
        if let Some(v) = std::env::var(MAX_RESOLUTIONS_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            o.max_resolutions = v;
        }
        o
    }

    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }
}

/// `(-1)^i q^{∓σ i/2}` with the upper sign for the symmetric sum.
pub fn crossing_coefficient(positive: bool, i: u32, symmetric: bool) -> LaurentX {
    let s = if positive == symmetric { -1 } else { 1 };
    let c = if i.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
    LaurentX::monomial(s * i as i64, c)
}

/// A class of resolutions with isomorphic graphs: a representative index and
/// the summed crossing coefficients of all members.
#[derive(Clone, Debug)]
pub struct ResolutionTerm {
    pub index: ResolutionIndex,
    pub members: usize,
    pub coefficient: LaurentX,
}

/// Cyclic rotation of the word carries `D_i` to an isotopic planar graph.
fn canonical_key(b: &BraidWord, i: &[u32]) -> Vec<(u64, u32)> {
    let seq: Vec<(u64, u32)> = b.letters().iter().map(|l| l.unsigned_abs()).zip(i.iter().copied()).collect();
    let n = seq.len();
    (0..n.max(1))
        .map(|k| {
            let mut s = seq.clone();
            if n > 0 {
                s.rotate_left(k);
            }
            s
        })
        .min()
        .unwrap_or_default()
}

fn guard(b: &BraidWord, r: u32, opts: &EvalOptions) -> Result<(), StateSumError> {
    if r == 0 {
        return Err(StateSumError::ZeroColor);
    }
    let needed: BigUint = Pow::pow(BigUint::from(r + 1), b.len());
    if needed > BigUint::from(opts.max_resolutions) {
        return Err(StateSumError::SizeGuard { needed: needed.to_string(), cap: opts.max_resolutions });
    }
    Ok(())
}

pub fn resolution_terms(b: &BraidWord, r: u32, symmetric: bool) -> Vec<ResolutionTerm> {
    let mut classes: BTreeMap<Vec<(u64, u32)>, ResolutionTerm> = BTreeMap::new();
    for idx in ResolutionIndex::all(b.len(), r) {
        let mut c = LaurentX::one();
        for (&l, &i) in b.letters().iter().zip(&idx.i) {
            c = &c * &crossing_coefficient(l > 0, i, symmetric);
        }
        let key = canonical_key(b, &idx.i);
        match classes.get_mut(&key) {
            Some(t) => {
                t.coefficient += &c;
                t.members += 1;
            }
            None => {
                classes.insert(key, ResolutionTerm { index: idx, members: 1, coefficient: c });
            }
        }
    }
    classes.into_values().filter(|t| !t.coefficient.is_zero()).collect()
}

fn sign_pow(odd: bool) -> Rat {
    if odd {
        -Rat::one()
    } else {
        Rat::one()
    }
}

/// `P_r` from the symmetric state sum with the environment's options.
pub fn colored_homfly(b: &BraidWord, r: u32) -> Result<LinkPoly, StateSumError> {
    colored_homfly_with(b, r, &EvalOptions::from_env())
}

/// `P_r = ((-1)^r a^{-r/2} q^{-r(r-1)/2})^{w} Σ_i Π_c (-1)^{i_c} q^{-σ(c) i_c/2} [D_i]`.
pub fn colored_homfly_with(b: &BraidWord, r: u32, opts: &EvalOptions) -> Result<LinkPoly, StateSumError> {
    guard(b, r, opts)?;
    let terms = resolution_terms(b, r, true);
    let cache = ChainCache::new();
    let filter = if opts.prune { FlowFilter::SingleComponent } else { FlowFilter::All };
    let values = par::try_map(&terms, opts.parallel, |t| {
        let g = resolve(b, &t.index)?;
        symmetric_eval(&g, filter, &cache)
    })?;
    let w = stats(b).writhe;
    let r = r as i64;
    let mut acc = LinkSum::new();
    for (t, v) in terms.iter().zip(&values) {
        for (e, c) in t.coefficient.terms() {
            acc.add_scaled(v, -r * w, e - r * (r - 1) * w, &(c * sign_pow((r * w) % 2 != 0)));
        }
    }
    Ok(acc.finish())
}

/// `P_{r^t} = ((-1)^r a^{-r/2} q^{r(r-1)/2})^{w} Σ_i Π_c (-1)^{i_c} q^{σ(c) i_c/2} ⟨D_i⟩`,
/// after checking that `b` drops out.
pub fn antisym_homfly(b: &BraidWord, r: u32, opts: &EvalOptions) -> Result<LinkPoly, StateSumError> {
    antisym_homfly_parts(b, r, opts)?.check()
}

pub(crate) fn antisym_homfly_parts(b: &BraidWord, r: u32, opts: &EvalOptions) -> Result<AntisymParts, StateSumError> {
    guard(b, r, opts)?;
    let terms = resolution_terms(b, r, false);
    let cache = ChainCache::new();
    let values = par::try_map(&terms, opts.parallel, |t| {
        let g = resolve(b, &t.index)?;
        antisymmetric_parts(&g, &cache)
    })?;
    let w = stats(b).writhe;
    let r = r as i64;
    let mut total = AntisymParts::default();
    for (t, v) in terms.iter().zip(&values) {
        for (e, c) in t.coefficient.terms() {
            total.add_scaled(v, -r * w, e + r * (r - 1) * w, &(c * sign_pow((r * w) % 2 != 0)));
        }
    }
    Ok(total)
}

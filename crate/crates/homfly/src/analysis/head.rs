//! Heads: the first `r` slices of the expansion at `q → ∞`, normalized by an
//! `a`-monomial.
//!
//! The reference products are read as series in `q^{-1}`; in particular
//! `(a^{-1};q)_∞` is taken as `(a^{-1};q^{-1})_∞`, the only convergent reading.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::AnalysisError;
use crate::algebra::{
    pochhammer_finite, pochhammer_series, render::linkpoly_to_string, series_at_q_infinity, HalfInt, LinkPoly,
    Monomial, QSeries, Rat,
};
use crate::diagram::BraidWord;
use crate::oracles::t2_formula;
use crate::statesum::{colored_homfly_with, EvalOptions};

/// `a^{f} · lead⁻¹ · Σ_j c_{d+j} q^{-j}` for `j < slices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedHead {
    /// `P = Σ_{j ≥ d} c_j q^{-j}`
    pub d: HalfInt,
    pub f: HalfInt,
    /// The leading `a`-coefficient of `c_d` that was divided out (usually ±1).
    pub lead: Rat,
    pub slices: Vec<LinkPoly>,
    pub half_steps: bool,
}

pub fn normalize_head(s: &QSeries, slices: usize) -> Result<NormalizedHead, AnalysisError> {
    let d = -s.leading_q_degree().ok_or(AnalysisError::Zero)?;
    let first = s.coeff(0);
    let (top, c) = first.terms().next_back().ok_or(AnalysisError::Zero)?;
    let lead = c.as_constant().ok_or(AnalysisError::Zero)?;
    let inv = lead.recip();
    let out = (0..slices).map(|j| s.coeff(j).mul_monomial(-top, 0, &inv)).collect();
    Ok(NormalizedHead { d, f: HalfInt::from_twice(-top), lead, slices: out, half_steps: s.truncate(slices).has_half_steps() })
}

pub fn head_of(p: &LinkPoly, slices: usize) -> Result<NormalizedHead, AnalysisError> {
    normalize_head(&series_at_q_infinity(p, slices.max(1)), slices)
}

/// First `order` slices of `(a^{-1};q^{-1})_∞ / (q^{-1};q^{-1})_∞`.
pub fn unknot_head(order: usize) -> Result<Vec<LinkPoly>, AnalysisError> {
    let num = pochhammer_series(&Monomial::unit(-2, 0), -2, order)?;
    let den = pochhammer_series(&Monomial::unit(0, -2), -2, order)?;
    Ok(num.div(&den)?.coeffs())
}

/// First `r` slices of `(a^{-1};q^{-1})_r / (q^{-1};q^{-1})_r`.
pub fn twobraid_finite_head(r: u32) -> Result<Vec<LinkPoly>, AnalysisError> {
    let order = r as usize;
    let num = series_at_q_infinity(&pochhammer_finite(&Monomial::unit(-2, 0), -2, r), order);
    let den = series_at_q_infinity(&pochhammer_finite(&Monomial::unit(0, -2), -2, r), order);
    Ok(num.div(&den)?.coeffs())
}

/// `(a^{-1};q^{-1})_∞^2 / ((q^{-1};q^{-1})_∞ (q^{-2};q^{-1})_∞)` to `trunc` slices.
pub fn negative_twobraid_head(trunc: usize) -> Result<QSeries, AnalysisError> {
    let a = pochhammer_series(&Monomial::unit(-2, 0), -2, trunc)?;
    let q1 = pochhammer_series(&Monomial::unit(0, -2), -2, trunc)?;
    let q2 = pochhammer_series(&Monomial::unit(0, -4), -2, trunc)?;
    Ok(a.mul(&a).div(&q1.mul(&q2))?)
}

#[derive(Clone, Debug, Serialize)]
pub struct HeadReport {
    pub r: u32,
    pub d_r: HalfInt,
    pub f_r: HalfInt,
    /// Sign of the leading coefficient before normalization.
    pub sign: i8,
    pub head_coeffs: Vec<String>,
    pub pruned: bool,
    /// Set when pruning was requested and both runs were compared.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prune_agrees: Option<bool>,
    pub matches_unknot_series: bool,
    /// For 2-strand words, agreement with `(a^{-1};q^{-1})_r / (q^{-1};q^{-1})_r`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_twobraid_form: Option<bool>,
    #[serde(skip)]
    pub slices: Vec<LinkPoly>,
}

/// Whether every generator that occurs does so at least twice.
fn prune_applies(b: &BraidWord) -> bool {
    (1..b.strands() as i64).all(|k| {
        let n = b.letters().iter().filter(|&&l| l == k).count();
        n == 0 || n >= 2
    })
}

/// The head of `P_r` of a positive braid closure. With `prune`, states with
/// multi-component flows are skipped and the result is checked against the
/// full sum; words where the pruning lemma does not apply fall back to the
/// full sum.
pub fn head(b: &BraidWord, r: u32, prune: bool, opts: &EvalOptions) -> Result<HeadReport, AnalysisError> {
    if !b.is_positive() {
        return Err(AnalysisError::NotPositive);
    }
    let order = r as usize;
    let full_opts = EvalOptions { prune: false, ..opts.clone() };
    let full = head_of(&colored_homfly_with(b, r, &full_opts)?, order)?;
    let pruned = prune && prune_applies(b);
    let mut prune_agrees = None;
    if pruned {
        let p = head_of(&colored_homfly_with(b, r, &EvalOptions { prune: true, ..opts.clone() })?, order)?;
        if let Some(slice) = (0..order).find(|&j| p.slices[j] != full.slices[j]) {
            return Err(AnalysisError::PruneMismatch { slice });
        }
        prune_agrees = Some(p == full);
    }
    let reference = unknot_head(order)?;
    let matches_twobraid_form = if b.strands() == 2 { Some(twobraid_finite_head(r)? == full.slices) } else { None };
    Ok(HeadReport {
        r,
        d_r: full.d,
        f_r: full.f,
        sign: if full.lead.is_negative() { -1 } else { 1 },
        head_coeffs: full.slices.iter().map(linkpoly_to_string).collect(),
        pruned,
        prune_agrees,
        matches_unknot_series: reference == full.slices && full.lead.abs().is_one() && !full.half_steps,
        matches_twobraid_form,
        slices: full.slices,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NegativeHeadReport {
    pub c: i64,
    pub r: u32,
    pub slices_compared: usize,
    /// Length of the common prefix of normalized slices.
    pub matching_slices: usize,
    pub agrees: bool,
}

/// Compares the normalized head of the closed formula at `c < 0` with the
/// negative 2-braid series on `slices` slices.
pub fn negative_twobraid_check(c: i64, r: u32, slices: usize) -> Result<NegativeHeadReport, AnalysisError> {
    let p = t2_formula(c, r)?;
    let probe = slices + 4;
    let h = head_of(&p, probe)?;
    let reference = negative_twobraid_head(probe)?.coeffs();
    let matching_slices = (0..probe).take_while(|&j| reference.get(j) == h.slices.get(j)).count();
    Ok(NegativeHeadReport {
        c,
        r,
        slices_compared: slices,
        matching_slices,
        agrees: matching_slices >= slices && !h.lead.is_zero() && h.lead.abs().is_one(),
    })
}

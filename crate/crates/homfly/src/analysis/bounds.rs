//! The `a`- and `q`-degree bounds in terms of crossings and Seifert circles.

use serde::Serialize;

use super::AnalysisError;
use crate::algebra::{HalfInt, LinkPoly, Rat};
use crate::diagram::{stats, BraidWord, DiagramStats};
use crate::statesum::{colored_homfly_with, EvalOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub r: u32,
    pub stats: DiagramStats,
    /// `(r/2)(-c₊ + c₋ + s₊ + s₋)`
    pub a_bound: HalfInt,
    /// `(r/2)(s₊ - s₋ + c₊ + c₋(2r-1))`
    pub q_upper: HalfInt,
    /// `(r/2)(-s₊ - s₋ + c₊)`, only for words without negative crossings
    pub q_lower_positive: Option<HalfInt>,
    pub a_actual: HalfInt,
    pub q_actual: HalfInt,
    pub a_satisfied: bool,
    pub a_attained: bool,
    pub q_upper_satisfied: bool,
    pub q_lower_satisfied: Option<bool>,
    /// Whether `q_actual` equals the lower bound (conjectured for positive diagrams).
    pub q_lower_equality: Option<bool>,
    /// Leading coefficient at `q → ∞` of the top `a`-slice.
    pub top_coefficient: String,
}

impl BoundsReport {
    pub fn all_satisfied(&self) -> bool {
        self.a_satisfied && self.q_upper_satisfied && self.q_lower_satisfied.unwrap_or(true)
    }
}

fn half(r: u32, n: i64) -> HalfInt {
    HalfInt::from_twice(r as i64 * n)
}

/// Compares an already evaluated `P_r` against the bounds of its diagram.
pub fn bounds_for(s: DiagramStats, r: u32, p: &LinkPoly) -> Result<BoundsReport, AnalysisError> {
    let (cp, cm, sp, sm) = (s.c_plus as i64, s.c_minus as i64, s.s_plus as i64, s.s_minus as i64);
    let ri = r as i64;
    let a_bound = half(r, -cp + cm + sp + sm);
    let q_upper = half(r, sp - sm + cp + cm * (2 * ri - 1));
    let q_lower_positive = (cm == 0).then(|| half(r, -sp - sm + cp));
    let a_actual = p.maxdeg_a().ok_or(AnalysisError::Zero)?;
    let q_actual = p.maxdeg_q().ok_or(AnalysisError::Zero)?;
    let top = p.terms().next_back().and_then(|(_, f)| f.top_coeff()).unwrap_or_else(|| Rat::from_integer(0.into()));
    Ok(BoundsReport {
        r,
        stats: s,
        a_bound,
        q_upper,
        q_lower_positive,
        a_actual,
        q_actual,
        a_satisfied: a_actual <= a_bound,
        a_attained: a_actual == a_bound,
        q_upper_satisfied: q_actual <= q_upper,
        q_lower_satisfied: q_lower_positive.map(|l| l <= q_actual),
        q_lower_equality: q_lower_positive.map(|l| l == q_actual),
        top_coefficient: top.to_string(),
    })
}

pub fn bounds(b: &BraidWord, r: u32, opts: &EvalOptions) -> Result<BoundsReport, AnalysisError> {
    let p = colored_homfly_with(b, r, opts)?;
    bounds_for(stats(b), r, &p)
}

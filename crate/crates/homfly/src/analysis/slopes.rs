//! `r^{-2} maxdeg_q P_r` for a range of colors.

use num_rational::Ratio;
use serde::Serialize;

use super::AnalysisError;
use crate::algebra::HalfInt;
use crate::diagram::{stats, BraidWord};
use crate::oracles::t2_formula;
use crate::statesum::{colored_homfly_with, EvalOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlopeSource {
    StateSum,
    /// The closed 2-braid formula at `c = writhe`.
    TwoBraid,
}

fn ratio_string(r: Ratio<i64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SlopeEntry {
    pub r: u32,
    pub maxdeg_q: HalfInt,
    /// `maxdeg_q / r²` as an exact fraction.
    pub slope: String,
    /// Difference to the previous entry.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<String>,
    /// For negative 2-braids: `-c r²/2 - 2r + 1` and `c₋ r²/2 + 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub top_term_degree: Option<HalfInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quadratic_degree: Option<HalfInt>,
    #[serde(skip)]
    pub value: Ratio<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SlopeReport {
    pub braid: String,
    pub entries: Vec<SlopeEntry>,
    /// Which of the two negative 2-braid expressions matched every entry.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub top_term_degree_matches: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quadratic_degree_matches: Option<bool>,
}

pub fn slopes(b: &BraidWord, max_r: u32, source: SlopeSource, opts: &EvalOptions) -> Result<SlopeReport, AnalysisError> {
    let st = stats(b);
    let negative_twobraid = b.strands() == 2 && st.c_plus == 0 && st.c_minus > 0;
    let mut entries: Vec<SlopeEntry> = Vec::new();
    for r in 1..=max_r {
        let p = match source {
            SlopeSource::StateSum => colored_homfly_with(b, r, opts)?,
            SlopeSource::TwoBraid => {
                if b.strands() != 2 {
                    return Err(AnalysisError::NotTwoBraid);
                }
                t2_formula(st.writhe, r)?
            }
        };
        let d = p.maxdeg_q().ok_or(AnalysisError::Zero)?;
        let ri = r as i64;
        let value = Ratio::new(d.twice(), 2 * ri * ri);
        let delta = entries.last().map(|e| ratio_string(value - e.value));
        let cm = st.c_minus as i64;
        let (top, quad) = if negative_twobraid {
            (Some(HalfInt::from_twice(cm * ri * ri - 4 * ri + 2)), Some(HalfInt::from_twice(cm * ri * ri + 2)))
        } else {
            (None, None)
        };
        entries.push(SlopeEntry {
            r,
            maxdeg_q: d,
            slope: ratio_string(value),
            delta,
            top_term_degree: top,
            quadratic_degree: quad,
            value,
        });
    }
    let check = |f: fn(&SlopeEntry) -> Option<HalfInt>| {
        negative_twobraid.then(|| entries.iter().all(|e| f(e) == Some(e.maxdeg_q)))
    };
    Ok(SlopeReport {
        braid: b.to_string(),
        top_term_degree_matches: check(|e| e.top_term_degree),
        quadratic_degree_matches: check(|e| e.quadratic_degree),
        entries,
    })
}

//! Degree bounds, heads of positive braid closures and slope data.

mod bounds;
mod head;
mod slopes;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::oracles::OracleError;
use crate::statesum::StateSumError;

pub use bounds::{bounds, bounds_for, BoundsReport};
pub use head::{
    head, head_of, negative_twobraid_check, negative_twobraid_head, normalize_head, twobraid_finite_head, unknot_head,
    HeadReport, NegativeHeadReport, NormalizedHead,
};
pub use slopes::{slopes, SlopeEntry, SlopeReport, SlopeSource};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("the head is only defined here for positive braid words")]
    NotPositive,
    #[error("pruned and unpruned heads differ in slice {slice}")]
    PruneMismatch { slice: usize },
    #[error("the closed 2-braid formula needs a word on 2 strands")]
    NotTwoBraid,
    #[error("polynomial is zero")]
    Zero,
    #[error(transparent)]
    StateSum(#[from] StateSumError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::HalfInt;
    use crate::diagram::parse_braid;
    use crate::statesum::EvalOptions;

    #[test]
    fn hopf_bounds() {
        let rep = bounds(&parse_braid("1 1").unwrap(), 1, &EvalOptions::default()).unwrap();
        assert_eq!(rep.a_bound, HalfInt::ZERO);
        assert!(rep.a_attained && rep.all_satisfied());
        assert_eq!(rep.q_actual, HalfInt::ZERO);
    }

    #[test]
    fn trefoil_head_r2() {
        let o = EvalOptions::default();
        let h = head(&parse_braid("1 1 1").unwrap(), 2, true, &o).unwrap();
        let u = head(&parse_braid("1").unwrap(), 2, true, &o).unwrap();
        assert!(h.matches_unknot_series && h.pruned && h.prune_agrees == Some(true));
        assert_eq!(h.slices, u.slices);
        assert!(head(&parse_braid("1 -2").unwrap(), 1, false, &o).is_err());
    }

    #[test]
    fn unknot_head_starts_with_one() {
        let h = unknot_head(3).unwrap();
        assert_eq!(h[0].coeff(0), crate::algebra::RatFuncX::one());
        assert_eq!(negative_twobraid_head(1).unwrap().coeffs()[0].coeff(0), crate::algebra::RatFuncX::one());
    }

    #[test]
    fn negative_twobraid_slopes() {
        let s = slopes(&parse_braid("-1 -1").unwrap(), 3, SlopeSource::TwoBraid, &EvalOptions::default()).unwrap();
        assert_eq!(s.top_term_degree_matches, Some(true));
        assert_eq!(s.quadratic_degree_matches, Some(false));
        let v: Vec<&str> = s.entries.iter().map(|e| e.slope.as_str()).collect();
        assert_eq!(v, ["0", "1/4", "4/9"]);
    }
}

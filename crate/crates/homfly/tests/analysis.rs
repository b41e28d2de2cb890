use proptest::prelude::*;

use homfly::analysis::{bounds, head, negative_twobraid_check, slopes, AnalysisError, SlopeSource};
use homfly::diagram::{parse_braid, BraidWord};
use homfly::statesum::EvalOptions;

fn braid(max_strands: usize, max_len: usize, positive: bool) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let gens = n as i64 - 1;
        prop::collection::vec((1..=gens, any::<bool>()), 1..=max_len).prop_map(move |ls| {
            let letters = ls.into_iter().map(|(g, neg)| if neg && !positive { -g } else { g }).collect();
            BraidWord::new(n, letters).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn degree_bounds_hold(b in braid(3, 4, false)) {
        let rep = bounds(&b, 1, &EvalOptions::default()).unwrap();
        prop_assert!(rep.all_satisfied(), "{:?}", rep);
    }

    #[test]
    fn positive_words_attain_the_a_bound(b in braid(3, 4, true)) {
        let rep = bounds(&b, 1, &EvalOptions::default()).unwrap();
        prop_assert!(rep.a_attained && rep.q_lower_satisfied == Some(true), "{:?}", rep);
    }

    #[test]
    fn positive_heads_are_the_unknot_series(b in braid(3, 3, true)) {
        // split closures are excluded: every generator has to occur
        let mut letters = b.letters().to_vec();
        letters.extend(1..b.strands() as i64);
        let b = BraidWord::new(b.strands(), letters).unwrap();
        let on = head(&b, 1, true, &EvalOptions::default()).unwrap();
        let off = head(&b, 1, false, &EvalOptions::default()).unwrap();
        prop_assert!(on.matches_unknot_series);
        prop_assert_eq!(on.slices, off.slices);
    }
}

#[test]
fn head_rejects_negative_words() {
    let e = head(&parse_braid("1 -2").unwrap(), 1, true, &EvalOptions::default());
    assert!(matches!(e, Err(AnalysisError::NotPositive)));
}

#[test]
fn two_braid_slopes_from_both_sources() {
    let b = parse_braid("1 1 1 1").unwrap();
    let o = EvalOptions::default();
    let a = slopes(&b, 2, SlopeSource::StateSum, &o).unwrap();
    let t = slopes(&b, 2, SlopeSource::TwoBraid, &o).unwrap();
    let sa: Vec<_> = a.entries.iter().map(|e| e.slope.clone()).collect();
    let st: Vec<_> = t.entries.iter().map(|e| e.slope.clone()).collect();
    assert_eq!(sa, st);
    assert_eq!(sa, ["1", "1/2"]);
}

#[test]
fn negative_head_report_is_consistent() {
    let rep = negative_twobraid_check(-2, 2, 2).unwrap();
    assert_eq!(rep.slices_compared, 2);
    assert_eq!(rep.agrees, rep.matching_slices >= 2);
}

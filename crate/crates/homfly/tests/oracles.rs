use proptest::prelude::*;

use homfly::diagram::{parse_braid, BraidWord};
use homfly::oracles::{crosscheck, homfly_skein, t2_formula};
use homfly::statesum::{colored_homfly_with, EvalOptions};

fn braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let gens = n as i64 - 1;
        prop::collection::vec((1..=gens, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            BraidWord::new(n, ls.into_iter().map(|(g, neg)| if neg { -g } else { g }).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn skein_agrees_with_state_sum(b in braid(4, 4)) {
        let s = colored_homfly_with(&b, 1, &EvalOptions::default()).unwrap();
        prop_assert_eq!(homfly_skein(&b).unwrap(), s);
    }

    #[test]
    fn crosscheck_pairs_agree(b in braid(3, 3)) {
        let rep = crosscheck(&b, 1, &[1, 2], &EvalOptions::default());
        prop_assert!(rep.all_equal(), "{:?}", rep);
    }
}

#[test]
fn closed_formula_mirror_symmetry() {
    for r in 1..=3 {
        for c in 1..=4 {
            assert_eq!(t2_formula(-c, r).unwrap(), t2_formula(c, r).unwrap().invert_a().invert_q());
        }
    }
}

#[test]
fn crosscheck_on_two_colors() {
    let rep = crosscheck(&parse_braid("1 1 1").unwrap(), 2, &[2], &EvalOptions::default());
    assert!(rep.all_equal(), "{rep:?}");
    assert!(rep.pairs.iter().any(|p| p.pair.starts_with("symmetric vs t2")));
}

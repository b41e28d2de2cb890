use proptest::prelude::*;

use homfly::diagram::{
    elementary_flows, intersection_number, parse_braid, resolve, stats, BraidWord, MoyGraph, ResolutionIndex,
};
use homfly::statesum::{enumerate_sequences, FlowFilter};

fn braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let gens = n as i64 - 1;
        prop::collection::vec((1..=gens, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            BraidWord::new(n, ls.into_iter().map(|(g, neg)| if neg { -g } else { g }).collect()).unwrap()
        })
    })
}

fn graphs(b: &BraidWord, r: u32) -> Vec<MoyGraph> {
    ResolutionIndex::all(b.len(), r).map(|i| resolve(b, &i).unwrap()).collect()
}

fn conservative(g: &MoyGraph, support: &[u8]) -> bool {
    (0..g.nodes.len()).all(|v| {
        let inflow: u32 = g.in_edges(v).map(|e| support[e] as u32).sum();
        let outflow: u32 = g.out_edges(v).map(|e| support[e] as u32).sum();
        inflow == outflow
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn display_round_trip(b in braid(4, 6)) {
        prop_assert_eq!(parse_braid(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn resolutions_are_balanced(b in braid(3, 3), r in 1u32..=2) {
        for g in graphs(&b, r) {
            prop_assert!(g.check_balance().is_ok());
        }
    }

    #[test]
    fn flows_are_conservative_with_unit_rotations(b in braid(3, 3)) {
        for g in graphs(&b, 1) {
            for f in elementary_flows(&g).unwrap() {
                prop_assert!(conservative(&g, &f.support));
                for c in &f.components {
                    prop_assert!(c.rotation == 1 || c.rotation == -1);
                }
            }
        }
    }

    #[test]
    fn intersection_is_antisymmetric(b in braid(3, 3)) {
        for g in graphs(&b, 1) {
            let flows = elementary_flows(&g).unwrap();
            for d in &flows {
                prop_assert_eq!(intersection_number(&g, d, d), 0);
                for e in &flows {
                    prop_assert_eq!(intersection_number(&g, d, e), -intersection_number(&g, e, d));
                }
            }
        }
    }

    #[test]
    fn sequences_share_the_total_rotation(b in braid(3, 3), r in 1u32..=2) {
        let seifert = ResolutionIndex::seifert(b.len(), r);
        for idx in ResolutionIndex::all(b.len(), r) {
            let g = resolve(&b, &idx).unwrap();
            let flows = elementary_flows(&g).unwrap();
            let seqs = enumerate_sequences(&g, &flows, FlowFilter::All);
            prop_assert!(!seqs.is_empty());
            let total = seqs[0].rot_sum;
            prop_assert!(seqs.iter().all(|s| s.rot_sum == total));
            if idx == seifert {
                // every Seifert circle of a braid closure turns the same way
                prop_assert_eq!(total.unsigned_abs(), (r as usize * b.strands()) as u64);
            }
        }
    }
}

#[test]
fn stats_of_a_mixed_word() {
    let s = stats(&parse_braid("1 -2 1 -2").unwrap());
    assert_eq!((s.c_plus, s.c_minus, s.s_plus, s.s_minus, s.writhe), (2, 2, 3, 0, 0));
}

#[test]
fn parse_errors_name_the_token() {
    let e = parse_braid("1 0 2").unwrap_err().to_string();
    assert!(e.contains("\"0\""), "{e}");
    assert!(parse_braid("2: 1 2").is_err());
    assert!(parse_braid("1 b").is_err());
    assert_eq!(parse_braid("aBaB").unwrap(), parse_braid("1 -2 1 -2").unwrap());
}

use proptest::prelude::*;

use homfly::algebra::json::{from_json_str, to_json_string};
use homfly::algebra::render::linkpoly_to_string;
use homfly::algebra::{int, LaurentX, LinkPoly, RatFuncX};

fn laurent() -> impl Strategy<Value = LaurentX> {
    (-4i64..4, prop::collection::vec(-3i64..=3, 0..5)).prop_map(|(low, c)| LaurentX::from_ints(low, &c))
}

fn denominator() -> impl Strategy<Value = LaurentX> {
    prop_oneof![
        Just(LaurentX::one()),
        Just(LaurentX::from_ints(0, &[1, 0, -1])),
        Just(LaurentX::from_ints(0, &[1, 0, 1])),
        Just(LaurentX::from_ints(0, &[1, 0, 0, 0, -1])),
        Just(LaurentX::from_ints(-1, &[2, 0, 0, 3])),
    ]
}

fn ratfunc() -> impl Strategy<Value = RatFuncX> {
    (laurent(), denominator()).prop_map(|(n, d)| RatFuncX::new(n, d).unwrap())
}

fn linkpoly() -> impl Strategy<Value = LinkPoly> {
    prop::collection::vec((-3i64..=3, ratfunc()), 0..3).prop_map(LinkPoly::from_slices)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in linkpoly(), b in linkpoly(), c in linkpoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LinkPoly::one(), a.clone());
    }

    #[test]
    fn json_round_trip(p in linkpoly()) {
        prop_assert_eq!(from_json_str(&to_json_string(&p)).unwrap(), p);
    }

    #[test]
    fn inversions_are_ring_involutions(a in linkpoly(), b in linkpoly()) {
        prop_assert_eq!(a.invert_q().invert_q(), a.clone());
        prop_assert_eq!(a.invert_a().invert_a(), a.clone());
        prop_assert_eq!((&a * &b).invert_q(), &a.invert_q() * &b.invert_q());
        prop_assert_eq!((&a + &b).invert_a(), &a.invert_a() + &b.invert_a());
    }

    #[test]
    fn ratfunc_division_is_exact(p in linkpoly(), g in ratfunc()) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!(p.mul_ratfunc(&g).div_ratfunc(&g).unwrap(), p);
    }

    #[test]
    fn laurent_product_degrees(a in laurent(), b in laurent()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let p = &a * &b;
        prop_assert_eq!(p.high_exp(), Some(a.high_exp().unwrap() + b.high_exp().unwrap()));
        prop_assert_eq!(p.low_exp(), Some(a.low_exp().unwrap() + b.low_exp().unwrap()));
    }
}

#[test]
fn rendering_orders_by_a_then_q() {
    let p = LinkPoly::monomial(-1, 4, int(1)) + LinkPoly::monomial(3, -1, int(-2)) + LinkPoly::monomial(-1, -2, int(3));
    assert_eq!(linkpoly_to_string(&p), "-2*a^(3/2)*q^(-1/2) + a^(-1/2)*(q^2 + 3*q^(-1))");
}

#[test]
fn json_shape() {
    let p = LinkPoly::monomial(1, -2, int(3));
    assert_eq!(to_json_string(&p), r#"[{"a_half_exp":1,"num":[[-2,"3"]],"den":[[0,"1"]]}]"#);
}

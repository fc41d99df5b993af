use proptest::prelude::*;

use braided_core::diagram::{parse, DiagramExpr, ObjRef};
use braided_core::examples::double::{
    closed_formula_ynxm, normal_order, normal_order_by, Gen, NCWord,
};
use braided_core::scalars::{parse_scalar, Field};
use braided_core::suites::vandermonde;

fn gen_strategy() -> impl Strategy<Value = Gen> {
    prop_oneof![Just(Gen::X), Just(Gen::T), Just(Gen::TInv), Just(Gen::Y)]
}

fn leaf() -> impl Strategy<Value = DiagramExpr> {
    let obj = prop_oneof![
        Just(ObjRef(vec![])),
        Just(ObjRef(vec![("A".into(), false)])),
        Just(ObjRef(vec![("A".into(), true), ("B".into(), false)])),
    ];
    prop_oneof![
        prop_oneof![Just("mu"), Just("Delta"), Just("S")]
            .prop_map(|n| DiagramExpr::Gen(n.into(), vec![])),
        proptest::option::of(obj.clone()).prop_map(DiagramExpr::Id),
        (obj.clone(), obj.clone(), any::<bool>())
            .prop_map(|(x, y, i)| DiagramExpr::Psi(Some((x, y)), i)),
        obj.clone().prop_map(DiagramExpr::Ev),
        obj.prop_map(DiagramExpr::Coev),
    ]
}

fn expr() -> impl Strategy<Value = DiagramExpr> {
    leaf().prop_recursive(3, 24, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(DiagramExpr::Seq),
            prop::collection::vec(inner, 2..4).prop_map(DiagramExpr::Par),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Any order of rewriting reaches the same normal form.
    #[test]
    fn rewriting_is_confluent(w in prop::collection::vec(gen_strategy(), 0..=8), seed in any::<u64>()) {
        let f = Field::RationalFunctions;
        let word = NCWord::word(f, w, f.one());
        let mut state = seed | 1;
        let mut choose = |k: usize| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % k as u64) as usize
        };
        let a = normal_order_by(&word, &mut choose);
        prop_assert!(a.is_normal());
        prop_assert_eq!(a, normal_order(&word));
    }

    #[test]
    fn diagram_text_round_trip(e in expr()) {
        let back = parse(&e.to_string()).unwrap();
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(DiagramExpr::from_json(&e.to_json()).unwrap(), e);
    }

    #[test]
    fn normal_form_text_round_trip(m in 0usize..4, n in 0usize..4) {
        let f = Field::RationalFunctions;
        let w = closed_formula_ynxm(f, m, n);
        prop_assert_eq!(NCWord::parse(f, &w.to_string()).unwrap(), w);
    }

    /// Field operations on random Laurent polynomials.
    #[test]
    fn rational_function_arithmetic(a in -3i64..4, b in -3i64..4, c in 1i64..5, d in -2i64..3) {
        let f = Field::RationalFunctions;
        let x = parse_scalar(f, &format!("{a}*q^2 + {b}")).unwrap();
        let y = parse_scalar(f, &format!("q^{d} + {c}")).unwrap();
        let z = parse_scalar(f, &format!("{c}*q - {a}")).unwrap();
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !y.is_zero() {
            prop_assert_eq!(&(&x * &y) * &y.inv(), x);
        }
    }
}

#[test]
fn q_vandermonde_up_to_eight() {
    assert!(vandermonde(8).passed());
}

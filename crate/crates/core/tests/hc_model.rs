mod common;

use hc_core::hc_model::{
    classify_parameter, count_simples, ideal_chain, simple_labels, simple_labels_for_class, two_param_class,
    CherednikParameter, ParameterClass, ParameterVariant, TwoParamClass,
};
use hc_core::Partition;
use proptest::prelude::*;

fn c(s: &str) -> CherednikParameter {
    s.parse().unwrap()
}

#[test]
fn counts_match_the_brute_force_criterion() {
    for n in 1..=10 {
        for m in 2..=n {
            let expected = common::brute_simple_count(n, m);
            for r in 1..=(2 * m as i64 + 1) {
                if common::gcd(r, m as i64) != 1 {
                    continue;
                }
                let param = CherednikParameter::new(r, m as i64).unwrap();
                assert_eq!(count_simples(n, param).unwrap(), expected, "n={n} c={param}");
            }
        }
    }
}

#[test]
fn integral_and_generic_counts() {
    for n in 1..=12 {
        assert_eq!(count_simples(n, c("3")).unwrap() as u64, common::pentagonal_p(n));
        assert_eq!(count_simples(n, CherednikParameter::new(1, n as i64 + 1).unwrap()).unwrap(), 1);
        let irrational = simple_labels_for_class(n, &ParameterClass::irrational(false)).unwrap();
        assert_eq!(irrational.labels, vec![Partition::row(n)]);
    }
    assert_eq!(count_simples(10, c("-2")).unwrap(), 42);
}

#[test]
fn labels_always_contain_the_row() {
    for n in 1..=9 {
        for d in 1..=n as i64 + 2 {
            for r in [-1, 1, d + 1] {
                let labels = simple_labels(n, CherednikParameter::new(r, d).unwrap()).unwrap();
                assert!(labels.labels.contains(&Partition::row(n)));
                assert_eq!(labels.sign_twisted, r < 0);
            }
        }
    }
}

#[test]
fn class_json_uses_stable_field_names() {
    let v = serde_json::to_value(classify_parameter(c("2/3"), 4)).unwrap();
    assert_eq!(v, serde_json::json!({ "variant": "Rational", "r": 2, "m": 3, "negative": false }));
    let v = serde_json::to_value(classify_parameter(c("5"), 4)).unwrap();
    assert_eq!(v, serde_json::json!({ "variant": "Integral", "negative": false }));
    assert_eq!(classify_parameter(c("1/5"), 4).variant, ParameterVariant::Generic);
}

#[test]
fn ideal_chains_have_increasing_leaves() {
    for n in 2..=12 {
        for m in 2..=n {
            let chain = ideal_chain(n, m).unwrap();
            assert_eq!(chain.len(), n / m + 1);
            assert_eq!(chain.proper_ideals(), n / m);
            for (i, e) in chain.chain.iter().enumerate() {
                assert_eq!(e.subquotient_support.index, i);
                let blocks = e.subquotient_support.parabolic.blocks();
                assert_eq!(blocks.iter().filter(|&&b| b == m).count(), i);
                assert_eq!(blocks.iter().sum::<usize>(), n);
                match &e.quotient_support {
                    Some(q) => assert_eq!(q.index, i + 1),
                    None => assert_eq!(i, n / m),
                }
            }
        }
    }
    let json = serde_json::to_value(ideal_chain(2, 2).unwrap()).unwrap();
    assert!(json.get("chain").is_some());
}

#[test]
fn two_parameter_grid() {
    let mut seen = [0usize; 3];
    let mut pairs = 0;
    for ((a, b), (x, y), n) in common::two_param_grid() {
        pairs += 1;
        let got = two_param_class(CherednikParameter::new(a, b).unwrap(), CherednikParameter::new(x, y).unwrap(), n);
        let (case, rank) = common::two_param_oracle((a, b), (x, y), n as i64);
        match got {
            TwoParamClass::DerivedEquivalence => {
                assert_eq!(case, "DerivedEquivalence");
                seen[0] += 1;
            }
            TwoParamClass::RepOfSymmetricGroup { rank: r, simple_count } => {
                assert_eq!((case, rank), ("RepOfSymmetricGroup", Some(r as i64)));
                assert_eq!(simple_count as u64, common::pentagonal_p(r));
                seen[1] += 1;
            }
            TwoParamClass::Zero => {
                assert_eq!(case, "Zero");
                seen[2] += 1;
            }
        }
    }
    assert_eq!(pairs, 200);
    assert!(seen.iter().all(|&s| s > 0), "{seen:?}");
}

proptest! {
    #[test]
    fn equal_parameters_are_never_zero(p in -30i64..30, q in 1i64..12, n in 1usize..12) {
        let c = CherednikParameter::new(p, q).unwrap();
        prop_assert_eq!(two_param_class(c, c, n), TwoParamClass::DerivedEquivalence);
    }

    #[test]
    fn parameter_text_round_trips(p in -50i64..50, q in 1i64..20) {
        let c = CherednikParameter::new(p, q).unwrap();
        prop_assert_eq!(c.to_string().parse::<CherednikParameter>().unwrap(), c);
    }

    #[test]
    fn count_depends_only_on_denominator(n in 2usize..10, m in 2usize..10, r1 in 1i64..40, r2 in 1i64..40) {
        prop_assume!(m <= n);
        prop_assume!(common::gcd(r1, m as i64) == 1 && common::gcd(r2, m as i64) == 1);
        let a = count_simples(n, CherednikParameter::new(r1, m as i64).unwrap()).unwrap();
        let b = count_simples(n, CherednikParameter::new(r2, m as i64).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }
}

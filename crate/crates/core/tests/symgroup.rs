mod common;

use hc_core::partitions::enumerate_partitions;
use hc_core::symgroup::{branching_multiplicity, dim_irrep, lr_coefficient, restrict_standard_k0, YoungSubgroup};
use hc_core::Partition;
use num_bigint::BigUint;
use proptest::prelude::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        if first == n {
            out.push(vec![n]);
        }
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn hook_lengths_match_characters_at_the_identity() {
    for n in 0..=9 {
        for lambda in enumerate_partitions(n) {
            let identity = vec![1; n];
            let chi = common::character(lambda.parts(), &identity);
            assert_eq!(dim_irrep(&lambda), BigUint::from(chi as u64), "{lambda:?}");
        }
    }
}

#[test]
fn sum_of_squared_dimensions_is_the_group_order() {
    for n in 0..=10 {
        let total: BigUint = enumerate_partitions(n).iter().map(|l| dim_irrep(l).pow(2)).sum();
        assert_eq!(total, BigUint::from(common::factorial(n) as u64));
    }
}

#[test]
fn known_lr_coefficients() {
    assert_eq!(lr_coefficient(&p("2,1"), &p("1"), &p("1,1")), 1);
    assert_eq!(lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1")), 2);
    assert_eq!(lr_coefficient(&p("4,2"), &p("2,1"), &p("2,1")), 1);
    assert_eq!(lr_coefficient(&p("3,3"), &p("2,1"), &p("2,1")), 1);
    assert_eq!(lr_coefficient(&p("2,2"), &p("2"), &p("1,1")), 0);
}

#[test]
fn branching_matches_character_inner_products() {
    for n in 1..=7 {
        for blocks in compositions(n) {
            let subgroup = YoungSubgroup::new(blocks.clone()).unwrap();
            for lambda in enumerate_partitions(n) {
                let k0 = restrict_standard_k0(&lambda, &subgroup).unwrap();
                let mut taus_list: Vec<Vec<Partition>> = vec![vec![]];
                for &b in &blocks {
                    taus_list = taus_list
                        .into_iter()
                        .flat_map(|t| {
                            enumerate_partitions(b).into_iter().map(move |tau| {
                                let mut t = t.clone();
                                t.push(tau);
                                t
                            })
                        })
                        .collect();
                }
                for taus in taus_list {
                    let raw: Vec<Vec<usize>> = taus.iter().map(|t| t.parts().to_vec()).collect();
                    let expected = common::branching_by_characters(lambda.parts(), &blocks, &raw);
                    assert_eq!(k0.get(&taus) as i64, expected, "{lambda:?} {blocks:?} {taus:?}");
                    assert_eq!(branching_multiplicity(&lambda, &subgroup, &taus).unwrap() as i64, expected);
                }
            }
        }
    }
}

#[test]
fn trivial_restricts_to_trivial() {
    for n in 1..=10 {
        for blocks in compositions(n) {
            let subgroup = YoungSubgroup::new(blocks.clone()).unwrap();
            let k0 = restrict_standard_k0(&Partition::row(n), &subgroup).unwrap();
            let expected: Vec<Partition> = blocks.iter().map(|&b| Partition::row(b)).collect();
            assert_eq!(k0.len(), 1);
            assert_eq!(k0.get(&expected), 1);
        }
    }
}

#[test]
fn shape_and_size_errors() {
    assert!(YoungSubgroup::new(vec![2, 0]).is_err());
    let g = YoungSubgroup::new(vec![2, 2]).unwrap();
    assert!(restrict_standard_k0(&p("2,1"), &g).is_err());
    assert!(branching_multiplicity(&p("3,1"), &g, &[p("2")]).is_err());
    assert!(branching_multiplicity(&p("3,1"), &g, &[p("2"), p("1")]).is_err());
}

fn lambda_and_blocks() -> impl Strategy<Value = (Partition, Vec<usize>)> {
    (1usize..=10).prop_flat_map(|n| {
        let parts = enumerate_partitions(n);
        let comps = compositions(n);
        (prop::sample::select(parts), prop::sample::select(comps))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dimension_count_identity((lambda, blocks) in lambda_and_blocks()) {
        let subgroup = YoungSubgroup::new(blocks).unwrap();
        let k0 = restrict_standard_k0(&lambda, &subgroup).unwrap();
        let total: BigUint = k0
            .iter()
            .map(|(taus, &mult)| taus.iter().map(dim_irrep).product::<BigUint>() * BigUint::from(mult))
            .sum();
        prop_assert_eq!(total, dim_irrep(&lambda));
    }

    #[test]
    fn lr_is_symmetric((lambda, blocks) in lambda_and_blocks()) {
        prop_assume!(blocks.len() >= 2);
        let a = blocks[0];
        let b = lambda.size() - a;
        for mu in enumerate_partitions(a) {
            for nu in enumerate_partitions(b) {
                prop_assert_eq!(lr_coefficient(&lambda, &mu, &nu), lr_coefficient(&lambda, &nu, &mu));
                prop_assert_eq!(
                    lr_coefficient(&lambda, &mu, &nu),
                    lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate())
                );
            }
        }
    }
}

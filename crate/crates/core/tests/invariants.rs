mod common;

use kostant::weyl::element_from_word;
use kostant::{
    alternation_set, enumerate_group, exhaustive_alternation_set, group_order, partition_genfunc,
    partition_tree_count, RootSystem, Weight,
};
use proptest::prelude::*;

use common::{all_types, weight};

fn rs(name: &str) -> RootSystem {
    RootSystem::from_name(name).unwrap()
}

fn type_and_xi(max_coeff: u32) -> impl Strategy<Value = (String, Vec<u32>)> {
    prop::sample::select(all_types(5)).prop_flat_map(move |name| {
        let r = rs(&name).rank();
        (Just(name), prop::collection::vec(0..=max_coeff, r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tree_and_genfunc_agree((name, xi) in type_and_xi(4)) {
        let rs = rs(&name);
        let w = weight(&xi);
        prop_assert_eq!(partition_tree_count(&rs, &w), partition_genfunc(&rs, &w));
    }

    #[test]
    fn top_coefficient_is_one((name, xi) in type_and_xi(5)) {
        let p = partition_genfunc(&rs(&name), &weight(&xi));
        let h: u32 = xi.iter().sum();
        prop_assert_eq!(p.degree(), Some(h as usize));
        prop_assert_eq!(p.coeff(h as usize), 1);
    }

    #[test]
    fn linear_coefficient_detects_roots((name, xi) in type_and_xi(3)) {
        let rs = rs(&name);
        let w = weight(&xi);
        let is_root = rs.positive_roots().contains(&w);
        prop_assert_eq!(partition_genfunc(&rs, &w).coeff(1) == 1, is_root);
    }

    #[test]
    fn negative_or_fractional_weights_have_no_partitions(
        (name, xi) in type_and_xi(3),
        pos in 0usize..8,
    ) {
        let rs = rs(&name);
        let mut coords: Vec<i64> = xi.iter().map(|&c| i64::from(c)).collect();
        let k = pos % coords.len();
        coords[k] = -1 - coords[k];
        let w = Weight::from_ints(coords);
        prop_assert!(partition_genfunc(&rs, &w).is_zero());
        prop_assert!(partition_tree_count(&rs, &w).is_zero());
        let half = weight(&xi).scale(num_rational::Rational64::new(1, 2));
        if !half.is_nonnegative_integral() {
            prop_assert!(partition_genfunc(&rs, &half).is_zero());
        }
    }

    #[test]
    fn words_rebuild_their_elements(name in prop::sample::select(vec!["B3", "G2", "A4", "C3"]), seed in any::<u64>()) {
        let rs = rs(name);
        let group = enumerate_group(&rs, u128::MAX).unwrap();
        let sigma = &group[(seed % group.len() as u64) as usize];
        let rebuilt = element_from_word(&rs, sigma.word()).unwrap();
        prop_assert_eq!(rebuilt.matrix(), sigma.matrix());
        prop_assert_eq!(rebuilt.word(), sigma.word());
    }
}

#[test]
fn group_orders_up_to_rank_six() {
    for name in all_types(6) {
        let rs = rs(&name);
        let group = enumerate_group(&rs, u128::MAX).unwrap();
        assert_eq!(group.len() as u128, group_order(rs.lie_type()), "{name}");
        assert!(
            group.windows(2).all(|w| w[0].length() <= w[1].length()),
            "{name}"
        );
        let longest = group.last().unwrap();
        assert_eq!(longest.length(), rs.positive_roots().len(), "{name}");
    }
}

#[test]
#[ignore = "enumerates all 2903040 elements of W(E7)"]
fn e7_group_order() {
    let rs = rs("E7");
    assert_eq!(enumerate_group(&rs, u128::MAX).unwrap().len(), 2_903_040);
}

#[test]
fn adjoint_alternation_sets_match_exhaustive_filter() {
    for name in all_types(6) {
        let rs = rs(&name);
        let lambda = rs.highest_root().clone();
        let mu = Weight::zero(rs.rank());
        let fast = alternation_set(&rs, &lambda, &mu).unwrap();
        let slow = exhaustive_alternation_set(&rs, &lambda, &mu, u128::MAX).unwrap();
        let a: Vec<_> = fast
            .iter()
            .map(|r| (r.element.matrix().to_vec(), r.xi.clone()))
            .collect();
        let b: Vec<_> = slow
            .iter()
            .map(|r| (r.element.matrix().to_vec(), r.xi.clone()))
            .collect();
        assert_eq!(a, b, "{name}");
    }
}

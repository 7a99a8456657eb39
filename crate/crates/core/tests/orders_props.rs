mod common;

use ordex::audit::{compute_s, pair_f_sum};
use ordex::orders::{
    common_triple_same_order, cyclic_family_to_linear, discordant_pairs, f_pair,
    intersection_reverse_witness, is_cyclic_intersection_reverse, is_intersection_reverse,
    two_chain_decomposition, CyclicFamily, CyclicOrder, LinearOrder, OrderFamily, Symbol,
};
use proptest::prelude::*;

fn order(universe: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    let all: Vec<u32> = (0..universe).collect();
    proptest::sample::subsequence(all, 0..=max_len.min(universe as usize)).prop_shuffle()
}

fn order_pair() -> impl Strategy<Value = (Vec<u32>, Vec<u32>)> {
    (1u32..=10).prop_flat_map(|u| (order(u, 10), order(u, 10)))
}

fn family() -> impl Strategy<Value = (u32, Vec<Vec<u32>>)> {
    (1u32..=9).prop_flat_map(|u| (Just(u), proptest::collection::vec(order(u, 8), 0..=6)))
}

fn lin(ids: &[u32]) -> LinearOrder {
    LinearOrder::from_ids(ids.iter().copied()).unwrap()
}

proptest! {
    #[test]
    fn f_pair_matches_definition((x, y) in order_pair(), a in 0u32..10, b in 0u32..10) {
        prop_assume!(a != b);
        let got = f_pair(&lin(&x), &lin(&y), Symbol(a), Symbol(b)).unwrap() as i64;
        prop_assert_eq!(got, common::f(&x, a, b) * common::f(&y, a, b));
    }

    #[test]
    fn int_rev_matches_oracle((x, y) in order_pair()) {
        let (lx, ly) = (lin(&x), lin(&y));
        let expected = common::int_rev_naive(&x, &y);
        prop_assert_eq!(is_intersection_reverse(&lx, &ly), expected);
        if let Some((a, b)) = intersection_reverse_witness(&lx, &ly) {
            prop_assert_eq!(common::f(&x, a.0, b.0) * common::f(&y, a.0, b.0), 1);
        }
    }

    #[test]
    fn int_rev_is_symmetric_and_survives_reversal((x, y) in order_pair()) {
        let (lx, ly) = (lin(&x), lin(&y));
        prop_assert_eq!(is_intersection_reverse(&lx, &ly), is_intersection_reverse(&ly, &lx));
        prop_assert_eq!(
            is_intersection_reverse(&lx, &ly),
            is_intersection_reverse(&lx.reversed(), &ly.reversed())
        );
    }

    #[test]
    fn triple_detection_matches_oracle((x, y) in order_pair()) {
        let found = common_triple_same_order(&lin(&x), &lin(&y));
        prop_assert_eq!(found.is_some(), common::same_order_triple_naive(&x, &y));
        if let Some((a, b, c)) = found {
            for (p, q) in [(a, b), (b, c)] {
                prop_assert_eq!(common::f(&x, p.0, q.0), 1);
                prop_assert_eq!(common::f(&y, p.0, q.0), 1);
            }
        }
    }

    #[test]
    fn two_chain_exists_iff_two_coloring((x, y) in order_pair()) {
        let (lx, ly) = (lin(&x), lin(&y));
        let got = two_chain_decomposition(&lx, &ly);
        prop_assert_eq!(got.is_ok(), common::two_coloring_exists(&x, &y));
        if let Ok(d) = got {
            prop_assert!(d.is_valid_for(&lx, &ly));
        }
    }

    #[test]
    fn pair_sum_formula((x, y) in order_pair()) {
        let (lx, ly) = (lin(&x), lin(&y));
        prop_assert_eq!(pair_f_sum(&lx, &ly), common::f_sum_naive(&x, &y, 10));
        let k = common::common(&x, &y).len() as u64;
        prop_assert!(discordant_pairs(&lx, &ly) <= k * k.saturating_sub(1) / 2);
    }

    #[test]
    fn s_matches_quadruple_loop((u, orders) in family()) {
        let fam = OrderFamily::from_ids(u as usize, orders.clone()).unwrap();
        prop_assert_eq!(compute_s(&fam), common::s_quadruple_loop(&orders, u));
    }

    #[test]
    fn validity_matches_oracle((u, orders) in family()) {
        let fam = OrderFamily::from_ids(u as usize, orders.clone()).unwrap();
        prop_assert_eq!(fam.is_valid(), common::is_valid_naive(&orders));
        prop_assert_eq!(fam.validate().is_empty(), fam.is_valid());
    }

    #[test]
    fn halves_are_ceil_and_floor(x in order(12, 12)) {
        let split = lin(&x).split();
        let (h0, h1) = common::halves(&x);
        prop_assert_eq!(split.half(0).ids(), h0);
        prop_assert_eq!(split.half(1).ids(), h1);
        prop_assert_eq!(split.concat().ids(), x);
    }

    #[test]
    fn cyclic_int_rev_matches_oracle((x, y) in order_pair()) {
        let cx = CyclicOrder::from_ids(x.iter().copied()).unwrap();
        let cy = CyclicOrder::from_ids(y.iter().copied()).unwrap();
        let expected = common::cyclic_int_rev_naive(&x, &y);
        prop_assert_eq!(is_cyclic_intersection_reverse(&cx, &cy), expected);
        if expected {
            // any linearizations of a cyclically reversed pair share no same-order triple
            prop_assert!(!common::same_order_triple_naive(&x, &y));
            let fam = CyclicFamily::new(10, vec![cx, cy]).unwrap();
            prop_assert!(cyclic_family_to_linear(&fam).is_valid());
        }
    }

    #[test]
    fn canonical_linearization_is_rotation_invariant(x in order(10, 10), r in 0usize..10) {
        prop_assume!(!x.is_empty());
        let mut y = x.clone();
        y.rotate_left(r % x.len());
        let cx = CyclicOrder::from_ids(x.iter().copied()).unwrap();
        let cy = CyclicOrder::from_ids(y).unwrap();
        prop_assert_eq!(cx.canonical_linear(), cy.canonical_linear());
    }
}

#[test]
fn duplicates_are_rejected() {
    assert!(LinearOrder::from_ids([1, 2, 1]).is_err());
    assert!(OrderFamily::from_ids(2, vec![vec![0, 5]]).is_err());
}

mod common;

use std::collections::HashMap;

use num_rational::Ratio;
use ordex::audit::{
    check_disjointness_claim, check_display_one, check_f_bounds, check_gain_bound,
    check_s_lower_bound, compute_s, full_audit, intersection_sum, sab_identities, CheckStatus,
};
use ordex::constructions::{random_valid_family, FamilySeedSpec};
use ordex::io::read_family;
use ordex::orders::OrderFamily;
use proptest::prelude::*;

use common::{common as inter, f_sum_naive, halves, int_rev_naive};

fn valid_family(seed: u64, n: usize, universe: usize, max_len: usize) -> OrderFamily {
    random_valid_family(&FamilySeedSpec {
        n,
        universe,
        min_len: 1,
        max_len,
        seed,
    })
    .unwrap()
}

/// Every per-pair quantity recomputed from the raw sequences.
struct Naive {
    s: i64,
    sum_sq: i64,
    f_bound_violations: usize,
    gain_violations: usize,
    disjoint_violations: usize,
    intersection: i64,
    degree_form: i64,
    cross_product: i64,
    sab_choose: i64,
    sab_total: i64,
    half_product: i64,
}

fn naive(orders: &[Vec<u32>], universe: u32) -> Naive {
    let split: Vec<_> = orders.iter().map(|o| halves(o)).collect();
    let mut out = Naive {
        s: common::s_quadruple_loop(orders, universe),
        sum_sq: orders.iter().map(|o| (o.len() as i64).pow(2)).sum(),
        f_bound_violations: 0,
        gain_violations: 0,
        disjoint_violations: 0,
        intersection: 0,
        degree_form: 0,
        cross_product: 0,
        sab_choose: 0,
        sab_total: 0,
        half_product: 0,
    };
    for i in 0..orders.len() {
        for j in 0..orders.len() {
            if i == j {
                continue;
            }
            out.intersection += inter(&orders[i], &orders[j]).len() as i64;
            let h = [(&split[i].0, &split[j].0), (&split[i].1, &split[j].1)];
            let k: Vec<i64> = h.iter().map(|(x, y)| inter(x, y).len() as i64).collect();
            let rev: Vec<bool> = h.iter().map(|(x, y)| int_rev_naive(x, y)).collect();
            for e in 0..2 {
                let fs = f_sum_naive(h[e].0, h[e].1, universe);
                if fs > k[e] || (rev[e] && fs != k[e] - k[e] * k[e]) {
                    out.f_bound_violations += 1;
                }
                if !rev[e] && k[1 - e] != 0 {
                    out.disjoint_violations += 1;
                }
            }
            let gain: i64 = (0..2).filter(|&e| rev[e]).map(|e| k[e] * k[e]).sum();
            if gain < 2 * k[0] * k[1] {
                out.gain_violations += 1;
            }
            out.cross_product += k[0] * k[1];
        }
    }
    for a in 0..universe {
        let d = orders.iter().filter(|o| o.contains(&a)).count() as i64;
        out.degree_form += d * (d - 1);
    }
    let mut sab: HashMap<(u32, u32), i64> = HashMap::new();
    for (h0, h1) in &split {
        out.half_product += (h0.len() * h1.len()) as i64;
        for &a in h0 {
            for &b in h1 {
                *sab.entry((a, b)).or_default() += 1;
            }
        }
    }
    for &s in sab.values() {
        out.sab_total += s;
        out.sab_choose += s * (s - 1);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn audit_matches_naive_recomputation(
        seed in any::<u64>(),
        n in 1usize..=10,
        universe in 1usize..=10,
        max_len in 1usize..=8,
    ) {
        let fam = valid_family(seed, n, universe, max_len);
        let orders = fam.to_ids();
        let nv = naive(&orders, universe as u32);

        prop_assert_eq!(compute_s(&fam), nv.s);
        let lb = check_s_lower_bound(&fam);
        prop_assert_eq!(lb.doubled_s, 2 * nv.s);
        prop_assert_eq!(lb.neg_sum_squares, -nv.sum_sq);
        prop_assert!(2 * nv.s >= -nv.sum_sq);

        let fb = check_f_bounds(&fam).unwrap();
        prop_assert_eq!(fb.failures.len(), nv.f_bound_violations);
        prop_assert!(fb.passed());
        prop_assert!(check_gain_bound(&fam).unwrap().passed());
        prop_assert_eq!(nv.gain_violations, 0);
        prop_assert!(check_disjointness_claim(&fam).unwrap().passed());
        prop_assert_eq!(nv.disjoint_violations, 0);

        let is = intersection_sum(&fam);
        prop_assert_eq!(is.value, nv.intersection);
        prop_assert_eq!(is.degree_form, nv.degree_form);

        let sab = sab_identities(&fam);
        prop_assert_eq!(sab.cross_product_sum, nv.cross_product);
        prop_assert_eq!(sab.pair_choose_sum, nv.sab_choose);
        prop_assert_eq!(sab.s_total, nv.sab_total);
        prop_assert_eq!(sab.half_product_sum, nv.half_product);

        let d1 = check_display_one(&fam).unwrap();
        prop_assert_eq!(d1.s, nv.s);
        prop_assert!(d1.passed());

        prop_assert!(full_audit(&fam, Ratio::from_integer(2)).all_passed());
    }
}

#[test]
fn reversed_triple_by_hand() {
    // halves (0 1 | 2) and (2 1 | 0): first halves share {1}, second halves nothing
    let fam = OrderFamily::from_ids(3, vec![vec![0, 1, 2], vec![2, 1, 0]]).unwrap();
    assert_eq!(compute_s(&fam), 0);
    assert_eq!(intersection_sum(&fam).value, 6);
    let d1 = check_display_one(&fam).unwrap();
    // gain: both halves int-rev, |∩|² = 1 and 0, counted for (i,j) and (j,i)
    assert_eq!(d1.gain, 2);
    assert_eq!(d1.half_bound, 2 - 2);
    assert_eq!(d1.whole_bound, 6 - 2);
}

#[test]
fn invalid_family_is_refused_by_conditional_checks() {
    let fam = read_family(&common::fixture("families/same_order.json"))
        .unwrap()
        .to_linear()
        .unwrap();
    assert!(!fam.is_valid());
    assert!(check_f_bounds(&fam).is_err());
    assert!(check_gain_bound(&fam).is_err());
    let report = full_audit(&fam, Ratio::from_integer(2));
    assert_eq!(
        report.check("family_valid").unwrap().status,
        CheckStatus::Fail
    );
    assert_eq!(
        report.check("f_bounds").unwrap().status,
        CheckStatus::Skipped
    );
    // the unconditional checks still run
    assert_eq!(
        report.check("s_lower_bound").unwrap().status,
        CheckStatus::Pass
    );
}

#[test]
fn fixture_families_pass_the_audit() {
    for name in ["reversed", "cyclic", "random12", "polarity3", "polarity5"] {
        let fam = read_family(&common::fixture(&format!("families/{name}.json")))
            .unwrap()
            .to_linear()
            .unwrap();
        assert!(fam.is_valid(), "{name}");
        let nv = naive(&fam.to_ids(), fam.universe() as u32);
        assert_eq!(compute_s(&fam), nv.s, "{name}");
        let report = full_audit(&fam, Ratio::from_integer(2));
        assert!(report.all_passed(), "{name}: {:?}", report.checks);
    }
}

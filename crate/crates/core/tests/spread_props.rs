mod common;

use common::*;
use normality_core::invariants::{analytic_spread, growth_exponent, spread_of_product};
use normality_core::monomial::multi_power;
use normality_core::polyhedra::closure_generators;
use normality_core::MonomialIdeal;
use proptest::prelude::*;

/// Ideals generated in a single degree `k`.
fn arb_equigenerated(d: usize, k: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(
        prop::collection::vec(0..=k, d - 1)
            .prop_filter("fits", move |v| v.iter().sum::<u32>() <= k),
        1..=5,
    )
    .prop_map(move |heads| {
        let gens = heads
            .into_iter()
            .map(|mut v| {
                let rest = k - v.iter().sum::<u32>();
                v.push(rest);
                v
            })
            .collect();
        MonomialIdeal::from_exponents(d, gens).unwrap()
    })
}

fn permute(i: &MonomialIdeal, perm: &[usize]) -> MonomialIdeal {
    let gens = coords(i)
        .into_iter()
        .map(|g| perm.iter().map(|&p| g[p]).collect())
        .collect();
    MonomialIdeal::from_exponents(i.dim(), gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// For ideals generated in one degree all generators sit on the compact
    /// face cut out by the total degree, so the spread is the rank of the
    /// exponent matrix.
    #[test]
    fn equigenerated_spread_is_matrix_rank(i in arb_equigenerated(3, 4)) {
        let rows = coords(&i).into_iter().map(|g| g.into_iter().map(i128::from).collect()).collect();
        prop_assert_eq!(analytic_spread(&i).unwrap() as usize, rank_i128(rows));
    }

    /// In two variables only principal ideals lack a bounded edge.
    #[test]
    fn planar_spread(i in arb_ideal(2, 4, 6)) {
        let expected = if i.len() == 1 { 1 } else { 2 };
        prop_assert_eq!(analytic_spread(&i).unwrap(), expected);
    }

    #[test]
    fn spread_is_bounded(i in arb_ideal(3, 4, 4)) {
        let l = analytic_spread(&i).unwrap() as usize;
        prop_assert!(l >= 1 && l <= 3.min(i.len()));
    }

    #[test]
    fn spread_ignores_closure_and_powers(i in arb_ideal(3, 3, 4)) {
        let l = analytic_spread(&i).unwrap();
        let bar = closure_generators(std::slice::from_ref(&i), &mi(&[1])).unwrap();
        prop_assert_eq!(analytic_spread(&bar).unwrap(), l);
        let sq = multi_power(std::slice::from_ref(&i), &mi(&[2])).unwrap();
        prop_assert_eq!(analytic_spread(&sq).unwrap(), l);
    }

    #[test]
    fn spread_ignores_variable_order(i in arb_ideal(3, 4, 4), perm in Just(vec![0usize, 1, 2]).prop_shuffle()) {
        prop_assert_eq!(analytic_spread(&i).unwrap(), analytic_spread(&permute(&i, &perm)).unwrap());
    }

    #[test]
    fn product_spread_ignores_ideal_order(inst in arb_instance(3, 2)) {
        let mut rev = inst.clone();
        rev.reverse();
        prop_assert_eq!(spread_of_product(&inst).unwrap().lambda, spread_of_product(&rev).unwrap().lambda);
    }
}

#[test]
fn growth_agrees_on_simple_families() {
    for (i, l) in [
        (ideal(2, &[&[1, 0]]), 1),
        (ideal(2, &[&[1, 0], &[0, 1]]), 2),
        (ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3),
        (ideal(3, &[&[2, 0, 0], &[0, 2, 0]]), 2),
    ] {
        assert_eq!(analytic_spread(&i).unwrap(), l);
        assert_eq!(growth_exponent(&i, 8).unwrap(), l);
    }
}

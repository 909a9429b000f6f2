use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;
use rmary_core::series::enumerate_partitions;
use rmary_core::{
    brute_force_count, check_s_identity, count_restricted, divide_by_one_minus_qk, lemma22_check,
    restricted_series, s_table, valuation, PartitionSpec, SMonomial, TruncatedSeries, Valuation,
};

fn arb_monomial(max_u: u32, max_exp: u32) -> impl Strategy<Value = SMonomial> {
    let pairs: Vec<(u32, u32)> = (1..=max_u)
        .flat_map(|u| (1..=u).map(move |v| (u, v)))
        .collect();
    prop::collection::vec((prop::sample::select(pairs), 1..=max_exp), 0..5)
        .prop_map(|terms| SMonomial::from_exponents(terms).unwrap())
}

fn arb_series(trunc: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-1000i64..1000, trunc).prop_map(|v| {
        TruncatedSeries::from_coeffs(v.into_iter().map(BigInt::from).collect()).unwrap()
    })
}

proptest! {
    #[test]
    fn truncation_is_a_prefix(m in 2u32..8, t1 in 1usize..200, extra in 1usize..200) {
        let short = restricted_series(m, t1).unwrap();
        let long = restricted_series(m, t1 + extra).unwrap();
        prop_assert_eq!(short, long.prefix(t1).unwrap());
    }

    #[test]
    fn counts_are_positive(m in 2u32..10, n in 0usize..500) {
        let c = count_restricted(PartitionSpec::new(m, n).unwrap());
        prop_assert!(c >= BigInt::one());
    }

    #[test]
    fn divide_then_multiply_is_identity(s in arb_series(40), k in 1usize..50) {
        let mut t = divide_by_one_minus_qk(&s, k).unwrap();
        t.mul_one_minus_qk_in_place(k).unwrap();
        prop_assert_eq!(t, s);
    }

    #[test]
    fn literal_enumeration_agrees_with_dp(m in 2u32..7, n in 0usize..=40) {
        let spec = PartitionSpec::new(m, n).unwrap();
        let listed = enumerate_partitions(spec).unwrap().len();
        prop_assert_eq!(BigInt::from(listed), brute_force_count(spec).unwrap());
    }

    #[test]
    fn valuation_is_additive(p in arb_monomial(8, 5), q in arb_monomial(8, 5)) {
        prop_assert_eq!(valuation(&(&p * &q)), valuation(&p) + valuation(&q));
    }

    #[test]
    fn lemma22_holds(p in arb_monomial(6, 4), m in 2u32..=9) {
        let ell = valuation(&p).int_part - 1;
        prop_assert!(lemma22_check(&p, m, ell).unwrap(), "{} at m={}", p, m);
    }

    #[test]
    fn s_identity_far_from_construction(m in 2u32..=10, k in 0u64..1_000_000) {
        let table = s_table(m, 12).unwrap();
        prop_assert!(check_s_identity(&table, k));
    }
}

#[test]
fn dp_oracle_matches_series_on_a_grid() {
    for m in 2..=6 {
        let series = restricted_series(m, 300).unwrap();
        for n in 0..300 {
            let dp = brute_force_count(PartitionSpec::new(m, n).unwrap()).unwrap();
            assert_eq!(&dp, series.coeff(n).unwrap(), "m={m} n={n}");
        }
    }
}

#[test]
fn counts_are_nondecreasing() {
    // Appending a part 1 maps partitions of n injectively into those of n+1.
    for m in 2..=5 {
        let s = restricted_series(m, 2000).unwrap();
        assert!(s.coeffs().windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn large_counts_exceed_machine_words() {
    let c = count_restricted(PartitionSpec::new(2, 200_000).unwrap());
    assert!(c.bits() > 64, "c_2(200000) has only {} bits", c.bits());
}

#[test]
fn valuation_of_empty_monomial() {
    assert_eq!(valuation(&SMonomial::one()), Valuation::new(0, 0));
    assert!(lemma22_check(&SMonomial::one(), 4, -1).unwrap());
}

use num_bigint::BigInt;
use proptest::prelude::*;
use regbound::analysis::{analyze_ideal, Options};
use regbound::combinat::{binomial, macaulay_bound, macaulay_rep};
use regbound::families::{
    is_strongly_stable, lexify_series, stable_regularity, strongly_stable_closure,
};
use regbound::gotzmann::{coefficients_from_b, decompose};
use regbound::monomials::{MonomialIdeal, PivotStrategy};
use regbound::polyseries::{hilbert_coefficients, hilbert_polynomial, reduce, series_coefficient};

fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=4, n), 1..=5).prop_filter_map(
            "positive degree",
            move |gens| {
                let gens: Vec<Vec<u32>> = gens
                    .into_iter()
                    .filter(|g| g.iter().any(|&e| e > 0))
                    .collect();
                if gens.is_empty() {
                    return None;
                }
                MonomialIdeal::from_exponents(n, &gens).ok()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_counts_standard_monomials(ideal in ideal_strategy()) {
        let hs = ideal.hilbert_series();
        for t in 0..=8u32 {
            prop_assert_eq!(series_coefficient(&hs, u64::from(t)), ideal.count_standard_monomials(t));
        }
    }

    #[test]
    fn pivot_choice_is_irrelevant(ideal in ideal_strategy()) {
        prop_assert_eq!(
            ideal.numerator_with(PivotStrategy::MostFrequentMedian),
            ideal.numerator_with(PivotStrategy::FirstSharedLinear)
        );
    }

    #[test]
    fn polynomial_agrees_past_postulation(ideal in ideal_strategy()) {
        let rs = reduce(&ideal.hilbert_series()).unwrap();
        prop_assume!(rs.dim >= 1);
        let p = hilbert_polynomial(&rs).unwrap();
        let post = regbound::polyseries::postulation_number(&rs);
        for t in (post + 1).max(0)..post.max(0) + 6 {
            let value = p.eval(&BigInt::from(t));
            prop_assert!(value.is_integer());
            prop_assert_eq!(value.to_integer(), rs.coefficient(t as u64));
        }
        if post >= 0 {
            prop_assert_ne!(p.eval(&BigInt::from(post)).to_integer(), rs.coefficient(post as u64));
        }
    }

    #[test]
    fn gotzmann_inverts(ideal in ideal_strategy()) {
        let rs = reduce(&ideal.hilbert_series()).unwrap();
        prop_assume!(rs.dim >= 1);
        let e = hilbert_coefficients(&rs).unwrap();
        let g = decompose(&e).unwrap();
        prop_assert_eq!(coefficients_from_b(g.b()), e.e.clone());
        prop_assert_eq!(g.polynomial(), hilbert_polynomial(&rs).unwrap());
    }

    #[test]
    fn every_verdict_holds(ideal in ideal_strategy()) {
        prop_assume!(ideal.dimension().unwrap() >= 1);
        let a = analyze_ideal(&ideal, &Options::default()).unwrap();
        prop_assert!(a.all_pass(), "{:?}", a.failures().collect::<Vec<_>>());
    }

    #[test]
    fn closure_is_stable_and_lex_matches(ideal in ideal_strategy()) {
        let closed = strongly_stable_closure(&ideal);
        prop_assert!(is_strongly_stable(&closed));
        prop_assert!(ideal.generators().iter().all(|g| closed.contains(g)));
        let oracle = stable_regularity(&closed).unwrap();
        prop_assert!(oracle.reg1 <= oracle.reg);
        let hs = closed.hilbert_series();
        let lex = lexify_series(&hs, None).unwrap();
        prop_assert!(is_strongly_stable(&lex));
        for t in 0..=10u32 {
            prop_assert_eq!(lex.count_standard_monomials(t), series_coefficient(&hs, u64::from(t)));
        }
    }

    #[test]
    fn macaulay_round_trip(h in 1u64..200_000, m in 1u32..8) {
        let rep = macaulay_rep(h, m);
        prop_assert_eq!(rep.value(), BigInt::from(h));
        let bound = macaulay_bound(h, m);
        let terms = rep.terms();
        prop_assert!(terms.windows(2).all(|w| w[0].1 > w[1].1 && w[0].0 == w[1].0 + 1));
        prop_assert!(terms.iter().all(|&(i, a)| a >= u64::from(i)));
        let direct: BigInt = terms.iter().map(|&(i, a)| binomial(a + 1, i + 1)).sum();
        prop_assert_eq!(bound, direct);
    }
}

//! Randomized end-to-end property: any admissible construction spec yields
//! a pair that survives the whole pipeline — verification, Krawtchouk
//! detection, split data, form, companion isomorphisms, Drinfel'd checks,
//! and the cubic commutator identities.

use num::One;
use proptest::prelude::*;

use tdpair::constructions::{onsager_tensor, ConstructionSpec};
use tdpair::drinfeld::drinfeld_checks;
use tdpair::forms::{four_iso_report, invariant_form};
use tdpair::linalg::scalar::{frac, Scalar};
use tdpair::pair::parameter_array;

fn parameter_pool() -> Vec<Scalar> {
    vec![
        frac(2, 1),
        frac(3, 1),
        frac(5, 1),
        frac(1, 2),
        frac(-2, 1),
        frac(2, 3),
        frac(-3, 5),
    ]
}

fn admissible_spec() -> impl Strategy<Value = ConstructionSpec> {
    // Up to two factors with degrees 1..=2 and parameters drawn from a
    // fixed pool; combinations violating the distinctness constraints are
    // filtered out.
    let factor = (1usize..=2, 0usize..7);
    proptest::collection::vec(factor, 1..=2).prop_filter_map(
        "parameters must be admissible",
        |raw| {
            let pool = parameter_pool();
            let factors: Vec<(usize, Scalar)> = raw
                .into_iter()
                .map(|(d, k)| (d, pool[k].clone()))
                .collect();
            ConstructionSpec::new(factors).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn generated_pairs_survive_the_whole_pipeline(spec in admissible_spec()) {
        let pair = onsager_tensor(&spec).expect("admissible spec constructs");
        prop_assert!(pair.verification().passes());
        prop_assert!(pair.is_krawtchouk());
        prop_assert_eq!(pair.diameter(), spec.diameter());
        prop_assert_eq!(pair.dim(), spec.total_dim());

        let pa = parameter_array(&pair).expect("rho_0 = 1 for generated pairs");
        prop_assert!(pa.zeta[0].is_one());

        let form = invariant_form(&pair).expect("form space is a line");
        prop_assert!(form.matrix().is_symmetric());
        prop_assert!(form.matrix().is_invertible());

        let four = four_iso_report(&pair).expect("companion isomorphisms certify");
        prop_assert!(four.to_negated.gamma.is_invertible());

        let drinfeld = drinfeld_checks(&pair, Some(&spec)).expect("krawtchouk pair");
        prop_assert!(drinfeld.constant_term_is_one);
        prop_assert!(drinfeld.nonzero_at_one);
        prop_assert_eq!(drinfeld.matches_factor_product, Some(true));

        let four_scalar = tdpair::linalg::scalar::int(4);
        for (x, y) in [(pair.a(), pair.astar()), (pair.astar(), pair.a())] {
            let inner = x.commutator(y);
            let triple = x.commutator(&x.commutator(&inner));
            prop_assert_eq!(triple, inner.scale(&four_scalar));
        }
    }
}

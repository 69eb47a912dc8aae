//! Randomised invariants of the character calculus, the invariant-ring
//! counts and the wire formats.

mod common;

use common::*;
use flopcalc_core::chars::{schur_dim, torus_weights};
use flopcalc_core::invariants::{
    invariant_dimension, subalgebra_dimension, GeneratorSet, Multidegree, PolyRingSpec,
    DEFAULT_BLOCK_LIMIT,
};
use flopcalc_core::resolution::{BundleTerm, GradedTermList};
use flopcalc_core::Weight;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: CASES, ..ProptestConfig::default() })]

    #[test]
    fn decompose_inverts_torus_weights(wt in (1usize..=4).prop_flat_map(|k| weight(k, -3, 3))) {
        check_round_trip(&wt)?;
    }

    #[test]
    fn tensor_is_commutative_and_associative(
        (a, b, c) in (1usize..=3).prop_flat_map(|k| (character(k), character(k), character(k)))
    ) {
        check_tensor(&a, &b, &c)?;
    }

    #[test]
    fn cauchy_matches_exterior_power(k in 1usize..=3, d in 1usize..=3, m in 0usize..=9) {
        check_cauchy(k, d, m.min(k * d))?;
    }

    #[test]
    fn schur_dim_counts_torus_weights(wt in (1usize..=4).prop_flat_map(|k| weight(k, -3, 3))) {
        prop_assert_eq!(torus_weights(&wt).cardinality(), schur_dim(&wt) as i64);
        prop_assert_eq!(schur_dim(&wt.dual()), schur_dim(&wt));
        prop_assert_eq!(wt.dual().dual(), wt);
    }

    #[test]
    fn weight_serde_round_trip(wt in (1usize..=4).prop_flat_map(|k| weight(k, -5, 5))) {
        let s = serde_json::to_string(&wt).unwrap();
        prop_assert_eq!(serde_json::from_str::<Weight>(&s).unwrap(), wt);
    }

    #[test]
    fn bundle_term_serde_round_trip(
        a in weight(2, -4, 4), b in weight(2, -4, 4), h in -5i32..=5, r in -9i32..=9
    ) {
        let t = BundleTerm::new(vec![a, b], h, r);
        let s = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<BundleTerm>(&s).unwrap(), t);
    }

    #[test]
    fn graded_list_serde_round_trip(list in graded_list()) {
        let s = serde_json::to_string(&list).unwrap();
        let back: GradedTermList = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(&back, &list);
        prop_assert_eq!(back.euler_character(), list.euler_character());
    }
}

fn multidegree(n: usize, max: u32) -> impl Strategy<Value = Multidegree> {
    (
        prop::collection::vec(0..=max, n),
        prop::collection::vec(0..=max, n),
        0..=max,
    )
        .prop_filter("bounded total degree", move |(dx, dy, dp)| {
            dx.iter().sum::<u32>() + dy.iter().sum::<u32>() + dp <= max
        })
        .prop_map(|(dx, dy, dp)| Multidegree { dx, dy, dp })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: CASES, ..ProptestConfig::default() })]

    #[test]
    fn invariant_dimension_is_symmetric(d in multidegree(2, 4)) {
        let ring = PolyRingSpec::new(2).unwrap();
        let dim = invariant_dimension(&ring, &d, DEFAULT_BLOCK_LIMIT).unwrap();
        let mut swapped = d.clone();
        swapped.dx.reverse();
        prop_assert_eq!(invariant_dimension(&ring, &swapped, DEFAULT_BLOCK_LIMIT).unwrap(), dim);
        swapped.dy.reverse();
        prop_assert_eq!(invariant_dimension(&ring, &swapped, DEFAULT_BLOCK_LIMIT).unwrap(), dim);
        let gens = GeneratorSet::standard(ring).without(&["tr p"]);
        prop_assert!(subalgebra_dimension(&gens, &d, DEFAULT_BLOCK_LIMIT).unwrap() <= dim);
    }
}

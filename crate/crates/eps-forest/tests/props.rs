//! A few randomized invariants, driven by proptest shrinking: when one fails,
//! the reported seed pins down a minimal forest.

use eps_forest::eps::{check_coassoc, check_compat, forest_coproduct, forest_coproduct_recursive, ForestAlgebra};
use eps_forest::forest::{Alphabets, Forest};
use eps_forest::randgen::RandomForestGen;
use eps_forest::textio::parse_forest;
use proptest::prelude::*;

fn forests() -> impl Strategy<Value = Forest> {
    (any::<u64>(), 0usize..=7).prop_map(|(seed, max)| {
        RandomForestGen::new(seed, max, &Alphabets::default_labels()).forest()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printing_then_parsing_is_identity(f in forests()) {
        let printed = f.to_string();
        prop_assert_eq!(parse_forest(&printed, &Alphabets::default_labels()).unwrap(), f);
    }

    #[test]
    fn concatenation_adds_vertices_and_breadth(f in forests(), g in forests()) {
        let fg = f.concat(&g);
        prop_assert_eq!(fg.vertex_count(), f.vertex_count() + g.vertex_count());
        prop_assert_eq!(fg.breadth(), f.breadth() + g.breadth());
    }

    #[test]
    fn biideal_count_matches_coproduct_terms(f in forests()) {
        // One coproduct term per proper biideal; terms never merge because
        // distinct biideals restrict to distinct pairs in the forest basis.
        prop_assert_eq!(forest_coproduct(&f).len(), f.proper_biideals().len());
    }

    #[test]
    fn recursive_coproduct_agrees(f in forests()) {
        prop_assert_eq!(forest_coproduct(&f), forest_coproduct_recursive(&f));
    }

    #[test]
    fn forest_bialgebra_laws(f in forests(), g in forests()) {
        prop_assert!(check_coassoc(&ForestAlgebra, &f).passed());
        prop_assert!(check_compat(&ForestAlgebra, &f, &g).passed());
    }
}

//! The weighted-infinitesimal coproduct on forests, computed two ways: the
//! combinatorial rule (one term per proper biideal, restriction on each side)
//! and the recursive rule (cocycle under grafting, derivation under
//! concatenation). The two must always agree; the recursive form is the
//! oracle the combinatorial implementation is tested against.
//!
//! Run with: cargo run --example coproduct

use eps_forest::eps::{forest_coproduct, forest_coproduct_recursive};
use eps_forest::forest::Alphabets;
use eps_forest::textio::parse_forest;

fn main() {
    let alphabets = Alphabets::default_labels();
    for s in ["1", "x", "a", "a(x)", "b a(x)", "w(b a(x))", "a(b g)"] {
        let f = parse_forest(s, &alphabets).unwrap();
        let combinatorial = forest_coproduct(&f);
        let recursive = forest_coproduct_recursive(&f);
        assert_eq!(combinatorial, recursive);
        println!("Δ({s}) = {combinatorial}");
    }

    // The terms come from the proper biideals: the prefixes of the canonical
    // vertex order. Restricting to a biideal keeps its vertices (reattaching
    // orphans to their nearest kept ancestor); the complement gives the other
    // tensor factor.
    let f = parse_forest("w(b a(x))", &alphabets).unwrap();
    println!("\nbiideals of {f} and the term each one contributes:");
    for ideal in f.proper_biideals() {
        let complement = f
            .vertices()
            .into_iter()
            .filter(|v| !ideal.contains(v))
            .collect();
        let left = f.restrict(&ideal).unwrap();
        let right = f.restrict(&complement).unwrap();
        let labels: Vec<String> = ideal
            .iter()
            .map(|v| f.decoration_at(v).unwrap().label.clone())
            .collect();
        println!("  {{{}}}  ->  ({left}) # ({right})", labels.join(", "));
    }
}

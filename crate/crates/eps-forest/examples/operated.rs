//! Forests are the free operated algebra on their alphabets: choosing, in any
//! target algebra, an image for each leaf label and a linear operator for each
//! operator label determines a unique structure-preserving evaluation map.
//! This example evaluates forests into several targets and shows the law
//! checks that certify (or reject) a candidate target.
//!
//! Run with: cargo run --example operated

use eps_forest::forest::Alphabets;
use eps_forest::operated::{
    broken_target, check_hopf_morphism_compat, check_operated_morphism, collapse_target,
    evaluate, identity_target, relabel_target,
};
use eps_forest::randgen::RandomForestGen;
use eps_forest::textio::parse_forest;
use std::collections::BTreeMap;

fn main() {
    let alphabets = Alphabets::default_labels();
    let f = parse_forest("w(b a(x))", &alphabets).unwrap();

    // The identity target sends each leaf to itself and each operator label
    // to grafting; evaluation reconstructs the forest.
    let id = identity_target(&alphabets);
    println!("identity target:  {f} ↦ {}", evaluate(&f, &id).unwrap());

    // Relabelling leaves is still an evaluation map.
    let map = BTreeMap::from([("x".to_string(), "y".to_string())]);
    let rel = relabel_target(&alphabets, &map);
    println!("relabel x→y:      {f} ↦ {}", evaluate(&f, &rel).unwrap());

    // Collapse: every operator acts as zero and every leaf maps to 1, so a
    // forest survives only if it has no internal vertices at all. This target
    // does not claim compatibility with the coproduct, so only the algebra
    // laws are checked for it.
    let col = collapse_target(&alphabets);
    println!("collapse:         {f} ↦ {}", evaluate(&f, &col).unwrap());
    let flat = parse_forest("x y b", &alphabets).unwrap();
    println!("collapse:         {flat} ↦ {}", evaluate(&flat, &col).unwrap());

    // The checks: multiplicativity, operator intertwining, and (when claimed)
    // coproduct compatibility, on a seeded sample.
    let mut gen = RandomForestGen::new(11, 5, &alphabets);
    let sample: Vec<_> = (0..50).map(|_| gen.forest()).collect();
    for (name, failure) in [
        ("identity", check_operated_morphism(&id, &sample).unwrap()),
        ("relabel", check_operated_morphism(&rel, &sample).unwrap()),
        ("collapse", check_operated_morphism(&col, &sample).unwrap()),
    ] {
        match failure {
            None => println!("{name}: all morphism laws hold on 50 samples"),
            Some(f) => println!("{name}: FAILED {} at {}", f.property, f.forest),
        }
    }

    // The evaluation map also commutes with the antipode for weight-0,
    // nilpotent targets.
    assert!(check_hopf_morphism_compat(&rel, &sample).unwrap().is_none());
    println!("relabel: commutes with the antipode on 50 samples");

    // A deliberately wrong target (each operator doubled) is caught, with the
    // offending forest as a witness.
    let failure = check_operated_morphism(&broken_target(&alphabets), &sample).unwrap().unwrap();
    println!("\nbroken target rejected: {} fails at {}", failure.property, failure.forest);
}

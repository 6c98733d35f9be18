//! The bundled instances of the weighted bialgebra interface beyond forests:
//! polynomials at an arbitrary weight, divided differences, path algebras of
//! quivers (non-unitary), undecorated forests at weight −1, and the trivial
//! coproduct.
//!
//! Run with: cargo run --example instances

use eps_forest::eps::{check_coassoc, check_compat, EpsBialgebra};
use eps_forest::instances::{
    divided_diff_instance, foissy_instance, poly_instance, quiver_instance, test_quiver,
    trivial_instance, FoissyAlgebra, Monomial, Word,
};
use eps_forest::lincomb::LinComb;
use eps_forest::rat::Rat;

fn main() {
    // Polynomials k[x]: one instance per weight λ, with Δ(1) = −λ(1 ⊗ 1).
    for lam in [Rat::zero(), Rat::one(), Rat::new(-3, 2)] {
        let p = poly_instance(lam.clone());
        println!("k[x] at weight {lam}:");
        println!("  Δ(1)   = {}", p.coproduct(&Monomial(0)));
        println!("  Δ(x^3) = {}", p.coproduct(&Monomial(3)));
        assert!(check_compat(&p, &Monomial(2), &Monomial(3)).passed());
    }

    // Divided differences: words in letters x1, x2, …; the coproduct splits
    // the first letter in all ways.
    let dd = divided_diff_instance();
    println!("\ndivided differences:");
    println!("  Δ(x3)    = {}", dd.coproduct(&Word::letter(3)));
    println!("  Δ(x2 x1) = {}", dd.coproduct(&Word(vec![2, 1])));
    assert!(check_coassoc(&dd, &Word(vec![2, 1])).passed());

    // Path algebra of a quiver. Non-unitary: there is no unit element, and
    // non-composable paths multiply to zero; the coproduct deletes one arrow.
    let q = quiver_instance(test_quiver()).unwrap();
    println!("\nquiver paths (vertices 1→2→3→4, loop l at 2):");
    let ab = q.spec.path(["a", "b"]).unwrap();
    println!("  unit element: {:?}", q.unit());
    println!("  Δ(a b)  = {}", q.coproduct(&ab));
    let e1 = q.spec.trivial("1").unwrap();
    let e3 = q.spec.trivial("3").unwrap();
    println!("  (a b)·e(3) = {}", q.product_lc(&LinComb::basis(ab.clone()), &LinComb::basis(e3.clone())));
    println!("  e(1)·(a b) = {}", q.product_lc(&LinComb::basis(e1), &LinComb::basis(ab.clone())));
    println!("  e(3)·(a b) = {}  (not composable)", q.product_lc(&LinComb::basis(e3), &LinComb::basis(ab)));
    assert!(check_compat(&q, &q.spec.path(["a"]).unwrap(), &q.spec.path(["l"]).unwrap()).passed());

    // Undecorated forests at weight −1: Δ(1) = 1 ⊗ 1, so the empty forest is
    // group-like; this instance is unitary but not nilpotent.
    let fo = foissy_instance();
    let ladder = FoissyAlgebra::graft(&FoissyAlgebra::bullet());
    println!("\nundecorated forests at weight −1:");
    println!("  Δ(1)    = {}", fo.coproduct(&eps_forest::forest::Forest::empty()));
    println!("  Δ(o(o)) = {}", fo.coproduct(&ladder));

    // And the degenerate end of the spectrum: Δ = 0.
    let tr = trivial_instance();
    println!("\ntrivial coproduct: Δ(x^5) = {}", tr.coproduct(&Monomial(5)));
}

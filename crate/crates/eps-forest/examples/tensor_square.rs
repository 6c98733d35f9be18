//! Lifting the coproduct to the tensor square A ⊗ A so that the
//! multiplication map m : A ⊗ A → A becomes a coalgebra morphism, and the
//! checks that certify this.
//!
//! Run with: cargo run --example tensor_square

use eps_forest::eps::{
    check_mult_coalgebra_morphism, check_tensor_square_coassoc, tensor_square_coproduct,
    ForestAlgebra,
};
use eps_forest::forest::Alphabets;
use eps_forest::instances::{poly_instance, quiver_instance, test_quiver, Monomial};
use eps_forest::rat::Rat;
use eps_forest::textio::parse_forest;

fn main() {
    let alphabets = Alphabets::default_labels();
    let alg = ForestAlgebra;
    let a = parse_forest("a(x)", &alphabets).unwrap();
    let b = parse_forest("b", &alphabets).unwrap();

    // The lifted coproduct on a ⊗ b mixes the two factors through the units.
    let delta = tensor_square_coproduct(&alg, &alg, &a, &b).unwrap();
    println!("Δ⊗(a(x) ⊗ b):");
    for (term, c) in delta.iter() {
        println!("  {c} * {term}");
    }

    // It is coassociative, and multiplication respects it.
    assert!(check_tensor_square_coassoc(&alg, &a, &b).unwrap().passed());
    assert!(check_mult_coalgebra_morphism(&alg, &a, &b).unwrap().passed());
    println!("coassociativity and the multiplication morphism hold at a(x) ⊗ b");

    // The same construction works at any weight, here λ = 3/2 on k[x].
    let p = poly_instance(Rat::new(3, 2));
    assert!(check_tensor_square_coassoc(&p, &Monomial(2), &Monomial(3)).unwrap().passed());
    assert!(check_mult_coalgebra_morphism(&p, &Monomial(2), &Monomial(3)).unwrap().passed());
    println!("…and at weight 3/2 on k[x], at x² ⊗ x³");

    // Non-unitary instances cannot form the lift; the error says why.
    let q = quiver_instance(test_quiver()).unwrap();
    let e1 = q.spec.trivial("1").unwrap();
    let err = tensor_square_coproduct(&q, &q, &e1, &e1).unwrap_err();
    println!("\nquiver paths are refused: {err}");
}

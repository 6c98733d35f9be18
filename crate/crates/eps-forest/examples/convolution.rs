//! Linear operators on the forest span: the derivation D = mΔ, convolution
//! products of operators, and the grafting cocycle identity that pins down
//! the coproduct.
//!
//! Run with: cargo run --example convolution

use eps_forest::antipode::apply_d;
use eps_forest::eps::{check_cocycle, ForestAlgebra};
use eps_forest::forest::{Alphabets, Decoration};
use eps_forest::linop::{circ, convolution_power, convolve, derivation_op, LinOp};
use eps_forest::textio::parse_lincomb;
use std::rc::Rc;

fn main() {
    let alphabets = Alphabets::default_labels();
    let alg = Rc::new(ForestAlgebra);
    let lc = |s: &str| parse_lincomb(s, &alphabets).unwrap();

    // D multiplies the two legs of the coproduct back together.
    let v = lc("w(b a(x))");
    println!("D({v}) = {}", apply_d(&*alg, &v));

    // As an operator, D can be composed and convolved. The convolution
    // f ∗ g = m(f ⊗ g)Δ of two copies of the identity is D itself.
    let id: LinOp<_> = LinOp::identity();
    let d = derivation_op(alg.clone());
    let idid = convolve(alg.clone(), &id, &id);
    let u = lc("b a(x)");
    assert_eq!(idid.apply(&u), d.apply(&u));
    println!("(id ∗ id)({u}) = D({u}) = {}", d.apply(&u));

    // Convolution powers of D vanish once the exponent passes the vertex
    // count — the local nilpotency behind the antipode series. The k-th
    // convolution power has k+1 factors.
    for k in 1..=4 {
        let dk = convolution_power(alg.clone(), &d, k);
        println!("D^(∗{k})({u}) = {}", dk.apply(&u));
    }

    // The circular convolution f ⊛ g = f ∗ g + f + g is the product in which
    // the antipode is the inverse of the identity.
    let zero: LinOp<_> = LinOp::zero();
    let circ_id_zero = circ(alg.clone(), &id, &zero);
    assert_eq!(circ_id_zero.apply(&u), id.apply(&u));
    println!("id ⊛ 0 = id (0 is the ⊛-unit)");

    // The cocycle identity: Δ(B⁺_ω(F)) = F ⊗ •_ω + Δ(F)·(1 ⊗ B⁺_ω applied),
    // checked for every operator label.
    for omega in alphabets.omega_labels() {
        let witness = check_cocycle(&Decoration::omega(omega), &v).unwrap();
        println!("cocycle under {omega} at {v}: passed = {}", witness.passed());
        assert!(witness.passed());
    }
}

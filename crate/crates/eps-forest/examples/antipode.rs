//! The exponential antipode S = −Σ (1/n!)(−D)ⁿ with D = mΔ, its inverse, the
//! circular-convolution axioms it satisfies, and the refusals for instances
//! where the series is not available.
//!
//! Run with: cargo run --example antipode

use eps_forest::antipode::{
    antipode, antipode_inverse, check_antipode_axioms, check_conv_nilpotency,
    divided_diff_antipode_closed, divided_diff_antipode_series,
};
use eps_forest::eps::ForestAlgebra;
use eps_forest::forest::Alphabets;
use eps_forest::instances::{foissy_instance, poly_instance, Monomial};
use eps_forest::lincomb::LinComb;
use eps_forest::rat::Rat;
use eps_forest::textio::parse_lincomb;
use std::rc::Rc;

fn main() {
    let alphabets = Alphabets::default_labels();
    let alg = ForestAlgebra;

    for s in ["1", "x", "a(x)", "b a(x)"] {
        let v = parse_lincomb(s, &alphabets).unwrap();
        let sv = antipode(&alg, &v).unwrap();
        println!("S({s}) = {sv}");
        // T undoes S and vice versa.
        assert_eq!(antipode_inverse(&alg, &sv).unwrap(), v);
    }
    let v = parse_lincomb("x", &alphabets).unwrap();
    println!("T(x) = {}", antipode_inverse(&alg, &v).unwrap());

    // The defining property: Σ S(u₍₁₎)u₍₂₎ + S(u) + u = 0, and its mirror.
    let u = parse_lincomb("w(b a(x))", &alphabets).unwrap();
    let (u, _) = u.iter().next().unwrap();
    let axioms = check_antipode_axioms(&alg, u).unwrap();
    println!("\ncircular-convolution axioms at {u}: passed = {}", axioms.passed());

    // The series terminates because D is locally nilpotent: both the
    // composition power D^{∘(n+1)} and the convolution power D^{∗(n+1)}
    // vanish once n reaches the vertex count.
    let n = u.vertex_count();
    println!(
        "nilpotency at {u} with bound {n}: {}",
        check_conv_nilpotency(Rc::new(ForestAlgebra), u, n)
    );

    // On the divided-differences algebra the antipode of a generator has a
    // closed form: a signed sum over strict compositions.
    println!();
    for n in 1..=3 {
        let closed = divided_diff_antipode_closed(n);
        assert_eq!(closed, divided_diff_antipode_series(n));
        println!("divided differences: S(x{n}) = {closed}");
    }

    // Refusals: a nonzero weight or a non-nilpotent instance means no
    // exponential antipode, and the library says so instead of looping.
    println!();
    let p = poly_instance(Rat::one());
    println!("weight 1 polynomials: {}", antipode(&p, &LinComb::basis(Monomial(1))).unwrap_err());
    let f = foissy_instance();
    let dot = eps_forest::instances::FoissyAlgebra::bullet();
    println!("weight −1 forests:    {}", antipode(&f, &LinComb::basis(dot)).unwrap_err());
}

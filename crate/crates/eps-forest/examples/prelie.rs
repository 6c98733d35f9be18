//! The pre-Lie product a ▷ b = Σ b₍₁₎ a b₍₂₎ induced by the coproduct, the
//! Lie bracket it generates, and the identities both satisfy.
//!
//! Run with: cargo run --example prelie

use eps_forest::eps::ForestAlgebra;
use eps_forest::forest::Alphabets;
use eps_forest::prelie::{bracket, check_jacobi, check_prelie_identity, prelie, prelie_forest};
use eps_forest::textio::{parse_forest, parse_lincomb};

fn main() {
    let alphabets = Alphabets::default_labels();
    let alg = ForestAlgebra;
    let lc = |s: &str| parse_lincomb(s, &alphabets).unwrap();

    let f1 = lc("x");
    let f2 = lc("a(b)");
    let f3 = lc("g w(y)");

    // ▷ inserts the left factor into every gap the coproduct opens up in the
    // right factor.
    println!("x ▷ a(b)        = {}", prelie(&alg, &f1, &f2));
    println!("a(b) ▷ x        = {}", prelie(&alg, &f2, &f1));
    println!("a(b) ▷ (g w(y)) = {}", prelie(&alg, &f2, &f3));

    // The bracket is the antisymmetrisation.
    println!("[x, a(b)]       = {}", bracket(&alg, &f1, &f2));

    // ▷ is not associative, but its associator is symmetric in the first two
    // arguments — the pre-Lie identity.
    let assoc = |a, b| prelie(&alg, a, &prelie(&alg, b, &f3)).sub(&prelie(&alg, &prelie(&alg, a, b), &f3));
    println!("\nassociator (x, a(b), g w(y))  = {}", assoc(&f1, &f2));
    println!("associator (a(b), x, g w(y))  = {}", assoc(&f2, &f1));
    assert!(check_prelie_identity(&alg, &f1, &f2, &f3).passed());
    assert!(check_jacobi(&alg, &f1, &f2, &f3).passed());
    println!("pre-Lie identity and Jacobi identity hold on this triple");

    // On forests there is also a direct biideal formula, bypassing the
    // generic coproduct route; the two agree.
    let a = parse_forest("b a(x)", &alphabets).unwrap();
    let b = parse_forest("w(y)", &alphabets).unwrap();
    let direct = prelie_forest(&a, &b);
    assert_eq!(direct, prelie(&alg, &lc("b a(x)"), &lc("w(y)")));
    println!("\n(b a(x)) ▷ w(y) = {direct}");
}

//! Building decorated planar rooted forests: leaves, grafting, concatenation,
//! and the structural invariants (breadth, depth, vertex count, planar order).
//!
//! Run with: cargo run --example forests

use eps_forest::forest::{graft, Alphabets, Decoration, Forest, Tree};

fn main() {
    let alphabets = Alphabets::default_labels();
    println!("leaf alphabet X = {{{}}}", alphabets.x_labels().collect::<Vec<_>>().join(", "));
    println!("operator alphabet Ω = {{{}}}", alphabets.omega_labels().collect::<Vec<_>>().join(", "));
    println!();

    // Single vertices. Leaves may carry either alphabet; internal vertices
    // only operator labels.
    let x = Forest::bullet(Decoration::x("x"));
    let b = Forest::bullet(Decoration::omega("b"));
    println!("bullets: {x} and {b}");

    // Grafting wraps a whole forest under a new operator-labelled root.
    let ax = Forest::single(graft(&Decoration::omega("a"), &x).unwrap());
    println!("graft of {x} under a: {ax}");

    // Concatenation is the (noncommutative) product; the empty forest is its unit.
    let f = b.concat(&ax);
    println!("concatenation: {f}");
    println!("with the unit: {}", Forest::empty().concat(&f));

    let big = Forest::single(graft(&Decoration::omega("w"), &f).unwrap());
    println!(
        "w({f}) has breadth {}, depth {}, {} vertices",
        big.breadth(),
        big.depth(),
        big.vertex_count()
    );

    // Each vertex is addressed by its path from the root; the canonical
    // traversal order puts the deepest-rightmost vertex first.
    println!("\nvertex order of {big} (decreasing):");
    for v in big.vertex_order() {
        println!("  {v}  = {}", big.decoration_at(&v).unwrap());
    }

    // Leaf labels from X may never sit above other vertices.
    let bad = Tree::new(Decoration::x("x"), vec![Tree::leaf(Decoration::x("y"))]);
    println!("\nputting x above y is rejected: {}", bad.unwrap_err());
}

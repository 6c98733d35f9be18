//! Reading and writing forests, linear combinations, and tensors: the text
//! grammar (with positioned parse errors) and the JSON schema (with
//! pointer-path errors).
//!
//! Run with: cargo run --example serialization

use eps_forest::forest::Alphabets;
use eps_forest::textio::{
    forest_from_json, forest_to_json, lincomb_to_json, parse_forest, parse_lincomb, parse_tensor,
    tensor_to_json,
};

fn main() {
    let alphabets = Alphabets::default_labels();

    // The text grammar: trees are label(children), juxtaposition is
    // concatenation, "1" is the empty forest.
    let f = parse_forest("w(b a(x)) y", &alphabets).unwrap();
    println!("forest:  {f}");

    // Linear combinations with rational coefficients, and tensors with
    // parenthesised factors, both round-trip through their printed form.
    let v = parse_lincomb("3/2 * a(x) - b + 1", &alphabets).unwrap();
    assert_eq!(parse_lincomb(&v.to_string(), &alphabets).unwrap(), v);
    println!("lincomb: {v}");

    let t = parse_tensor("(b x) # (1) + (b) # (a)", &alphabets).unwrap();
    assert_eq!(parse_tensor(&t.to_string(), &alphabets).unwrap(), t);
    println!("tensor:  {t}");

    // Parse errors carry 1-based line/column positions.
    println!("\nrejected inputs:");
    for bad in ["x(y)", "a(q)", "3/2 * a(x) -"] {
        let err = parse_lincomb(bad, &alphabets).unwrap_err();
        println!("  {bad:?}: {err}");
    }

    // JSON: a versioned schema with coefficients as strings (exact
    // rationals survive the trip).
    let json = forest_to_json(&f);
    println!("\nforest as JSON: {json}");
    assert_eq!(forest_from_json(&json, &alphabets).unwrap(), f);
    println!("lincomb as JSON: {}", lincomb_to_json(&v));
    println!("tensor as JSON:  {}", tensor_to_json(&t));

    // Malformed JSON is reported with a pointer to the offending node.
    let bad = serde_json::json!({"schema": "eps-forest/1", "forest": [{"d": "q", "c": []}]});
    let err = forest_from_json(&bad, &alphabets).unwrap_err();
    println!("\nrejected JSON: at {} — {}", err.pointer, err.message);
}

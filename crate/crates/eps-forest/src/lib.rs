//! Weighted infinitesimal bialgebras on decorated planar rooted forests.
//!
//! The central object is the free module on decorated planar rooted forests,
//! equipped with concatenation as product and the biideal coproduct Δ_ε,
//! which satisfies `Δ(ab) = a·Δ(b) + Δ(a)·b + λ(a⊗b)` at weight λ = 0. On top
//! of that structure the crate provides:
//!
//! - the combinatorial coproduct (one term per proper biideal) with the
//!   recursive definition kept as an independent oracle ([`eps`]);
//! - the exponential antipode `S = −Σ(1/n!)(−D)ⁿ` and its inverse, valid for
//!   any weight-0 instance with locally nilpotent `D = mΔ` ([`antipode`]);
//! - the pre-Lie product `a ▷ b = Σ b₍₁₎ a b₍₂₎` and its Lie bracket
//!   ([`prelie`]);
//! - further instances of the same laws: polynomials at arbitrary weight,
//!   divided differences on words, quiver path algebras, undecorated forests
//!   at weight −1, and the trivial coproduct ([`instances`]);
//! - evaluation of forests into any algebra with one operator per Ω-label —
//!   the sense in which forests with grafting are free ([`operated`]);
//! - a text grammar and JSON schema for forests, linear combinations, and
//!   tensors ([`textio`]), seeded random and exhaustive forest generation
//!   ([`randgen`]), and named property suites ([`suites`]).
//!
//! All coefficients are exact rationals; nothing here floats.
//!
//! ```
//! use eps_forest::eps::forest_coproduct;
//! use eps_forest::forest::Alphabets;
//! use eps_forest::textio::{parse_forest, parse_tensor};
//!
//! let ab = Alphabets::default_labels();
//! let f = parse_forest("b a(x)", &ab).unwrap();
//! let expected = parse_tensor("(b x) # (1) + (b) # (a) + (1) # (a(x))", &ab).unwrap();
//! assert_eq!(forest_coproduct(&f), expected);
//! ```

pub mod antipode;
pub mod eps;
pub mod forest;
pub mod instances;
pub mod lincomb;
pub mod linop;
pub mod operated;
pub mod prelie;
pub mod randgen;
pub mod rat;
pub mod suites;
pub mod textio;

pub use eps::{EpsBialgebra, ForestAlgebra};
pub use forest::{Alphabets, Decoration, Forest, Tree};
pub use lincomb::{LinComb, Tensor2, Tensor3};
pub use rat::Rat;

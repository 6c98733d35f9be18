//! The pre-Lie product `a ▷ b = Σ b₍₁₎ a b₍₂₎` carried by every weighted
//! infinitesimal bialgebra, the Lie bracket it induces, and the direct
//! biideal formula on forests.

use std::collections::BTreeSet;

use crate::eps::{CheckWitness, EpsBialgebra};
use crate::forest::Forest;
use crate::lincomb::{LinComb, Tensor2};

/// `a ▷ b = Σ b₍₁₎ a b₍₂₎`, extended bilinearly.
pub fn prelie<I: EpsBialgebra>(
    inst: &I,
    a: &LinComb<I::Basis>,
    b: &LinComb<I::Basis>,
) -> LinComb<I::Basis> {
    let mut out = LinComb::zero();
    for (u, cu) in b.iter() {
        for (Tensor2(b1, b2), c) in inst.coproduct(u).iter() {
            let mid = inst.product_lc(&inst.product_lc(&LinComb::basis(b1.clone()), a), &LinComb::basis(b2.clone()));
            out = out.add(&mid.scale(&(cu * c)));
        }
    }
    out
}

/// The forest pre-Lie product written directly through proper biideals:
/// `F₁ ▷ F₂ = Σ_k F₂|_{I_k} · F₁ · F₂|_{Ī_k}`.
///
/// A specialized path for the forest instance, cross-checked against the
/// generic [`prelie`] in tests.
pub fn prelie_forest(f1: &Forest, f2: &Forest) -> LinComb<Forest> {
    let order = f2.vertex_order();
    let mut out = LinComb::zero();
    let mut upper: BTreeSet<_> = BTreeSet::new();
    let mut lower: BTreeSet<_> = order.iter().cloned().collect();
    for u in &order {
        lower.remove(u);
        let left = f2.restrict(&upper).expect("vertices of f2");
        let right = f2.restrict(&lower).expect("vertices of f2");
        out.add_term(left.concat(f1).concat(&right), crate::rat::Rat::one());
        upper.insert(u.clone());
    }
    out
}

/// `[a, b] = a▷b − b▷a`.
pub fn bracket<I: EpsBialgebra>(
    inst: &I,
    a: &LinComb<I::Basis>,
    b: &LinComb<I::Basis>,
) -> LinComb<I::Basis> {
    prelie(inst, a, b).sub(&prelie(inst, b, a))
}

/// Pre-Lie identity: `(a▷b)▷c − a▷(b▷c) = (b▷a)▷c − b▷(a▷c)` — the associator
/// of ▷ is symmetric in its first two arguments.
pub fn check_prelie_identity<I: EpsBialgebra>(
    inst: &I,
    a: &LinComb<I::Basis>,
    b: &LinComb<I::Basis>,
    c: &LinComb<I::Basis>,
) -> CheckWitness<I::Basis> {
    let lhs = prelie(inst, &prelie(inst, a, b), c).sub(&prelie(inst, a, &prelie(inst, b, c)));
    let rhs = prelie(inst, &prelie(inst, b, a), c).sub(&prelie(inst, b, &prelie(inst, a, c)));
    CheckWitness { lhs, rhs }
}

/// Jacobi identity for the derived bracket.
pub fn check_jacobi<I: EpsBialgebra>(
    inst: &I,
    a: &LinComb<I::Basis>,
    b: &LinComb<I::Basis>,
    c: &LinComb<I::Basis>,
) -> CheckWitness<I::Basis> {
    let lhs = bracket(inst, &bracket(inst, a, b), c)
        .add(&bracket(inst, &bracket(inst, b, c), a))
        .add(&bracket(inst, &bracket(inst, c, a), b));
    CheckWitness { lhs, rhs: LinComb::zero() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eps::ForestAlgebra;
    use crate::forest::Alphabets;
    use crate::instances::{poly_instance, trivial_instance, Monomial};
    use crate::rat::Rat;

    fn parse(s: &str) -> Forest {
        crate::textio::parse_forest(s, &Alphabets::default_labels()).unwrap()
    }

    fn lc(s: &str) -> LinComb<Forest> {
        LinComb::basis(parse(s))
    }

    fn plc(s: &str) -> LinComb<Forest> {
        crate::textio::parse_lincomb(s, &Alphabets::default_labels()).unwrap()
    }

    #[test]
    fn forest_values_small() {
        let alg = ForestAlgebra;
        // •_x ▷ a(b) = x a + b x.
        assert_eq!(prelie(&alg, &lc("x"), &lc("a(b)")), plc("x a + b x"));
        // a(b) ▷ •_x = a(b).
        assert_eq!(prelie(&alg, &lc("a(b)"), &lc("x")), lc("a(b)"));
        // a(b) ▷ (•_g w(y)) = a(b) w(y) + g a(b) w + g y a(b).
        assert_eq!(
            prelie(&alg, &lc("a(b)"), &lc("g w(y)")),
            plc("a(b) w(y) + g a(b) w + g y a(b)")
        );
        // Anything ▷ 1 is 0; 1 ▷ F recovers the one-vertex-deleted sum.
        assert!(prelie(&alg, &lc("a(b)"), &lc("1")).is_zero());
        assert_eq!(prelie(&alg, &lc("1"), &lc("a(x)")), plc("x + a"));
    }

    #[test]
    fn forest_formula_matches_generic() {
        let alg = ForestAlgebra;
        let pool = ["1", "x", "a", "a(b)", "b a(x)", "g w(y)", "w(b a(x))"];
        for s1 in pool {
            for s2 in pool {
                let f1 = parse(s1);
                let f2 = parse(s2);
                assert_eq!(
                    prelie_forest(&f1, &f2),
                    prelie(&alg, &LinComb::basis(f1.clone()), &LinComb::basis(f2.clone())),
                    "{s1} |> {s2}"
                );
            }
        }
    }

    #[test]
    fn bracket_values() {
        let alg = ForestAlgebra;
        // [•_x, a(b)] = x a + b x − a(b).
        assert_eq!(bracket(&alg, &lc("x"), &lc("a(b)")), plc("x a + b x - a(b)"));
        assert!(bracket(&alg, &lc("a(b)"), &lc("a(b)")).is_zero());
        assert_eq!(
            bracket(&alg, &lc("x"), &lc("a(b)")),
            bracket(&alg, &lc("a(b)"), &lc("x")).neg()
        );
    }

    #[test]
    fn associator_symmetric_on_worked_triple() {
        let alg = ForestAlgebra;
        let (a, b, c) = (lc("x"), lc("a(b)"), lc("g w(y)"));
        let w = check_prelie_identity(&alg, &a, &b, &c);
        assert!(w.passed());
        // The common associator value, expanded.
        let assoc = prelie(&alg, &prelie(&alg, &a, &b), &c).sub(&prelie(&alg, &a, &prelie(&alg, &b, &c)));
        assert!(!assoc.is_zero());
        assert_eq!(w.lhs, assoc);
    }

    #[test]
    fn prelie_and_jacobi_across_instances() {
        let alg = ForestAlgebra;
        let pool = [lc("x"), lc("a(b)"), lc("g w(y)"), lc("b a(x)"), lc("1")];
        for a in &pool {
            for b in &pool {
                for c in &pool {
                    assert!(check_prelie_identity(&alg, a, b, c).passed());
                    assert!(check_jacobi(&alg, a, b, c).passed());
                }
            }
        }
        let p = poly_instance(Rat::new(3, 2));
        let ms: Vec<_> = (0..4).map(|n| LinComb::basis(Monomial(n))).collect();
        for a in &ms {
            for b in &ms {
                for c in &ms {
                    assert!(check_prelie_identity(&p, a, b, c).passed());
                    assert!(check_jacobi(&p, a, b, c).passed());
                }
            }
        }
    }

    #[test]
    fn trivial_coproduct_kills_prelie() {
        let t = trivial_instance();
        let a = LinComb::basis(Monomial(2));
        let b = LinComb::basis(Monomial(3));
        assert!(prelie(&t, &a, &b).is_zero());
        assert!(bracket(&t, &a, &b).is_zero());
    }
}

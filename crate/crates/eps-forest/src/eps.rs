//! The generic weighted infinitesimal bialgebra interface, the two coproduct
//! constructions on decorated forests, and executable checks for the laws
//! every instance must satisfy.

use std::collections::BTreeSet;
use std::fmt;

use crate::forest::{graft, Decoration, Forest, ForestError};
use crate::lincomb::{LinComb, PairBasis, Tensor2, Tensor3};
use crate::rat::Rat;

/// One weighted infinitesimal (optionally unitary) bialgebra, presented to the
/// generic algorithms through its action on basis elements. Products and
/// coproducts extend linearly.
pub trait EpsBialgebra {
    type Basis: Ord + Clone + fmt::Display + fmt::Debug + 'static;

    /// The weight λ of the compatibility Δ(ab) = a·Δ(b) + Δ(a)·b + λ(a⊗b).
    fn weight(&self) -> Rat;

    /// The unit basis element, if the algebra is unitary.
    fn unit(&self) -> Option<Self::Basis>;

    /// Product of two basis elements (may be zero, e.g. non-composable paths).
    fn product(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;

    fn coproduct(&self, a: &Self::Basis) -> LinComb<Tensor2<Self::Basis>>;

    /// A per-element bound n with D^(n+1) vanishing on the element, where
    /// D = mΔ. `None` flags the instance as not locally nilpotent; the
    /// antipode refuses such instances.
    fn nilpotency_bound(&self, a: &Self::Basis) -> Option<usize>;

    /// Product extended bilinearly to linear combinations.
    fn product_lc(&self, a: &LinComb<Self::Basis>, b: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        let mut out = LinComb::zero();
        for (x, cx) in a.iter() {
            for (y, cy) in b.iter() {
                let c = cx * cy;
                for (z, cz) in self.product(x, y).iter() {
                    out.add_term(z.clone(), &c * cz);
                }
            }
        }
        out
    }

    fn coproduct_lc(&self, a: &LinComb<Self::Basis>) -> LinComb<Tensor2<Self::Basis>> {
        a.map_linear(|b| self.coproduct(b))
    }

    fn unit_lc(&self) -> LinComb<Self::Basis> {
        self.unit().map(LinComb::basis).unwrap_or_else(LinComb::zero)
    }
}

/// Left half of the standard bimodule action on the tensor square:
/// `a·(b⊗c) = ab⊗c`.
pub fn act_left<I: EpsBialgebra>(
    inst: &I,
    left: &LinComb<I::Basis>,
    t: &LinComb<Tensor2<I::Basis>>,
) -> LinComb<Tensor2<I::Basis>> {
    let mut out = LinComb::zero();
    for (Tensor2(b, c), k) in t.iter() {
        for (p, kp) in inst.product_lc(left, &LinComb::basis(b.clone())).iter() {
            out.add_term(Tensor2(p.clone(), c.clone()), k * kp);
        }
    }
    out
}

/// Right half of the standard bimodule action: `(b⊗c)·a = b⊗ca`.
pub fn act_right<I: EpsBialgebra>(
    inst: &I,
    t: &LinComb<Tensor2<I::Basis>>,
    right: &LinComb<I::Basis>,
) -> LinComb<Tensor2<I::Basis>> {
    let mut out = LinComb::zero();
    for (Tensor2(b, c), k) in t.iter() {
        for (p, kp) in inst.product_lc(&LinComb::basis(c.clone()), right).iter() {
            out.add_term(Tensor2(b.clone(), p.clone()), k * kp);
        }
    }
    out
}

/// Both actions at once: `a·(b⊗c)·a′ = ab⊗ca′`.
pub fn bimodule_act<I: EpsBialgebra>(
    inst: &I,
    left: &LinComb<I::Basis>,
    t: &LinComb<Tensor2<I::Basis>>,
    right: &LinComb<I::Basis>,
) -> LinComb<Tensor2<I::Basis>> {
    act_right(inst, &act_left(inst, left, t), right)
}

/// Outcome of an exact two-sided comparison. The check passed when the
/// difference is zero; otherwise the first differing term is the witness.
#[derive(Debug, Clone)]
pub struct CheckWitness<B: Ord + Clone> {
    pub lhs: LinComb<B>,
    pub rhs: LinComb<B>,
}

impl<B: Ord + Clone> CheckWitness<B> {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn difference(&self) -> LinComb<B> {
        self.lhs.sub(&self.rhs)
    }

    pub fn first_discrepancy(&self) -> Option<(B, Rat)> {
        self.difference().iter().next().map(|(b, c)| (b.clone(), c.clone()))
    }
}

/// The compatibility of weight λ: Δ(ab) = a·Δ(b) + Δ(a)·b + λ(a⊗b).
pub fn check_compat<I: EpsBialgebra>(inst: &I, a: &I::Basis, b: &I::Basis) -> CheckWitness<Tensor2<I::Basis>> {
    let la = LinComb::basis(a.clone());
    let lb = LinComb::basis(b.clone());
    let lhs = inst.coproduct_lc(&inst.product(a, b));
    let mut rhs = act_left(inst, &la, &inst.coproduct(b));
    rhs = rhs.add(&act_right(inst, &inst.coproduct(a), &lb));
    rhs.add_term(Tensor2(a.clone(), b.clone()), inst.weight());
    CheckWitness { lhs, rhs }
}

/// Coassociativity of an arbitrary basis-level coproduct.
pub fn check_coassoc_with<B: Ord + Clone>(
    cop: impl Fn(&B) -> LinComb<Tensor2<B>>,
    a: &B,
) -> CheckWitness<Tensor3<B>> {
    let delta = cop(a);
    let mut lhs = LinComb::zero();
    let mut rhs = LinComb::zero();
    for (Tensor2(u, v), c) in delta.iter() {
        // (Δ ⊗ id)Δ
        for (Tensor2(p, q), k) in cop(u).iter() {
            lhs.add_term(Tensor3(p.clone(), q.clone(), v.clone()), c * k);
        }
        // (id ⊗ Δ)Δ
        for (Tensor2(p, q), k) in cop(v).iter() {
            rhs.add_term(Tensor3(u.clone(), p.clone(), q.clone()), c * k);
        }
    }
    CheckWitness { lhs, rhs }
}

pub fn check_coassoc<I: EpsBialgebra>(inst: &I, a: &I::Basis) -> CheckWitness<Tensor3<I::Basis>> {
    check_coassoc_with(|b| inst.coproduct(b), a)
}

/// The coproduct on `A ⊗ B` that makes the multiplication a coalgebra
/// morphism. Both instances must be unitary and of the same weight.
pub fn tensor_square_coproduct<A, B>(
    inst_a: &A,
    inst_b: &B,
    a: &A::Basis,
    b: &B::Basis,
) -> Result<LinComb<Tensor2<PairBasis<A::Basis, B::Basis>>>, TensorSquareError>
where
    A: EpsBialgebra,
    B: EpsBialgebra,
{
    if inst_a.weight() != inst_b.weight() {
        return Err(TensorSquareError::WeightMismatch {
            left: inst_a.weight().to_string(),
            right: inst_b.weight().to_string(),
        });
    }
    let ua = inst_a.unit().ok_or(TensorSquareError::NotUnitary)?;
    let ub = inst_b.unit().ok_or(TensorSquareError::NotUnitary)?;
    let mut out = LinComb::zero();
    // Σ (a₍₁₎ ⊗ 1_B) ⊗ (a₍₂₎ ⊗ b)
    for (Tensor2(a1, a2), c) in inst_a.coproduct(a).iter() {
        out.add_term(
            Tensor2(PairBasis(a1.clone(), ub.clone()), PairBasis(a2.clone(), b.clone())),
            c.clone(),
        );
    }
    // Σ (a ⊗ b₍₁₎) ⊗ (1_A ⊗ b₍₂₎)
    for (Tensor2(b1, b2), c) in inst_b.coproduct(b).iter() {
        out.add_term(
            Tensor2(PairBasis(a.clone(), b1.clone()), PairBasis(ua.clone(), b2.clone())),
            c.clone(),
        );
    }
    // λ (a ⊗ 1_B) ⊗ (1_A ⊗ b)
    out.add_term(
        Tensor2(PairBasis(a.clone(), ub), PairBasis(ua, b.clone())),
        inst_a.weight(),
    );
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorSquareError {
    #[error("tensor-square coproduct requires equal weights, got {left} and {right}")]
    WeightMismatch { left: String, right: String },
    #[error("tensor-square coproduct requires unitary instances")]
    NotUnitary,
}

/// Coassociativity of the tensor-square coproduct at `a ⊗ b`.
pub fn check_tensor_square_coassoc<I: EpsBialgebra>(
    inst: &I,
    a: &I::Basis,
    b: &I::Basis,
) -> Result<CheckWitness<Tensor3<PairBasis<I::Basis, I::Basis>>>, TensorSquareError> {
    // Surface errors eagerly, then hand a total coproduct to the checker.
    tensor_square_coproduct(inst, inst, a, b)?;
    let cop = |p: &PairBasis<I::Basis, I::Basis>| {
        tensor_square_coproduct(inst, inst, &p.0, &p.1).expect("weights already checked")
    };
    Ok(check_coassoc_with(cop, &PairBasis(a.clone(), b.clone())))
}

/// Verifies Δ_A(m(a⊗b)) = (m⊗m)(Δ(a⊗b)) for a unitary instance.
pub fn check_mult_coalgebra_morphism<I: EpsBialgebra>(
    inst: &I,
    a: &I::Basis,
    b: &I::Basis,
) -> Result<CheckWitness<Tensor2<I::Basis>>, TensorSquareError> {
    let delta = tensor_square_coproduct(inst, inst, a, b)?;
    let lhs = inst.coproduct_lc(&inst.product(a, b));
    let mut rhs = LinComb::zero();
    for (Tensor2(PairBasis(p, q), PairBasis(r, s)), c) in delta.iter() {
        for (t2, k) in inst.product(p, q).tensor(&inst.product(r, s)).iter() {
            rhs.add_term(t2.clone(), c * k);
        }
    }
    Ok(CheckWitness { lhs, rhs })
}

// ---------------------------------------------------------------------------
// Decorated planar rooted forests as the main instance.
// ---------------------------------------------------------------------------

/// Decorated planar rooted forests with concatenation, the empty forest as
/// unit, and the biideal coproduct. Weight zero, locally nilpotent.
#[derive(Debug, Clone, Copy, Default)]
pub struct ForestAlgebra;

impl EpsBialgebra for ForestAlgebra {
    type Basis = Forest;

    fn weight(&self) -> Rat {
        Rat::zero()
    }

    fn unit(&self) -> Option<Forest> {
        Some(Forest::empty())
    }

    fn product(&self, a: &Forest, b: &Forest) -> LinComb<Forest> {
        LinComb::basis(a.concat(b))
    }

    fn coproduct(&self, a: &Forest) -> LinComb<Tensor2<Forest>> {
        forest_coproduct(a)
    }

    fn nilpotency_bound(&self, a: &Forest) -> Option<usize> {
        Some(a.vertex_count())
    }
}

/// The combinatorial coproduct: one term per proper biideal,
/// `Δ(F) = Σ_k F|_{I_k} ⊗ F|_{Ī_k}` with `Ī_k = V(F) \ (I_k ⊔ {u_k})`.
///
/// This is the production implementation; the recursive definition below is
/// kept as its independent oracle.
pub fn forest_coproduct(f: &Forest) -> LinComb<Tensor2<Forest>> {
    let order = f.vertex_order();
    let mut out = LinComb::zero();
    let mut upper: BTreeSet<_> = BTreeSet::new();
    let mut lower: BTreeSet<_> = order.iter().cloned().collect();
    for u in &order {
        lower.remove(u);
        let left = f.restrict(&upper).expect("biideal vertices come from the forest");
        let right = f.restrict(&lower).expect("complement vertices come from the forest");
        out.add_term(Tensor2(left, right), Rat::one());
        upper.insert(u.clone());
    }
    out
}

/// The recursive definition of the coproduct: Δ(1) = 0, Δ(•_x) = 1⊗1, the
/// infinitesimal 1-cocycle rule under grafting, and the derivation rule on
/// concatenations.
pub fn forest_coproduct_recursive(f: &Forest) -> LinComb<Tensor2<Forest>> {
    let alg = ForestAlgebra;
    match f.breadth() {
        0 => LinComb::zero(),
        1 => {
            let tree = &f.trees()[0];
            if tree.children().is_empty() && tree.root().kind == crate::forest::DecorationKind::X {
                LinComb::basis(Tensor2(Forest::empty(), Forest::empty()))
            } else {
                // F = B⁺_ω(F̄): Δ(F) = F̄ ⊗ 1 + (id ⊗ B⁺_ω)Δ(F̄).
                let omega = tree.root().clone();
                let inner = Forest::from_trees(tree.children().to_vec());
                let mut out = LinComb::basis(Tensor2(inner.clone(), Forest::empty()));
                for (Tensor2(l, r), c) in forest_coproduct_recursive(&inner).iter() {
                    let grafted = Forest::single(graft(&omega, r).expect("internal label is Omega"));
                    out.add_term(Tensor2(l.clone(), grafted), c.clone());
                }
                out
            }
        }
        _ => {
            // F = T₁ F′: Δ(F) = T₁·Δ(F′) + Δ(T₁)·F′.
            let head = Forest::single(f.trees()[0].clone());
            let tail = Forest::from_trees(f.trees()[1..].to_vec());
            let first = act_left(&alg, &LinComb::basis(head.clone()), &forest_coproduct_recursive(&tail));
            let second = act_right(&alg, &forest_coproduct_recursive(&head), &LinComb::basis(tail));
            first.add(&second)
        }
    }
}

/// Verifies the infinitesimal 1-cocycle condition at `a`:
/// `Δ(B⁺_ω(a)) = a ⊗ 1 + (id ⊗ B⁺_ω)Δ(a)`.
pub fn check_cocycle(omega: &Decoration, a: &LinComb<Forest>) -> Result<CheckWitness<Tensor2<Forest>>, ForestError> {
    let grafted: Result<LinComb<Forest>, ForestError> = {
        let mut out = LinComb::zero();
        for (f, c) in a.iter() {
            out.add_term(Forest::single(graft(omega, f)?), c.clone());
        }
        Ok(out)
    };
    let alg = ForestAlgebra;
    let lhs = alg.coproduct_lc(&grafted?);
    let mut rhs = a.tensor(&LinComb::basis(Forest::empty()));
    for (Tensor2(l, r), c) in alg.coproduct_lc(a).iter() {
        rhs.add_term(Tensor2(l.clone(), Forest::single(graft(omega, r)?)), c.clone());
    }
    Ok(CheckWitness { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{Decoration as D, Tree};

    fn x(l: &str) -> D {
        D::x(l)
    }
    fn om(l: &str) -> D {
        D::omega(l)
    }

    fn tree(root: D, children: Vec<Tree>) -> Tree {
        Tree::new(root, children).unwrap()
    }

    fn parse_free(s: &str) -> Forest {
        // tiny helper for tests: labels are single chars, x/y/z in X.
        crate::textio::parse_forest(s, &crate::forest::Alphabets::default_labels()).unwrap()
    }

    fn tens(l: &str, r: &str) -> Tensor2<Forest> {
        Tensor2(parse_free(l), parse_free(r))
    }

    #[test]
    fn coproduct_of_single_omega_vertex() {
        let f = Forest::bullet(om("a"));
        let expect = LinComb::basis(tens("1", "1"));
        assert_eq!(forest_coproduct(&f), expect);
        assert_eq!(forest_coproduct_recursive(&f), expect);
    }

    #[test]
    fn coproduct_of_unit_is_zero() {
        assert!(forest_coproduct(&Forest::empty()).is_zero());
        assert!(forest_coproduct_recursive(&Forest::empty()).is_zero());
    }

    #[test]
    fn coproduct_example_ladder() {
        // Δ(a(x)) = •x ⊗ 1 + 1 ⊗ •a
        let f = Forest::single(tree(om("a"), vec![Tree::leaf(x("x"))]));
        let expect = LinComb::from_terms([(tens("x", "1"), Rat::one()), (tens("1", "a"), Rat::one())]);
        assert_eq!(forest_coproduct(&f), expect);
        assert_eq!(forest_coproduct_recursive(&f), expect);
    }

    #[test]
    fn coproduct_example_breadth_two() {
        // Δ(b a(x)) = b x ⊗ 1 + b ⊗ a + 1 ⊗ a(x)
        let f = parse_free("b a(x)");
        let expect = LinComb::from_terms([
            (tens("b x", "1"), Rat::one()),
            (tens("b", "a"), Rat::one()),
            (tens("1", "a(x)"), Rat::one()),
        ]);
        assert_eq!(forest_coproduct(&f), expect);
        assert_eq!(forest_coproduct_recursive(&f), expect);
    }

    #[test]
    fn coproduct_example_four_vertices() {
        // Δ(w(b a(x))) = b a(x) ⊗ 1 + b x ⊗ w + b ⊗ w(a) + 1 ⊗ w(a(x))
        let f = parse_free("w(b a(x))");
        let expect = LinComb::from_terms([
            (tens("b a(x)", "1"), Rat::one()),
            (tens("b x", "w"), Rat::one()),
            (tens("b", "w(a)"), Rat::one()),
            (tens("1", "w(a(x))"), Rat::one()),
        ]);
        assert_eq!(forest_coproduct(&f), expect);
        assert_eq!(forest_coproduct_recursive(&f), expect);
    }

    #[test]
    fn compat_on_two_x_vertices() {
        // Both sides •x ⊗ 1 + 1 ⊗ •y.
        let w = check_compat(&ForestAlgebra, &parse_free("x"), &parse_free("y"));
        assert!(w.passed());
        let expect = LinComb::from_terms([(tens("x", "1"), Rat::one()), (tens("1", "y"), Rat::one())]);
        assert_eq!(w.lhs, expect);
    }

    #[test]
    fn cocycle_examples() {
        let unit = LinComb::basis(Forest::empty());
        assert!(check_cocycle(&om("w"), &unit).unwrap().passed());
        let bx = LinComb::basis(parse_free("x"));
        let w = check_cocycle(&om("w"), &bx).unwrap();
        assert!(w.passed());
        let expect = LinComb::from_terms([(tens("x", "1"), Rat::one()), (tens("1", "w"), Rat::one())]);
        assert_eq!(w.lhs, expect);
        assert!(check_cocycle(&x("x"), &unit).is_err());
    }

    #[test]
    fn coassoc_small_forest() {
        assert!(check_coassoc(&ForestAlgebra, &parse_free("w(b a(x))")).passed());
    }

    #[test]
    fn bimodule_associativity() {
        let alg = ForestAlgebra;
        let a = LinComb::basis(parse_free("x"));
        let b = LinComb::basis(parse_free("y"));
        let t = forest_coproduct(&parse_free("b a(x)"));
        let unit = alg.unit_lc();
        let left_first = bimodule_act(&alg, &unit, &bimodule_act(&alg, &a, &t, &unit), &b);
        let right_first = bimodule_act(&alg, &a, &bimodule_act(&alg, &unit, &t, &b), &unit);
        assert_eq!(left_first, right_first);
        assert_eq!(bimodule_act(&alg, &unit, &t, &unit), t);
    }

    #[test]
    fn tensor_square_unit_cases() {
        let alg = ForestAlgebra;
        let e = Forest::empty();
        // λ = 0 and Δ(1) = 0 kill all three summands.
        assert!(tensor_square_coproduct(&alg, &alg, &e, &e).unwrap().is_zero());
        // Δ(1 ⊗ •x) = Σ (1 ⊗ b₍₁₎) ⊗ (1 ⊗ b₍₂₎).
        let d = tensor_square_coproduct(&alg, &alg, &e, &parse_free("x")).unwrap();
        let expect = LinComb::basis(Tensor2(
            PairBasis(e.clone(), e.clone()),
            PairBasis(e.clone(), e.clone()),
        ));
        assert_eq!(d, expect);
    }

    #[test]
    fn mult_is_coalgebra_morphism_on_forests() {
        let alg = ForestAlgebra;
        let w = check_mult_coalgebra_morphism(&alg, &parse_free("x"), &parse_free("y")).unwrap();
        assert!(w.passed());
        assert_eq!(w.lhs, forest_coproduct(&parse_free("x y")));
    }

    #[test]
    fn grading_invariant() {
        let f = parse_free("w(b a(x)) y");
        for (Tensor2(l, r), _) in forest_coproduct(&f).iter() {
            assert_eq!(l.vertex_count() + r.vertex_count(), f.vertex_count() - 1);
        }
    }
}

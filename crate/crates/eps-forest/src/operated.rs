//! Algebras equipped with one linear operator per Ω-label, and the universal
//! evaluation morphism out of decorated forests: forests with grafting are
//! the free such algebra, so a choice of target operators plus generator
//! images determines a unique structure-preserving map. The checks below turn
//! that uniqueness into executable equations.

use std::collections::BTreeMap;
use std::rc::Rc;

use crate::antipode::{antipode, AntipodeError};
use crate::eps::{EpsBialgebra, ForestAlgebra};
use crate::forest::{graft, Decoration, DecorationKind, Forest, Tree};
use crate::instances::{trivial_instance, Monomial, TrivialAlgebra};
use crate::lincomb::{LinComb, Tensor2};

type OpRule<B> = Rc<dyn Fn(&LinComb<B>) -> LinComb<B>>;

/// A target for evaluation: a carrier instance, one operator per Ω-label,
/// and an image for each X-generator.
///
/// `has_cocycle_structure` records whether the target claims the coproduct
/// laws on top of the algebra structure: each operator satisfying
/// `Δ∘P_ω = id⊗1 + (id⊗P_ω)∘Δ` and `Δ(f(x)) = 1⊗1` for each generator.
/// Only then are the coproduct- and antipode-compatibility checks meaningful.
pub struct OperatedTarget<I: EpsBialgebra> {
    pub instance: Rc<I>,
    operators: BTreeMap<String, OpRule<I::Basis>>,
    generators: BTreeMap<String, LinComb<I::Basis>>,
    pub has_cocycle_structure: bool,
}

impl<I: EpsBialgebra> OperatedTarget<I> {
    pub fn new(instance: Rc<I>, has_cocycle_structure: bool) -> Self {
        OperatedTarget {
            instance,
            operators: BTreeMap::new(),
            generators: BTreeMap::new(),
            has_cocycle_structure,
        }
    }

    pub fn with_operator(
        mut self,
        omega: impl Into<String>,
        rule: impl Fn(&LinComb<I::Basis>) -> LinComb<I::Basis> + 'static,
    ) -> Self {
        self.operators.insert(omega.into(), Rc::new(rule));
        self
    }

    pub fn with_generator(mut self, x: impl Into<String>, image: LinComb<I::Basis>) -> Self {
        self.generators.insert(x.into(), image);
        self
    }

    pub fn operator(&self, omega: &str) -> Result<&OpRule<I::Basis>, EvalError> {
        self.operators.get(omega).ok_or_else(|| EvalError::MissingOperator(omega.to_string()))
    }

    pub fn generator(&self, x: &str) -> Result<&LinComb<I::Basis>, EvalError> {
        self.generators.get(x).ok_or_else(|| EvalError::MissingGenerator(x.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("no operator bound for Omega-label `{0}`")]
    MissingOperator(String),
    #[error("no generator image bound for X-label `{0}`")]
    MissingGenerator(String),
}

/// The universal morphism: `f̄(1) = 1`, `f̄(•_x) = f(x)`,
/// `f̄(B⁺_ω(F̄)) = P_ω(f̄(F̄))`, `f̄(F₁F₂) = f̄(F₁)f̄(F₂)`.
pub fn evaluate<I: EpsBialgebra>(forest: &Forest, target: &OperatedTarget<I>) -> Result<LinComb<I::Basis>, EvalError> {
    let mut acc = target.instance.unit_lc();
    for tree in forest.trees() {
        let v = evaluate_tree(tree, target)?;
        acc = target.instance.product_lc(&acc, &v);
    }
    Ok(acc)
}

fn evaluate_tree<I: EpsBialgebra>(tree: &Tree, target: &OperatedTarget<I>) -> Result<LinComb<I::Basis>, EvalError> {
    match tree.root().kind {
        DecorationKind::X => Ok(target.generator(&tree.root().label)?.clone()),
        DecorationKind::Omega => {
            let inner = evaluate(&Forest::from_trees(tree.children().to_vec()), target)?;
            Ok(target.operator(&tree.root().label)?(&inner))
        }
    }
}

pub fn evaluate_lc<I: EpsBialgebra>(
    v: &LinComb<Forest>,
    target: &OperatedTarget<I>,
) -> Result<LinComb<I::Basis>, EvalError> {
    let mut out = LinComb::zero();
    for (f, c) in v.iter() {
        out = out.add(&evaluate(f, target)?.scale(c));
    }
    Ok(out)
}

/// First forest in a sample where a morphism law failed, tagged with the law.
#[derive(Debug, Clone)]
pub struct MorphismFailure {
    pub property: String,
    pub forest: Forest,
}

/// Verifies the defining equations of the evaluation morphism on a sample:
/// multiplicativity on all pairs, operator intertwining on every forest for
/// every bound operator, and — when the target claims cocycle structure —
/// `Δ∘f̄ = (f̄⊗f̄)∘Δ_ε`.
pub fn check_operated_morphism<I: EpsBialgebra>(
    target: &OperatedTarget<I>,
    sample: &[Forest],
) -> Result<Option<MorphismFailure>, EvalError> {
    let fail = |property: &str, forest: &Forest| MorphismFailure {
        property: property.to_string(),
        forest: forest.clone(),
    };
    for f in sample {
        let vf = evaluate(f, target)?;
        for g in sample {
            let lhs = evaluate(&f.concat(g), target)?;
            let rhs = target.instance.product_lc(&vf, &evaluate(g, target)?);
            if lhs != rhs {
                return Ok(Some(fail("multiplicativity", &f.concat(g))));
            }
        }
        for (omega, rule) in &target.operators {
            let grafted = Forest::single(
                graft(&Decoration::omega(omega.clone()), f).expect("Omega label"),
            );
            if evaluate(&grafted, target)? != rule(&vf) {
                return Ok(Some(fail("operator intertwining", &grafted)));
            }
        }
        if target.has_cocycle_structure {
            let lhs = target.instance.coproduct_lc(&vf);
            let mut rhs = LinComb::zero();
            for (Tensor2(l, r), c) in ForestAlgebra.coproduct(f).iter() {
                for (t2, k) in evaluate(l, target)?.tensor(&evaluate(r, target)?).iter() {
                    rhs.add_term(t2.clone(), c * k);
                }
            }
            if lhs != rhs {
                return Ok(Some(fail("coproduct compatibility", f)));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OperatedError {
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Antipode(#[from] AntipodeError),
}

/// Verifies `S∘f̄ = f̄∘S` on the sample; both sides use the series antipode,
/// so the target must be weight 0 and locally nilpotent.
pub fn check_hopf_morphism_compat<I: EpsBialgebra>(
    target: &OperatedTarget<I>,
    sample: &[Forest],
) -> Result<Option<MorphismFailure>, OperatedError> {
    let alg = ForestAlgebra;
    for f in sample {
        let lhs = antipode(&*target.instance, &evaluate(f, target)?)?;
        let rhs = evaluate_lc(&antipode(&alg, &LinComb::basis(f.clone()))?, target)?;
        if lhs != rhs {
            return Ok(Some(MorphismFailure {
                property: "antipode compatibility".to_string(),
                forest: f.clone(),
            }));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Shipped targets.
// ---------------------------------------------------------------------------

fn forest_graft_rule(omega: &str) -> impl Fn(&LinComb<Forest>) -> LinComb<Forest> {
    let d = Decoration::omega(omega);
    move |v: &LinComb<Forest>| {
        v.map_linear(|f| LinComb::basis(Forest::single(graft(&d, f).expect("Omega label"))))
    }
}

/// Forests mapped to themselves: every operator is grafting, every generator
/// maps to its own vertex.
pub fn identity_target(alphabets: &crate::forest::Alphabets) -> OperatedTarget<ForestAlgebra> {
    let mut t = OperatedTarget::new(Rc::new(ForestAlgebra), true);
    for omega in alphabets.omega_labels() {
        t = t.with_operator(omega, forest_graft_rule(omega));
    }
    for x in alphabets.x_labels() {
        t = t.with_generator(x, LinComb::basis(Forest::bullet(Decoration::x(x))));
    }
    t
}

/// Forests mapped to forests with generators renamed via `map` (X-labels to
/// X-labels); unmapped generators stay fixed.
pub fn relabel_target(
    alphabets: &crate::forest::Alphabets,
    map: &BTreeMap<String, String>,
) -> OperatedTarget<ForestAlgebra> {
    let mut t = identity_target(alphabets);
    for (from, to) in map {
        t = t.with_generator(from.clone(), LinComb::basis(Forest::bullet(Decoration::x(to.clone()))));
    }
    t
}

/// Every operator is the zero map and every generator maps to 1, so a forest
/// evaluates to 1 when it has no Ω-vertex and to 0 otherwise. The target has
/// no cocycle structure (its coproduct is 0), so only the algebra-level laws
/// apply.
pub fn collapse_target(alphabets: &crate::forest::Alphabets) -> OperatedTarget<TrivialAlgebra> {
    let mut t = OperatedTarget::new(Rc::new(trivial_instance()), false);
    for omega in alphabets.omega_labels() {
        t = t.with_operator(omega, |_: &LinComb<Monomial>| LinComb::zero());
    }
    for x in alphabets.x_labels() {
        t = t.with_generator(x, LinComb::basis(Monomial(0)));
    }
    t
}

/// A deliberately wrong target: operators double the graft, which breaks the
/// claimed cocycle law. Used to show the morphism check reports a witness.
pub fn broken_target(alphabets: &crate::forest::Alphabets) -> OperatedTarget<ForestAlgebra> {
    let mut t = OperatedTarget::new(Rc::new(ForestAlgebra), true);
    for omega in alphabets.omega_labels() {
        let rule = forest_graft_rule(omega);
        t = t.with_operator(omega, move |v: &LinComb<Forest>| {
            rule(v).scale(&crate::rat::Rat::from_int(2))
        });
    }
    for x in alphabets.x_labels() {
        t = t.with_generator(x, LinComb::basis(Forest::bullet(Decoration::x(x))));
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::Alphabets;

    fn parse(s: &str) -> Forest {
        crate::textio::parse_forest(s, &Alphabets::default_labels()).unwrap()
    }

    fn sample() -> Vec<Forest> {
        ["1", "x", "a", "a(x)", "b a(x)", "w(b a(x))", "a(b g) y"].map(|s| parse(s)).to_vec()
    }

    #[test]
    fn identity_target_is_identity() {
        let t = identity_target(&Alphabets::default_labels());
        for f in sample() {
            assert_eq!(evaluate(&f, &t).unwrap(), LinComb::basis(f.clone()));
        }
        assert!(check_operated_morphism(&t, &sample()).unwrap().is_none());
        assert!(check_hopf_morphism_compat(&t, &sample()).unwrap().is_none());
    }

    #[test]
    fn relabel_target_renames_generators() {
        let map = BTreeMap::from([("x".to_string(), "y".to_string())]);
        let t = relabel_target(&Alphabets::default_labels(), &map);
        assert_eq!(evaluate(&parse("a(x)"), &t).unwrap(), LinComb::basis(parse("a(y)")));
        assert!(check_operated_morphism(&t, &sample()).unwrap().is_none());
        assert!(check_hopf_morphism_compat(&t, &sample()).unwrap().is_none());
        // Changing a generator image changes the morphism: uniqueness at work.
        let id = identity_target(&Alphabets::default_labels());
        assert_ne!(evaluate(&parse("x"), &t).unwrap(), evaluate(&parse("x"), &id).unwrap());
    }

    #[test]
    fn collapse_target_counts_omega_vertices() {
        let t = collapse_target(&Alphabets::default_labels());
        assert_eq!(evaluate(&parse("x y"), &t).unwrap(), LinComb::basis(Monomial(0)));
        assert!(evaluate(&parse("a(x)"), &t).unwrap().is_zero());
        assert!(evaluate(&parse("x a"), &t).unwrap().is_zero());
        assert!(check_operated_morphism(&t, &sample()).unwrap().is_none());
    }

    #[test]
    fn broken_target_is_caught() {
        let t = broken_target(&Alphabets::default_labels());
        let failure = check_operated_morphism(&t, &sample()).unwrap().expect("must fail");
        assert_eq!(failure.property, "coproduct compatibility");
    }

    #[test]
    fn missing_bindings_error() {
        let t = OperatedTarget::<ForestAlgebra>::new(Rc::new(ForestAlgebra), false);
        assert!(matches!(evaluate(&parse("x"), &t), Err(EvalError::MissingGenerator(_))));
        assert!(matches!(evaluate(&parse("a"), &t), Err(EvalError::MissingOperator(_))));
    }

    #[test]
    fn hopf_compat_single_vertex() {
        // Relabeling x→y: both S(f̄(•_x)) and f̄(S(•_x)) equal 1 − •_y.
        let map = BTreeMap::from([("x".to_string(), "y".to_string())]);
        let t = relabel_target(&Alphabets::default_labels(), &map);
        let lhs = antipode(&ForestAlgebra, &evaluate(&parse("x"), &t).unwrap()).unwrap();
        let expect = LinComb::basis(parse("1")).sub(&LinComb::basis(parse("y")));
        assert_eq!(lhs, expect);
    }
}

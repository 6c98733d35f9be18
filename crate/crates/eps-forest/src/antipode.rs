//! The map D = mΔ, its local nilpotency, and the exponential antipode
//! S = −Σ (1/n!)(−D)ⁿ together with its inverse T = −Σ (1/n!)Dⁿ.
//!
//! The powers Dⁿ are composition powers; the series is finite on each element
//! because every admitted instance declares a nilpotency bound. The two
//! circular-convolution identities `Σ S(u₍₁₎)u₍₂₎ + S(u) + u = 0` (and its
//! mirror) are the executable definition the series is checked against.

use crate::eps::EpsBialgebra;
use crate::instances::{DividedDiff, Word};
use crate::lincomb::{LinComb, Tensor2};
use crate::linop::{convolution_power, derivation_op, LinOp};
use crate::rat::Rat;
use std::rc::Rc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AntipodeError {
    #[error("antipode requires weight 0, but the instance has weight {weight}")]
    NonzeroWeight { weight: String },
    #[error("instance is not locally nilpotent at `{element}`; the antipode series would not terminate")]
    NotNilpotent { element: String },
}

/// `D(a) = mΔ(a)`, extended linearly.
pub fn apply_d<I: EpsBialgebra>(inst: &I, a: &LinComb<I::Basis>) -> LinComb<I::Basis> {
    a.map_linear(|b| {
        let mut out = LinComb::zero();
        for (Tensor2(l, r), c) in inst.coproduct(b).iter() {
            out = out.add(&inst.product(l, r).scale(c));
        }
        out
    })
}

fn guard<I: EpsBialgebra>(inst: &I, a: &LinComb<I::Basis>) -> Result<usize, AntipodeError> {
    if !inst.weight().is_zero() {
        return Err(AntipodeError::NonzeroWeight { weight: inst.weight().to_string() });
    }
    let mut bound = 0;
    for (b, _) in a.iter() {
        match inst.nilpotency_bound(b) {
            Some(n) => bound = bound.max(n),
            None => return Err(AntipodeError::NotNilpotent { element: b.to_string() }),
        }
    }
    Ok(bound)
}

/// Sums `Σ_{k} (1/k!) s^k D^k(a)` until the power of D vanishes, verifying
/// that this happens within the declared bound.
fn exp_series<I: EpsBialgebra>(
    inst: &I,
    a: &LinComb<I::Basis>,
    sign: i64,
) -> Result<LinComb<I::Basis>, AntipodeError> {
    let bound = guard(inst, a)?;
    let mut acc = LinComb::zero();
    let mut power = a.clone();
    let mut k = 0usize;
    while !power.is_zero() {
        if k > bound {
            // The declared bound lied; refuse rather than loop.
            let witness = power.iter().next().map(|(b, _)| b.to_string()).unwrap_or_default();
            return Err(AntipodeError::NotNilpotent { element: witness });
        }
        let mut c = Rat::inv_factorial(k);
        if sign < 0 && k % 2 == 1 {
            c = -c;
        }
        acc = acc.add(&power.scale(&c));
        power = apply_d(inst, &power);
        k += 1;
    }
    Ok(acc)
}

/// The antipode `S = −Σ_{n≥0} (1/n!)(−D)ⁿ`; a finite sum per element.
pub fn antipode<I: EpsBialgebra>(inst: &I, a: &LinComb<I::Basis>) -> Result<LinComb<I::Basis>, AntipodeError> {
    Ok(exp_series(inst, a, -1)?.neg())
}

/// The inverse `T = −Σ_{n≥0} (1/n!)Dⁿ`, so that S∘T = T∘S = id.
pub fn antipode_inverse<I: EpsBialgebra>(
    inst: &I,
    a: &LinComb<I::Basis>,
) -> Result<LinComb<I::Basis>, AntipodeError> {
    Ok(exp_series(inst, a, 1)?.neg())
}

/// The two circular-convolution identities at a basis element `u`:
/// `Σ S(u₍₁₎)u₍₂₎ + S(u) + u` and `Σ u₍₁₎S(u₍₂₎) + u + S(u)`, both of which
/// must vanish.
#[derive(Debug, Clone)]
pub struct AntipodeAxioms<B: Ord + Clone> {
    pub left: LinComb<B>,
    pub right: LinComb<B>,
}

impl<B: Ord + Clone> AntipodeAxioms<B> {
    pub fn passed(&self) -> bool {
        self.left.is_zero() && self.right.is_zero()
    }
}

pub fn check_antipode_axioms<I: EpsBialgebra>(
    inst: &I,
    u: &I::Basis,
) -> Result<AntipodeAxioms<I::Basis>, AntipodeError> {
    let ub = LinComb::basis(u.clone());
    let su = antipode(inst, &ub)?;
    let mut left = su.add(&ub);
    let mut right = su.add(&ub);
    for (Tensor2(u1, u2), c) in inst.coproduct(u).iter() {
        let s1 = antipode(inst, &LinComb::basis(u1.clone()))?;
        let s2 = antipode(inst, &LinComb::basis(u2.clone()))?;
        left = left.add(&inst.product_lc(&s1, &LinComb::basis(u2.clone())).scale(c));
        right = right.add(&inst.product_lc(&LinComb::basis(u1.clone()), &s2).scale(c));
    }
    Ok(AntipodeAxioms { left, right })
}

/// Checks local nilpotency at `a` with bound `n` in both senses: the
/// composition power `D^{∘(n+1)}(a) = 0` and the convolution power
/// `D^{∗(n+1)}(a) = 0`, where `D^{∗m}` denotes the (m+1)-factor convolution
/// product (the first convolution power already has two factors).
pub fn check_conv_nilpotency<I>(inst: Rc<I>, a: &I::Basis, n: usize) -> bool
where
    I: EpsBialgebra + 'static,
{
    let mut comp = LinComb::basis(a.clone());
    for _ in 0..=n {
        comp = apply_d(&*inst, &comp);
    }
    if !comp.is_zero() {
        return false;
    }
    let d = derivation_op(inst.clone());
    let conv: LinOp<I::Basis> = convolution_power(inst, &d, n + 1);
    conv.apply_basis(a).is_zero()
}

/// Closed form of the divided-differences antipode on the generator `x_n`:
/// the signed sum over strict compositions of n+1, each part `nᵢ`
/// contributing the letter `x_{nᵢ−1}` (with `x₀` the empty word).
pub fn divided_diff_antipode_closed(n: u32) -> LinComb<Word> {
    assert!(n >= 1);
    let mut out = LinComb::zero();
    let mut parts = Vec::new();
    compositions(n + 1, &mut parts, &mut out);
    out
}

fn compositions(remaining: u32, parts: &mut Vec<u32>, out: &mut LinComb<Word>) {
    if remaining == 0 {
        let letters: Vec<u32> = parts.iter().filter(|&&p| p > 1).map(|&p| p - 1).collect();
        let sign = if parts.len() % 2 == 0 { Rat::one() } else { -Rat::one() };
        out.add_term(Word(letters), sign);
        return;
    }
    for p in 1..=remaining {
        parts.push(p);
        compositions(remaining - p, parts, out);
        parts.pop();
    }
}

/// The divided-differences instance is admissible, so the series antipode is
/// available there; this is the convenience entry point on generators.
pub fn divided_diff_antipode_series(n: u32) -> LinComb<Word> {
    antipode(&DividedDiff, &LinComb::basis(Word::letter(n))).expect("divided differences are nilpotent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eps::ForestAlgebra;
    use crate::forest::{Alphabets, Forest};
    use crate::instances::{foissy_instance, poly_instance, quiver_instance, test_quiver, Monomial};

    fn parse(s: &str) -> Forest {
        crate::textio::parse_forest(s, &Alphabets::default_labels()).unwrap()
    }

    fn lc(s: &str) -> LinComb<Forest> {
        LinComb::basis(parse(s))
    }

    #[test]
    fn d_on_small_forests() {
        let alg = ForestAlgebra;
        assert!(apply_d(&alg, &lc("1")).is_zero());
        assert_eq!(apply_d(&alg, &lc("x")), lc("1"));
        // D(a(x)) = •_x + •_a.
        assert_eq!(apply_d(&alg, &lc("a(x)")), lc("x").add(&lc("a")));
    }

    #[test]
    fn antipode_small_values() {
        let alg = ForestAlgebra;
        assert_eq!(antipode(&alg, &lc("1")).unwrap(), lc("1").neg());
        // S(•_x) = 1 − •_x.
        assert_eq!(antipode(&alg, &lc("x")).unwrap(), lc("1").sub(&lc("x")));
        // T(•_x) = −•_x − 1 and S(T(•_x)) = •_x.
        let t = antipode_inverse(&alg, &lc("x")).unwrap();
        assert_eq!(t, lc("x").neg().sub(&lc("1")));
        assert_eq!(antipode(&alg, &t).unwrap(), lc("x"));
    }

    #[test]
    fn antipode_is_bijective_on_samples() {
        let alg = ForestAlgebra;
        for s in ["1", "x", "a", "b a(x)", "w(b a(x))", "a(b g) x"] {
            let v = lc(s);
            assert_eq!(antipode(&alg, &antipode_inverse(&alg, &v).unwrap()).unwrap(), v);
            assert_eq!(antipode_inverse(&alg, &antipode(&alg, &v).unwrap()).unwrap(), v);
        }
    }

    #[test]
    fn axioms_on_small_forests() {
        let alg = ForestAlgebra;
        for s in ["1", "x", "a(x)", "b a(x)", "w(b a(x))"] {
            assert!(check_antipode_axioms(&alg, &parse(s)).unwrap().passed(), "axioms at {s}");
        }
    }

    #[test]
    fn refusals() {
        // Nonzero weight is rejected before the nilpotency question arises.
        let p = poly_instance(Rat::one());
        let err = antipode(&p, &LinComb::basis(Monomial(1))).unwrap_err();
        assert!(matches!(err, AntipodeError::NonzeroWeight { .. }));
        let f = foissy_instance();
        let err = antipode(&f, &LinComb::basis(Forest::empty())).unwrap_err();
        assert!(matches!(err, AntipodeError::NonzeroWeight { .. }));
    }

    #[test]
    fn poly_weight_zero_antipode_ok() {
        let p = poly_instance(Rat::zero());
        let s = antipode(&p, &LinComb::basis(Monomial(1))).unwrap();
        assert_eq!(s, LinComb::from_terms([(Monomial(0), Rat::one()), (Monomial(1), -Rat::one())]));
    }

    #[test]
    fn conv_nilpotency_examples() {
        let alg = Rc::new(ForestAlgebra);
        assert!(check_conv_nilpotency(alg.clone(), &Forest::empty(), 0));
        assert!(check_conv_nilpotency(alg.clone(), &parse("x"), 1));
        for s in ["a(x)", "b a(x)", "w(b a(x))"] {
            let f = parse(s);
            let n = f.vertex_count();
            assert!(check_conv_nilpotency(alg.clone(), &f, n), "nilpotency at {s}");
        }
    }

    #[test]
    fn quiver_antipode_axioms() {
        let q = quiver_instance(test_quiver()).unwrap();
        let p = q.spec.path(["a", "b", "c"]).unwrap();
        assert!(check_antipode_axioms(&q, &p).unwrap().passed());
        assert!(check_antipode_axioms(&q, &q.spec.trivial("2").unwrap()).unwrap().passed());
    }

    #[test]
    fn divided_diff_closed_form_small() {
        // S(x₁) = 1 − x₁.
        let expect = LinComb::from_terms([
            (Word::one(), Rat::one()),
            (Word::letter(1), -Rat::one()),
        ]);
        assert_eq!(divided_diff_antipode_closed(1), expect);
        assert_eq!(divided_diff_antipode_series(1), expect);
    }

    #[test]
    fn divided_diff_closed_equals_series() {
        for n in 1..=6 {
            assert_eq!(
                divided_diff_antipode_closed(n),
                divided_diff_antipode_series(n),
                "generator x_{n}"
            );
        }
    }
}

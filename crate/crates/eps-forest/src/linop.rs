//! Rule-based linear operators on a free module, with the convolution
//! products built from an instance's multiplication and comultiplication.

use std::rc::Rc;

use crate::eps::EpsBialgebra;
use crate::lincomb::{LinComb, Tensor2};

/// A linear endomorphism given by its rule on basis elements.
#[derive(Clone)]
pub struct LinOp<B: Ord + Clone + 'static> {
    rule: Rc<dyn Fn(&B) -> LinComb<B>>,
}

impl<B: Ord + Clone + 'static> LinOp<B> {
    pub fn new(rule: impl Fn(&B) -> LinComb<B> + 'static) -> Self {
        LinOp { rule: Rc::new(rule) }
    }

    pub fn identity() -> Self {
        LinOp::new(|b: &B| LinComb::basis(b.clone()))
    }

    pub fn zero() -> Self {
        LinOp::new(|_| LinComb::zero())
    }

    pub fn apply_basis(&self, b: &B) -> LinComb<B> {
        (self.rule)(b)
    }

    pub fn apply(&self, v: &LinComb<B>) -> LinComb<B> {
        v.map_linear(|b| (self.rule)(b))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinOp<B>) -> LinOp<B> {
        let f = self.clone();
        let g = other.clone();
        LinOp::new(move |b| f.apply(&g.apply_basis(b)))
    }

    pub fn add(&self, other: &LinOp<B>) -> LinOp<B> {
        let f = self.clone();
        let g = other.clone();
        LinOp::new(move |b| f.apply_basis(b).add(&g.apply_basis(b)))
    }

    pub fn neg(&self) -> LinOp<B> {
        let f = self.clone();
        LinOp::new(move |b| f.apply_basis(b).neg())
    }

    /// `self^(∘ n)`, n-fold composition; the identity for n = 0.
    pub fn power(&self, n: usize) -> LinOp<B> {
        let mut out = LinOp::identity();
        for _ in 0..n {
            out = self.compose(&out);
        }
        out
    }
}

/// Ordinary convolution `f ∗ g = m(f ⊗ g)Δ` in the instance.
pub fn convolve<I>(inst: Rc<I>, f: &LinOp<I::Basis>, g: &LinOp<I::Basis>) -> LinOp<I::Basis>
where
    I: EpsBialgebra + 'static,
{
    let f = f.clone();
    let g = g.clone();
    LinOp::new(move |b| {
        let mut out = LinComb::zero();
        for (Tensor2(l, r), c) in inst.coproduct(b).iter() {
            let prod = inst.product_lc(&f.apply_basis(l), &g.apply_basis(r));
            out = out.add(&prod.scale(c));
        }
        out
    })
}

/// Circular convolution `f ⊛ g = f ∗ g + f + g`; the zero map is its unit.
pub fn circ<I>(inst: Rc<I>, f: &LinOp<I::Basis>, g: &LinOp<I::Basis>) -> LinOp<I::Basis>
where
    I: EpsBialgebra + 'static,
{
    convolve(inst, f, g).add(f).add(g)
}

/// `D = mΔ`, the derivation-like square of an instance.
pub fn derivation_op<I>(inst: Rc<I>) -> LinOp<I::Basis>
where
    I: EpsBialgebra + 'static,
{
    LinOp::new(move |b| {
        let mut out = LinComb::zero();
        for (Tensor2(l, r), c) in inst.coproduct(b).iter() {
            out = out.add(&inst.product(l, r).scale(c));
        }
        out
    })
}

/// The k-th convolution power of `f` in the convention where the first power
/// already has two factors: `f^{∗k} = f ∗ f ∗ ... ∗ f` with k+1 factors.
pub fn convolution_power<I>(inst: Rc<I>, f: &LinOp<I::Basis>, k: usize) -> LinOp<I::Basis>
where
    I: EpsBialgebra + 'static,
{
    let mut out = f.clone();
    for _ in 0..k {
        out = convolve(inst.clone(), &out, f);
    }
    out
}

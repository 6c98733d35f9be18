//! Free modules over an ordered basis: finite formal sums with exact rational
//! coefficients, plus tensor-square and tensor-cube bases.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rat::Rat;

/// Ordered pair of basis elements, a basis element of the tensor square.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor2<B>(pub B, pub B);

/// Ordered triple of basis elements, used for coassociativity checks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor3<B>(pub B, pub B, pub B);

impl<B: fmt::Display> fmt::Display for Tensor2<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) # ({})", self.0, self.1)
    }
}

impl<B: fmt::Display> fmt::Display for Tensor3<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) # ({}) # ({})", self.0, self.1, self.2)
    }
}

/// Basis element of a tensor product of two different modules.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairBasis<A, B>(pub A, pub B);

impl<A: fmt::Display, B: fmt::Display> fmt::Display for PairBasis<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})x({})", self.0, self.1)
    }
}

/// A finite formal sum of basis elements with nonzero rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is module
/// equality. Iteration follows the canonical basis order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinComb<B: Ord + Clone> {
    terms: BTreeMap<B, Rat>,
}

impl<B: Ord + Clone> Default for LinComb<B> {
    fn default() -> Self {
        LinComb::zero()
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    /// The basis element `b` with coefficient 1.
    pub fn basis(b: B) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(b, Rat::one());
        LinComb { terms }
    }

    pub fn term(b: B, c: Rat) -> Self {
        let mut lc = LinComb::zero();
        lc.add_term(b, c);
        lc
    }

    pub fn from_terms(it: impl IntoIterator<Item = (B, Rat)>) -> Self {
        let mut lc = LinComb::zero();
        for (b, c) in it {
            lc.add_term(b, c);
        }
        lc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Rat {
        self.terms.get(b).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, b: B, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return LinComb::zero();
        }
        LinComb { terms: self.terms.iter().map(|(b, k)| (b.clone(), c * k)).collect() }
    }

    pub fn neg(&self) -> Self {
        LinComb { terms: self.terms.iter().map(|(b, k)| (b.clone(), -k)).collect() }
    }

    /// Linear extension of a basis-level map.
    pub fn map_linear<C: Ord + Clone>(&self, f: impl Fn(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            for (img, k) in f(b).terms {
                out.add_term(img, c * &k);
            }
        }
        out
    }

    /// Bilinear tensor of two linear combinations: coefficients multiply.
    pub fn tensor(&self, other: &Self) -> LinComb<Tensor2<B>> {
        let mut out = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(Tensor2(a.clone(), b.clone()), ca * cb);
            }
        }
        out
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: Self) -> LinComb<B> {
        LinComb::add(self, rhs)
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: Self) -> LinComb<B> {
        LinComb::sub(self, rhs)
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        LinComb::neg(self)
    }
}

impl<B: Ord + Clone> Mul<&Rat> for &LinComb<B> {
    type Output = LinComb<B>;
    fn mul(self, rhs: &Rat) -> LinComb<B> {
        self.scale(rhs)
    }
}

impl<B: Ord + Clone + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("- ")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{a} * {b}")?;
            }
        }
        Ok(())
    }
}

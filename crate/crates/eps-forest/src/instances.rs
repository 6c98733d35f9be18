//! Concrete weighted infinitesimal bialgebras beyond decorated forests:
//! polynomials in one variable at an arbitrary weight, the divided-differences
//! algebra on words, quiver path algebras, the weight −1 forest bialgebra,
//! and the trivial coproduct.

use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use serde::Deserialize;

use crate::eps::EpsBialgebra;
use crate::forest::{graft, Decoration, Forest};
use crate::lincomb::{LinComb, Tensor2};
use crate::rat::Rat;

// ---------------------------------------------------------------------------
// k[x] at weight λ.
// ---------------------------------------------------------------------------

/// Basis monomial `x^n` of the one-variable polynomial algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub usize);

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("1"),
            1 => f.write_str("x"),
            n => write!(f, "x^{n}"),
        }
    }
}

impl FromStr for Monomial {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "1" => Ok(Monomial(0)),
            "x" => Ok(Monomial(1)),
            _ => {
                let n = s
                    .strip_prefix("x^")
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(|| format!("expected `1`, `x` or `x^N`, got `{s}`"))?;
                Ok(Monomial(n))
            }
        }
    }
}

/// Polynomials in one variable, a unitary instance of arbitrary weight:
/// `Δ(1) = −λ(1⊗1)`, `Δ(x) = 1⊗1`, and on higher powers
/// `Δ(xⁿ) = Σ_{i=0}^{n−1} xⁱ⊗x^{n−1−i} + λ Σ_{i=1}^{n−1} xⁱ⊗x^{n−i}`.
#[derive(Debug, Clone)]
pub struct PolyAlgebra {
    pub lambda: Rat,
}

pub fn poly_instance(lambda: Rat) -> PolyAlgebra {
    PolyAlgebra { lambda }
}

impl EpsBialgebra for PolyAlgebra {
    type Basis = Monomial;

    fn weight(&self) -> Rat {
        self.lambda.clone()
    }

    fn unit(&self) -> Option<Monomial> {
        Some(Monomial(0))
    }

    fn product(&self, a: &Monomial, b: &Monomial) -> LinComb<Monomial> {
        LinComb::basis(Monomial(a.0 + b.0))
    }

    fn coproduct(&self, a: &Monomial) -> LinComb<Tensor2<Monomial>> {
        let n = a.0;
        if n == 0 {
            return LinComb::term(Tensor2(Monomial(0), Monomial(0)), -&self.lambda);
        }
        let mut out = LinComb::zero();
        for i in 0..n {
            out.add_term(Tensor2(Monomial(i), Monomial(n - 1 - i)), Rat::one());
        }
        for i in 1..n {
            out.add_term(Tensor2(Monomial(i), Monomial(n - i)), self.lambda.clone());
        }
        out
    }

    fn nilpotency_bound(&self, a: &Monomial) -> Option<usize> {
        // D(1) = −λ, so D is locally nilpotent only at weight zero.
        if self.lambda.is_zero() {
            Some(a.0)
        } else {
            None
        }
    }
}

// ---------------------------------------------------------------------------
// Divided differences on words.
// ---------------------------------------------------------------------------

/// A word in the letters `x₁, x₂, …`, stored by letter index. The empty word
/// is the unit. Prints as `1` or space-separated letters, e.g. `x2 x1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn letter(n: u32) -> Self {
        assert!(n > 0, "letters are x_n with n >= 1");
        Word(vec![n])
    }

    /// Total degree `Σ nᵢ` of `x_{n₁}⋯x_{n_m}`.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&n| n as usize).sum()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{n}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::one());
        }
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let n = tok
                .strip_prefix('x')
                .and_then(|d| d.parse::<u32>().ok())
                .filter(|&n| n > 0)
                .ok_or_else(|| format!("expected a letter like `x3`, got `{tok}`"))?;
            letters.push(n);
        }
        Ok(Word(letters))
    }
}

/// The free algebra `k⟨x₁, x₂, …⟩` with the weight-0 coproduct determined by
/// `Δ(x_n) = Σ_{i=0}^{n−1} x_i ⊗ x_{n−1−i}` (with `x₀ = 1`) and the
/// derivation rule on products.
#[derive(Debug, Clone, Copy, Default)]
pub struct DividedDiff;

pub fn divided_diff_instance() -> DividedDiff {
    DividedDiff
}

impl EpsBialgebra for DividedDiff {
    type Basis = Word;

    fn weight(&self) -> Rat {
        Rat::zero()
    }

    fn unit(&self) -> Option<Word> {
        Some(Word::one())
    }

    fn product(&self, a: &Word, b: &Word) -> LinComb<Word> {
        let mut w = a.0.clone();
        w.extend(&b.0);
        LinComb::basis(Word(w))
    }

    fn coproduct(&self, a: &Word) -> LinComb<Tensor2<Word>> {
        match a.0.split_first() {
            None => LinComb::zero(),
            Some((&n, rest)) => {
                let rest = Word(rest.to_vec());
                let mut out = LinComb::zero();
                // x_n · Δ(rest)
                for (Tensor2(l, r), c) in self.coproduct(&rest).iter() {
                    let mut left = vec![n];
                    left.extend(&l.0);
                    out.add_term(Tensor2(Word(left), r.clone()), c.clone());
                }
                // Δ(x_n) · rest, with Δ(x_n) = Σ x_i ⊗ x_{n−1−i}, x₀ = 1.
                for i in 0..n {
                    let left = if i == 0 { Word::one() } else { Word::letter(i) };
                    let j = n - 1 - i;
                    let mut right = if j == 0 { Vec::new() } else { vec![j] };
                    right.extend(&rest.0);
                    out.add_term(Tensor2(left, Word(right)), Rat::one());
                }
                out
            }
        }
    }

    fn nilpotency_bound(&self, a: &Word) -> Option<usize> {
        Some(a.degree())
    }
}

// ---------------------------------------------------------------------------
// Quiver path algebras.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` references unknown vertex `{vertex}`")]
    UnknownEndpoint { arrow: String, vertex: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("arrows `{left}` and `{right}` are not composable")]
    NonComposable { left: String, right: String },
    #[error("a path needs at least one arrow")]
    EmptyPath,
}

/// One arrow of a quiver, with its source and target vertices.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

/// A finite quiver: vertices plus named arrows.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl QuiverSpec {
    /// Rejects duplicate names and arrows with undeclared endpoints.
    pub fn validate(&self) -> Result<(), QuiverError> {
        let mut seen = std::collections::BTreeSet::new();
        for v in &self.vertices {
            if !seen.insert(v.clone()) {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        let mut names = std::collections::BTreeSet::new();
        for a in &self.arrows {
            if !names.insert(a.name.clone()) {
                return Err(QuiverError::DuplicateArrow(a.name.clone()));
            }
            for v in [&a.src, &a.tgt] {
                if !seen.contains(v) {
                    return Err(QuiverError::UnknownEndpoint {
                        arrow: a.name.clone(),
                        vertex: v.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn arrow(&self, name: &str) -> Result<&Arrow, QuiverError> {
        self.arrows
            .iter()
            .find(|a| a.name == name)
            .ok_or_else(|| QuiverError::UnknownArrow(name.to_string()))
    }

    /// Trivial path at a vertex.
    pub fn trivial(&self, v: &str) -> Result<Path, QuiverError> {
        if self.vertices.iter().any(|u| u == v) {
            Ok(Path::Vertex(v.to_string()))
        } else {
            Err(QuiverError::UnknownVertex(v.to_string()))
        }
    }

    /// A composable path `a₁⋯a_n`; rejects unknown or non-composable arrows.
    pub fn path<'a>(&self, arrows: impl IntoIterator<Item = &'a str>) -> Result<Path, QuiverError> {
        let names: Vec<String> = arrows.into_iter().map(str::to_string).collect();
        if names.is_empty() {
            return Err(QuiverError::EmptyPath);
        }
        for pair in names.windows(2) {
            let left = self.arrow(&pair[0])?;
            let right = self.arrow(&pair[1])?;
            if left.tgt != right.src {
                return Err(QuiverError::NonComposable {
                    left: pair[0].clone(),
                    right: pair[1].clone(),
                });
            }
        }
        self.arrow(names.last().unwrap())?;
        Ok(Path::Arrows(names))
    }

    /// Parses `e(v)` as a trivial path or whitespace-separated arrow names.
    pub fn parse_path(&self, s: &str) -> Result<Path, QuiverError> {
        let s = s.trim();
        if let Some(v) = s.strip_prefix("e(").and_then(|r| r.strip_suffix(')')) {
            return self.trivial(v.trim());
        }
        self.path(s.split_whitespace())
    }

    fn path_src(&self, p: &Path) -> String {
        match p {
            Path::Vertex(v) => v.clone(),
            Path::Arrows(a) => self.arrow(&a[0]).unwrap().src.clone(),
        }
    }

    fn path_tgt(&self, p: &Path) -> String {
        match p {
            Path::Vertex(v) => v.clone(),
            Path::Arrows(a) => self.arrow(a.last().unwrap()).unwrap().tgt.clone(),
        }
    }
}

/// A basis path of the path algebra: a trivial path at a vertex, or a
/// nonempty composable arrow sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Path {
    Vertex(String),
    Arrows(Vec<String>),
}

impl Path {
    pub fn len(&self) -> usize {
        match self {
            Path::Vertex(_) => 0,
            Path::Arrows(a) => a.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Path::Vertex(v) => write!(f, "e({v})"),
            Path::Arrows(a) => f.write_str(&a.join(" ")),
        }
    }
}

/// The path algebra of a finite quiver: a non-unitary weight-0 instance.
/// Products of non-composable paths vanish; the coproduct deletes one arrow
/// at a time, with trivial paths standing in for empty ends.
#[derive(Debug, Clone)]
pub struct QuiverAlgebra {
    pub spec: Rc<QuiverSpec>,
}

pub fn quiver_instance(spec: QuiverSpec) -> Result<QuiverAlgebra, QuiverError> {
    spec.validate()?;
    Ok(QuiverAlgebra { spec: Rc::new(spec) })
}

impl EpsBialgebra for QuiverAlgebra {
    type Basis = Path;

    fn weight(&self) -> Rat {
        Rat::zero()
    }

    fn unit(&self) -> Option<Path> {
        // The sum of all trivial paths would be a unit, but it is not a basis
        // element; the instance is treated as non-unitary.
        None
    }

    fn product(&self, a: &Path, b: &Path) -> LinComb<Path> {
        if self.spec.path_tgt(a) != self.spec.path_src(b) {
            return LinComb::zero();
        }
        let out = match (a, b) {
            (Path::Vertex(_), p) => p.clone(),
            (p, Path::Vertex(_)) => p.clone(),
            (Path::Arrows(p), Path::Arrows(q)) => {
                let mut r = p.clone();
                r.extend(q.iter().cloned());
                Path::Arrows(r)
            }
        };
        LinComb::basis(out)
    }

    fn coproduct(&self, a: &Path) -> LinComb<Tensor2<Path>> {
        let arrows = match a {
            Path::Vertex(_) => return LinComb::zero(),
            Path::Arrows(arrows) => arrows,
        };
        let mut out = LinComb::zero();
        for i in 0..arrows.len() {
            let left = if i == 0 {
                Path::Vertex(self.spec.arrow(&arrows[0]).unwrap().src.clone())
            } else {
                Path::Arrows(arrows[..i].to_vec())
            };
            let right = if i + 1 == arrows.len() {
                Path::Vertex(self.spec.arrow(arrows.last().unwrap()).unwrap().tgt.clone())
            } else {
                Path::Arrows(arrows[i + 1..].to_vec())
            };
            out.add_term(Tensor2(left, right), Rat::one());
        }
        out
    }

    fn nilpotency_bound(&self, a: &Path) -> Option<usize> {
        Some(a.len())
    }
}

// ---------------------------------------------------------------------------
// Undecorated planar forests at weight −1.
// ---------------------------------------------------------------------------

/// The single decoration used for undecorated forests.
pub const FOISSY_LABEL: &str = "o";

/// Undecorated planar rooted forests at weight −1:
/// `Δ(1) = 1⊗1`, `Δ(B⁺(F̄)) = B⁺(F̄)⊗1 + (id⊗B⁺)Δ(F̄)`, and the weight −1
/// rule on concatenations. Not locally nilpotent, so no antipode.
#[derive(Debug, Clone, Copy, Default)]
pub struct FoissyAlgebra;

pub fn foissy_instance() -> FoissyAlgebra {
    FoissyAlgebra
}

impl FoissyAlgebra {
    fn deco() -> Decoration {
        Decoration::omega(FOISSY_LABEL)
    }

    /// The single undecorated vertex `•`.
    pub fn bullet() -> Forest {
        Forest::bullet(Self::deco())
    }

    /// Grafting with the implicit decoration.
    pub fn graft(f: &Forest) -> Forest {
        Forest::single(graft(&Self::deco(), f).expect("implicit label is Omega"))
    }
}

impl EpsBialgebra for FoissyAlgebra {
    type Basis = Forest;

    fn weight(&self) -> Rat {
        Rat::from_int(-1)
    }

    fn unit(&self) -> Option<Forest> {
        Some(Forest::empty())
    }

    fn product(&self, a: &Forest, b: &Forest) -> LinComb<Forest> {
        LinComb::basis(a.concat(b))
    }

    fn coproduct(&self, a: &Forest) -> LinComb<Tensor2<Forest>> {
        match a.breadth() {
            0 => LinComb::basis(Tensor2(Forest::empty(), Forest::empty())),
            1 => {
                let inner = Forest::from_trees(a.trees()[0].children().to_vec());
                let mut out = LinComb::basis(Tensor2(a.clone(), Forest::empty()));
                for (Tensor2(l, r), c) in self.coproduct(&inner).iter() {
                    out.add_term(Tensor2(l.clone(), Self::graft(r)), c.clone());
                }
                out
            }
            _ => {
                let head = Forest::single(a.trees()[0].clone());
                let tail = Forest::from_trees(a.trees()[1..].to_vec());
                let mut out = LinComb::zero();
                for (Tensor2(l, r), c) in self.coproduct(&tail).iter() {
                    out.add_term(Tensor2(head.concat(l), r.clone()), c.clone());
                }
                for (Tensor2(l, r), c) in self.coproduct(&head).iter() {
                    out.add_term(Tensor2(l.clone(), r.concat(&tail)), c.clone());
                }
                out.add_term(Tensor2(head, tail), Rat::from_int(-1));
                out
            }
        }
    }

    fn nilpotency_bound(&self, _a: &Forest) -> Option<usize> {
        // D(1) = 1 already makes D^k(1) nonzero for every k.
        None
    }
}

// ---------------------------------------------------------------------------
// The trivial coproduct.
// ---------------------------------------------------------------------------

/// Monomials with `Δ = 0`: every law holds vacuously and `S = −id`.
#[derive(Debug, Clone, Copy, Default)]
pub struct TrivialAlgebra;

pub fn trivial_instance() -> TrivialAlgebra {
    TrivialAlgebra
}

impl EpsBialgebra for TrivialAlgebra {
    type Basis = Monomial;

    fn weight(&self) -> Rat {
        Rat::zero()
    }

    fn unit(&self) -> Option<Monomial> {
        Some(Monomial(0))
    }

    fn product(&self, a: &Monomial, b: &Monomial) -> LinComb<Monomial> {
        LinComb::basis(Monomial(a.0 + b.0))
    }

    fn coproduct(&self, _a: &Monomial) -> LinComb<Tensor2<Monomial>> {
        LinComb::zero()
    }

    fn nilpotency_bound(&self, _a: &Monomial) -> Option<usize> {
        Some(0)
    }
}

/// A small quiver used across tests and examples:
/// four vertices in a row, arrows `a: 1→2`, `b: 2→3`, `c: 3→4`, plus a loop
/// `l: 2→2`.
pub fn test_quiver() -> QuiverSpec {
    QuiverSpec {
        vertices: ["1", "2", "3", "4"].map(String::from).to_vec(),
        arrows: vec![
            Arrow { name: "a".into(), src: "1".into(), tgt: "2".into() },
            Arrow { name: "b".into(), src: "2".into(), tgt: "3".into() },
            Arrow { name: "c".into(), src: "3".into(), tgt: "4".into() },
            Arrow { name: "l".into(), src: "2".into(), tgt: "2".into() },
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eps::{check_coassoc, check_compat};

    fn t2<B>(a: B, b: B) -> Tensor2<B> {
        Tensor2(a, b)
    }

    #[test]
    fn poly_coproduct_examples() {
        let lam = Rat::from_int(3);
        let p = poly_instance(lam.clone());
        assert_eq!(p.coproduct(&Monomial(1)), LinComb::basis(t2(Monomial(0), Monomial(0))));
        assert_eq!(
            p.coproduct(&Monomial(0)),
            LinComb::term(t2(Monomial(0), Monomial(0)), -&lam)
        );
        // Δ(x²) = 1⊗x + x⊗1 + λ(x⊗x).
        let expect = LinComb::from_terms([
            (t2(Monomial(0), Monomial(1)), Rat::one()),
            (t2(Monomial(1), Monomial(0)), Rat::one()),
            (t2(Monomial(1), Monomial(1)), lam),
        ]);
        assert_eq!(p.coproduct(&Monomial(2)), expect);
    }

    #[test]
    fn poly_laws_small() {
        for lam in [Rat::zero(), Rat::one(), Rat::from_int(-1), Rat::new(3, 2)] {
            let p = poly_instance(lam);
            for m in 0..=6 {
                assert!(check_coassoc(&p, &Monomial(m)).passed(), "coassoc x^{m}");
                for n in 0..=6 {
                    assert!(check_compat(&p, &Monomial(m), &Monomial(n)).passed());
                }
            }
        }
    }

    #[test]
    fn monomial_text_round_trip() {
        for m in [Monomial(0), Monomial(1), Monomial(7)] {
            assert_eq!(m.to_string().parse::<Monomial>().unwrap(), m);
        }
        assert!("x^".parse::<Monomial>().is_err());
    }

    #[test]
    fn divided_diff_examples() {
        let d = divided_diff_instance();
        let w = |ls: &[u32]| Word(ls.to_vec());
        assert_eq!(d.coproduct(&w(&[1])), LinComb::basis(t2(Word::one(), Word::one())));
        // Δ(x₂) = 1⊗x₁ + x₁⊗1.
        let expect = LinComb::from_terms([
            (t2(Word::one(), w(&[1])), Rat::one()),
            (t2(w(&[1]), Word::one()), Rat::one()),
        ]);
        assert_eq!(d.coproduct(&w(&[2])), expect);
        // Δ(x₁x₁) = x₁⊗1 + 1⊗x₁.
        let expect = LinComb::from_terms([
            (t2(w(&[1]), Word::one()), Rat::one()),
            (t2(Word::one(), w(&[1])), Rat::one()),
        ]);
        assert_eq!(d.coproduct(&w(&[1, 1])), expect);
        assert!(d.coproduct(&Word::one()).is_zero());
    }

    #[test]
    fn divided_diff_laws_small() {
        let d = divided_diff_instance();
        let words = [
            Word::one(),
            Word(vec![1]),
            Word(vec![2]),
            Word(vec![3]),
            Word(vec![1, 2]),
            Word(vec![2, 1]),
            Word(vec![1, 1, 1]),
            Word(vec![4, 2]),
        ];
        for u in &words {
            assert!(check_coassoc(&d, u).passed(), "coassoc {u}");
            for v in &words {
                assert!(check_compat(&d, u, v).passed(), "compat {u}, {v}");
            }
        }
    }

    #[test]
    fn word_text_round_trip() {
        for w in [Word::one(), Word(vec![2, 1]), Word(vec![10])] {
            assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
        }
        assert!("y1".parse::<Word>().is_err());
        assert!("x0".parse::<Word>().is_err());
    }

    #[test]
    fn quiver_validation() {
        assert!(test_quiver().validate().is_ok());
        let mut bad = test_quiver();
        bad.arrows.push(Arrow { name: "z".into(), src: "1".into(), tgt: "9".into() });
        assert!(matches!(bad.validate(), Err(QuiverError::UnknownEndpoint { .. })));
        let q = test_quiver();
        assert!(matches!(q.path(["a", "c"]), Err(QuiverError::NonComposable { .. })));
        assert!(matches!(q.path(["zz"]), Err(QuiverError::UnknownArrow(_))));
        assert!(q.path(["a", "l", "b", "c"]).is_ok());
    }

    #[test]
    fn quiver_coproduct_examples() {
        let q = quiver_instance(test_quiver()).unwrap();
        let e1 = q.spec.trivial("1").unwrap();
        assert!(q.coproduct(&e1).is_zero());
        // Δ(a) = e(1) ⊗ e(2).
        let a = q.spec.path(["a"]).unwrap();
        assert_eq!(
            q.coproduct(&a),
            LinComb::basis(t2(q.spec.trivial("1").unwrap(), q.spec.trivial("2").unwrap()))
        );
        // Δ(ab) = e(1)⊗b + a⊗e(3).
        let ab = q.spec.path(["a", "b"]).unwrap();
        let expect = LinComb::from_terms([
            (t2(q.spec.trivial("1").unwrap(), q.spec.path(["b"]).unwrap()), Rat::one()),
            (t2(q.spec.path(["a"]).unwrap(), q.spec.trivial("3").unwrap()), Rat::one()),
        ]);
        assert_eq!(q.coproduct(&ab), expect);
    }

    #[test]
    fn quiver_product_and_laws() {
        let q = quiver_instance(test_quiver()).unwrap();
        let a = q.spec.path(["a"]).unwrap();
        let b = q.spec.path(["b"]).unwrap();
        let c = q.spec.path(["c"]).unwrap();
        assert_eq!(q.product(&a, &b), LinComb::basis(q.spec.path(["a", "b"]).unwrap()));
        assert!(q.product(&a, &c).is_zero());
        assert_eq!(q.product(&q.spec.trivial("1").unwrap(), &a), LinComb::basis(a.clone()));
        assert!(q.product(&q.spec.trivial("2").unwrap(), &a).is_zero());
        let paths = [
            q.spec.trivial("2").unwrap(),
            a.clone(),
            q.spec.path(["a", "l"]).unwrap(),
            q.spec.path(["a", "l", "l", "b"]).unwrap(),
            q.spec.path(["a", "b", "c"]).unwrap(),
        ];
        for p in &paths {
            assert!(check_coassoc(&q, p).passed(), "coassoc {p}");
            for r in &paths {
                assert!(check_compat(&q, p, r).passed(), "compat {p}, {r}");
            }
        }
    }

    #[test]
    fn path_text_round_trip() {
        let q = test_quiver();
        for s in ["e(2)", "a l b c"] {
            assert_eq!(q.parse_path(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn foissy_examples() {
        let f = foissy_instance();
        let one = Forest::empty();
        let dot = FoissyAlgebra::bullet();
        let ladder = FoissyAlgebra::graft(&dot);
        assert_eq!(f.coproduct(&one), LinComb::basis(t2(one.clone(), one.clone())));
        // Δ(•) = •⊗1 + 1⊗•.
        let expect = LinComb::from_terms([
            (t2(dot.clone(), one.clone()), Rat::one()),
            (t2(one.clone(), dot.clone()), Rat::one()),
        ]);
        assert_eq!(f.coproduct(&dot), expect);
        // Δ(ladder₂) = ladder₂⊗1 + •⊗• + 1⊗ladder₂.
        let expect = LinComb::from_terms([
            (t2(ladder.clone(), one.clone()), Rat::one()),
            (t2(dot.clone(), dot.clone()), Rat::one()),
            (t2(one.clone(), ladder.clone()), Rat::one()),
        ]);
        assert_eq!(f.coproduct(&ladder), expect);
        // Δ(• ladder₂) = • ladder₂⊗1 + ••⊗• + •⊗ladder₂ + 1⊗• ladder₂.
        let dl = dot.concat(&ladder);
        let expect = LinComb::from_terms([
            (t2(dl.clone(), one.clone()), Rat::one()),
            (t2(dot.concat(&dot), dot.clone()), Rat::one()),
            (t2(dot.clone(), ladder.clone()), Rat::one()),
            (t2(one.clone(), dl.clone()), Rat::one()),
        ]);
        assert_eq!(f.coproduct(&dl), expect);
    }

    #[test]
    fn foissy_laws_small() {
        let f = foissy_instance();
        let one = Forest::empty();
        let dot = FoissyAlgebra::bullet();
        let ladder = FoissyAlgebra::graft(&dot);
        let cherry = FoissyAlgebra::graft(&dot.concat(&dot));
        let sample = [one, dot.clone(), ladder, cherry, dot.concat(&dot)];
        for u in &sample {
            assert!(check_coassoc(&f, u).passed(), "coassoc {u}");
            for v in &sample {
                assert!(check_compat(&f, u, v).passed(), "compat {u}, {v}");
            }
        }
    }

    #[test]
    fn foissy_counit_relation() {
        // Δ(1) = −λ(1⊗1) with λ = −1.
        let f = foissy_instance();
        let one = Forest::empty();
        assert_eq!(
            f.coproduct(&one),
            LinComb::term(t2(one.clone(), one), -&f.weight())
        );
    }

    #[test]
    fn trivial_instance_facts() {
        let t = trivial_instance();
        assert!(t.coproduct(&Monomial(5)).is_zero());
        assert!(check_compat(&t, &Monomial(2), &Monomial(3)).passed());
        assert_eq!(t.nilpotency_bound(&Monomial(9)), Some(0));
    }
}

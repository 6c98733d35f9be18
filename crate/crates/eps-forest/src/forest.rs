//! Decorated planar rooted forests.
//!
//! A forest is an ordered (planar) sequence of rooted trees. Every internal
//! vertex carries a label from the operator alphabet Ω; leaves may carry a
//! label from either the generator alphabet X or from Ω. The empty forest is
//! the unit for concatenation.
//!
//! Besides the constructors (grafting and concatenation) this module houses
//! the total vertex order "higher or more on the left", the proper biideals
//! it induces, and restriction of a forest to a vertex subset. Those three
//! together drive the combinatorial coproduct.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

/// Which alphabet a vertex label belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DecorationKind {
    /// Generator alphabet; X-labelled vertices must be leaves.
    X,
    /// Operator alphabet; the only kind allowed on internal vertices.
    Omega,
}

/// A vertex label together with the alphabet it was declared in.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decoration {
    pub kind: DecorationKind,
    pub label: String,
}

impl Decoration {
    pub fn x(label: impl Into<String>) -> Self {
        Decoration { kind: DecorationKind::X, label: label.into() }
    }

    pub fn omega(label: impl Into<String>) -> Self {
        Decoration { kind: DecorationKind::Omega, label: label.into() }
    }
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// The two declared label alphabets. X and Ω must be disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabets {
    x: BTreeSet<String>,
    omega: BTreeSet<String>,
}

impl Alphabets {
    pub fn new<I, J>(x: I, omega: J) -> Result<Self, ForestError>
    where
        I: IntoIterator,
        I::Item: Into<String>,
        J: IntoIterator,
        J::Item: Into<String>,
    {
        let x: BTreeSet<String> = x.into_iter().map(Into::into).collect();
        let omega: BTreeSet<String> = omega.into_iter().map(Into::into).collect();
        if let Some(l) = x.intersection(&omega).next() {
            return Err(ForestError::OverlappingAlphabets { label: l.clone() });
        }
        Ok(Alphabets { x, omega })
    }

    /// X = {x, y, z}, Ω = {a, b, g, w}: covers the worked examples once the
    /// Greek letters are transliterated (α→a, β→b, γ→g, ω→w).
    pub fn default_labels() -> Self {
        Alphabets::new(["x", "y", "z"], ["a", "b", "g", "w"]).unwrap()
    }

    /// Classify a label, or report it as undeclared.
    pub fn decoration(&self, label: &str) -> Result<Decoration, ForestError> {
        if self.x.contains(label) {
            Ok(Decoration::x(label))
        } else if self.omega.contains(label) {
            Ok(Decoration::omega(label))
        } else {
            Err(ForestError::UnknownLabel { label: label.to_string() })
        }
    }

    pub fn x_labels(&self) -> impl Iterator<Item = &str> {
        self.x.iter().map(String::as_str)
    }

    pub fn omega_labels(&self) -> impl Iterator<Item = &str> {
        self.omega.iter().map(String::as_str)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ForestError {
    #[error("label `{label}` is declared in both X and Omega")]
    OverlappingAlphabets { label: String },
    #[error("label `{label}` is not declared in X or Omega")]
    UnknownLabel { label: String },
    #[error("X-label `{label}` cannot decorate an internal vertex")]
    XLabelInternal { label: String },
    #[error("grafting root must carry an Omega label, got X-label `{label}`")]
    GraftWithXLabel { label: String },
    #[error("vertex {0:?} is not a vertex of this forest")]
    UnknownVertex(VertexId),
}

/// A decorated planar rooted tree. Children are ordered left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    root: Decoration,
    children: Vec<Tree>,
}

impl Tree {
    /// Builds a tree, enforcing that internal vertices carry Ω-labels.
    pub fn new(root: Decoration, children: Vec<Tree>) -> Result<Self, ForestError> {
        if !children.is_empty() && root.kind != DecorationKind::Omega {
            return Err(ForestError::XLabelInternal { label: root.label });
        }
        Ok(Tree { root, children })
    }

    pub fn leaf(root: Decoration) -> Self {
        Tree { root, children: Vec::new() }
    }

    pub fn root(&self) -> &Decoration {
        &self.root
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(Tree::vertex_count).sum::<usize>()
    }

    fn depth(&self) -> usize {
        if self.children.is_empty() {
            match self.root.kind {
                DecorationKind::X => 0,
                DecorationKind::Omega => 1,
            }
        } else {
            1 + self.children.iter().map(Tree::depth).max().unwrap_or(0)
        }
    }

    fn write_canonical(&self, out: &mut String) {
        out.push_str(&self.root.label);
        if !self.children.is_empty() {
            out.push('(');
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                c.write_canonical(out);
            }
            out.push(')');
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_canonical(&mut s);
        f.write_str(&s)
    }
}

/// Path address of a vertex: tree index followed by child indices.
///
/// Addresses are stable because forests are immutable values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub Vec<usize>);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "]")
    }
}

/// An ordered sequence of decorated planar rooted trees.
///
/// The empty sequence is the unit forest `1`. Forests compare by their
/// canonical printed form, so printing and map iteration are deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Forest {
    trees: Vec<Tree>,
}

/// How two vertices compare in the total order `<=_{h,l}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HlOrdering {
    Less,
    Equal,
    Greater,
}

impl Forest {
    /// The unit forest `1`.
    pub fn empty() -> Self {
        Forest { trees: Vec::new() }
    }

    pub fn from_trees(trees: Vec<Tree>) -> Self {
        Forest { trees }
    }

    pub fn single(tree: Tree) -> Self {
        Forest { trees: vec![tree] }
    }

    /// Single-vertex forest `•_d`.
    pub fn bullet(d: Decoration) -> Self {
        Forest::single(Tree::leaf(d))
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Number of top-level trees.
    pub fn breadth(&self) -> usize {
        self.trees.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.trees.iter().map(Tree::vertex_count).sum()
    }

    /// Least `n` with the forest in the n-th stage of the recursive filtration:
    /// X-leaves live at stage 0, grafting raises the stage by one.
    pub fn depth(&self) -> usize {
        self.trees.iter().map(Tree::depth).max().unwrap_or(0)
    }

    /// Concatenation; associative with the empty forest as two-sided unit.
    pub fn concat(&self, other: &Forest) -> Forest {
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        Forest { trees }
    }

    pub fn decoration_at(&self, v: &VertexId) -> Result<&Decoration, ForestError> {
        let mut path = v.0.iter();
        let first = *path.next().ok_or_else(|| ForestError::UnknownVertex(v.clone()))?;
        let mut node = self.trees.get(first).ok_or_else(|| ForestError::UnknownVertex(v.clone()))?;
        for &i in path {
            node = node.children.get(i).ok_or_else(|| ForestError::UnknownVertex(v.clone()))?;
        }
        Ok(&node.root)
    }

    /// All vertex addresses, in planar (preorder) reading order.
    pub fn vertices(&self) -> Vec<VertexId> {
        fn rec(t: &Tree, path: &mut Vec<usize>, out: &mut Vec<VertexId>) {
            out.push(VertexId(path.clone()));
            for (i, c) in t.children.iter().enumerate() {
                path.push(i);
                rec(c, path, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        for (i, t) in self.trees.iter().enumerate() {
            rec(t, &mut vec![i], &mut out);
        }
        out
    }

    /// Vertices in decreasing `<=_{h,l}` order: maximal vertex first, the root
    /// of the right-most tree last. This is left-to-right postorder.
    pub fn vertex_order(&self) -> Vec<VertexId> {
        fn rec(t: &Tree, path: &mut Vec<usize>, out: &mut Vec<VertexId>) {
            for (i, c) in t.children.iter().enumerate() {
                path.push(i);
                rec(c, path, out);
                path.pop();
            }
            out.push(VertexId(path.clone()));
        }
        let mut out = Vec::new();
        for (i, t) in self.trees.iter().enumerate() {
            rec(t, &mut vec![i], &mut out);
        }
        out
    }

    /// Direct implementation of the order relations "higher" and "more on the
    /// left", straight from their recursive definition. Serves as the
    /// independent oracle for [`Forest::vertex_order`].
    pub fn compare_hl(&self, u: &VertexId, v: &VertexId) -> Result<HlOrdering, ForestError> {
        self.decoration_at(u)?;
        self.decoration_at(v)?;
        if u == v {
            return Ok(HlOrdering::Equal);
        }
        // u <=_h v iff v sits strictly above u, i.e. u's path is a proper
        // prefix of v's path (edges run from roots toward leaves).
        let prefix = |a: &VertexId, b: &VertexId| b.0.len() > a.0.len() && b.0[..a.0.len()] == a.0[..];
        if prefix(u, v) {
            return Ok(HlOrdering::Less);
        }
        if prefix(v, u) {
            return Ok(HlOrdering::Greater);
        }
        // Not h-comparable: find the first index where the paths diverge;
        // the vertex in the more-left branch is the greater one.
        let k = u.0.iter().zip(v.0.iter()).take_while(|(a, b)| a == b).count();
        Ok(if u.0[k] < v.0[k] { HlOrdering::Greater } else { HlOrdering::Less })
    }

    /// The proper biideals `I_1 = ∅, I_2 = {u_1}, ..., I_n = {u_1..u_{n-1}}`,
    /// one per vertex, listed in that order.
    pub fn proper_biideals(&self) -> Vec<BTreeSet<VertexId>> {
        let order = self.vertex_order();
        let mut out = Vec::with_capacity(order.len());
        let mut acc = BTreeSet::new();
        for u in &order {
            out.push(acc.clone());
            acc.insert(u.clone());
        }
        out
    }

    /// Restriction `F|_I`: keep exactly the vertices in `I`; a kept vertex
    /// becomes a child of its nearest kept ancestor, otherwise a root.
    /// Sibling and root order follow the planar order of the original forest.
    ///
    /// Works for arbitrary subsets, not just biideals.
    pub fn restrict(&self, keep: &BTreeSet<VertexId>) -> Result<Forest, ForestError> {
        for v in keep {
            self.decoration_at(v)?;
        }
        fn rec(t: &Tree, path: &mut Vec<usize>, keep: &BTreeSet<VertexId>) -> Vec<Tree> {
            let mut sub = Vec::new();
            for (i, c) in t.children.iter().enumerate() {
                path.push(i);
                sub.extend(rec(c, path, keep));
                path.pop();
            }
            if keep.contains(&VertexId(path.clone())) {
                vec![Tree { root: t.root.clone(), children: sub }]
            } else {
                sub
            }
        }
        let mut trees = Vec::new();
        for (i, t) in self.trees.iter().enumerate() {
            trees.extend(rec(t, &mut vec![i], keep));
        }
        Ok(Forest { trees })
    }

    pub fn canonical_string(&self) -> String {
        let mut s = String::new();
        if self.trees.is_empty() {
            s.push('1');
        } else {
            for (i, t) in self.trees.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                t.write_canonical(&mut s);
            }
        }
        s
    }
}

/// Grafting `B⁺_ω`: attach the forest under a new root decorated by `omega`.
/// `graft(ω, 1)` is the single vertex `•_ω`.
pub fn graft(omega: &Decoration, forest: &Forest) -> Result<Tree, ForestError> {
    if omega.kind != DecorationKind::Omega {
        return Err(ForestError::GraftWithXLabel { label: omega.label.clone() });
    }
    Ok(Tree { root: omega.clone(), children: forest.trees.clone() })
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

// Canonical total order: lexicographic on the canonical printed form.
impl Ord for Forest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_string().cmp(&other.canonical_string())
    }
}

impl PartialOrd for Forest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(l: &str) -> Decoration {
        Decoration::x(l)
    }
    fn om(l: &str) -> Decoration {
        Decoration::omega(l)
    }

    /// `a(b g)`: root a with left child b, right child g.
    fn biideal_example() -> Forest {
        Forest::single(
            Tree::new(om("a"), vec![Tree::leaf(om("b")), Tree::leaf(om("g"))]).unwrap(),
        )
    }

    /// `b a(x)`.
    fn cop_example() -> Forest {
        let ax = Tree::new(om("a"), vec![Tree::leaf(x("x"))]).unwrap();
        Forest::from_trees(vec![Tree::leaf(om("b")), ax])
    }

    #[test]
    fn graft_unit_is_single_vertex() {
        let t = graft(&om("w"), &Forest::empty()).unwrap();
        assert_eq!(Forest::single(t).to_string(), "w");
    }

    #[test]
    fn graft_matches_display_example() {
        // B_w(•_x B_a(•_y)) has children [•_x, a(y)] in order.
        let inner = Forest::from_trees(vec![
            Tree::leaf(x("x")),
            Tree::new(om("a"), vec![Tree::leaf(x("y"))]).unwrap(),
        ]);
        let t = graft(&om("w"), &inner).unwrap();
        assert_eq!(t.to_string(), "w(x a(y))");
    }

    #[test]
    fn graft_rejects_x_label() {
        assert!(matches!(
            graft(&x("x"), &Forest::empty()),
            Err(ForestError::GraftWithXLabel { .. })
        ));
    }

    #[test]
    fn internal_x_label_rejected() {
        assert!(matches!(
            Tree::new(x("x"), vec![Tree::leaf(x("y"))]),
            Err(ForestError::XLabelInternal { .. })
        ));
    }

    #[test]
    fn concat_unit_laws() {
        let f = cop_example();
        assert_eq!(Forest::empty().concat(&f), f);
        assert_eq!(f.concat(&Forest::empty()), f);
        let g = Forest::bullet(x("y"));
        assert_eq!(f.concat(&g).breadth(), f.breadth() + g.breadth());
    }

    #[test]
    fn depth_examples() {
        assert_eq!(Forest::empty().depth(), 0);
        assert_eq!(Forest::bullet(x("x")).depth(), 0);
        assert_eq!(Forest::bullet(om("w")).depth(), 1);
        // •_x B_w(•_y) •_y has depth 1.
        let f = Forest::from_trees(vec![
            Tree::leaf(x("x")),
            Tree::new(om("w"), vec![Tree::leaf(x("y"))]).unwrap(),
            Tree::leaf(x("y")),
        ]);
        assert_eq!(f.depth(), 1);
        // Ladder w over a has depth 2.
        let ladder = graft(&om("w"), &Forest::single(graft(&om("a"), &Forest::empty()).unwrap())).unwrap();
        assert_eq!(Forest::single(ladder).depth(), 2);
    }

    #[test]
    fn breadth_and_count_of_unit() {
        assert_eq!(Forest::empty().breadth(), 0);
        assert_eq!(Forest::empty().vertex_count(), 0);
        assert!(Forest::empty().vertex_order().is_empty());
    }

    #[test]
    fn vertex_order_biideal_example() {
        // b <=_{h,l}-maximal, then g, then the root a.
        let f = biideal_example();
        let order = f.vertex_order();
        let labels: Vec<_> = order.iter().map(|v| f.decoration_at(v).unwrap().label.clone()).collect();
        assert_eq!(labels, ["b", "g", "a"]);
    }

    #[test]
    fn vertex_order_cop_example() {
        let f = cop_example();
        let labels: Vec<_> =
            f.vertex_order().iter().map(|v| f.decoration_at(v).unwrap().label.clone()).collect();
        assert_eq!(labels, ["b", "x", "a"]);
    }

    #[test]
    fn compare_hl_table() {
        let f = biideal_example();
        let root = VertexId(vec![0]);
        let b = VertexId(vec![0, 0]);
        let g = VertexId(vec![0, 1]);
        assert_eq!(f.compare_hl(&root, &b).unwrap(), HlOrdering::Less);
        assert_eq!(f.compare_hl(&root, &g).unwrap(), HlOrdering::Less);
        assert_eq!(f.compare_hl(&g, &b).unwrap(), HlOrdering::Less);
        assert_eq!(f.compare_hl(&b, &b).unwrap(), HlOrdering::Equal);
        assert!(f.compare_hl(&VertexId(vec![3]), &b).is_err());
    }

    #[test]
    fn biideals_of_three_vertex_tree() {
        let f = biideal_example();
        let ids = f.proper_biideals();
        assert_eq!(ids.len(), 3);
        assert!(ids[0].is_empty());
        let names = |s: &BTreeSet<VertexId>| {
            let mut v: Vec<_> = s.iter().map(|u| f.decoration_at(u).unwrap().label.clone()).collect();
            v.sort();
            v
        };
        assert_eq!(names(&ids[1]), ["b"]);
        assert_eq!(names(&ids[2]), ["b", "g"]);
    }

    #[test]
    fn single_vertex_has_one_biideal() {
        let f = Forest::bullet(x("x"));
        let ids = f.proper_biideals();
        assert_eq!(ids.len(), 1);
        assert!(ids[0].is_empty());
    }

    #[test]
    fn restrict_examples() {
        // F = b a(x), keep {b, x} -> b x.
        let f = cop_example();
        let keep: BTreeSet<_> = [VertexId(vec![0]), VertexId(vec![1, 0])].into();
        assert_eq!(f.restrict(&keep).unwrap().to_string(), "b x");
        // Full restriction is the identity; empty restriction is the unit.
        let all: BTreeSet<_> = f.vertices().into_iter().collect();
        assert_eq!(f.restrict(&all).unwrap(), f);
        assert_eq!(f.restrict(&BTreeSet::new()).unwrap(), Forest::empty());
        assert!(f.restrict(&[VertexId(vec![9])].into()).is_err());
    }

    #[test]
    fn restrict_four_vertex_example() {
        // F = w(b a(x)), keep {b, x} -> b x.
        let f = Forest::single(graft(&om("w"), &cop_example()).unwrap());
        let keep: BTreeSet<_> = [VertexId(vec![0, 0]), VertexId(vec![0, 1, 0])].into();
        assert_eq!(f.restrict(&keep).unwrap().to_string(), "b x");
    }

    #[test]
    fn canonical_order_is_string_order() {
        let f = cop_example();
        let g = biideal_example();
        assert_eq!(f.cmp(&g), f.to_string().cmp(&g.to_string()));
    }
}

//! Seeded random forests for property tests and exhaustive enumeration of
//! small forests. Randomness is ChaCha8 keyed by a user seed, so identical
//! seeds reproduce identical sequences.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::forest::{Alphabets, Decoration, Forest, Tree};

/// Deterministic generator of decorated forests with a bounded vertex count.
///
/// Sizes are drawn uniformly from `0..=max_vertices`; shapes are built by
/// recursive first-tree splits, which is deterministic but not uniform over
/// shapes (documented behavior: determinism is the contract, uniformity is
/// not).
pub struct RandomForestGen {
    rng: ChaCha8Rng,
    max_vertices: usize,
    x: Vec<Decoration>,
    omega: Vec<Decoration>,
}

impl RandomForestGen {
    pub fn new(seed: u64, max_vertices: usize, alphabets: &Alphabets) -> Self {
        RandomForestGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_vertices,
            x: alphabets.x_labels().map(Decoration::x).collect(),
            omega: alphabets.omega_labels().map(Decoration::omega).collect(),
        }
    }

    pub fn forest(&mut self) -> Forest {
        let size = self.rng.gen_range(0..=self.max_vertices);
        self.forest_of_size(size)
    }

    /// A forest with at least one vertex (handy when the unit is a degenerate
    /// sample).
    pub fn nonempty_forest(&mut self) -> Forest {
        let size = self.rng.gen_range(1..=self.max_vertices.max(1));
        self.forest_of_size(size)
    }

    pub fn forest_of_size(&mut self, size: usize) -> Forest {
        let mut trees = Vec::new();
        let mut remaining = size;
        while remaining > 0 {
            let t = self.rng.gen_range(1..=remaining);
            trees.push(self.tree_of_size(t));
            remaining -= t;
        }
        Forest::from_trees(trees)
    }

    fn tree_of_size(&mut self, size: usize) -> Tree {
        debug_assert!(size >= 1);
        if size == 1 {
            let leaf = self.any_label();
            Tree::leaf(leaf)
        } else {
            let root = self.omega_label();
            let children = self.forest_of_size(size - 1);
            Tree::new(root, children.trees().to_vec()).expect("root is an Omega label")
        }
    }

    fn any_label(&mut self) -> Decoration {
        let total = self.x.len() + self.omega.len();
        assert!(total > 0, "cannot sample labels from empty alphabets");
        let i = self.rng.gen_range(0..total);
        if i < self.x.len() {
            self.x[i].clone()
        } else {
            self.omega[i - self.x.len()].clone()
        }
    }

    fn omega_label(&mut self) -> Decoration {
        assert!(!self.omega.is_empty(), "internal vertices need an Omega label");
        let i = self.rng.gen_range(0..self.omega.len());
        self.omega[i].clone()
    }
}

/// Every decorated forest with at most `n_max` vertices, the empty forest
/// included, as one flat list ordered by vertex count.
pub fn enumerate_forests(n_max: usize, alphabets: &Alphabets) -> Vec<Forest> {
    let leaves: Vec<Decoration> = alphabets
        .x_labels()
        .map(Decoration::x)
        .chain(alphabets.omega_labels().map(Decoration::omega))
        .collect();
    let omegas: Vec<Decoration> = alphabets.omega_labels().map(Decoration::omega).collect();

    // forests[k] = all forests with exactly k vertices; trees[k] likewise.
    let mut forests: Vec<Vec<Forest>> = vec![vec![Forest::empty()]];
    let mut trees: Vec<Vec<Tree>> = vec![Vec::new()];
    for k in 1..=n_max {
        let mut tk: Vec<Tree> = Vec::new();
        if k == 1 {
            tk.extend(leaves.iter().cloned().map(Tree::leaf));
        } else {
            for omega in &omegas {
                for inner in &forests[k - 1] {
                    tk.push(
                        Tree::new(omega.clone(), inner.trees().to_vec()).expect("Omega root"),
                    );
                }
            }
        }
        let mut fk: Vec<Forest> = Vec::new();
        for first in 1..=k {
            let first_trees = if first == k { &tk } else { &trees[first] };
            for t in first_trees {
                for rest in &forests[k - first] {
                    fk.push(Forest::single(t.clone()).concat(rest));
                }
            }
        }
        trees.push(tk);
        forests.push(fk);
    }
    forests.into_iter().flatten().collect()
}

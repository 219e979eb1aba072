//! Vertex-indexed view of a tree, used by the edge-subset formulas.

use crate::forest::tree::{Forest, RootedTree};
use crate::forest::Color;

/// Vertices in preorder; vertex 0 is the root. Edge `v` joins `parent[v]` to `v`.
pub(crate) struct Flat {
    pub parent: Vec<usize>,
    pub color: Vec<Color>,
    pub kids: Vec<Vec<usize>>,
}

impl Flat {
    pub fn new(t: &RootedTree) -> Self {
        let mut f = Flat { parent: Vec::new(), color: Vec::new(), kids: Vec::new() };
        f.push(t, usize::MAX);
        f
    }

    fn push(&mut self, t: &RootedTree, parent: usize) -> usize {
        let v = self.parent.len();
        self.parent.push(parent);
        self.color.push(t.color());
        self.kids.push(Vec::new());
        for c in t.children() {
            let k = self.push(c, v);
            self.kids[v].push(k);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    /// Is edge `v` in the bit set `mask`? Bit `v - 1` stands for edge `v`.
    pub fn has(mask: u64, v: usize) -> bool {
        v > 0 && mask >> (v - 1) & 1 == 1
    }

    /// Tree hanging from `r` using only edges not in `cut`.
    pub fn component(&self, r: usize, cut: u64) -> RootedTree {
        let ch = self.kids[r]
            .iter()
            .filter(|&&k| !Self::has(cut, k))
            .map(|&k| self.component(k, cut))
            .collect();
        RootedTree::new(ch, self.color[r])
    }

    /// Roots of the components left after removing the edges in `cut`.
    pub fn component_roots(&self, cut: u64) -> Vec<usize> {
        (0..self.len()).filter(|&v| v == 0 || Self::has(cut, v)).collect()
    }

    /// All components after removing `cut`, as a forest.
    pub fn components(&self, cut: u64) -> Forest {
        Forest::from_trees(self.component_roots(cut).into_iter().map(|r| self.component(r, cut)).collect())
    }

    /// Root of the component containing `v`.
    pub fn top(&self, mut v: usize, cut: u64) -> usize {
        while v != 0 && !Self::has(cut, v) {
            v = self.parent[v];
        }
        v
    }

    /// Tree obtained by contracting every component of `cut` to a vertex.
    pub fn quotient(&self, cut: u64) -> RootedTree {
        let roots = self.component_roots(cut);
        self.quotient_at(0, &roots, cut)
    }

    fn quotient_at(&self, r: usize, roots: &[usize], cut: u64) -> RootedTree {
        let ch = roots
            .iter()
            .filter(|&&c| c != 0 && self.top(self.parent[c], cut) == r)
            .map(|&c| self.quotient_at(c, roots, cut))
            .collect();
        RootedTree::new(ch, self.color[r])
    }

    /// True if no root-to-leaf path contains two edges of `cut`.
    pub fn admissible(&self, cut: u64) -> bool {
        (1..self.len()).all(|v| {
            if !Self::has(cut, v) {
                return true;
            }
            let mut u = self.parent[v];
            while u != 0 {
                if Self::has(cut, u) {
                    return false;
                }
                u = self.parent[u];
            }
            true
        })
    }
}

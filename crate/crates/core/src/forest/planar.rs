//! Planar (ordered) trees and forests.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::forest::tree::{node_key, Forest, RootedTree};
use crate::forest::Color;

/// A rooted tree whose children carry a left-to-right order.
#[derive(Clone)]
pub struct PlanarTree(Arc<Node>);

struct Node {
    color: Color,
    children: PlanarForest,
    order: usize,
    key: String,
}

impl PlanarTree {
    pub fn new(children: PlanarForest, color: Color) -> Self {
        let order = 1 + children.order();
        let key = node_key(color, children.trees().iter().map(|c| c.key()));
        PlanarTree(Arc::new(Node { color, children, order, key }))
    }

    pub fn leaf() -> Self {
        Self::new(PlanarForest::unit(), None)
    }

    pub fn ladder(n: usize) -> Self {
        assert!(n >= 1, "a ladder needs at least one vertex");
        let mut t = Self::leaf();
        for _ in 1..n {
            t = Self::new(PlanarForest::single(t), None);
        }
        t
    }

    pub fn children(&self) -> &PlanarForest {
        &self.0.children
    }

    /// Same as [`children`](Self::children); the forest of branches.
    pub fn bminus(&self) -> PlanarForest {
        self.0.children.clone()
    }

    pub fn color(&self) -> Color {
        self.0.color
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn key(&self) -> &str {
        &self.0.key
    }

    pub fn is_colored(&self) -> bool {
        self.color().is_some() || self.children().is_colored()
    }

    /// Forgets the planar structure.
    pub fn to_nonplanar(&self) -> RootedTree {
        RootedTree::new(
            self.children().trees().iter().map(|c| c.to_nonplanar()).collect(),
            self.color(),
        )
    }
}

impl PartialEq for PlanarTree {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.key == other.0.key
    }
}
impl Eq for PlanarTree {}

impl Hash for PlanarTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.key.hash(state)
    }
}

impl PartialOrd for PlanarTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PlanarTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.key.cmp(&other.0.key)
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// An ordered word of planar trees; the empty word is the unit `1`.
#[derive(Clone)]
pub struct PlanarForest(Arc<ForestData>);

struct ForestData {
    trees: Vec<PlanarTree>,
    order: usize,
}

impl PlanarForest {
    pub fn unit() -> Self {
        Self::from_trees(Vec::new())
    }

    pub fn from_trees(trees: Vec<PlanarTree>) -> Self {
        let order = trees.iter().map(|t| t.order()).sum();
        PlanarForest(Arc::new(ForestData { trees, order }))
    }

    pub fn single(t: PlanarTree) -> Self {
        Self::from_trees(vec![t])
    }

    pub fn trees(&self) -> &[PlanarTree] {
        &self.0.trees
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn len(&self) -> usize {
        self.0.trees.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.trees.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_unit()
    }

    pub fn as_tree(&self) -> Option<&PlanarTree> {
        match self.trees() {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &PlanarForest) -> PlanarForest {
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        let mut trees = self.trees().to_vec();
        trees.extend_from_slice(other.trees());
        Self::from_trees(trees)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> PlanarForest {
        Self::from_trees(self.trees()[range].to_vec())
    }

    pub fn bplus(&self, color: Color) -> PlanarTree {
        PlanarTree::new(self.clone(), color)
    }

    pub fn is_colored(&self) -> bool {
        self.trees().iter().any(|t| t.is_colored())
    }

    pub fn to_nonplanar(&self) -> Forest {
        Forest::from_trees(self.trees().iter().map(|t| t.to_nonplanar()).collect())
    }
}

/// `B⁻` on a forest that must consist of exactly one tree.
pub fn bminus_planar(w: &PlanarForest) -> crate::Result<PlanarForest> {
    w.as_tree()
        .map(|t| t.bminus())
        .ok_or_else(|| crate::Error::domain(format!("B- needs a single tree, got `{w}`")))
}

impl From<PlanarTree> for PlanarForest {
    fn from(t: PlanarTree) -> Self {
        PlanarForest::single(t)
    }
}

impl PartialEq for PlanarForest {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.trees == other.0.trees
    }
}
impl Eq for PlanarForest {}

impl Hash for PlanarForest {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.trees.hash(state)
    }
}

impl PartialOrd for PlanarForest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Higher order first, then lexicographic on the word.
impl Ord for PlanarForest {
    fn cmp(&self, other: &Self) -> Ordering {
        other.order().cmp(&self.order()).then_with(|| self.trees().cmp(other.trees()))
    }
}

impl fmt::Display for PlanarForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        for (i, t) in self.trees().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(t.key())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PlanarForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

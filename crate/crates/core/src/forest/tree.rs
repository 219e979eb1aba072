//! Non-planar rooted trees and commutative forests in canonical form.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::forest::Color;

/// A non-planar rooted tree. Children are kept sorted by serialized form, so
/// structural equality is isomorphism.
#[derive(Clone)]
pub struct RootedTree(Arc<Node>);

struct Node {
    color: Color,
    children: Vec<RootedTree>,
    order: usize,
    key: String,
}

/// Order, symmetry and tree factorial of a tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeStats {
    pub order: usize,
    pub sigma: u64,
    pub factorial: u64,
}

pub(crate) fn node_key(color: Color, child_keys: impl Iterator<Item = impl AsRef<str>>) -> String {
    let mut key = String::from("[");
    if let Some(c) = color {
        key.push(c);
        key.push(':');
    }
    for k in child_keys {
        key.push_str(k.as_ref());
    }
    key.push(']');
    key
}

impl RootedTree {
    pub fn new(mut children: Vec<RootedTree>, color: Color) -> Self {
        children.sort();
        let order = 1 + children.iter().map(|c| c.order()).sum::<usize>();
        let key = node_key(color, children.iter().map(|c| c.key()));
        RootedTree(Arc::new(Node { color, children, order, key }))
    }

    /// The single vertex `•`.
    pub fn leaf() -> Self {
        Self::new(Vec::new(), None)
    }

    pub fn colored_leaf(color: char) -> Self {
        Self::new(Vec::new(), Some(color))
    }

    /// Chain of `n` vertices.
    pub fn ladder(n: usize) -> Self {
        assert!(n >= 1, "a ladder needs at least one vertex");
        let mut t = Self::leaf();
        for _ in 1..n {
            t = Self::new(vec![t], None);
        }
        t
    }

    /// Root with `n` leaf children.
    pub fn bushy(n: usize) -> Self {
        Self::new(vec![Self::leaf(); n], None)
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.0.children
    }

    pub fn color(&self) -> Color {
        self.0.color
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn edges(&self) -> usize {
        self.0.order - 1
    }

    pub fn key(&self) -> &str {
        &self.0.key
    }

    pub fn is_leaf(&self) -> bool {
        self.0.children.is_empty()
    }

    pub fn is_colored(&self) -> bool {
        self.color().is_some() || self.children().iter().any(|c| c.is_colored())
    }

    /// Forest of the root's children.
    pub fn bminus(&self) -> Forest {
        Forest::from_trees(self.children().to_vec())
    }

    /// Size of the automorphism group.
    pub fn sigma(&self) -> u64 {
        let mut s = 1u64;
        let ch = self.children();
        let mut i = 0;
        while i < ch.len() {
            let mut j = i;
            while j < ch.len() && ch[j] == ch[i] {
                j += 1;
            }
            let m = (j - i) as u64;
            s *= (1..=m).product::<u64>() * ch[i].sigma().pow(m as u32);
            i = j;
        }
        s
    }

    /// `τ! = |τ| · Π τᵢ!` over the branches.
    pub fn factorial(&self) -> u64 {
        self.order() as u64 * self.children().iter().map(|c| c.factorial()).product::<u64>()
    }

    pub fn stats(&self) -> TreeStats {
        TreeStats { order: self.order(), sigma: self.sigma(), factorial: self.factorial() }
    }
}

/// Order, symmetry and factorial in one call.
pub fn tree_stats(t: &RootedTree) -> TreeStats {
    t.stats()
}

impl PartialEq for RootedTree {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.key == other.0.key
    }
}
impl Eq for RootedTree {}

impl Hash for RootedTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.key.hash(state)
    }
}

impl PartialOrd for RootedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the serialized form.
impl Ord for RootedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.key.cmp(&other.0.key)
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// A commutative forest (multiset of trees). The empty forest is the unit `1`.
#[derive(Clone)]
pub struct Forest(Arc<ForestData>);

struct ForestData {
    trees: Vec<RootedTree>,
    order: usize,
}

impl Forest {
    pub fn unit() -> Self {
        Self::from_trees(Vec::new())
    }

    pub fn from_trees(mut trees: Vec<RootedTree>) -> Self {
        trees.sort();
        let order = trees.iter().map(|t| t.order()).sum();
        Forest(Arc::new(ForestData { trees, order }))
    }

    pub fn single(t: RootedTree) -> Self {
        Forest(Arc::new(ForestData { order: t.order(), trees: vec![t] }))
    }

    pub fn trees(&self) -> &[RootedTree] {
        &self.0.trees
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    /// Number of trees.
    pub fn len(&self) -> usize {
        self.0.trees.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.trees.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_unit()
    }

    pub fn edges(&self) -> usize {
        self.order() - self.len()
    }

    pub fn as_tree(&self) -> Option<&RootedTree> {
        match self.trees() {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Disjoint union.
    pub fn mul(&self, other: &Forest) -> Forest {
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

    /// Connects all trees to a new root.
    pub fn bplus(&self, color: Color) -> RootedTree {
        RootedTree::new(self.trees().to_vec(), color)
    }

    /// Symmetry factor of the forest, counting permutations of equal trees.
    pub fn sigma(&self) -> u64 {
        self.bplus(None).sigma()
    }

    pub fn is_colored(&self) -> bool {
        self.trees().iter().any(|t| t.is_colored())
    }
}

/// `B⁻` on a forest that must consist of exactly one tree.
pub fn bminus_forest(w: &Forest) -> crate::Result<Forest> {
    w.as_tree()
        .map(|t| t.bminus())
        .ok_or_else(|| crate::Error::domain(format!("B- needs a single tree, got `{w}`")))
}

impl From<RootedTree> for Forest {
    fn from(t: RootedTree) -> Self {
        Forest::single(t)
    }
}

impl PartialEq for Forest {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.trees == other.0.trees
    }
}
impl Eq for Forest {}

impl Hash for Forest {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.trees.hash(state)
    }
}

impl PartialOrd for Forest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Higher order first, then lexicographic on the tree list.
impl Ord for Forest {
    fn cmp(&self, other: &Self) -> Ordering {
        other.order().cmp(&self.order()).then_with(|| self.trees().cmp(other.trees()))
    }
}

impl fmt::Display for Forest {
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

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

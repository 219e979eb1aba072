//! Coefficient maps on commutative forests.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forest::{forests_up_to, parse_forest, trees_up_to, Forest, RootedTree};
use crate::linear::LinComb;
use crate::rational::{parse_rational, Rational};

/// How the stored values extend to forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffKind {
    /// Multiplicative: `α(𝟙) = 1`, `α(ω₁ω₂) = α(ω₁)α(ω₂)`.
    Character,
    /// `α(𝟙) = 0` and zero on every forest with two or more trees.
    Infinitesimal,
    /// Arbitrary values on forests.
    Plain,
}

/// A B-series coefficient map, truncated at order `truncation`.
///
/// Characters and infinitesimal characters store tree values only; forest
/// values are derived on demand.
#[derive(Debug, Clone, PartialEq)]
pub struct BCoeff {
    kind: CoeffKind,
    truncation: usize,
    values: BTreeMap<Forest, Rational>,
}

impl BCoeff {
    fn with_kind(kind: CoeffKind, truncation: usize) -> Self {
        BCoeff { kind, truncation, values: BTreeMap::new() }
    }

    pub fn character(truncation: usize, trees: impl IntoIterator<Item = (RootedTree, Rational)>) -> Self {
        let mut a = Self::with_kind(CoeffKind::Character, truncation);
        for (t, v) in trees {
            a.set_tree(t, v);
        }
        a
    }

    pub fn infinitesimal(truncation: usize, trees: impl IntoIterator<Item = (RootedTree, Rational)>) -> Self {
        let mut a = Self::with_kind(CoeffKind::Infinitesimal, truncation);
        for (t, v) in trees {
            a.set_tree(t, v);
        }
        a
    }

    pub fn plain(truncation: usize, forests: impl IntoIterator<Item = (Forest, Rational)>) -> Self {
        let mut a = Self::with_kind(CoeffKind::Plain, truncation);
        for (w, v) in forests {
            a.set(w, v);
        }
        a
    }

    /// Tree values from `f` for every tree of order `<= truncation`.
    pub fn from_tree_fn(kind: CoeffKind, truncation: usize, mut f: impl FnMut(&RootedTree) -> Rational) -> Self {
        let mut a = Self::with_kind(kind, truncation);
        for t in trees_up_to(truncation) {
            let v = f(&t);
            a.set_tree(t, v);
        }
        a
    }

    /// The counit `η`: 1 on the empty forest, 0 elsewhere.
    pub fn eta(truncation: usize) -> Self {
        Self::with_kind(CoeffKind::Character, truncation)
    }

    /// `δ_•`: the infinitesimal character picking out the single vertex.
    pub fn delta_dot(truncation: usize) -> Self {
        Self::infinitesimal(truncation, [(RootedTree::leaf(), Rational::one())])
    }

    pub fn kind(&self) -> CoeffKind {
        self.kind
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn set_tree(&mut self, t: RootedTree, v: Rational) {
        self.set(Forest::single(t), v);
    }

    /// Stores a value. For characters and infinitesimal characters only single trees are accepted.
    pub fn set(&mut self, w: Forest, v: Rational) {
        assert!(
            self.kind == CoeffKind::Plain || w.len() == 1,
            "only tree values are stored for (infinitesimal) characters"
        );
        if v.is_zero() {
            self.values.remove(&w);
        } else {
            self.values.insert(w, v);
        }
    }

    pub fn tree(&self, t: &RootedTree) -> Rational {
        self.values.get(&Forest::single(t.clone())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn value(&self, w: &Forest) -> Rational {
        match self.kind {
            CoeffKind::Plain => self.values.get(w).cloned().unwrap_or_else(Rational::zero),
            CoeffKind::Character => {
                let mut acc = Rational::one();
                for t in w.trees() {
                    acc *= self.tree(t);
                    if acc.is_zero() {
                        break;
                    }
                }
                acc
            }
            CoeffKind::Infinitesimal => match w.as_tree() {
                Some(t) => self.tree(t),
                None => Rational::zero(),
            },
        }
    }

    /// `⟨α, x⟩` for a formal sum of forests.
    pub fn eval(&self, x: &LinComb<Forest>) -> Rational {
        x.pair(|w| self.value(w))
    }

    /// Fails unless the map is known up to order `n`.
    pub fn require(&self, n: usize) -> Result<()> {
        if self.truncation < n {
            return Err(Error::Truncation { needed: n, have: self.truncation });
        }
        Ok(())
    }

    /// Same values, truncated at `n`.
    pub fn truncate(&self, n: usize) -> Self {
        BCoeff {
            kind: self.kind,
            truncation: n.min(self.truncation),
            values: self.values.iter().filter(|(w, _)| w.order() <= n).map(|(w, v)| (w.clone(), v.clone())).collect(),
        }
    }

    /// Stored (non-zero) entries, highest order first.
    pub fn entries(&self) -> impl Iterator<Item = (&Forest, &Rational)> {
        self.values.iter()
    }

    /// Dump as `forest<TAB>p/q` lines in increasing order, one line per tree
    /// (characters, infinitesimals) or per forest (plain), zeros included.
    pub fn to_dump(&self) -> String {
        let mut out = String::new();
        let keys: Vec<Forest> = match self.kind {
            CoeffKind::Plain => forests_up_to(self.truncation).into_iter().rev().collect(),
            _ => trees_up_to(self.truncation).into_iter().map(Forest::single).collect(),
        };
        for w in keys {
            let _ = writeln!(out, "{w}\t{}", self.value(&w));
        }
        out
    }

    /// Reads a dump written by [`to_dump`](Self::to_dump).
    pub fn from_dump(kind: CoeffKind, truncation: usize, text: &str) -> Result<Self> {
        let mut a = Self::with_kind(kind, truncation);
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (f, v) = line
                .split_once('\t')
                .ok_or_else(|| Error::parse(0, format!("line {}: expected `forest<TAB>value`", lineno + 1)))?;
            let w = parse_forest(f)?;
            let v = parse_rational(v)?;
            if kind != CoeffKind::Plain && w.len() != 1 {
                return Err(Error::domain(format!("line {}: only tree values allowed", lineno + 1)));
            }
            a.set(w, v);
        }
        Ok(a)
    }
}

//! Products on trees and forests: Butcher product, pre-Lie grafting,
//! concatenation, shuffle, deconcatenation, left grafting and the
//! Grossman–Larson product.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::forest::planar::{PlanarForest, PlanarTree};
use crate::forest::tree::{Forest, RootedTree};
use crate::linear::{LinComb, Tensor};
use crate::rational::Rational;

/// Grafts the forest `w` onto the root of `t`.
pub fn butcher_product(t: &RootedTree, w: &Forest) -> RootedTree {
    let mut ch = t.children().to_vec();
    ch.extend_from_slice(w.trees());
    RootedTree::new(ch, t.color())
}

/// `t1 ↷ t2`: sum over the vertices of `t2` of attaching `t1` there by a new edge.
pub fn prelie_graft(t1: &RootedTree, t2: &RootedTree) -> LinComb<RootedTree> {
    let mut out = LinComb::zero();
    let mut ch = t2.children().to_vec();
    ch.push(t1.clone());
    out.add_term(RootedTree::new(ch, t2.color()), Rational::one());
    for (i, c) in t2.children().iter().enumerate() {
        for (g, k) in &prelie_graft(t1, c) {
            let mut ch = t2.children().to_vec();
            ch[i] = g.clone();
            out.add_term(RootedTree::new(ch, t2.color()), k.clone());
        }
    }
    out
}

/// Grafting is only defined between trees; anything else is a domain error.
pub fn prelie_graft_forests(w1: &Forest, w2: &Forest) -> Result<LinComb<RootedTree>> {
    match (w1.as_tree(), w2.as_tree()) {
        (Some(a), Some(b)) => Ok(prelie_graft(a, b)),
        _ => Err(Error::domain("pre-Lie grafting is defined on single trees only")),
    }
}

/// Bilinear extension of [`prelie_graft`].
pub fn prelie_graft_lin(a: &LinComb<RootedTree>, b: &LinComb<RootedTree>) -> LinComb<RootedTree> {
    a.bilinear(b, prelie_graft)
}

/// Shuffle product of two words of planar trees.
pub fn shuffle(a: &PlanarForest, b: &PlanarForest) -> LinComb<PlanarForest> {
    fn go(a: &[PlanarTree], b: &[PlanarTree], prefix: &mut Vec<PlanarTree>, out: &mut LinComb<PlanarForest>) {
        if a.is_empty() || b.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(a);
            w.extend_from_slice(b);
            out.add_term(PlanarForest::from_trees(w), Rational::one());
            return;
        }
        prefix.push(a[0].clone());
        go(&a[1..], b, prefix, out);
        prefix.pop();
        prefix.push(b[0].clone());
        go(a, &b[1..], prefix, out);
        prefix.pop();
    }
    let mut out = LinComb::zero();
    go(a.trees(), b.trees(), &mut Vec::new(), &mut out);
    out
}

pub fn shuffle_lin(a: &LinComb<PlanarForest>, b: &LinComb<PlanarForest>) -> LinComb<PlanarForest> {
    a.bilinear(b, shuffle)
}

pub fn concat_lin(a: &LinComb<PlanarForest>, b: &LinComb<PlanarForest>) -> LinComb<PlanarForest> {
    a.bilinear(b, |x, y| LinComb::basis(x.concat(y)))
}

/// Deconcatenation: all splits of the word into a prefix and a suffix.
pub fn deconcat(w: &PlanarForest) -> Tensor<PlanarForest, PlanarForest> {
    (0..=w.len())
        .map(|i| ((w.slice(0..i), w.slice(i..w.len())), Rational::one()))
        .collect()
}

thread_local! {
    static GRAFT_MEMO: RefCell<HashMap<(PlanarForest, PlanarForest), LinComb<PlanarForest>>> =
        RefCell::new(HashMap::new());
}

/// Left grafting `w1 ↷ w2` on planar forests, by the defining recursion.
pub fn left_graft(w1: &PlanarForest, w2: &PlanarForest) -> LinComb<PlanarForest> {
    if w1.is_unit() {
        return LinComb::basis(w2.clone());
    }
    if w2.is_unit() {
        return LinComb::zero();
    }
    let key = (w1.clone(), w2.clone());
    if let Some(hit) = GRAFT_MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    let out = if w1.len() == 1 {
        let t = PlanarForest::single(w1.trees()[0].clone());
        if let Some(root) = w2.as_tree() {
            // t ↷ B⁺(w) = B⁺(t w) + B⁺(t ↷ w)
            let c = root.color();
            let w = root.children();
            let mut out = LinComb::basis(t.concat(w).bplus(c).into());
            for (g, k) in &left_graft(&t, w) {
                out.add_term(g.bplus(c).into(), k.clone());
            }
            out
        } else {
            // derivation over concatenation
            let mut out = LinComb::zero();
            for i in 0..w2.len() {
                let left = w2.slice(0..i);
                let right = w2.slice(i + 1..w2.len());
                let mid = PlanarForest::single(w2.trees()[i].clone());
                for (g, k) in &left_graft(&t, &mid) {
                    out.add_term(left.concat(g).concat(&right), k.clone());
                }
            }
            out
        }
    } else {
        // (t w) ↷ v = t ↷ (w ↷ v) − (t ↷ w) ↷ v
        let t = w1.slice(0..1);
        let w = w1.slice(1..w1.len());
        let inner = left_graft(&w, w2);
        let mut out = inner.map_linear(|x| left_graft(&t, x));
        let tw = left_graft(&t, &w);
        out.add_assign_scaled(&tw.map_linear(|x| left_graft(x, w2)), &-Rational::one());
        out
    };
    GRAFT_MEMO.with(|m| m.borrow_mut().insert(key, out.clone()));
    out
}

pub fn left_graft_lin(a: &LinComb<PlanarForest>, b: &LinComb<PlanarForest>) -> LinComb<PlanarForest> {
    a.bilinear(b, left_graft)
}

/// Grossman–Larson product `w1 ⋄ w2 = B⁻(w1 ↷ B⁺(w2))`.
pub fn gl_product(w1: &PlanarForest, w2: &PlanarForest) -> LinComb<PlanarForest> {
    let root = PlanarForest::single(w2.bplus(None));
    left_graft(w1, &root).map_basis(|t| t.trees()[0].bminus())
}

pub fn gl_product_lin(a: &LinComb<PlanarForest>, b: &LinComb<PlanarForest>) -> LinComb<PlanarForest> {
    a.bilinear(b, gl_product)
}

/// Forgets planar structure term by term.
pub fn project(w: &LinComb<PlanarForest>) -> LinComb<Forest> {
    w.map_basis(|f| f.to_nonplanar())
}

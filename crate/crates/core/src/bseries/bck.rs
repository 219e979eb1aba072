//! The Butcher–Connes–Kreimer Hopf algebra: admissible cuts, antipode and
//! composition of B-series.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::One;

use crate::bseries::coeff::{BCoeff, CoeffKind};
use crate::error::Result;
use crate::forest::flat::Flat;
use crate::forest::{forests_up_to, trees_up_to, Forest, RootedTree};
use crate::linear::{LinComb, Tensor};
use crate::rational::{rat, Rational};

/// Product in `H ⊗ H` with forest union in both factors.
pub fn tensor_mul(a: &Tensor<Forest, Forest>, b: &Tensor<Forest, Forest>) -> Tensor<Forest, Forest> {
    a.bilinear(b, |(p1, r1), (p2, r2)| LinComb::basis((p1.mul(p2), r1.mul(r2))))
}

fn multiplicative(w: &Forest, per_tree: impl Fn(&RootedTree) -> Tensor<Forest, Forest>) -> Tensor<Forest, Forest> {
    let mut acc = LinComb::basis((Forest::unit(), Forest::unit()));
    for t in w.trees() {
        acc = tensor_mul(&acc, &per_tree(t));
    }
    acc
}

/// `Δ_BCK` by enumeration of admissible edge cuts. Left factor: pruned
/// branches; right factor: the part containing the root.
pub fn delta_bck_cuts(w: &Forest) -> Tensor<Forest, Forest> {
    multiplicative(w, |t| {
        let flat = Flat::new(t);
        let mut out = LinComb::basis((Forest::single(t.clone()), Forest::unit()));
        for cut in 0..1u64 << t.edges() {
            if !flat.admissible(cut) {
                continue;
            }
            let pruned = Forest::from_trees(
                flat.component_roots(cut).into_iter().filter(|&r| r != 0).map(|r| flat.component(r, cut)).collect(),
            );
            out.add_term((pruned, Forest::single(flat.component(0, cut))), Rational::one());
        }
        out
    })
}

thread_local! {
    static BCK_MEMO: RefCell<HashMap<RootedTree, Tensor<Forest, Forest>>> = RefCell::new(HashMap::new());
    static ANTIPODE_MEMO: RefCell<HashMap<RootedTree, LinComb<Forest>>> = RefCell::new(HashMap::new());
}

fn delta_bck_tree(t: &RootedTree) -> Tensor<Forest, Forest> {
    if let Some(hit) = BCK_MEMO.with(|m| m.borrow().get(t).cloned()) {
        return hit;
    }
    // Δ B⁺(ω) = B⁺(ω) ⊗ 𝟙 + (Id ⊗ B⁺) Δ(ω)
    let c = t.color();
    let inner = multiplicative(&t.bminus(), delta_bck_tree);
    let mut out = LinComb::basis((Forest::single(t.clone()), Forest::unit()));
    for ((p, r), k) in &inner {
        out.add_term((p.clone(), Forest::single(r.bplus(c))), k.clone());
    }
    BCK_MEMO.with(|m| m.borrow_mut().insert(t.clone(), out.clone()));
    out
}

/// `Δ_BCK` by the `B⁺` recursion, extended multiplicatively to forests.
pub fn delta_bck(w: &Forest) -> Tensor<Forest, Forest> {
    multiplicative(w, delta_bck_tree)
}

pub fn delta_bck_lin(x: &LinComb<Forest>) -> Tensor<Forest, Forest> {
    x.map_linear(delta_bck)
}

fn antipode_tree(t: &RootedTree) -> LinComb<Forest> {
    if let Some(hit) = ANTIPODE_MEMO.with(|m| m.borrow().get(t).cloned()) {
        return hit;
    }
    let whole = Forest::single(t.clone());
    let mut out = LinComb::term(whole.clone(), -Rational::one());
    for ((p, r), k) in &delta_bck_tree(t) {
        if p.is_unit() || r.is_unit() {
            continue;
        }
        let sp = antipode_bck(p);
        for (q, kq) in &sp {
            out.add_term(q.mul(r), -(k * kq));
        }
    }
    ANTIPODE_MEMO.with(|m| m.borrow_mut().insert(t.clone(), out.clone()));
    out
}

/// The antipode, multiplicative on forests.
pub fn antipode_bck(w: &Forest) -> LinComb<Forest> {
    let mut acc = LinComb::basis(Forest::unit());
    for t in w.trees() {
        acc = acc.bilinear(&antipode_tree(t), |a, b| LinComb::basis(a.mul(b)));
    }
    acc
}

/// `α ∘ S` as a coefficient map: the convolution inverse of a character.
pub fn compose_antipode(a: &BCoeff) -> BCoeff {
    let n = a.truncation();
    match a.kind() {
        CoeffKind::Character => BCoeff::from_tree_fn(CoeffKind::Character, n, |t| {
            a.eval(&antipode_tree(t))
        }),
        _ => BCoeff::plain(n, forests_up_to(n).into_iter().map(|w| {
            let v = a.eval(&antipode_bck(&w));
            (w, v)
        })),
    }
}

/// Convolution `(α ⋆ β)(ω) = Σ α(ω₍₁₎) β(ω₍₂₎)`; the B-series of `β` after `α`.
pub fn convolve_bck(a: &BCoeff, b: &BCoeff, n: usize) -> Result<BCoeff> {
    a.require(n)?;
    b.require(n)?;
    let conv = |w: &Forest| -> Rational {
        delta_bck(w).pair(|(p, r)| a.value(p) * b.value(r))
    };
    Ok(if a.kind() == CoeffKind::Character && b.kind() == CoeffKind::Character {
        BCoeff::from_tree_fn(CoeffKind::Character, n, |t| conv(&Forest::single(t.clone())))
    } else {
        BCoeff::plain(n, forests_up_to(n).into_iter().map(|w| {
            let v = conv(&w);
            (w, v)
        }))
    })
}

/// Coefficients of the exact flow, `γ(τ) = 1/τ!`.
pub fn exact_gamma(n: usize) -> BCoeff {
    BCoeff::from_tree_fn(CoeffKind::Character, n, |t| rat(1, t.factorial() as i64))
}

/// Trees up to order `n` paired with their coefficient under `a`.
pub fn tree_table(a: &BCoeff, n: usize) -> Vec<(RootedTree, Rational)> {
    trees_up_to(n).into_iter().map(|t| {
        let v = a.tree(&t);
        (t, v)
    }).collect()
}

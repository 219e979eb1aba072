//! The MKW Hopf algebra on planar forests: shuffle product,
//! left admissible cuts and composition of LB-series.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::One;

use crate::bseries::CoeffKind;
use crate::error::Result;
use crate::forest::ops::{shuffle, shuffle_lin};
use crate::forest::{planar_forests_up_to, PlanarForest, PlanarTree};
use crate::lbseries::coeff::LBCoeff;
use crate::linear::{LinComb, Tensor};
use crate::rational::Rational;

type PF = PlanarForest;

/// `(a ⊗ b)(c ⊗ d) = (a ⧢ c) ⊗ (b d)`: shuffle on the left, concatenation on the right.
pub fn shuffle_concat(x: &Tensor<PF, PF>, y: &Tensor<PF, PF>) -> Tensor<PF, PF> {
    x.bilinear(y, |(a, b), (c, d)| {
        let right = b.concat(d);
        shuffle(a, c).map_basis(|s| (s.clone(), right.clone()))
    })
}

thread_local! {
    static MKW_MEMO: RefCell<HashMap<PF, Tensor<PF, PF>>> = RefCell::new(HashMap::new());
    static MKW_ANTIPODE_MEMO: RefCell<HashMap<PF, LinComb<PF>>> = RefCell::new(HashMap::new());
}

/// `Δ_MKW` by the recursion `Δ(ωτ) = ωτ ⊗ 𝟙 + Δ(ω) ⧢· (I ⊗ B⁺)Δ(B⁻τ)`.
pub fn delta_mkw(w: &PF) -> Tensor<PF, PF> {
    if w.is_unit() {
        return LinComb::basis((PF::unit(), PF::unit()));
    }
    if let Some(hit) = MKW_MEMO.with(|m| m.borrow().get(w).cloned()) {
        return hit;
    }
    let n = w.len();
    let head = w.slice(0..n - 1);
    let last = &w.trees()[n - 1];
    let c = last.color();
    let grafted: Tensor<PF, PF> =
        delta_mkw(last.children()).map_basis(|(p, r)| (p.clone(), PF::single(r.bplus(c))));
    let mut out = shuffle_concat(&delta_mkw(&head), &grafted);
    out.add_term((w.clone(), PF::unit()), Rational::one());
    MKW_MEMO.with(|m| m.borrow_mut().insert(w.clone(), out.clone()));
    out
}

pub fn delta_mkw_lin(x: &LinComb<PF>) -> Tensor<PF, PF> {
    x.map_linear(delta_mkw)
}

/// Left admissible cuts below a vertex: the `j` leftmost branches are pruned
/// as one word, the others are cut recursively. Returns (pruned part, trunk).
fn vertex_cuts(t: &PlanarTree) -> Vec<(LinComb<PF>, PlanarTree)> {
    let ch = t.children().trees();
    let mut out = Vec::new();
    for j in 0..=ch.len() {
        let pruned = LinComb::basis(PF::from_trees(ch[..j].to_vec()));
        let mut partial: Vec<(LinComb<PF>, Vec<PlanarTree>)> = vec![(pruned, Vec::new())];
        for c in &ch[j..] {
            let sub = vertex_cuts(c);
            let mut next = Vec::with_capacity(partial.len() * sub.len());
            for (p, rs) in &partial {
                for (q, r) in &sub {
                    let mut rs = rs.clone();
                    rs.push(r.clone());
                    next.push((shuffle_lin(p, q), rs));
                }
            }
            partial = next;
        }
        for (p, rs) in partial {
            out.push((p, PF::from_trees(rs).bplus(t.color())));
        }
    }
    out
}

/// Left admissible cuts of a forest. With `root_cuts`, the `j` leftmost
/// trees may also be pruned whole (`j = #ω` is the full cut).
pub fn left_admissible_cuts(w: &PF, root_cuts: bool) -> Vec<(LinComb<PF>, PF)> {
    let k = w.len();
    let max_j = if root_cuts { k } else { 0 };
    let mut out = Vec::new();
    for j in 0..=max_j {
        let mut partial: Vec<(LinComb<PF>, Vec<PlanarTree>)> =
            vec![(LinComb::basis(w.slice(0..j)), Vec::new())];
        for t in &w.trees()[j..] {
            let sub = vertex_cuts(t);
            let mut next = Vec::with_capacity(partial.len() * sub.len());
            for (p, rs) in &partial {
                for (q, r) in &sub {
                    let mut rs = rs.clone();
                    rs.push(r.clone());
                    next.push((shuffle_lin(p, q), rs));
                }
            }
            partial = next;
        }
        out.extend(partial.into_iter().map(|(p, rs)| (p, PF::from_trees(rs))));
    }
    out
}

/// `Δ_MKW(ω) = Σ_{c ∈ LAC(ω)} P^c(ω) ⊗ R^c(ω)`.
pub fn delta_mkw_cuts(w: &PF) -> Tensor<PF, PF> {
    let mut out = LinComb::zero();
    for (p, r) in left_admissible_cuts(w, true) {
        for (q, k) in &p {
            out.add_term((q.clone(), r.clone()), k.clone());
        }
    }
    out
}

/// Convolution of LB coefficient maps, `(α ∗ β)(ω) = Σ α(ω₍₁₎) β(ω₍₂₎)` over `Δ_MKW`.
pub fn convolve_mkw(a: &LBCoeff, b: &LBCoeff, n: usize) -> Result<LBCoeff> {
    a.require(n)?;
    b.require(n)?;
    let kind = if a.kind() == CoeffKind::Character && b.kind() == CoeffKind::Character {
        CoeffKind::Character
    } else {
        CoeffKind::Plain
    };
    Ok(LBCoeff::new(
        kind,
        n,
        planar_forests_up_to(n).into_iter().map(|w| {
            let v = delta_mkw(&w).pair(|(p, r)| a.value(p) * b.value(r));
            (w, v)
        }),
    ))
}

/// Antipode of the MKW Hopf algebra (product: shuffle).
pub fn antipode_mkw(w: &PF) -> LinComb<PF> {
    if w.is_unit() {
        return LinComb::basis(PF::unit());
    }
    if let Some(hit) = MKW_ANTIPODE_MEMO.with(|m| m.borrow().get(w).cloned()) {
        return hit;
    }
    let mut out = LinComb::term(w.clone(), -Rational::one());
    for ((p, r), k) in &delta_mkw(w) {
        if p.is_unit() || r.is_unit() {
            continue;
        }
        let sp = antipode_mkw(p);
        out.add_assign_scaled(&shuffle_lin(&sp, &LinComb::basis(r.clone())), &-k.clone());
    }
    MKW_ANTIPODE_MEMO.with(|m| m.borrow_mut().insert(w.clone(), out.clone()));
    out
}

/// `α ∘ S`.
pub fn compose_antipode_mkw(a: &LBCoeff) -> LBCoeff {
    let n = a.truncation();
    LBCoeff::new(
        a.kind(),
        n,
        planar_forests_up_to(n).into_iter().map(|w| {
            let v = a.eval(&antipode_mkw(&w));
            (w, v)
        }),
    )
}

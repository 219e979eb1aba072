//! The substitution bialgebra: contraction of subforests, substitution of
//! B-series and modified equations.

use std::cell::RefCell;
use std::collections::HashMap;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::bseries::bck::exact_gamma;
use crate::bseries::coeff::{BCoeff, CoeffKind};
use crate::error::{Error, Result};
use crate::forest::flat::Flat;
use crate::forest::{trees_by_order, Forest, RootedTree};
use crate::linear::{LinComb, Tensor};
use crate::rational::Rational;

thread_local! {
    static CEFM_MEMO: RefCell<HashMap<RootedTree, Tensor<Forest, RootedTree>>> = RefCell::new(HashMap::new());
}

/// Tree part: `Σ_{ω ⊆ τ} ω ⊗ τ/ω` over spanning subforests `ω` (kept edge sets).
pub fn delta_cefm_tree(t: &RootedTree) -> Tensor<Forest, RootedTree> {
    if let Some(hit) = CEFM_MEMO.with(|m| m.borrow().get(t).cloned()) {
        return hit;
    }
    let flat = Flat::new(t);
    let e = t.edges();
    let mut out = LinComb::zero();
    for cut in 0..1u64 << e {
        out.add_term((flat.components(cut), flat.quotient(cut)), Rational::one());
    }
    CEFM_MEMO.with(|m| m.borrow_mut().insert(t.clone(), out.clone()));
    out
}

/// `Δ_CEFM`, multiplicative on forests with forest union in both factors.
pub fn delta_cefm(w: &Forest) -> Tensor<Forest, Forest> {
    let mut acc: Tensor<Forest, Forest> = LinComb::basis((Forest::unit(), Forest::unit()));
    for t in w.trees() {
        let d = delta_cefm_tree(t);
        acc = acc.bilinear(&d, |(p1, r1), (p2, r2)| {
            LinComb::basis((p1.mul(p2), r1.mul(&Forest::single(r2.clone()))))
        });
    }
    acc
}

/// Tree values of `a` extended multiplicatively, whatever its kind.
fn mult_value(a: &BCoeff, w: &Forest) -> Rational {
    let mut acc = Rational::one();
    for t in w.trees() {
        acc *= a.tree(t);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// Substitutes the vector field `B(α)` into `B(β)`: `(α ⋆ β)(τ) = Σ α(ω) β(τ/ω)`.
///
/// `α` must vanish on the empty forest. The result keeps the kind of `β`
/// (plain maps are read through their tree values and give a character).
pub fn substitute_b(a: &BCoeff, b: &BCoeff, n: usize) -> Result<BCoeff> {
    a.require(n)?;
    b.require(n)?;
    if !a.value(&Forest::unit()).is_zero() {
        return Err(Error::domain("the substituted series must vanish on the empty forest"));
    }
    let kind = match b.kind() {
        CoeffKind::Plain => CoeffKind::Character,
        k => k,
    };
    Ok(BCoeff::from_tree_fn(kind, n, |t| {
        delta_cefm_tree(t).pair(|(w, q)| {
            let aw = mult_value(a, w);
            if aw.is_zero() {
                aw
            } else {
                aw * b.tree(q)
            }
        })
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModifiedMode {
    /// Modified field `β` with `β ⋆ γ = α`: the method is the exact flow of `B(β)`.
    BackwardError,
    /// Modified field `β` with `β ⋆ α = γ`: the method applied to `B(β)` is exact.
    ModifyingIntegrator,
}

impl FromStr for ModifiedMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "backward_error" => Ok(Self::BackwardError),
            "modifying_integrator" => Ok(Self::ModifyingIntegrator),
            _ => Err(Error::Unsupported(format!("unknown mode `{s}`"))),
        }
    }
}

/// Solves the triangular substitution system for the modified field, order by order.
pub fn solve_modified(a: &BCoeff, mode: ModifiedMode, n: usize) -> Result<BCoeff> {
    a.require(n)?;
    let dot = RootedTree::leaf();
    if a.tree(&dot) != Rational::one() {
        return Err(Error::NoSolution(format!(
            "coefficient of the single vertex is {}, expected 1 (inconsistent method)",
            a.tree(&dot)
        )));
    }
    let gamma = exact_gamma(n);
    let (inner, target) = match mode {
        ModifiedMode::BackwardError => (&gamma, a),
        ModifiedMode::ModifyingIntegrator => (a, &gamma),
    };
    let mut beta = BCoeff::infinitesimal(n, []);
    for trees in trees_by_order(n).iter().skip(1) {
        for t in trees {
            let whole = Forest::single(t.clone());
            // all terms except ω = τ, which contributes β(τ)·inner(•) = β(τ)
            let rest = delta_cefm_tree(t).pair(|(w, q)| {
                if *w == whole {
                    return Rational::zero();
                }
                let bw = mult_value(&beta, w);
                if bw.is_zero() {
                    bw
                } else {
                    bw * inner.tree(q)
                }
            });
            beta.set_tree(t.clone(), target.tree(t) - rest);
        }
    }
    Ok(beta)
}

//! Substitution of LB-series through the substitution character `a*`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::bseries::CoeffKind;
use crate::error::{Error, Result};
use crate::forest::ops::concat_lin;
use crate::forest::{planar_forests_up_to, PlanarForest};
use crate::lbseries::coeff::LBCoeff;
use crate::lbseries::mkw::left_admissible_cuts;
use crate::linear::LinComb;

type PF = PlanarForest;

/// The substitution character of a field `α`, memoized per forest.
///
/// `α` gives the coefficients of the substituted vector field and is expected
/// to be Lie-valued (zero on shuffles). Only the default color is supported.
pub struct SubstitutionCharacter<'a> {
    alpha: &'a LBCoeff,
    memo: HashMap<PF, LinComb<PF>>,
}

impl<'a> SubstitutionCharacter<'a> {
    pub fn new(alpha: &'a LBCoeff) -> Self {
        SubstitutionCharacter { alpha, memo: HashMap::new() }
    }

    /// `a*(ω) = Σ a*(ω₍₁₎) B⁺(a*(P^c(ω₍₂₎))) α(R^c(ω₍₂₎))`, over deconcatenations
    /// `ω₍₁₎ω₍₂₎` and pruning cuts `c` of `ω₍₂₎` made below its roots.
    pub fn get(&mut self, w: &PF) -> Result<LinComb<PF>> {
        if w.is_unit() {
            return Ok(LinComb::basis(PF::unit()));
        }
        if let Some(hit) = self.memo.get(w) {
            return Ok(hit.clone());
        }
        if w.is_colored() {
            return Err(Error::Unsupported("substitution character on colored forests".into()));
        }
        let mut out = LinComb::zero();
        for i in 0..w.len() {
            let (w1, w2) = (w.slice(0..i), w.slice(i..w.len()));
            let left = self.get(&w1)?;
            for (p, r) in left_admissible_cuts(&w2, false) {
                let ar = self.alpha.value(&r);
                if ar.is_zero() {
                    continue;
                }
                let mut ap = LinComb::zero();
                for (q, k) in &p {
                    ap.add_assign_scaled(&self.get(q)?, k);
                }
                let grafted = ap.map_basis(|x| PF::single(x.bplus(None)));
                out.add_assign_scaled(&concat_lin(&left, &grafted), &ar);
            }
        }
        self.memo.insert(w.clone(), out.clone());
        Ok(out)
    }
}

/// `a*(ω)` for a single forest.
pub fn lb_substitution_character(alpha: &LBCoeff, w: &PF) -> Result<LinComb<PF>> {
    SubstitutionCharacter::new(alpha).get(w)
}

/// `(α ∗ β)(ω) = ⟨β, a*(ω)⟩` on all forests up to order `n`.
pub fn lb_substitute(alpha: &LBCoeff, beta: &LBCoeff, n: usize) -> Result<LBCoeff> {
    alpha.require(n)?;
    beta.require(n)?;
    if !alpha.value(&PF::unit()).is_zero() {
        return Err(Error::domain("the substituted field must vanish on the empty forest"));
    }
    let mut sc = SubstitutionCharacter::new(alpha);
    let mut vals = Vec::new();
    for w in planar_forests_up_to(n) {
        let v = beta.eval(&sc.get(&w)?);
        vals.push((w, v));
    }
    let kind = beta.kind();
    let mut out = LBCoeff::new(kind, n, vals);
    if kind == CoeffKind::Character {
        out.set(PF::unit(), One::one());
    }
    Ok(out)
}

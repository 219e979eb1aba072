//! Coefficient maps on planar forests.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::bseries::CoeffKind;
use crate::error::{Error, Result};
use crate::forest::{planar_forests_up_to, PlanarForest, PlanarTree};
use crate::linear::LinComb;
use crate::rational::Rational;

/// An LB-series coefficient map `α: OF → ℚ`, truncated at order `truncation`.
/// All forest values are stored explicitly; `kind` records the intended
/// structure (shuffle character, infinitesimal, or none).
#[derive(Debug, Clone, PartialEq)]
pub struct LBCoeff {
    kind: CoeffKind,
    truncation: usize,
    values: BTreeMap<PlanarForest, Rational>,
}

impl LBCoeff {
    pub fn new(kind: CoeffKind, truncation: usize, values: impl IntoIterator<Item = (PlanarForest, Rational)>) -> Self {
        let mut a = LBCoeff { kind, truncation, values: BTreeMap::new() };
        for (w, v) in values {
            a.set(w, v);
        }
        a
    }

    /// Reads coefficients off a formal sum, dropping terms above the truncation.
    pub fn from_lincomb(kind: CoeffKind, truncation: usize, x: &LinComb<PlanarForest>) -> Self {
        Self::new(kind, truncation, x.iter().filter(|(w, _)| w.order() <= truncation).map(|(w, v)| (w.clone(), v.clone())))
    }

    /// The counit `η`.
    pub fn eta(truncation: usize) -> Self {
        Self::new(CoeffKind::Character, truncation, [(PlanarForest::unit(), Rational::one())])
    }

    /// `δ_•`.
    pub fn delta_dot(truncation: usize) -> Self {
        Self::new(CoeffKind::Infinitesimal, truncation, [(PlanarForest::single(PlanarTree::leaf()), Rational::one())])
    }

    pub fn kind(&self) -> CoeffKind {
        self.kind
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn set(&mut self, w: PlanarForest, v: Rational) {
        if v.is_zero() {
            self.values.remove(&w);
        } else {
            self.values.insert(w, v);
        }
    }

    pub fn value(&self, w: &PlanarForest) -> Rational {
        self.values.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &LinComb<PlanarForest>) -> Rational {
        x.pair(|w| self.value(w))
    }

    pub fn require(&self, n: usize) -> Result<()> {
        if self.truncation < n {
            return Err(Error::Truncation { needed: n, have: self.truncation });
        }
        Ok(())
    }

    /// The dual element `Σ α(ω) ω`.
    pub fn to_lincomb(&self) -> LinComb<PlanarForest> {
        self.values.iter().map(|(w, v)| (w.clone(), v.clone())).collect()
    }

    /// Non-zero entries, highest order first.
    pub fn entries(&self) -> impl Iterator<Item = (&PlanarForest, &Rational)> {
        self.values.iter()
    }

    /// Non-zero entries on forests with `order <= n`.
    pub fn up_to(&self, n: usize) -> LinComb<PlanarForest> {
        self.to_lincomb().filter(|w| w.order() <= n)
    }

    /// `forest<TAB>p/q` lines for the non-zero entries, lowest order first.
    pub fn to_dump(&self) -> String {
        let mut out = String::new();
        for (w, v) in self.values.iter().rev() {
            let _ = writeln!(out, "{w}\t{v}");
        }
        out
    }

    /// All forests up to the truncation with their values, zeros included.
    pub fn table(&self) -> Vec<(PlanarForest, Rational)> {
        planar_forests_up_to(self.truncation).into_iter().rev().map(|w| {
            let v = self.value(&w);
            (w, v)
        }).collect()
    }
}

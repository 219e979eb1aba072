//! Coefficient conditions for Hamiltonian fields and symplectic methods.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::bseries::coeff::BCoeff;
use crate::error::{Error, Result};
use crate::forest::ops::butcher_product;
use crate::forest::{trees_up_to, Forest, RootedTree};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometricKind {
    /// `α(τ₁∘τ₂) + α(τ₂∘τ₁) = 0`
    HamiltonianField,
    /// `α(τ₁∘τ₂) + α(τ₂∘τ₁) = α(τ₁)α(τ₂)`
    SymplecticMethod,
}

impl FromStr for GeometricKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hamiltonian_field" | "hamiltonian" => Ok(Self::HamiltonianField),
            "symplectic_method" | "symplectic" => Ok(Self::SymplecticMethod),
            _ => Err(Error::Unsupported(format!("unknown condition `{s}`"))),
        }
    }
}

/// A tree pair at which the condition fails.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricViolation {
    pub t1: RootedTree,
    pub t2: RootedTree,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for GeometricViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}): {} != {}", self.t1, self.t2, self.lhs, self.rhs)
    }
}

/// Checks every unordered pair `{τ₁, τ₂}` with `|τ₁| + |τ₂| <= n` (including
/// `τ₁ = τ₂`). Only tree values of `a` enter; an empty report means the
/// condition holds.
pub fn check_geometric(a: &BCoeff, kind: GeometricKind, n: usize) -> Vec<GeometricViolation> {
    let trees = trees_up_to(n.saturating_sub(1));
    let mut out = Vec::new();
    for (i, t1) in trees.iter().enumerate() {
        for t2 in &trees[i..] {
            if t1.order() + t2.order() > n {
                continue;
            }
            let lhs = a.tree(&butcher_product(t1, &Forest::single(t2.clone())))
                + a.tree(&butcher_product(t2, &Forest::single(t1.clone())));
            let rhs = match kind {
                GeometricKind::HamiltonianField => Rational::zero(),
                GeometricKind::SymplecticMethod => a.tree(t1) * a.tree(t2),
            };
            if lhs != rhs {
                out.push(GeometricViolation { t1: t1.clone(), t2: t2.clone(), lhs, rhs });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bseries::tableau::{elementary_weights, RKTableau};
    use crate::rational::int;

    #[test]
    fn midpoint_is_symplectic() {
        let phi = elementary_weights(&RKTableau::implicit_midpoint(), 4);
        assert!(check_geometric(&phi, GeometricKind::SymplecticMethod, 4).is_empty());
    }

    #[test]
    fn euler_is_not() {
        let phi = elementary_weights(&RKTableau::euler(), 2);
        let v = check_geometric(&phi, GeometricKind::SymplecticMethod, 2);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].t1, RootedTree::leaf());
        assert_eq!((v[0].lhs.clone(), v[0].rhs.clone()), (int(0), int(1)));
    }

    #[test]
    fn zero_field_is_hamiltonian() {
        assert!(check_geometric(&BCoeff::infinitesimal(5, []), GeometricKind::HamiltonianField, 5).is_empty());
    }
}

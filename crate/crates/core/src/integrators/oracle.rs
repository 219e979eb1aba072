//! Brute-force Taylor oracle for Runge–Kutta maps.
//!
//! The methods are run in exact arithmetic, with `h = 1` and `y₀ = 0`, on the
//! nilpotent system that has one coordinate `y_u` per tree `u` and
//! `f_u(y) = Π y_c` over the branches `c` of `u`. For this field
//! `F(τ)(0)_u = σ(u) δ_{τu}`, so coordinate `u` of any B-series map started at
//! the origin reads off the coefficient of `u`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::bseries::{BCoeff, RKTableau};
use crate::error::{Error, Result};
use crate::forest::{trees_up_to, RootedTree};
use crate::rational::Rational;

struct Universal {
    trees: Vec<RootedTree>,
    branches: Vec<Vec<usize>>,
}

impl Universal {
    fn new(n: usize) -> Self {
        let trees = trees_up_to(n);
        let index: HashMap<RootedTree, usize> = trees.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        let branches = trees.iter().map(|t| t.children().iter().map(|c| index[c]).collect()).collect();
        Universal { trees, branches }
    }

    fn field(&self, y: &[Rational]) -> Vec<Rational> {
        self.branches.iter().map(|bs| bs.iter().fold(Rational::one(), |p, &c| p * &y[c])).collect()
    }

    fn axpy(y: &[Rational], terms: impl Iterator<Item = (Rational, Vec<Rational>)>) -> Vec<Rational> {
        let mut out = y.to_vec();
        for (c, k) in terms {
            if c.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(&k) {
                *o += &c * v;
            }
        }
        out
    }

    /// One step of `t` with `h = 1`.
    fn step(&self, t: &RKTableau, y: &[Rational]) -> Result<Vec<Rational>> {
        let s = t.stages();
        let dim = y.len();
        let stage = |ks: &Vec<Vec<Rational>>, i: usize| {
            let ys = Self::axpy(y, (0..s).map(|j| (t.a()[i][j].clone(), ks[j].clone())));
            self.field(&ys)
        };
        let mut ks = vec![vec![Rational::zero(); dim]; s];
        if t.is_explicit() {
            for i in 0..s {
                ks[i] = stage(&ks, i);
            }
        } else {
            // each sweep fixes one more grade of the nilpotent system
            let sweeps = self.trees.last().map_or(0, |u| u.order()) + 2;
            for _ in 0..sweeps {
                ks = (0..s).map(|i| stage(&ks, i)).collect();
            }
            let again: Vec<Vec<Rational>> = (0..s).map(|i| stage(&ks, i)).collect();
            if again != ks {
                return Err(Error::NoConvergence { iterations: sweeps, residual: f64::NAN });
            }
        }
        Ok(Self::axpy(y, (0..s).map(|i| (t.b()[i].clone(), ks[i].clone()))))
    }
}

/// The character of the composed map `t_k ∘ ⋯ ∘ t_1` (first tableau applied first),
/// read off the nilpotent system up to order `n`.
pub fn rk_taylor_oracle_composed(ts: &[RKTableau], n: usize) -> Result<BCoeff> {
    let sys = Universal::new(n);
    let mut y = vec![Rational::zero(); sys.trees.len()];
    for t in ts {
        y = sys.step(t, &y)?;
    }
    Ok(BCoeff::character(n, sys.trees.iter().cloned().zip(y)))
}

/// The B-series character of one step of `t`, computed without elementary weights.
pub fn rk_taylor_oracle(t: &RKTableau, n: usize) -> Result<BCoeff> {
    rk_taylor_oracle_composed(std::slice::from_ref(t), n)
}

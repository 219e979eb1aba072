//! Elementary differentials and truncated B-series evaluation.

use std::collections::HashMap;

use num_traits::Zero;

use crate::bseries::BCoeff;
use crate::error::Result;
use crate::forest::{trees_up_to, RootedTree};
use crate::integrators::poly::{PolyVectorField, Polynomial};
use crate::rational::{int, Rational};

/// `D^m p(y)[v₁,…,v_m]`.
fn multilinear(p: &Polynomial, y: &[Rational], vs: &[Vec<Rational>]) -> Rational {
    let Some((v, rest)) = vs.split_first() else {
        return p.eval(y);
    };
    let mut acc = Rational::zero();
    for (j, vj) in v.iter().enumerate() {
        if !vj.is_zero() {
            acc += vj * multilinear(&p.derivative(j), y, rest);
        }
    }
    acc
}

/// Symbolic `D^m p[V₁,…,V_m]` for polynomial vectors `V_k`.
fn multilinear_symbolic(p: &Polynomial, vs: &[Vec<Polynomial>]) -> Polynomial {
    let Some((v, rest)) = vs.split_first() else {
        return p.clone();
    };
    let mut acc = Polynomial::zero(p.nvars());
    for (j, vj) in v.iter().enumerate() {
        if !vj.is_zero() {
            acc = acc.add(&multilinear_symbolic(&p.derivative(j), rest).mul(vj));
        }
    }
    acc
}

fn differential_at(
    t: &RootedTree,
    f: &PolyVectorField,
    y: &[Rational],
    memo: &mut HashMap<RootedTree, Vec<Rational>>,
) -> Vec<Rational> {
    if let Some(hit) = memo.get(t) {
        return hit.clone();
    }
    let vs: Vec<Vec<Rational>> = t.children().iter().map(|c| differential_at(c, f, y, memo)).collect();
    let out: Vec<Rational> = f.components().iter().map(|p| multilinear(p, y, &vs)).collect();
    memo.insert(t.clone(), out.clone());
    out
}

/// `F(τ)(y) = F^{(m)}(y)(F(τ₁)(y),…,F(τ_m)(y))` for `τ = B⁺(τ₁⋯τ_m)`.
pub fn elementary_differential(t: &RootedTree, f: &PolyVectorField, y: &[Rational]) -> Result<Vec<Rational>> {
    f.check_dim(y.len())?;
    Ok(differential_at(t, f, y, &mut HashMap::new()))
}

/// `F(τ)` as a polynomial vector field.
pub fn elementary_differential_field(t: &RootedTree, f: &PolyVectorField) -> Vec<Polynomial> {
    let vs: Vec<Vec<Polynomial>> = t.children().iter().map(|c| elementary_differential_field(c, f)).collect();
    f.components().iter().map(|p| multilinear_symbolic(p, &vs)).collect()
}

/// `α(𝟙) y + Σ_{|τ| ≤ N} h^{|τ|} α(τ)/σ(τ) F(τ)(y)`.
pub fn eval_bseries(a: &BCoeff, f: &PolyVectorField, y: &[Rational], h: &Rational, n: usize) -> Result<Vec<Rational>> {
    a.require(n)?;
    f.check_dim(y.len())?;
    let unit = a.value(&crate::forest::Forest::unit());
    let mut out: Vec<Rational> = y.iter().map(|v| v * &unit).collect();
    let mut memo = HashMap::new();
    for t in trees_up_to(n) {
        let c = a.tree(&t);
        if c.is_zero() {
            continue;
        }
        let scale = c * num_traits::pow(h.clone(), t.order()) / int(t.sigma() as i64);
        for (o, v) in out.iter_mut().zip(differential_at(&t, f, y, &mut memo)) {
            *o += &scale * v;
        }
    }
    Ok(out)
}

/// The field `Σ_{|τ| ≤ N} h^{|τ|−1} β(τ)/σ(τ) F(τ)` of a vector-field series `β` at step `h`.
pub fn series_field(b: &BCoeff, f: &PolyVectorField, h: &Rational, n: usize) -> Result<PolyVectorField> {
    b.require(n)?;
    let mut parts = Vec::new();
    for t in trees_up_to(n) {
        let c = b.tree(&t);
        if c.is_zero() {
            continue;
        }
        let scale = c * num_traits::pow(h.clone(), t.order() - 1) / int(t.sigma() as i64);
        parts.push((scale, elementary_differential_field(&t, f)));
    }
    PolyVectorField::combine(f.dim(), parts)
}

/// Exact rational vectors `y + h F(y)`, the explicit Euler map.
pub fn euler_map(f: &PolyVectorField, y: &[Rational], h: &Rational) -> Result<Vec<Rational>> {
    Ok(y.iter().zip(f.eval(y)?).map(|(a, b)| a + h * b).collect())
}

/// `Σ_i |x_i − y_i|` for exact vectors.
pub fn l1_distance(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).map(|(a, b)| num_traits::abs(a - b)).fold(Rational::zero(), |s, d| s + d)
}

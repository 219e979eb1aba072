//! Conversions between flow representations (pullback character, autonomous
//! field, Lie-type generator) and the worked LB-series of the exact flow,
//! exponential Euler and the Lie-implicit midpoint rule.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::bseries::CoeffKind;
use crate::error::{Error, Result};
use crate::forest::ops::{concat_lin, gl_product_lin, shuffle, shuffle_lin};
use crate::forest::{planar_forests_up_to, PlanarForest, PlanarTree};
use crate::lbseries::bell::kappa;
use crate::lbseries::coeff::LBCoeff;
use crate::lbseries::mkw::{convolve_mkw, delta_mkw};
use crate::linear::LinComb;
use crate::rational::{factorial, int, Rational};

type PF = PlanarForest;

/// A linear endomorphism of the planar-forest span, tabulated on the basis up to an order.
#[derive(Debug, Clone, PartialEq)]
pub struct Endo {
    pub truncation: usize,
    images: BTreeMap<PF, LinComb<PF>>,
}

impl Endo {
    pub fn from_fn(n: usize, mut f: impl FnMut(&PF) -> LinComb<PF>) -> Self {
        let images = planar_forests_up_to(n).into_iter().map(|w| {
            let img = f(&w);
            (w, img)
        }).collect();
        Endo { truncation: n, images }
    }

    pub fn image(&self, w: &PF) -> LinComb<PF> {
        self.images.get(w).cloned().unwrap_or_default()
    }

    pub fn apply(&self, x: &LinComb<PF>) -> LinComb<PF> {
        x.map_linear(|w| self.image(w))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Endo) -> Endo {
        Endo::from_fn(self.truncation.min(other.truncation), |w| self.apply(&other.image(w)))
    }

    /// Pulls a coefficient map back along the endomorphism: `α ∘ self`.
    pub fn pullback(&self, a: &LBCoeff, kind: CoeffKind) -> LBCoeff {
        LBCoeff::new(kind, self.truncation, self.images.iter().map(|(w, img)| (w.clone(), a.eval(img))))
    }

    /// Convolution `f ∗ g = ⧢ ∘ (f ⊗ g) ∘ Δ_MKW`.
    pub fn convolve(&self, other: &Endo) -> Endo {
        Endo::from_fn(self.truncation.min(other.truncation), |w| {
            let mut out = LinComb::zero();
            for ((p, r), k) in &delta_mkw(w) {
                out.add_assign_scaled(&shuffle_lin(&self.image(p), &other.image(r)), k);
            }
            out
        })
    }
}

/// The Eulerian idempotent `e = log^∗(Id)` of the MKW Hopf algebra.
pub fn eulerian_idempotent(n: usize) -> Endo {
    // J = Id − η∘ε
    let j = Endo::from_fn(n, |w| if w.is_unit() { LinComb::zero() } else { LinComb::basis(w.clone()) });
    let mut power = j.clone();
    let mut e = Endo::from_fn(n, |w| j.image(w));
    for k in 2..=n {
        power = power.convolve(&j);
        let sign = if k % 2 == 0 { -Rational::one() } else { Rational::one() };
        let scale = sign / int(k as i64);
        e = Endo::from_fn(n, |w| {
            let mut x = e.image(w);
            x.add_assign_scaled(&power.image(w), &scale);
            x
        });
    }
    e
}

/// `β = α ∘ e`, the infinitesimal generator (autonomous field) of a character.
pub fn eulerian_apply(a: &LBCoeff, n: usize) -> Result<LBCoeff> {
    a.require(n)?;
    Ok(eulerian_idempotent(n).pullback(a, CoeffKind::Infinitesimal))
}

/// `log^∗(α)` by direct convolution powers; agrees with [`eulerian_apply`] on characters.
pub fn log_convolution(a: &LBCoeff, n: usize) -> Result<LBCoeff> {
    a.require(n)?;
    let mut j = a.clone();
    j.set(PF::unit(), a.value(&PF::unit()) - Rational::one());
    let j = LBCoeff::new(CoeffKind::Plain, n, j.entries().map(|(w, v)| (w.clone(), v.clone())));
    let mut power = j.clone();
    let mut acc = j.to_lincomb();
    for k in 2..=n {
        power = convolve_mkw(&power, &j, n)?;
        let sign = if k % 2 == 0 { -Rational::one() } else { Rational::one() };
        acc.add_assign_scaled(&power.to_lincomb(), &(sign / int(k as i64)));
    }
    Ok(LBCoeff::from_lincomb(CoeffKind::Infinitesimal, n, &acc))
}

/// `α = exp^⋄(β)`, the exponential for the Grossman–Larson product, computed
/// on the dual elements `Σ β(ω) ω`.
pub fn gl_exp(b: &LBCoeff, n: usize) -> Result<LBCoeff> {
    b.require(n)?;
    if !b.value(&PF::unit()).is_zero() {
        return Err(Error::domain("gl_exp needs a coefficient map vanishing on the empty forest"));
    }
    let x = b.up_to(n);
    let mut term = LinComb::basis(PF::unit());
    let mut acc = term.clone();
    for k in 1..=n {
        term = gl_product_lin(&term, &x).filter(|w| w.order() <= n).scaled(&(Rational::one() / int(k as i64)));
        acc.add_assign_scaled(&term, &Rational::one());
    }
    Ok(LBCoeff::from_lincomb(CoeffKind::Character, n, &acc))
}

/// Concatenation exponential `Σ x^k / k!`, truncated at order `n`.
pub fn exp_concat(x: &LinComb<PF>, n: usize) -> LinComb<PF> {
    let x = x.filter(|w| !w.is_unit() && w.order() <= n);
    let mut term = LinComb::basis(PF::unit());
    let mut acc = term.clone();
    for k in 1..=n {
        term = concat_lin(&term, &x).filter(|w| w.order() <= n).scaled(&(Rational::one() / int(k as i64)));
        acc.add_assign_scaled(&term, &Rational::one());
    }
    acc
}

/// Antipode of the shuffle Hopf algebra: `S(t₁…t_n) = (−1)^n t_n…t₁`.
fn shuffle_antipode(w: &PF) -> LinComb<PF> {
    let mut rev = w.trees().to_vec();
    rev.reverse();
    let sign = if w.len().is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    LinComb::term(PF::from_trees(rev), sign)
}

/// Dynkin operator `D = S ∗ Y` in the shuffle Hopf algebra (deconcatenation coproduct).
pub fn dynkin_operator(w: &PF) -> LinComb<PF> {
    let mut out = LinComb::zero();
    for i in 0..=w.len() {
        let (u, v) = (w.slice(0..i), w.slice(i..w.len()));
        if v.is_unit() {
            continue;
        }
        let yv = int(v.order() as i64);
        for (s, k) in &shuffle_antipode(&u) {
            out.add_assign_scaled(&shuffle(s, &v), &(k * &yv));
        }
    }
    out
}

/// `Y⁻¹ ∘ D` as an endomorphism up to order `n` (zero on the empty forest).
pub fn dynkin_idempotent(n: usize) -> Endo {
    Endo::from_fn(n, |w| {
        if w.is_unit() {
            LinComb::zero()
        } else {
            dynkin_operator(w).scaled(&(Rational::one() / int(w.order() as i64)))
        }
    })
}

/// `γ = α ∘ Y⁻¹ ∘ D`: the Lie-type generator of a character.
pub fn dynkin_apply(a: &LBCoeff, n: usize) -> Result<LBCoeff> {
    a.require(n)?;
    Ok(dynkin_idempotent(n).pullback(a, CoeffKind::Infinitesimal))
}

/// `α = Q(γ)`: `α(ω) = Σ κ(|ω₁|,…,|ω_k|) γ(ω₁)⋯γ(ω_k)` over the ways of
/// cutting the word `ω` into consecutive non-empty pieces.
pub fn q_apply(g: &LBCoeff, n: usize) -> Result<LBCoeff> {
    g.require(n)?;
    Ok(LBCoeff::new(
        CoeffKind::Character,
        n,
        planar_forests_up_to(n).into_iter().map(|w| {
            let v = q_value(g, &w);
            (w, v)
        }),
    ))
}

fn q_value(g: &LBCoeff, w: &PF) -> Rational {
    fn go(g: &LBCoeff, w: &PF, start: usize, grades: &mut Vec<usize>, prod: Rational, acc: &mut Rational) {
        if start == w.len() {
            *acc += prod * kappa(grades);
            return;
        }
        for end in start + 1..=w.len() {
            let piece = w.slice(start..end);
            let v = g.value(&piece);
            if v.is_zero() {
                continue;
            }
            grades.push(piece.order());
            go(g, w, end, grades, &prod * v, acc);
            grades.pop();
        }
    }
    let mut acc = Rational::zero();
    go(g, w, 0, &mut Vec::new(), Rational::one(), &mut acc);
    acc
}

/// `Q(γ)` on the primal side: `Σ κ(j) γ_{j₁} ⋯ γ_{j_k}` with `γ_j` the grade-`j` part.
pub fn q_operator(x: &LinComb<PF>, n: usize) -> LinComb<PF> {
    q_apply(&LBCoeff::from_lincomb(CoeffKind::Plain, n, x), n).map(|a| a.to_lincomb()).unwrap_or_default()
}

/// `B⁺` applied term by term, with the default color.
fn bplus_lin(x: &LinComb<PF>) -> LinComb<PF> {
    x.map_basis(|w| PF::single(w.bplus(None)))
}

/// `γ_Exact` from the fixed point `γ = Y⁻¹ B⁺(Q(γ))`; each sweep settles one more grade.
pub fn exact_flow_lb(n: usize) -> LBCoeff {
    let mut g = LinComb::<PF>::zero();
    for _ in 0..n {
        let q = q_operator(&g, n.saturating_sub(1));
        g = bplus_lin(&q).map_linear(|w| LinComb::term(w.clone(), Rational::one() / int(w.order() as i64)));
    }
    LBCoeff::from_lincomb(CoeffKind::Infinitesimal, n, &g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LbMethod {
    /// `y₁ = exp(h f(y₀)) y₀`
    ExponentialEuler,
    /// `y₁ = exp(σ) y₀` with `σ = h f(exp(σ/2) y₀)`
    LieImplicitMidpoint,
}

impl FromStr for LbMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exponential_euler" | "lie_euler" => Ok(Self::ExponentialEuler),
            "lie_implicit_midpoint" | "lie_midpoint" => Ok(Self::LieImplicitMidpoint),
            _ => Err(Error::Unsupported(format!("unknown LB method `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    /// Pullback character.
    Type1,
    /// Lie-type generator, `Y⁻¹∘D` of the character.
    Type3,
    /// The algebra element `σ` with `y₁ = exp(σ) y₀`.
    Generator,
}

impl FromStr for Representation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "type1" => Ok(Self::Type1),
            "type3" => Ok(Self::Type3),
            "generator" | "sigma" => Ok(Self::Generator),
            _ => Err(Error::Unsupported(format!("unknown representation `{s}`"))),
        }
    }
}

/// Solves `σ = Σ_j B⁺(σ^j) / (2^j j!)` grade by grade.
pub fn midpoint_generator(n: usize) -> LinComb<PF> {
    let mut s = LinComb::<PF>::zero();
    for _ in 0..n {
        let mut next = LinComb::zero();
        let mut power = LinComb::basis(PF::unit());
        for j in 0..n {
            let c = Rational::one() / (int(1i64 << j) * factorial(j));
            next.add_assign_scaled(&bplus_lin(&power), &c);
            power = concat_lin(&power, &s).filter(|w| w.order() < n);
        }
        s = next.filter(|w| w.order() <= n);
    }
    s
}

/// LB-series of the exponential Euler method or the Lie-implicit midpoint rule.
pub fn method_series(method: LbMethod, rep: Representation, n: usize) -> Result<LBCoeff> {
    let sigma = match method {
        LbMethod::ExponentialEuler => LinComb::basis(PF::single(PlanarTree::leaf())),
        LbMethod::LieImplicitMidpoint => midpoint_generator(n),
    };
    let type1 = || LBCoeff::from_lincomb(CoeffKind::Character, n, &exp_concat(&sigma, n));
    Ok(match rep {
        Representation::Generator => LBCoeff::from_lincomb(CoeffKind::Infinitesimal, n, &sigma),
        Representation::Type1 => type1(),
        Representation::Type3 => dynkin_apply(&type1(), n)?,
    })
}

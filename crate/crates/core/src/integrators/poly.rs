//! Multivariate polynomials and polynomial vector fields over ℚ.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, to_f64, Rational};

/// A polynomial in `nvars` variables; monomials keyed by exponent vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_monomial(vec![0; nvars], c);
        p
    }

    /// The coordinate `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_monomial(e, Rational::one());
        p
    }

    pub fn monomial(exponents: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_monomial(exponents, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn add_monomial(&mut self, e: Vec<u32>, c: Rational) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_monomial(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_monomial(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_monomial(e, c1 * c2);
            }
        }
        out
    }

    /// `∂p/∂x_j`.
    pub fn derivative(&self, j: usize) -> Polynomial {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[j] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[j] -= 1;
            out.add_monomial(d, c * int(e[j] as i64));
        }
        out
    }

    /// `∂^k p / ∂x_{j₁}⋯∂x_{j_k}`.
    pub fn partial(&self, js: &[usize]) -> Polynomial {
        js.iter().fold(self.clone(), |p, &j| p.derivative(j))
    }

    pub fn eval(&self, y: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (yi, &k) in y.iter().zip(e) {
                for _ in 0..k {
                    m *= yi;
                }
            }
            acc += m;
        }
        acc
    }

    pub fn eval_f64(&self, y: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| to_f64(c) * y.iter().zip(e).map(|(yi, &k)| yi.powi(k as i32)).product::<f64>())
            .sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `y' = F(y)` with polynomial components `f^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyVectorField {
    components: Vec<Polynomial>,
}

impl PolyVectorField {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let n = components.len();
        if let Some(bad) = components.iter().find(|p| p.nvars() != n) {
            return Err(Error::Dimension { expected: n, got: bad.nvars() });
        }
        Ok(PolyVectorField { components })
    }

    /// `F(y) = A y`.
    pub fn linear(a: &[Vec<Rational>]) -> Result<Self> {
        let n = a.len();
        let comps = a
            .iter()
            .map(|row| {
                let mut p = Polynomial::zero(n);
                for (j, c) in row.iter().enumerate() {
                    p = p.add(&Polynomial::var(n, j).scale(c));
                }
                p
            })
            .collect();
        Self::new(comps)
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dim() {
            return Err(Error::Dimension { expected: self.dim(), got });
        }
        Ok(())
    }

    pub fn eval(&self, y: &[Rational]) -> Result<Vec<Rational>> {
        self.check_dim(y.len())?;
        Ok(self.components.iter().map(|p| p.eval(y)).collect())
    }

    pub fn eval_f64(&self, y: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(y.len())?;
        Ok(self.components.iter().map(|p| p.eval_f64(y)).collect())
    }

    /// `Σ c_k F_k` over fields of equal dimension.
    pub fn combine(n: usize, parts: impl IntoIterator<Item = (Rational, Vec<Polynomial>)>) -> Result<Self> {
        let mut comps = vec![Polynomial::zero(n); n];
        for (c, f) in parts {
            if f.len() != n {
                return Err(Error::Dimension { expected: n, got: f.len() });
            }
            for (acc, p) in comps.iter_mut().zip(&f) {
                *acc = acc.add(&p.scale(&c));
            }
        }
        Self::new(comps)
    }
}

//! Runge–Kutta tableaus, elementary weights and order conditions.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::bseries::coeff::{BCoeff, CoeffKind};
use crate::error::{Error, Result};
use crate::forest::{trees_by_order, RootedTree};
use crate::rational::{parse_rational, rat, to_f64, Rational};

/// Coefficients `(a, b, c)` of an s-stage Runge–Kutta method, with `c_i = Σ_j a_ij`.
#[derive(Debug, Clone, PartialEq)]
pub struct RKTableau {
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    c: Vec<Rational>,
}

pub const BUILTIN_TABLEAUS: [&str; 4] = ["euler", "explicit_midpoint", "implicit_midpoint", "rk4"];

impl RKTableau {
    pub fn new(a: Vec<Vec<Rational>>, b: Vec<Rational>) -> Result<Self> {
        let s = b.len();
        if s == 0 {
            return Err(Error::domain("a tableau needs at least one stage"));
        }
        if a.len() != s {
            return Err(Error::Dimension { expected: s, got: a.len() });
        }
        for row in &a {
            if row.len() != s {
                return Err(Error::Dimension { expected: s, got: row.len() });
            }
        }
        let c = a.iter().map(|row| row.iter().fold(Rational::zero(), |acc, x| acc + x)).collect();
        Ok(RKTableau { a, b, c })
    }

    pub fn euler() -> Self {
        Self::new(vec![vec![rat(0, 1)]], vec![rat(1, 1)]).expect("valid tableau")
    }

    pub fn explicit_midpoint() -> Self {
        Self::new(
            vec![vec![rat(0, 1), rat(0, 1)], vec![rat(1, 2), rat(0, 1)]],
            vec![rat(0, 1), rat(1, 1)],
        )
        .expect("valid tableau")
    }

    pub fn implicit_midpoint() -> Self {
        Self::new(vec![vec![rat(1, 2)]], vec![rat(1, 1)]).expect("valid tableau")
    }

    /// The classical fourth-order method.
    pub fn rk4() -> Self {
        let z = || rat(0, 1);
        Self::new(
            vec![
                vec![z(), z(), z(), z()],
                vec![rat(1, 2), z(), z(), z()],
                vec![z(), rat(1, 2), z(), z()],
                vec![z(), z(), rat(1, 1), z()],
            ],
            vec![rat(1, 6), rat(1, 3), rat(1, 3), rat(1, 6)],
        )
        .expect("valid tableau")
    }

    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "euler" => Ok(Self::euler()),
            "explicit_midpoint" => Ok(Self::explicit_midpoint()),
            "implicit_midpoint" => Ok(Self::implicit_midpoint()),
            "rk4" => Ok(Self::rk4()),
            _ => Err(Error::Unsupported(format!("unknown tableau `{name}`"))),
        }
    }

    pub fn stages(&self) -> usize {
        self.b.len()
    }

    pub fn a(&self) -> &[Vec<Rational>] {
        &self.a
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    pub fn c(&self) -> &[Rational] {
        &self.c
    }

    /// Strictly lower triangular `a`.
    pub fn is_explicit(&self) -> bool {
        self.a.iter().enumerate().all(|(i, row)| row[i..].iter().all(|x| x.is_zero()))
    }

    pub fn a_f64(&self) -> Vec<Vec<f64>> {
        self.a.iter().map(|r| r.iter().map(to_f64).collect()).collect()
    }

    pub fn b_f64(&self) -> Vec<f64> {
        self.b.iter().map(to_f64).collect()
    }

    pub fn c_f64(&self) -> Vec<f64> {
        self.c.iter().map(to_f64).collect()
    }

    /// Reads the plain-text format: `s`, then `s` rows of `a`, then one row of `b`.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let s: usize = lines
            .next()
            .ok_or_else(|| Error::parse(0, "empty tableau"))?
            .parse()
            .map_err(|_| Error::parse(0, "first line must be the stage count"))?;
        let mut row = |what: &str| -> Result<Vec<Rational>> {
            let l = lines.next().ok_or_else(|| Error::parse(0, format!("missing {what}")))?;
            let r = l.split_whitespace().map(parse_rational).collect::<Result<Vec<_>>>()?;
            if r.len() != s {
                return Err(Error::Dimension { expected: s, got: r.len() });
            }
            Ok(r)
        };
        let a = (0..s).map(|i| row(&format!("row {} of a", i + 1))).collect::<Result<Vec<_>>>()?;
        let b = row("b")?;
        Self::new(a, b)
    }
}

impl fmt::Display for RKTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.stages())?;
        for row in self.a.iter().chain(std::iter::once(&self.b)) {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Internal stage weights `Φ_i(τ)` and the elementary weight `Φ(τ)`.
struct Weights<'a> {
    t: &'a RKTableau,
    // ψ_j(τ) = Π over branches of Φ_j(branch)
    psi: HashMap<RootedTree, Vec<Rational>>,
}

impl<'a> Weights<'a> {
    fn psi(&mut self, tau: &RootedTree) -> Vec<Rational> {
        if let Some(v) = self.psi.get(tau) {
            return v.clone();
        }
        let s = self.t.stages();
        let mut out = vec![Rational::one(); s];
        for ch in tau.children() {
            let inner = self.stage(ch);
            for j in 0..s {
                out[j] *= &inner[j];
            }
        }
        self.psi.insert(tau.clone(), out.clone());
        out
    }

    fn stage(&mut self, tau: &RootedTree) -> Vec<Rational> {
        let psi = self.psi(tau);
        self.t.a.iter().map(|row| row.iter().zip(&psi).map(|(a, p)| a * p).sum()).collect()
    }

    fn weight(&mut self, tau: &RootedTree) -> Rational {
        let psi = self.psi(tau);
        self.t.b.iter().zip(&psi).map(|(b, p)| b * p).sum()
    }
}

/// `Φ(τ) = Σ_j b_j Π Φ_j(τᵢ)` over the branches `τᵢ`, with `Φ_j(•) = c_j`.
pub fn elementary_weight(t: &RKTableau, tau: &RootedTree) -> Rational {
    Weights { t, psi: HashMap::new() }.weight(tau)
}

/// The character of elementary weights up to order `n`.
pub fn elementary_weights(t: &RKTableau, n: usize) -> BCoeff {
    let mut w = Weights { t, psi: HashMap::new() };
    BCoeff::from_tree_fn(CoeffKind::Character, n, |tau| w.weight(tau))
}

/// The first order condition that fails.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderViolation {
    pub tree: RootedTree,
    pub got: Rational,
    pub expected: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrderReport {
    pub order: usize,
    pub violation: Option<OrderViolation>,
}

/// Largest `p <= n` with `α(τ) = 1/τ!` for every tree with `|τ| <= p`.
pub fn order_of(a: &BCoeff, n: usize) -> OrderReport {
    for (k, trees) in trees_by_order(n).iter().enumerate().skip(1) {
        for tau in trees {
            let expected = rat(1, tau.factorial() as i64);
            let got = a.tree(tau);
            if got != expected {
                return OrderReport {
                    order: k - 1,
                    violation: Some(OrderViolation { tree: tau.clone(), got, expected }),
                };
            }
        }
    }
    OrderReport { order: n, violation: None }
}

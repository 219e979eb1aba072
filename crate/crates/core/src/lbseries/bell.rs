//! Non-commutative Bell polynomials and the Faà di Bruno coproduct.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linear::{LinComb, Tensor};
use crate::rational::{int, Rational};

/// A word `d_{i1} d_{i2} …` in the letters `d_i`, `i >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BellWord(pub Vec<u32>);

impl BellWord {
    pub fn empty() -> Self {
        BellWord(Vec::new())
    }

    pub fn letter(i: u32) -> Self {
        BellWord(vec![i])
    }

    /// `Σ i` over the letters.
    pub fn grade(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &BellWord) -> BellWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BellWord(v)
    }
}

impl fmt::Display for BellWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("d{i}")).collect();
        f.write_str(&parts.join("."))
    }
}

impl fmt::Debug for BellWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BellWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(BellWord::empty());
        }
        let mut pos = 0;
        let mut letters = Vec::new();
        for part in s.split('.') {
            let i = part
                .strip_prefix('d')
                .and_then(|n| n.parse::<u32>().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(|| Error::parse(pos, format!("bad letter `{part}`, expected d<i> with i >= 1")))?;
            letters.push(i);
            pos += part.len() + 1;
        }
        Ok(BellWord(letters))
    }
}

/// `∂`, the derivation with `∂d_i = d_{i+1}`.
fn derive(w: &BellWord) -> LinComb<BellWord> {
    let mut out = LinComb::zero();
    for k in 0..w.0.len() {
        let mut v = w.0.clone();
        v[k] += 1;
        out.add_term(BellWord(v), Rational::one());
    }
    out
}

/// `B_n`, from `B_0 = 1` and `B_n = (d₁ + ∂) B_{n−1}`.
pub fn bell(n: usize) -> LinComb<BellWord> {
    let mut b = LinComb::basis(BellWord::empty());
    let d1 = BellWord::letter(1);
    for _ in 0..n {
        let mut next = b.map_basis(|w| d1.concat(w));
        next.add_assign_scaled(&b.map_linear(derive), &Rational::one());
        b = next;
    }
    b
}

/// `B_{n,k}`: the words of length `k` in `B_n`.
pub fn bell_partial(n: usize, k: usize) -> Result<LinComb<BellWord>> {
    if k > n || (k == 0 && n > 0) {
        return Err(Error::domain(format!("partial Bell polynomial B({n},{k}) needs 1 <= k <= n")));
    }
    Ok(bell(n).filter(|w| w.len() == k))
}

/// `Δ(d_n) = Σ_k B_{n,k} ⊗ d_k`, extended multiplicatively over concatenation.
pub fn fdb_coproduct(x: &BellWord) -> Tensor<BellWord, BellWord> {
    let mut acc: Tensor<BellWord, BellWord> = LinComb::basis((BellWord::empty(), BellWord::empty()));
    for &i in &x.0 {
        let n = i as usize;
        let b = bell(n);
        let letter: Tensor<BellWord, BellWord> =
            b.map_basis(|w| (w.clone(), BellWord::letter(w.len() as u32)));
        acc = acc.bilinear(&letter, |(a1, b1), (a2, b2)| LinComb::basis((a1.concat(a2), b1.concat(b2))));
    }
    acc
}

pub fn fdb_coproduct_lin(x: &LinComb<BellWord>) -> Tensor<BellWord, BellWord> {
    x.map_linear(fdb_coproduct)
}

/// `κ(j₁,…,j_k) = j₁⋯j_k / (j₁ (j₁+j₂) ⋯ (j₁+⋯+j_k))`.
pub fn kappa(js: &[usize]) -> Rational {
    let mut num = Rational::one();
    let mut den = Rational::one();
    let mut partial = 0usize;
    for &j in js {
        partial += j;
        num *= int(j as i64);
        den *= int(partial as i64);
    }
    num / den
}

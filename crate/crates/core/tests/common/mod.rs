//! Identity checks shared by the property suites and the acceptance target.
#![allow(dead_code)]

use bseries::bseries::{antipode_bck, delta_bck, delta_cefm};
use bseries::forest::{
    concat_lin, gl_product_lin, left_graft_lin, prelie_graft_lin, shuffle_lin, Forest, PlanarForest, RootedTree,
};
use bseries::lbseries::{antipode_mkw, delta_mkw};
use bseries::{LinComb, Rational};

pub type PF = PlanarForest;
pub type Triple<A> = LinComb<(A, A, A)>;

pub fn tree(s: &str) -> RootedTree {
    s.parse().unwrap()
}

pub fn forest(s: &str) -> Forest {
    s.parse().unwrap()
}

pub fn pf(s: &str) -> PF {
    s.parse().unwrap()
}

pub fn basis<K: Ord + Clone>(k: K) -> LinComb<K> {
    LinComb::basis(k)
}

/// `x ▷ (y ▷ z) − (x ▷ y) ▷ z`
pub fn prelie_associator(x: &LinComb<RootedTree>, y: &LinComb<RootedTree>, z: &LinComb<RootedTree>) -> LinComb<RootedTree> {
    prelie_graft_lin(x, &prelie_graft_lin(y, z)).sub(&prelie_graft_lin(&prelie_graft_lin(x, y), z))
}

pub fn prelie_symmetric(x: &LinComb<RootedTree>, y: &LinComb<RootedTree>, z: &LinComb<RootedTree>) -> bool {
    prelie_associator(x, y, z) == prelie_associator(y, x, z)
}

/// `x ↷ (y ↷ z) − (x ↷ y) ↷ z`
pub fn graft_associator(x: &LinComb<PF>, y: &LinComb<PF>, z: &LinComb<PF>) -> LinComb<PF> {
    left_graft_lin(x, &left_graft_lin(y, z)).sub(&left_graft_lin(&left_graft_lin(x, y), z))
}

/// For a tree sum `f`: `f ↷ (g h) = (f ↷ g) h + g (f ↷ h)`.
pub fn graft_derivation(f: &LinComb<PF>, g: &LinComb<PF>, h: &LinComb<PF>) -> bool {
    let lhs = left_graft_lin(f, &concat_lin(g, h));
    let rhs = concat_lin(&left_graft_lin(f, g), h).plus(&concat_lin(g, &left_graft_lin(f, h)));
    lhs == rhs
}

/// For a tree sum `f` and forest sums `g`, `h`: `f ↷ (g ↷ h) = (f g) ↷ h + (f ↷ g) ↷ h`.
pub fn graft_dalgebra(f: &LinComb<PF>, g: &LinComb<PF>, h: &LinComb<PF>) -> bool {
    let lhs = left_graft_lin(f, &left_graft_lin(g, h));
    let rhs = left_graft_lin(&concat_lin(f, g), h).plus(&left_graft_lin(&left_graft_lin(f, g), h));
    lhs == rhs
}

/// For tree sums `x`, `y`: `[x, y] ↷ z = a(x, y, z) − a(y, x, z)`.
pub fn postlie_bracket(x: &LinComb<PF>, y: &LinComb<PF>, z: &LinComb<PF>) -> bool {
    let br = concat_lin(x, y).sub(&concat_lin(y, x));
    left_graft_lin(&br, z) == graft_associator(x, y, z).sub(&graft_associator(y, x, z))
}

pub fn gl_associative(a: &LinComb<PF>, b: &LinComb<PF>, c: &LinComb<PF>) -> bool {
    gl_product_lin(&gl_product_lin(a, b), c) == gl_product_lin(a, &gl_product_lin(b, c))
}

pub fn shuffle_associative(a: &LinComb<PF>, b: &LinComb<PF>, c: &LinComb<PF>) -> bool {
    shuffle_lin(&shuffle_lin(a, b), c) == shuffle_lin(a, &shuffle_lin(b, c))
}

/// `(Δ ⊗ id)Δ(x)` and `(id ⊗ Δ)Δ(x)`.
pub fn coassoc_sides_lin<K: Ord + Clone>(x: &LinComb<K>, delta: impl Fn(&K) -> LinComb<(K, K)>) -> (Triple<K>, Triple<K>) {
    let d = x.map_linear(|w| delta(w));
    let mut left = LinComb::zero();
    let mut right = LinComb::zero();
    for ((a, b), c) in &d {
        let da = delta(a).map_basis(|(a1, a2)| (a1.clone(), a2.clone(), b.clone()));
        left.add_assign_scaled(&da, c);
        let db = delta(b).map_basis(|(b1, b2)| (a.clone(), b1.clone(), b2.clone()));
        right.add_assign_scaled(&db, c);
    }
    (left, right)
}

pub fn coassociative<K: Ord + Clone>(w: &K, delta: impl Fn(&K) -> LinComb<(K, K)>) -> bool {
    let (l, r) = coassoc_sides_lin(&basis(w.clone()), delta);
    l == r
}

pub fn coassociative_bck(w: &Forest) -> bool {
    coassociative(w, delta_bck)
}

pub fn coassociative_cefm(w: &Forest) -> bool {
    coassociative(w, delta_cefm)
}

pub fn coassociative_mkw(w: &PF) -> bool {
    coassociative(w, delta_mkw)
}

fn forest_mul(x: &LinComb<Forest>, y: &LinComb<Forest>) -> LinComb<Forest> {
    x.bilinear(y, |a, b| basis(a.mul(b)))
}

/// `μ(S ⊗ id)Δ(x)` and `μ(id ⊗ S)Δ(x)` both equal `ε(x)𝟙`.
pub fn antipode_law_bck_lin(x: &LinComb<Forest>) -> bool {
    let want = LinComb::term(Forest::unit(), x.coeff(&Forest::unit()));
    let d = x.map_linear(delta_bck);
    let left = d.map_linear_pairs(|a, b| forest_mul(&antipode_bck(a), &basis(b.clone())));
    let right = d.map_linear_pairs(|a, b| forest_mul(&basis(a.clone()), &antipode_bck(b)));
    left == want && right == want
}

pub fn antipode_law_bck(w: &Forest) -> bool {
    antipode_law_bck_lin(&basis(w.clone()))
}

/// Same law in the shuffle algebra.
pub fn antipode_law_mkw_lin(x: &LinComb<PF>) -> bool {
    let want = LinComb::term(PF::unit(), x.coeff(&PF::unit()));
    let d = x.map_linear(delta_mkw);
    let left = d.map_linear_pairs(|a, b| shuffle_lin(&antipode_mkw(a), &basis(b.clone())));
    let right = d.map_linear_pairs(|a, b| shuffle_lin(&basis(a.clone()), &antipode_mkw(b)));
    left == want && right == want
}

pub fn antipode_law_mkw(w: &PF) -> bool {
    antipode_law_mkw_lin(&basis(w.clone()))
}

pub trait PairMap<A, B> {
    fn map_linear_pairs<L: Ord + Clone>(&self, f: impl FnMut(&A, &B) -> LinComb<L>) -> LinComb<L>;
}

impl<A: Ord + Clone, B: Ord + Clone> PairMap<A, B> for LinComb<(A, B)> {
    fn map_linear_pairs<L: Ord + Clone>(&self, mut f: impl FnMut(&A, &B) -> LinComb<L>) -> LinComb<L> {
        self.map_linear(|(a, b)| f(a, b))
    }
}

/// Builds a tensor from `(coefficient, left, right)` strings.
pub fn tensor<K: Ord + Clone>(terms: &[(i64, &str, &str)], parse: impl Fn(&str) -> K) -> LinComb<(K, K)> {
    terms.iter().map(|(c, a, b)| ((parse(a), parse(b)), Rational::from_integer((*c).into()))).collect()
}

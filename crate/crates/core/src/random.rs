//! Seeded random test data: rationals, characters, Lie polynomials, formal sums.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bseries::{BCoeff, CoeffKind};
use crate::forest::ops::concat_lin;
use crate::forest::{forests_up_to, planar_forests_up_to, planar_trees_up_to, trees_up_to, PlanarForest, RootedTree};
use crate::lbseries::{exp_concat, LBCoeff};
use crate::linear::LinComb;
use crate::rational::{rat, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| <= 6`, `1 <= q <= 5`.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-6..=6), rng.gen_range(1..=5))
}

fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let q = random_rational(rng);
        if q != rat(0, 1) {
            return q;
        }
    }
}

/// A BCK character with random tree values up to order `n`.
pub fn random_bck_character<R: Rng>(rng: &mut R, n: usize) -> BCoeff {
    BCoeff::from_tree_fn(CoeffKind::Character, n, |_| random_rational(rng))
}

/// An infinitesimal character with random tree values up to order `n`.
pub fn random_bck_infinitesimal<R: Rng>(rng: &mut R, n: usize) -> BCoeff {
    BCoeff::from_tree_fn(CoeffKind::Infinitesimal, n, |_| random_rational(rng))
}

/// A plain map with random values on all forests up to order `n`.
pub fn random_bck_plain<R: Rng>(rng: &mut R, n: usize) -> BCoeff {
    BCoeff::plain(n, forests_up_to(n).into_iter().map(|w| (w, random_rational(rng))))
}

/// `terms` random non-planar trees of order `1..=n` with random coefficients.
pub fn random_tree_sum<R: Rng>(rng: &mut R, n: usize, terms: usize) -> LinComb<RootedTree> {
    let basis = trees_up_to(n);
    (0..terms).map(|_| (basis.choose(rng).unwrap().clone(), nonzero_rational(rng))).collect()
}

/// `terms` random planar forests of order `0..=n` with random coefficients.
pub fn random_planar_sum<R: Rng>(rng: &mut R, n: usize, terms: usize) -> LinComb<PlanarForest> {
    let basis = planar_forests_up_to(n);
    (0..terms).map(|_| (basis.choose(rng).unwrap().clone(), nonzero_rational(rng))).collect()
}

/// A random element of the free Lie algebra on planar trees (for the
/// concatenation commutator), truncated at order `n`: random trees plus
/// random brackets `[t₁, t₂]` and `[t₁, [t₂, t₃]]`.
pub fn random_lie_element<R: Rng>(rng: &mut R, n: usize) -> LinComb<PlanarForest> {
    let trees: Vec<LinComb<PlanarForest>> =
        planar_trees_up_to(n).into_iter().map(|t| LinComb::basis(PlanarForest::single(t))).collect();
    let bracket = |a: &LinComb<PlanarForest>, b: &LinComb<PlanarForest>| concat_lin(a, b).sub(&concat_lin(b, a));
    let mut out = LinComb::zero();
    for t in &trees {
        out.add_assign_scaled(t, &random_rational(rng));
    }
    for _ in 0..trees.len() {
        let (a, b) = (trees.choose(rng).unwrap(), trees.choose(rng).unwrap());
        let mut br = bracket(a, b);
        if rng.gen_bool(0.5) {
            br = bracket(trees.choose(rng).unwrap(), &br);
        }
        out.add_assign_scaled(&br, &random_rational(rng));
    }
    out.filter(|w| w.order() <= n)
}

/// A random shuffle character: the coefficients of `exp(L)` for a random Lie element `L`.
pub fn random_lb_character<R: Rng>(rng: &mut R, n: usize) -> LBCoeff {
    LBCoeff::from_lincomb(CoeffKind::Character, n, &exp_concat(&random_lie_element(rng, n), n))
}

/// A random Lie-valued map (zero on shuffles), usable as a substituted field.
pub fn random_lb_infinitesimal<R: Rng>(rng: &mut R, n: usize) -> LBCoeff {
    LBCoeff::from_lincomb(CoeffKind::Infinitesimal, n, &random_lie_element(rng, n))
}

/// A map with independent random values on every planar forest up to order `n`.
pub fn random_lb_plain<R: Rng>(rng: &mut R, n: usize) -> LBCoeff {
    LBCoeff::new(CoeffKind::Plain, n, planar_forests_up_to(n).into_iter().map(|w| (w, random_rational(rng))))
}

/// `terms` random planar trees of order `1..=n` with random coefficients.
pub fn random_planar_tree_sum<R: Rng>(rng: &mut R, n: usize, terms: usize) -> LinComb<PlanarForest> {
    let basis = planar_trees_up_to(n);
    (0..terms).map(|_| (PlanarForest::single(basis.choose(rng).unwrap().clone()), nonzero_rational(rng))).collect()
}

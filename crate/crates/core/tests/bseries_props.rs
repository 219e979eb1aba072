mod common;

use bseries::bseries::{
    compose_antipode, convolve_bck, delta_bck, delta_bck_cuts, delta_cefm, elementary_weights, exact_gamma,
    solve_modified, substitute_b, BCoeff, CoeffKind, ModifiedMode, RKTableau,
};
use bseries::forest::{forests_up_to, trees_up_to};
use bseries::integrators::rk_taylor_oracle_composed;
use bseries::random::{random_bck_character, random_rational, rng};
use bseries::rational::{int, rat};
use common::*;
use proptest::prelude::*;
use rand::Rng;

fn same_trees(a: &BCoeff, b: &BCoeff, n: usize) -> bool {
    trees_up_to(n).iter().all(|t| a.tree(t) == b.tree(t))
}

fn consistent_character<R: Rng>(r: &mut R, n: usize) -> BCoeff {
    let mut a = random_bck_character(r, n);
    a.set_tree(tree("[]"), int(1));
    a
}

fn random_explicit_tableau<R: Rng>(r: &mut R, s: usize) -> RKTableau {
    let a = (0..s).map(|i| (0..s).map(|j| if j < i { random_rational(r) } else { int(0) }).collect()).collect();
    let b = (0..s).map(|_| random_rational(r)).collect();
    RKTableau::new(a, b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn antipode_inverts_characters(seed in any::<u64>()) {
        let a = random_bck_character(&mut rng(seed), 5);
        let inv = compose_antipode(&a);
        prop_assert!(same_trees(&convolve_bck(&a, &inv, 5).unwrap(), &BCoeff::eta(5), 5));
        prop_assert!(same_trees(&convolve_bck(&inv, &a, 5).unwrap(), &BCoeff::eta(5), 5));
    }

    #[test]
    fn composition_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, c) = (random_bck_character(&mut r, 5), random_bck_character(&mut r, 5), random_bck_character(&mut r, 5));
        let left = convolve_bck(&convolve_bck(&a, &b, 5).unwrap(), &c, 5).unwrap();
        let right = convolve_bck(&a, &convolve_bck(&b, &c, 5).unwrap(), 5).unwrap();
        prop_assert!(same_trees(&left, &right, 5));
    }

    #[test]
    fn modified_fields_recompose(seed in any::<u64>()) {
        let n = 5;
        let a = consistent_character(&mut rng(seed), n);
        let gamma = exact_gamma(n);
        let back = solve_modified(&a, ModifiedMode::BackwardError, n).unwrap();
        prop_assert!(same_trees(&substitute_b(&back, &gamma, n).unwrap(), &a, n));
        let modi = solve_modified(&a, ModifiedMode::ModifyingIntegrator, n).unwrap();
        prop_assert!(same_trees(&substitute_b(&modi, &a, n).unwrap(), &gamma, n));
    }

    #[test]
    fn composed_random_methods_match_oracle(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (t1, t2) = (random_explicit_tableau(&mut r, 2), random_explicit_tableau(&mut r, 3));
        let oracle = rk_taylor_oracle_composed(&[t1.clone(), t2.clone()], 4).unwrap();
        let conv = convolve_bck(&elementary_weights(&t1, 4), &elementary_weights(&t2, 4), 4).unwrap();
        prop_assert!(same_trees(&oracle, &conv, 4));
    }
}

#[test]
fn coproducts_are_coassociative() {
    for w in forests_up_to(5) {
        assert!(coassociative_bck(&w), "BCK {w}");
        assert!(coassociative_cefm(&w), "CEFM {w}");
        assert!(antipode_law_bck(&w), "antipode {w}");
    }
}

#[test]
fn gradings() {
    for w in forests_up_to(5) {
        for ((p, r), _) in &delta_bck(&w) {
            assert_eq!(p.order() + r.order(), w.order(), "BCK {w}");
        }
        for ((p, r), _) in &delta_cefm(&w) {
            assert_eq!(p.edges() + r.edges(), w.edges(), "CEFM {w}");
        }
    }
}

#[test]
fn cut_form_matches_recursion() {
    for w in forests_up_to(6) {
        assert_eq!(delta_bck_cuts(&w), delta_bck(&w), "{w}");
    }
}

#[test]
fn euler_modified_field() {
    let e = elementary_weights(&RKTableau::euler(), 3);
    let beta = solve_modified(&e, ModifiedMode::BackwardError, 3).unwrap();
    assert_eq!(beta.tree(&tree("[[]]")), rat(-1, 2));
    assert_eq!(beta.kind(), CoeffKind::Infinitesimal);
    let mut bad = e.clone();
    bad.set_tree(tree("[]"), int(2));
    assert!(solve_modified(&bad, ModifiedMode::BackwardError, 3).is_err());
}

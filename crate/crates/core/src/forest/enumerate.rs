//! Exhaustive generation of trees and forests by order.

use crate::error::{Error, Result};
use crate::forest::planar::{PlanarForest, PlanarTree};
use crate::forest::tree::{Forest, RootedTree};
use crate::forest::DEFAULT_MAX_ORDER;

/// Non-planar trees of order `n`, one per isomorphism class, in serialization order.
///
/// Fails with a capacity error when `n > max_order`.
pub fn enumerate_trees(n: usize, max_order: usize) -> Result<Vec<RootedTree>> {
    check(n, max_order)?;
    Ok(trees_of_order(n))
}

/// Planar trees of order `n`, in serialization order.
pub fn enumerate_planar_trees(n: usize, max_order: usize) -> Result<Vec<PlanarTree>> {
    check(n, max_order)?;
    Ok(planar_trees_of_order(n))
}

/// [`enumerate_trees`] with the default cap.
pub fn enumerate(n: usize) -> Result<Vec<RootedTree>> {
    enumerate_trees(n, DEFAULT_MAX_ORDER)
}

fn check(n: usize, max_order: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("tree order must be at least 1"));
    }
    if n > max_order {
        return Err(Error::Capacity { requested: n, max: max_order });
    }
    Ok(())
}

/// Trees of every order `1..=n`, grouped by order.
pub fn trees_by_order(n: usize) -> Vec<Vec<RootedTree>> {
    let mut by: Vec<Vec<RootedTree>> = vec![Vec::new()];
    for k in 1..=n {
        let mut out: Vec<RootedTree> =
            multisets(&by, k - 1).into_iter().map(|w| RootedTree::new(w, None)).collect();
        out.sort();
        by.push(out);
    }
    by
}

// All multisets of trees (from `by`) with total order `m`, choosing trees in
// non-decreasing (order, index) to avoid duplicates.
fn multisets(by: &[Vec<RootedTree>], m: usize) -> Vec<Vec<RootedTree>> {
    fn go(
        by: &[Vec<RootedTree>],
        rem: usize,
        min: (usize, usize),
        cur: &mut Vec<RootedTree>,
        out: &mut Vec<Vec<RootedTree>>,
    ) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for k in min.0..=rem {
            let start = if k == min.0 { min.1 } else { 0 };
            for i in start..by[k].len() {
                cur.push(by[k][i].clone());
                go(by, rem - k, (k, i), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(by, m, (1, 0), &mut Vec::new(), &mut out);
    out
}

pub fn trees_of_order(n: usize) -> Vec<RootedTree> {
    if n == 0 {
        return Vec::new();
    }
    trees_by_order(n).pop().unwrap_or_default()
}

/// All trees with `1 <= order <= n`.
pub fn trees_up_to(n: usize) -> Vec<RootedTree> {
    trees_by_order(n).into_iter().flatten().collect()
}

/// Commutative forests of order exactly `m` (the unit for `m = 0`).
pub fn forests_of_order(m: usize) -> Vec<Forest> {
    let by = trees_by_order(m);
    let mut out: Vec<Forest> = multisets(&by, m).into_iter().map(Forest::from_trees).collect();
    out.sort();
    out
}

/// All forests with `order <= n`, including the unit.
pub fn forests_up_to(n: usize) -> Vec<Forest> {
    let by = trees_by_order(n);
    let mut out = Vec::new();
    for m in 0..=n {
        out.extend(multisets(&by, m).into_iter().map(Forest::from_trees));
    }
    out.sort();
    out
}

/// Planar forests grouped by order `0..=n`.
pub fn planar_forests_by_order(n: usize) -> Vec<Vec<PlanarForest>> {
    let mut forests: Vec<Vec<PlanarForest>> = vec![vec![PlanarForest::unit()]];
    let mut trees: Vec<Vec<PlanarTree>> = vec![Vec::new()];
    for m in 1..=n {
        let ts: Vec<PlanarTree> = forests[m - 1].iter().map(|w| w.bplus(None)).collect();
        trees.push(ts);
        let mut fs = Vec::new();
        for k in 1..=m {
            for t in &trees[k] {
                for rest in &forests[m - k] {
                    fs.push(PlanarForest::single(t.clone()).concat(rest));
                }
            }
        }
        forests.push(fs);
    }
    for fs in &mut forests {
        fs.sort();
    }
    forests
}

pub fn planar_trees_of_order(n: usize) -> Vec<PlanarTree> {
    if n == 0 {
        return Vec::new();
    }
    let mut out: Vec<PlanarTree> =
        planar_forests_by_order(n - 1)[n - 1].iter().map(|w| w.bplus(None)).collect();
    out.sort();
    out
}

pub fn planar_trees_up_to(n: usize) -> Vec<PlanarTree> {
    (1..=n).flat_map(planar_trees_of_order).collect()
}

pub fn planar_forests_of_order(m: usize) -> Vec<PlanarForest> {
    planar_forests_by_order(m).pop().unwrap_or_default()
}

/// All planar forests with `order <= n`, including the unit.
pub fn planar_forests_up_to(n: usize) -> Vec<PlanarForest> {
    let mut out: Vec<PlanarForest> = planar_forests_by_order(n).into_iter().flatten().collect();
    out.sort();
    out
}

//! Floating-point Runge–Kutta steps.

use nalgebra::DVector;

use crate::bseries::RKTableau;
use crate::error::{Error, Result};

pub const MAX_FIXED_POINT_ITERATIONS: usize = 100;

/// One step of `y' = F(t, y)` from `(t, y)`. Implicit stages are solved by
/// fixed-point iteration until the stage update drops below `tol`.
pub fn rk_step_t(
    tab: &RKTableau,
    f: impl Fn(f64, &DVector<f64>) -> DVector<f64>,
    t: f64,
    y: &DVector<f64>,
    h: f64,
    tol: f64,
) -> Result<DVector<f64>> {
    let (a, b, c) = (tab.a_f64(), tab.b_f64(), tab.c_f64());
    let s = tab.stages();
    let stage_state = |ks: &[DVector<f64>], i: usize| {
        let mut yi = y.clone();
        for (j, k) in ks.iter().enumerate() {
            if a[i][j] != 0.0 {
                yi += k * (h * a[i][j]);
            }
        }
        yi
    };
    let mut ks = vec![DVector::zeros(y.len()); s];
    if tab.is_explicit() {
        for i in 0..s {
            ks[i] = f(t + c[i] * h, &stage_state(&ks, i));
        }
    } else {
        ks = (0..s).map(|i| f(t + c[i] * h, y)).collect();
        let mut residual = f64::INFINITY;
        let mut converged = false;
        for _ in 0..MAX_FIXED_POINT_ITERATIONS {
            let next: Vec<DVector<f64>> = (0..s).map(|i| f(t + c[i] * h, &stage_state(&ks, i))).collect();
            residual = next.iter().zip(&ks).map(|(p, q)| h * (p - q).amax()).fold(0.0, f64::max);
            ks = next;
            if residual <= tol * (1.0 + y.amax()) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence { iterations: MAX_FIXED_POINT_ITERATIONS, residual });
        }
    }
    let mut out = y.clone();
    for (bi, k) in b.iter().zip(&ks) {
        out += k * (h * bi);
    }
    Ok(out)
}

/// One step of the autonomous system `y' = F(y)`.
pub fn rk_step(
    tab: &RKTableau,
    f: impl Fn(&DVector<f64>) -> DVector<f64>,
    y: &DVector<f64>,
    h: f64,
    tol: f64,
) -> Result<DVector<f64>> {
    if h.is_nan() || h <= 0.0 {
        return Err(Error::domain("step size must be positive"));
    }
    rk_step_t(tab, |_, y| f(y), 0.0, y, h, tol)
}

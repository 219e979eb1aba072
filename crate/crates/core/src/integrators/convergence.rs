//! Trajectories, invariant drift and empirical convergence orders.

use std::fmt::Write as _;
use std::str::FromStr;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::integrators::lie::{lg_step, LGMethod, LGProblem};

/// Runs `steps` steps from `(t0, y0)`; returns the states after each step.
pub fn integrate(method: &LGMethod, p: &LGProblem, t0: f64, h: f64, steps: usize) -> Result<Vec<DMatrix<f64>>> {
    let mut y = p.y0.clone();
    let mut out = Vec::with_capacity(steps);
    for i in 0..steps {
        y = lg_step(method, p, t0 + i as f64 * h, &y, h).map_err(|e| Error::Step { step: i + 1, source: Box::new(e) })?;
        out.push(y.clone());
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    /// Euclidean norm of a vector state.
    Norm,
    /// Sorted eigenvalues of a symmetric matrix state.
    Spectrum,
}

impl FromStr for Invariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "norm" => Ok(Self::Norm),
            "spectrum" => Ok(Self::Spectrum),
            _ => Err(Error::Unsupported(format!("unknown invariant `{s}`"))),
        }
    }
}

impl Invariant {
    pub fn values(&self, y: &DMatrix<f64>) -> Vec<f64> {
        match self {
            Invariant::Norm => vec![y.norm()],
            Invariant::Spectrum => {
                let sym = (y + y.transpose()) * 0.5;
                let mut ev: Vec<f64> = sym.symmetric_eigenvalues().iter().copied().collect();
                ev.sort_by(f64::total_cmp);
                ev
            }
        }
    }

    /// Largest change of the invariant between two states.
    pub fn drift(&self, y0: &DMatrix<f64>, y: &DMatrix<f64>) -> f64 {
        self.values(y0).iter().zip(self.values(y)).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }
}

pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// CSV with columns `step,t,y0,y1,…` (column-major state entries) and an optional `drift` column.
pub fn trajectory_csv(p: &LGProblem, states: &[DMatrix<f64>], t0: f64, h: f64, invariant: Option<Invariant>) -> String {
    let mut out = String::from("step,t");
    for i in 0..p.y0.len() {
        let _ = write!(out, ",y{i}");
    }
    if invariant.is_some() {
        out.push_str(",drift");
    }
    out.push('\n');
    for (i, y) in states.iter().enumerate() {
        let _ = write!(out, "{},{}", i + 1, format_f64(t0 + (i + 1) as f64 * h));
        for v in y.iter() {
            let _ = write!(out, ",{}", format_f64(*v));
        }
        if let Some(inv) = invariant {
            let _ = write!(out, ",{}", format_f64(inv.drift(&p.y0, y)));
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub method: String,
    /// `(h, error)` pairs in the order given.
    pub rows: Vec<(f64, f64)>,
    /// Least-squares slope of `log(error)` against `log(h)`.
    pub slope: f64,
}

impl ConvergenceReport {
    /// `method,h,error,slope_estimate` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("method,h,error,slope_estimate\n");
        for (h, e) in &self.rows {
            let _ = writeln!(out, "{},{},{},{}", self.method, format_f64(*h), format_f64(*e), format_f64(self.slope));
        }
        out
    }
}

pub fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Global error at `t_end` for each step size, and the fitted order.
pub fn convergence_order(method: &LGMethod, p: &LGProblem, t_end: f64, h_list: &[f64]) -> Result<ConvergenceReport> {
    if h_list.len() < 3 {
        return Err(Error::domain("convergence estimate needs at least three step sizes"));
    }
    let reference = p.reference.as_ref().ok_or(Error::ReferenceUnavailable)?;
    let y_ref = reference(t_end)?;
    let mut rows = Vec::new();
    for &h in h_list {
        let steps = (t_end / h).round();
        if h.is_nan() || h <= 0.0 || steps < 1.0 || (steps * h - t_end).abs() > 1e-9 * t_end.abs().max(1.0) {
            return Err(Error::domain(format!("step {h} does not divide the interval [0, {t_end}]")));
        }
        let hs = t_end / steps;
        let states = integrate(method, p, 0.0, hs, steps as usize)?;
        let err = (states.last().expect("at least one step") - &y_ref).amax();
        rows.push((h, err));
    }
    let xs: Vec<f64> = rows.iter().map(|(h, _)| h.ln()).collect();
    let ys: Vec<f64> = rows.iter().map(|(_, e)| e.ln()).collect();
    Ok(ConvergenceReport { method: method.name(), rows, slope: least_squares_slope(&xs, &ys) })
}

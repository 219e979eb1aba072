//! Test problems for the Lie group integrators.

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};

use crate::bseries::RKTableau;
use crate::error::{Error, Result};
use crate::integrators::lie::{affine_element, hat, make_action, ActionKind, AlgebraFn, LGProblem, ReferenceFn};
use crate::integrators::rk::rk_step_t;

pub const RIGID_BODY_INERTIA: [f64; 3] = [1.0, 2.0, 4.0];

/// Steps per unit time of the classical RK4 reference integrations.
pub const REFERENCE_STEPS_PER_UNIT: f64 = 4096.0;

/// Reference solution from classical RK4 with a fine step.
pub fn rk4_reference(
    field: impl Fn(f64, &DMatrix<f64>) -> DMatrix<f64> + Send + Sync + 'static,
    y0: DMatrix<f64>,
) -> ReferenceFn {
    Arc::new(move |t_end: f64| {
        let (r, c) = y0.shape();
        let n = (t_end.abs() * REFERENCE_STEPS_PER_UNIT).ceil().max(1.0) as usize;
        let h = t_end / n as f64;
        let f = |t: f64, v: &DVector<f64>| {
            let dy = field(t, &DMatrix::from_column_slice(r, c, v.as_slice()));
            DVector::from_column_slice(dy.as_slice())
        };
        let tab = RKTableau::rk4();
        let mut y = DVector::from_column_slice(y0.as_slice());
        for i in 0..n {
            y = rk_step_t(&tab, f, i as f64 * h, &y, h, 0.0)?;
        }
        Ok(DMatrix::from_column_slice(r, c, y.as_slice()))
    })
}

fn problem(name: &str, kind: ActionKind, n: usize, f: AlgebraFn, y0: DMatrix<f64>) -> LGProblem {
    let action = make_action(kind, n).expect("valid action");
    let g = f.clone();
    let reference = rk4_reference(move |t, y| action.inf_act(&g(t, y), y), y0.clone());
    LGProblem { name: name.into(), action, f, y0, reference: Some(reference) }
}

/// Free rigid body `ẏ = v(y) × y`, `v(y) = (y₁/I₁, y₂/I₂, y₃/I₃)`, on the unit sphere.
pub fn free_rigid_body() -> LGProblem {
    let y0 = DMatrix::from_column_slice(3, 1, &[1.1f64.cos(), 0.0, 1.1f64.sin()]);
    let f: AlgebraFn = Arc::new(|_, y| {
        let i = RIGID_BODY_INERTIA;
        hat(&[y[0] / i[0], y[1] / i[1], y[2] / i[2]])
    });
    problem("rigid_body", ActionKind::RotationS2, 3, f, y0)
}

/// `ẏ = v̂ y` for a constant `v`, with the exact solution as reference.
pub fn constant_rotation(v: [f64; 3], y0: [f64; 3]) -> LGProblem {
    let w = hat(&v);
    let y0 = DMatrix::from_column_slice(3, 1, &y0);
    let (w2, y02) = (w.clone(), y0.clone());
    LGProblem {
        name: "constant_rotation".into(),
        action: make_action(ActionKind::RotationS2, 3).expect("valid action"),
        f: Arc::new(move |_, _| w.clone()),
        y0,
        reference: Some(Arc::new(move |t| Ok(crate::integrators::lie::rodrigues(&(&w2 * t)) * &y02))),
    }
}

/// Isospectral flow `ẏ = f(y)y − yf(y)` with `f(y) = upper(y) − lower(y)` on symmetric 3×3 matrices.
pub fn isospectral() -> LGProblem {
    let y0 = DMatrix::from_row_slice(3, 3, &[1.0, 0.5, 0.2, 0.5, 2.0, 0.3, 0.2, 0.3, 3.0]);
    let f: AlgebraFn = Arc::new(|_, y| {
        let n = y.nrows();
        DMatrix::from_fn(n, n, |i, j| if i < j { y[(i, j)] } else if i > j { -y[(i, j)] } else { 0.0 })
    });
    problem("isospectral", ActionKind::Isospectral, 3, f, y0)
}

/// `ẏ = L y + N(y)` on ℝ², written with the affine action as `f(y) = (L, N(y))`.
pub fn affine() -> LGProblem {
    let l = DMatrix::from_row_slice(2, 2, &[-1.0, 2.0, -2.0, -1.0]);
    let f: AlgebraFn = Arc::new(move |_, y| {
        let b = DMatrix::from_column_slice(2, 1, &[0.5 * y[1] * y[1], -0.5 * y[0] * y[0]]);
        affine_element(&l, &b)
    });
    problem("affine", ActionKind::Affine, 2, f, DMatrix::from_column_slice(2, 1, &[1.0, 0.5]))
}

/// Classical problems under the translation action: `linear` is the harmonic
/// oscillator, `quadratic` is `ẏ = (y₂, −y₁ − y₁²)`.
pub fn translation(which: &str) -> Result<LGProblem> {
    let y0 = DMatrix::from_column_slice(2, 1, &[0.5, 0.0]);
    let f: AlgebraFn = match which {
        "linear" => Arc::new(|_, y| DMatrix::from_column_slice(2, 1, &[y[1], -y[0]])),
        "quadratic" => Arc::new(|_, y| DMatrix::from_column_slice(2, 1, &[y[1], -y[0] - y[0] * y[0]])),
        _ => return Err(Error::Unsupported(format!("unknown translation field `{which}`"))),
    };
    Ok(problem(&format!("translation_{which}"), ActionKind::Translation, 2, f, y0))
}

/// The default problem for an action kind.
pub fn default_problem(kind: ActionKind) -> LGProblem {
    match kind {
        ActionKind::RotationS2 => free_rigid_body(),
        ActionKind::Isospectral => isospectral(),
        ActionKind::Affine => affine(),
        ActionKind::Translation => translation("linear").expect("known field"),
    }
}

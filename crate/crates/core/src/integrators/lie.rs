//! Group actions and Lie group integrators.
//!
//! Algebra elements, group elements and states are all `DMatrix<f64>`; vector
//! states are `n × 1` columns.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use nalgebra::{DMatrix, Vector3};

use crate::bseries::{elementary_weights, order_of, RKTableau};
use crate::error::{Error, Result};
use crate::integrators::rk::{rk_step_t, MAX_FIXED_POINT_ITERATIONS};
use crate::rational::{bernoulli, factorial, to_f64};

/// Relative tolerance of the fixed-point solves in implicit Lie group methods.
pub const LIE_SOLVER_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionKind {
    /// SO(3) acting on the sphere by rotation.
    RotationS2,
    /// SO(n) acting on n×n matrices by similarity.
    Isospectral,
    /// The affine group acting on ℝⁿ.
    Affine,
    /// ℝⁿ acting on itself by translation; the classical case.
    Translation,
}

impl FromStr for ActionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rotation" | "rotation_s2" => Ok(Self::RotationS2),
            "isospectral" => Ok(Self::Isospectral),
            "affine" => Ok(Self::Affine),
            "translation" => Ok(Self::Translation),
            _ => Err(Error::Unsupported(format!("unknown action `{s}`"))),
        }
    }
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::RotationS2 => "rotation",
            Self::Isospectral => "isospectral",
            Self::Affine => "affine",
            Self::Translation => "translation",
        })
    }
}

/// The skew matrix `v̂` with `v̂ y = v × y`.
pub fn hat(v: &[f64]) -> DMatrix<f64> {
    DMatrix::from_row_slice(3, 3, &[0.0, -v[2], v[1], v[2], 0.0, -v[0], -v[1], v[0], 0.0])
}

/// The homogeneous `(n+1)×(n+1)` matrix of the affine algebra element `(V, b)`.
pub fn affine_element(v: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    let n = v.nrows();
    let mut m = DMatrix::zeros(n + 1, n + 1);
    m.view_mut((0, 0), (n, n)).copy_from(v);
    m.view_mut((0, n), (n, 1)).copy_from(b);
    m
}

/// `exp(v̂)` by the Rodrigues formula.
pub fn rodrigues(w: &DMatrix<f64>) -> DMatrix<f64> {
    let v = Vector3::new(w[(2, 1)], w[(0, 2)], w[(1, 0)]);
    let theta = v.norm();
    let (a, b) = if theta < 1e-4 {
        let t2 = theta * theta;
        (1.0 - t2 / 6.0 + t2 * t2 / 120.0, 0.5 - t2 / 24.0 + t2 * t2 / 720.0)
    } else {
        (theta.sin() / theta, (1.0 - theta.cos()) / (theta * theta))
    };
    DMatrix::identity(3, 3) + w * a + (w * w) * b
}

/// A Lie algebra acting on a state space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupAction {
    pub kind: ActionKind,
    pub n: usize,
}

pub fn make_action(kind: ActionKind, n: usize) -> Result<GroupAction> {
    match kind {
        ActionKind::RotationS2 if n != 3 => Err(Error::Unsupported(format!("rotation action needs n = 3, got {n}"))),
        _ if n == 0 => Err(Error::domain("action dimension must be positive")),
        _ => Ok(GroupAction { kind, n }),
    }
}

impl GroupAction {
    /// Dimension of the Lie algebra.
    pub fn algebra_dim(&self) -> usize {
        let n = self.n;
        match self.kind {
            ActionKind::RotationS2 => 3,
            ActionKind::Isospectral => n * (n - 1) / 2,
            ActionKind::Affine => n * n + n,
            ActionKind::Translation => n,
        }
    }

    /// Shape of the matrices that represent algebra elements.
    pub fn algebra_shape(&self) -> (usize, usize) {
        match self.kind {
            ActionKind::RotationS2 | ActionKind::Isospectral => (self.n, self.n),
            ActionKind::Affine => (self.n + 1, self.n + 1),
            ActionKind::Translation => (self.n, 1),
        }
    }

    pub fn state_shape(&self) -> (usize, usize) {
        match self.kind {
            ActionKind::Isospectral => (self.n, self.n),
            _ => (self.n, 1),
        }
    }

    pub fn zero(&self) -> DMatrix<f64> {
        let (r, c) = self.algebra_shape();
        DMatrix::zeros(r, c)
    }

    pub fn bracket(&self, a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
        match self.kind {
            ActionKind::Translation => self.zero(),
            _ => a * b - b * a,
        }
    }

    pub fn exp(&self, v: &DMatrix<f64>) -> DMatrix<f64> {
        match self.kind {
            ActionKind::RotationS2 => rodrigues(v),
            ActionKind::Isospectral | ActionKind::Affine => v.exp(),
            ActionKind::Translation => v.clone(),
        }
    }

    pub fn act(&self, g: &DMatrix<f64>, y: &DMatrix<f64>) -> DMatrix<f64> {
        match self.kind {
            ActionKind::RotationS2 => g * y,
            ActionKind::Isospectral => g * y * g.transpose(),
            ActionKind::Affine => {
                let n = self.n;
                g.view((0, 0), (n, n)) * y + g.view((0, n), (n, 1))
            }
            ActionKind::Translation => y + g,
        }
    }

    /// `d/dt|₀ act(exp(tv), y)`.
    pub fn inf_act(&self, v: &DMatrix<f64>, y: &DMatrix<f64>) -> DMatrix<f64> {
        match self.kind {
            ActionKind::RotationS2 => v * y,
            ActionKind::Isospectral => v * y - y * v,
            ActionKind::Affine => {
                let n = self.n;
                v.view((0, 0), (n, n)) * y + v.view((0, n), (n, 1))
            }
            ActionKind::Translation => v.clone(),
        }
    }

    /// `exp(v)·y`.
    pub fn flow(&self, v: &DMatrix<f64>, y: &DMatrix<f64>) -> DMatrix<f64> {
        self.act(&self.exp(v), y)
    }
}

/// `dexp⁻¹_U(K) ≈ Σ_{k<m} B_k/k! ad_U^k(K)`.
pub fn dexpinv(action: &GroupAction, u: &DMatrix<f64>, k: &DMatrix<f64>, m: usize) -> DMatrix<f64> {
    let bern = bernoulli(m);
    let mut term = k.clone();
    let mut out = k.clone();
    for (j, bj) in bern.iter().enumerate().skip(1) {
        term = action.bracket(u, &term);
        let c = to_f64(&(bj / factorial(j)));
        if c != 0.0 {
            out += &term * c;
        }
    }
    out
}

pub type AlgebraFn = Arc<dyn Fn(f64, &DMatrix<f64>) -> DMatrix<f64> + Send + Sync>;
pub type ReferenceFn = Arc<dyn Fn(f64) -> Result<DMatrix<f64>> + Send + Sync>;

/// `ẏ = f(t, y)·y`, `y(0) = y₀`.
#[derive(Clone)]
pub struct LGProblem {
    pub name: String,
    pub action: GroupAction,
    pub f: AlgebraFn,
    pub y0: DMatrix<f64>,
    /// High-accuracy solution at a given time, if known.
    pub reference: Option<ReferenceFn>,
}

impl fmt::Debug for LGProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LGProblem").field("name", &self.name).field("action", &self.action).finish_non_exhaustive()
    }
}

impl LGProblem {
    pub fn algebra(&self, t: f64, y: &DMatrix<f64>) -> Result<DMatrix<f64>> {
        let v = (self.f)(t, y);
        let want = self.action.algebra_shape();
        if v.shape() != want {
            return Err(Error::Dimension { expected: want.0 * want.1, got: v.len() });
        }
        Ok(v)
    }

    /// The vector field `f(t, y)·y` on the state space.
    pub fn field(&self, t: f64, y: &DMatrix<f64>) -> DMatrix<f64> {
        self.action.inf_act(&(self.f)(t, y), y)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LGMethod {
    LieEuler,
    LieMidpoint,
    LieRk4,
    /// RKMK: Lie-algebra Runge–Kutta with `dexp⁻¹` truncated to `m` terms.
    Rkmk { name: String, tableau: RKTableau, m: usize },
    Cf4,
    /// A classical Runge–Kutta method applied to `f(t, y)·y` directly.
    Classical { name: String, tableau: RKTableau },
}

impl LGMethod {
    pub fn rkmk(name: &str, tableau: RKTableau) -> Self {
        let order = order_of(&elementary_weights(&tableau, 6), 6).order;
        LGMethod::Rkmk { name: name.to_string(), tableau, m: order.saturating_sub(1).max(1) }
    }

    pub fn name(&self) -> String {
        match self {
            Self::LieEuler => "lie_euler".into(),
            Self::LieMidpoint => "lie_midpoint".into(),
            Self::LieRk4 => "lie_rk4".into(),
            Self::Rkmk { name, .. } => format!("rkmk:{name}"),
            Self::Cf4 => "cf4".into(),
            Self::Classical { name, .. } => name.clone(),
        }
    }
}

impl FromStr for LGMethod {
    type Err = Error;
    /// `lie_euler`, `lie_midpoint`, `lie_rk4`, `cf4`, `rkmk:<builtin>[:m]`, or a builtin tableau name.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lie_euler" => return Ok(Self::LieEuler),
            "lie_midpoint" => return Ok(Self::LieMidpoint),
            "lie_rk4" => return Ok(Self::LieRk4),
            "cf4" => return Ok(Self::Cf4),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("rkmk:") {
            let (name, m) = match rest.split_once(':') {
                Some((name, m)) => {
                    let m: usize = m.parse().map_err(|_| Error::Unsupported(format!("bad dexpinv order in `{s}`")))?;
                    (name, Some(m.max(1)))
                }
                None => (rest, None),
            };
            let method = Self::rkmk(name, RKTableau::builtin(name)?);
            return Ok(match (method, m) {
                (Self::Rkmk { name, tableau, .. }, Some(m)) => Self::Rkmk { name, tableau, m },
                (method, _) => method,
            });
        }
        match RKTableau::builtin(s) {
            Ok(tableau) => Ok(Self::Classical { name: s.to_string(), tableau }),
            Err(_) => Err(Error::Unsupported(format!("unknown method `{s}`"))),
        }
    }
}

fn fixed_point(mut k: DMatrix<f64>, mut g: impl FnMut(&DMatrix<f64>) -> DMatrix<f64>) -> Result<DMatrix<f64>> {
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_FIXED_POINT_ITERATIONS {
        let next = g(&k);
        residual = (&next - &k).amax();
        k = next;
        if residual <= LIE_SOLVER_TOL * (1.0 + k.amax()) {
            return Ok(k);
        }
    }
    Err(Error::NoConvergence { iterations: MAX_FIXED_POINT_ITERATIONS, residual })
}

/// One step of `method` for `p` from `(t, y)` with step `h`.
pub fn lg_step(method: &LGMethod, p: &LGProblem, t: f64, y: &DMatrix<f64>, h: f64) -> Result<DMatrix<f64>> {
    if h.is_nan() || h <= 0.0 {
        return Err(Error::domain("step size must be positive"));
    }
    let act = &p.action;
    let hf = |tt: f64, yy: &DMatrix<f64>| -> Result<DMatrix<f64>> { Ok(p.algebra(tt, yy)? * h) };
    match method {
        LGMethod::LieEuler => Ok(act.flow(&hf(t, y)?, y)),
        LGMethod::LieMidpoint => {
            let k0 = hf(t, y)?;
            let k = fixed_point(k0, |k| (p.f)(t + h / 2.0, &act.flow(&(k * 0.5), y)) * h)?;
            Ok(act.flow(&k, y))
        }
        LGMethod::LieRk4 => {
            let k1 = hf(t, y)?;
            let k2 = hf(t + h / 2.0, &act.flow(&(&k1 * 0.5), y))?;
            let c12 = act.bracket(&k1, &k2);
            let k3 = hf(t + h / 2.0, &act.flow(&(&k2 * 0.5 - &c12 * 0.125), y))?;
            let k4 = hf(t + h, &act.flow(&k3, y))?;
            // only the [K1, K4] correction enters the update; a [K1, K2] term there drops the order to 2
            let c14 = act.bracket(&k1, &k4);
            let v = &k1 / 6.0 + &k2 / 3.0 + &k3 / 3.0 + &k4 / 6.0 - c14 / 12.0;
            Ok(act.flow(&v, y))
        }
        LGMethod::Cf4 => {
            let k1 = hf(t, y)?;
            let k2 = hf(t + h / 2.0, &act.flow(&(&k1 * 0.5), y))?;
            let k3 = hf(t + h / 2.0, &act.flow(&(&k2 * 0.5), y))?;
            // products of exponentials act left factor first; the other reading is only second order
            let y4 = act.flow(&(&k3 - &k1 * 0.5), &act.flow(&(&k1 * 0.5), y));
            let k4 = hf(t + h, &y4)?;
            let a = &k1 / 4.0 + &k2 / 6.0 + &k3 / 6.0 - &k4 / 12.0;
            let b = &k2 / 6.0 + &k3 / 6.0 + &k4 / 4.0 - &k1 / 12.0;
            Ok(act.flow(&b, &act.flow(&a, y)))
        }
        LGMethod::Rkmk { tableau, m, .. } => rkmk_step(tableau, *m, p, t, y, h),
        LGMethod::Classical { tableau, .. } => {
            let (r, c) = y.shape();
            let field = |tt: f64, v: &nalgebra::DVector<f64>| {
                let ym = DMatrix::from_column_slice(r, c, v.as_slice());
                let dy = p.field(tt, &ym);
                nalgebra::DVector::from_column_slice(dy.as_slice())
            };
            let y1 = rk_step_t(tableau, field, t, &nalgebra::DVector::from_column_slice(y.as_slice()), h, LIE_SOLVER_TOL)?;
            Ok(DMatrix::from_column_slice(r, c, y1.as_slice()))
        }
    }
}

fn rkmk_step(tab: &RKTableau, m: usize, p: &LGProblem, t: f64, y: &DMatrix<f64>, h: f64) -> Result<DMatrix<f64>> {
    let act = &p.action;
    let (a, b, c) = (tab.a_f64(), tab.b_f64(), tab.c_f64());
    let s = tab.stages();
    let combine = |ks: &[DMatrix<f64>], w: &[f64]| {
        let mut u = act.zero();
        for (k, wj) in ks.iter().zip(w) {
            if *wj != 0.0 {
                u += k * *wj;
            }
        }
        u
    };
    let stage = |ks: &[DMatrix<f64>], i: usize| -> Result<DMatrix<f64>> {
        let u = combine(ks, &a[i]);
        let k = p.algebra(t + c[i] * h, &act.flow(&u, y))? * h;
        Ok(dexpinv(act, &u, &k, m))
    };
    let mut ks = vec![act.zero(); s];
    if tab.is_explicit() {
        for i in 0..s {
            ks[i] = stage(&ks, i)?;
        }
    } else {
        let mut residual = f64::INFINITY;
        let mut done = false;
        for _ in 0..MAX_FIXED_POINT_ITERATIONS {
            let next = (0..s).map(|i| stage(&ks, i)).collect::<Result<Vec<_>>>()?;
            residual = next.iter().zip(&ks).map(|(p, q)| (p - q).amax()).fold(0.0, f64::max);
            let scale = 1.0 + next.iter().map(|k| k.amax()).fold(0.0, f64::max);
            ks = next;
            if residual <= LIE_SOLVER_TOL * scale {
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::NoConvergence { iterations: MAX_FIXED_POINT_ITERATIONS, residual });
        }
    }
    Ok(act.flow(&combine(&ks, &b), y))
}

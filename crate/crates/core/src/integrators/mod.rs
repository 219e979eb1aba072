//! Numerical layer: exact elementary differentials and B-series evaluation on
//! polynomial fields, the Taylor oracle, Runge–Kutta steps, and Lie group
//! integrators with their convergence harness.

pub mod convergence;
pub mod differential;
pub mod lie;
pub mod oracle;
pub mod poly;
pub mod problems;
pub mod rk;

pub use convergence::*;
pub use differential::*;
pub use lie::*;
pub use oracle::*;
pub use poly::{PolyVectorField, Polynomial};
pub use rk::{rk_step, rk_step_t};

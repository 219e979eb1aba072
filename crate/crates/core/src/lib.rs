//! Butcher series and Lie–Butcher series: the Hopf algebras of trees behind
//! them, exact coefficient calculus, and the Runge–Kutta and Lie group
//! integrators they describe.
//!
//! All algebra is exact over [`Rational`]; only the integrators use `f64`.

pub mod bseries;
pub mod error;
pub mod forest;
pub mod integrators;
pub mod lbseries;
pub mod linear;
pub mod random;
pub mod rational;

pub use error::{Error, Result};
pub use linear::{LinComb, Tensor, TensorDisplay};
pub use rational::Rational;

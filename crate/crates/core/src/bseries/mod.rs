//! B-series: the BCK Hopf algebra for composition, the substitution
//! bialgebra for modified equations, Runge–Kutta elementary weights and the
//! geometric coefficient conditions.

pub mod bck;
pub mod cefm;
pub mod coeff;
pub mod geometric;
pub mod tableau;

pub use bck::*;
pub use cefm::*;
pub use coeff::{BCoeff, CoeffKind};
pub use geometric::*;
pub use tableau::*;

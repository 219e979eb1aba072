//! Lie–Butcher series: the MKW Hopf algebra on planar forests, Bell
//! polynomials, flow-representation conversions and LB substitution.

pub mod bell;
pub mod coeff;
pub mod flows;
pub mod mkw;
pub mod subst;

pub use bell::*;
pub use coeff::LBCoeff;
pub use flows::*;
pub use mkw::*;
pub use subst::*;

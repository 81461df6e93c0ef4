//! Exact polynomial, series, and rational-function arithmetic.
//!
//! Everything here is arbitrary-precision integer arithmetic; there is no
//! floating point anywhere in this crate.

mod bipoly;
mod chebyshev;
mod intpoly;
mod rational;
mod recurrence;
mod series;
mod solve;

pub use bipoly::BiPoly;
pub use chebyshev::chebyshev_u;
pub use intpoly::IntPoly;
pub use rational::{RationalGF, RationalT};
pub use recurrence::{recurrence_from_gf, Recurrence};
pub use series::TSeries;
pub use solve::{solve_polyring_system, solve_polyring_system_raw};

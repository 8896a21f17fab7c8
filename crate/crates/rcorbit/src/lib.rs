//! Exact reflection/conjugate orbits on diophantine surfaces and on varieties
//! built from composition of norm forms.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! solutions are primitive integer tuples.

pub mod analysis;
pub mod builders;
pub mod exactpoly;
pub mod numberfield;
pub mod orbit;
pub mod point;
pub mod surface4;
pub mod varieties;
mod vieta;
pub mod error;

pub use error::{Error, Result};
pub use exactpoly::{int, parse_rational, rat, MultiPoly, PolyError, Rational};
pub use point::ProjPoint;

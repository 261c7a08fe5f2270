//! Exact arithmetic for `Z[a,b][x]`: sparse bivariate coefficients, dense
//! polynomials and truncated series in `x`, rational generating functions,
//! Hadamard products, and recurrence-based coefficient extraction.
//!
//! Everything is integer-exact; no floating point is used anywhere.

mod bipoly;
mod rational;
mod series;
mod xpoly;

pub use bipoly::BiPoly;
pub use rational::RationalGF;
pub use series::sqrt_pair_product;
pub use series::{coeff_at, hadamard_product, rational_to_series, series_invert, XSeries};
pub use xpoly::XPoly;

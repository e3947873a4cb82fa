//! Exact coefficient rings, Laurent polynomials, rational functions and
//! polynomial matrices.

pub mod coeff;
pub mod laurent;
pub mod matrix;
pub mod ratfn;

pub use coeff::{Coeff, Field, Fp, Integer, Prime, Rational};
pub use laurent::{gcd_polys, LaurentPoly};
pub use matrix::{ConstMatrix, PolyMatrix};
pub use ratfn::{reduce_fraction, RationalFn};

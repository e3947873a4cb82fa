//! Exact algebra for knot groups: PD diagrams, Wirtinger and symmetric-union
//! presentations, Fox calculus, twisted Alexander polynomials and
//! SL(2, F_p) representation search.

pub mod algebra;
pub mod diagram;
pub mod error;
pub mod presentation;
pub mod reps;
pub mod twisted;

pub use error::{Error, Result};

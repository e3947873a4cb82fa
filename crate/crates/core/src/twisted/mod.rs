//! Fox matrices, twisted Alexander polynomials, elementary ideals and the
//! invariants derived from them.

pub mod alexander;
pub mod fox;
pub mod theorem;
pub mod wada;

pub use alexander::{classical_alexander, elementary_ideal_gcd, higher_alexander, knot_determinant, minors_gcd};
pub use fox::{alexander_matrix, phi_ring, phi_word, twisted_matrix};
pub use wada::{twisted_alexander, TwistedPolynomial};
pub use theorem::{
    alexander_square_check, even_symun_obstruction, even_symun_obstruction_many, even_symun_quick_obstructions, genus_lower_bound, verify_theorem,
    ObstructionVerdict, QuickChecks, TheoremReport,
};

//! Frobenius twists of complexes and normalized Euler characteristics.

pub mod dutta;
pub mod twist;

pub use dutta::{dutta_estimate, dutta_squares, normalized_sequence, render_rational, DuttaSequence, DuttaSquares};
pub use twist::{frobenius_minimality_audit, frobenius_polynomial, frobenius_twist, FrobeniusTwistSpec};

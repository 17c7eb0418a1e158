//! Exact commutative algebra for graded free complexes: Gröbner bases,
//! minimal resolutions, homology lengths, Adams operations and Frobenius
//! twists, together with a checker for the inequalities relating them.

pub mod algebra;
pub mod complex;
pub mod error;
pub mod frobenius;
pub mod graded;
pub mod groebner;
pub mod harness;

pub use error::{Error, Result};

//! Exact coefficient fields, monomials and sparse polynomials.

pub mod field;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod polynomial;

pub use field::{Field, PrimeField, Rationals};
pub use monomial::{monomials_of_degree, Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;

//! Exact coefficients, sparse polynomials, monomial orders and the text format.

pub mod field;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod polynomial;
pub mod rational;
pub mod ring;

pub use field::{Field, Fp};
pub use monomial::{monomials_of_degree, Monomial};
pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use ring::PolyRing;

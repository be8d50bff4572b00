//! Exact commutative-algebra toolkit for plane point configurations:
//! Gröbner bases over the rationals, ideal algebra, Hilbert series,
//! Jacobian ideals and Valabrega–Valla torsion checks.

pub mod error;
pub mod geometry;
pub mod groebner;
pub mod hilbert;
pub mod ideals;
pub mod linalg;
pub mod poly;
pub mod repro;
pub mod vava;

pub use error::{Error, Result};

//! Exact computations around the cohomology of Fano varieties of k-planes in
//! smooth intersections of two quadrics, and the symmetric-space analogues of
//! Kostka–Foulkes polynomials that govern it.

pub mod cli;
pub mod error;
pub mod fano;
pub mod kostka;
pub mod laurent;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::{LaurentPoly, Parity, RationalPair};

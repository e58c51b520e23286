//! Riemann surfaces of genus `g` with a group of `4g − 4` automorphisms.
//!
//! Finite groups are explicit Cayley tables; actions are generating vectors
//! for a Fuchsian signature; topological classes are orbits under braid
//! moves and automorphisms; Jacobian decompositions come from exact
//! character tables.

pub mod classify;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod fuchsian;
pub mod genvec;
pub mod golden;
pub mod group;
pub mod jacobian;
pub mod oracle;
pub mod reptheory;
pub mod selftest;

pub use error::{Error, Result};

//! Exact Hilbert-series invariants and Castelnuovo–Mumford regularity bounds
//! for graded quotients of a polynomial ring.
//!
//! All arithmetic is exact (arbitrary precision integers and rationals).
//! The `parallel` feature (on by default) evaluates sweeps with rayon.

pub mod analysis;
pub mod bounds;
pub mod combinat;
pub mod error;
pub mod exec;
pub mod families;
pub mod gotzmann;
pub mod input;
pub mod monomials;
pub mod polyseries;
pub mod report;
pub mod sweep;

pub use error::{Error, Result};

//! Exact arithmetic for monomial ideals and their normality.
//!
//! The crate provides: ideal arithmetic on exponent vectors, integral
//! closures of powers via Newton polyhedra (with two independent membership
//! routes), Hilbert bases of Rees cones, minimal vertex covers and the
//! associated cover/edge ideals of graphs, and the named constructions and
//! witness monomials used by the verification harness in the companion CLI.
//!
//! All polyhedral computations are carried out in exact integer/rational
//! arithmetic; floating point is never consulted for a mathematical decision.

pub mod closure;
pub mod cone;
pub mod constructions;
pub mod error;
pub mod exponent;
mod fm;
pub mod graph;
pub mod ideal;
pub mod io;
mod linalg;
mod lp;

pub use error::{Error, Result};
pub use exponent::ExponentVector;
pub use ideal::MonomialIdeal;

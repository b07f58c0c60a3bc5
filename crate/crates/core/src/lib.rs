//! Exact-arithmetic toolkit for polynomial maps: Keller-map checks and
//! inversion, bifurcation sets and generic-line polynomials, SL(n, Z)
//! completion, map transforms and integer-point search on the resulting
//! curves.

pub mod diophantine;
pub mod elim;
pub mod error;
pub mod expr_io;
pub mod fibers;
pub mod keller;
pub mod lattice;
pub mod linalg;
pub mod polyring;
pub mod transforms;

pub use error::{Error, Result};

//! Identifying codes on infinite grids and finite graphs.
//!
//! The crate builds periodic codes on the square, hexagonal (brick-wall),
//! triangular, king and `n`-dimensional lattice grids, decides the
//! `r`-identifying property of a periodic code by a finite reduction,
//! evaluates density lower bounds exactly, and solves small finite instances
//! by exhaustive search.

pub mod error;
pub mod grid;
pub mod model;
pub mod search;
pub mod bounds;
pub mod constructions;
pub mod verifier;
pub mod render;
pub mod cli;

pub use error::{Error, Result};
pub use grid::{GridKind, Vertex};

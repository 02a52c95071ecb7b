//! Exact solvers: minimum identifying codes and dominating sets of small
//! graphs, and exhaustive search for periodic codes on a rectangular tile.

mod domset;
mod idcode;
mod periodic;

pub use domset::{min_dominating_set, DomOptions};
pub use idcode::{min_identifying_code, Mode};
pub use periodic::{king_schedule, search_periodic, search_schedule, PeriodicHit, MAX_COMBINATIONS, MAX_TILE_CELLS};

/// Outcome of an exact minimization.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Optimum {
    pub size: usize,
    /// Sorted vertex indices.
    pub set: Vec<usize>,
    /// Search-tree nodes expanded.
    pub nodes: u64,
}

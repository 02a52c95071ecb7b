//! Data model: exact rationals, period lattices, periodic codes, finite
//! graphs, verification reports and the JSON file formats.

pub mod code;
pub mod graph;
pub mod io;
pub mod lattice;
pub mod rational;
pub mod report;

pub use code::{canonicalize, PeriodicCode};
pub use graph::{hypercube, window, FiniteGraph};
pub use lattice::PeriodLattice;
pub use rational::Rational;
pub use report::{PairCensus, Status, VerificationReport};

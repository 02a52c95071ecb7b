use thiserror::Error;

use crate::grid::GridKind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex has dimension {got}, {grid} expects {expected}")]
    DimensionMismatch {
        grid: GridKind,
        expected: usize,
        got: usize,
    },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("radius {0} exceeds the cap of {max}", max = crate::grid::MAX_RADIUS)]
    RadiusTooLarge(u32),
    #[error("period matrix is singular")]
    SingularPeriod,
    #[error("period matrix must be {expected}x{expected}")]
    PeriodShape { expected: usize },
    #[error("period vector {0:?} is not a translation automorphism of the hex grid (odd coordinate sum)")]
    PeriodNotAutomorphism(Vec<i64>),
    #[error("size cap exceeded: {what} = {size} > {cap}")]
    CapExceeded { what: &'static str, size: u128, cap: u128 },
    #[error("vertex {0} is out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("graph has a self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("label count {labels} does not match vertex count {n}")]
    LabelCount { labels: usize, n: usize },
    #[error("graph admits no {r}-identifying code: vertices {0} and {1} are twins", .twins.0, .twins.1)]
    NoCode { r: u32, twins: (usize, usize) },
    #[error("graph is not connected")]
    Disconnected,
    #[error("set is not dominating: vertex {0} is uncovered")]
    NotDominating(usize),
    #[error("input code is not {r}-identifying")]
    NotIdentifying { r: u32 },
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("degree sequence has odd sum {0}")]
    OddDegreeSum(u64),
    #[error("degree sequence violates the Erdos-Gallai inequality at index {index}: {lhs} > {rhs}")]
    ErdosGallai { index: usize, lhs: u64, rhs: u64 },
    #[error("window radius {m} is too small for radius {r} (need m >= 3r)")]
    WindowTooSmall { m: u32, r: u32 },
    #[error("format error: {0}")]
    Format(String),
}

use std::fmt;

use serde::Serialize;

use crate::grid::Vertex;

/// Outcome of an identifying-code check. `P` is the point type: lattice
/// [`Vertex`] for periodic codes, node index for finite graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status<P> {
    Identifying,
    /// The identifying set of `witness` (a vertex set of size <= ell) is empty.
    EmptySet { witness: Vec<P> },
    /// `first` and `second` have equal identifying sets.
    Indistinguishable { first: Vec<P>, second: Vec<P> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport<P = Vertex> {
    pub r: u32,
    pub ell: usize,
    #[serde(flatten)]
    pub status: Status<P>,
}

impl<P> VerificationReport<P> {
    pub fn identifying(r: u32, ell: usize) -> Self {
        VerificationReport {
            r,
            ell,
            status: Status::Identifying,
        }
    }

    pub fn is_identifying(&self) -> bool {
        matches!(self.status, Status::Identifying)
    }

    pub fn map<Q>(self, mut f: impl FnMut(P) -> Q) -> VerificationReport<Q> {
        let mut conv = |xs: Vec<P>| xs.into_iter().map(&mut f).collect::<Vec<Q>>();
        let status = match self.status {
            Status::Identifying => Status::Identifying,
            Status::EmptySet { witness } => Status::EmptySet {
                witness: conv(witness),
            },
            Status::Indistinguishable { first, second } => Status::Indistinguishable {
                first: conv(first),
                second: conv(second),
            },
        };
        VerificationReport {
            r: self.r,
            ell: self.ell,
            status,
        }
    }
}

fn join<P: fmt::Display>(xs: &[P]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

impl<P: fmt::Display> fmt::Display for VerificationReport<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = if self.ell == 1 {
            format!("{}-identifying", self.r)
        } else {
            format!("({},<={})-identifying", self.r, self.ell)
        };
        match &self.status {
            Status::Identifying => write!(f, "{mode}: yes"),
            Status::EmptySet { witness } => {
                write!(f, "{mode}: no, empty identifying set at {}", join(witness))
            }
            Status::Indistinguishable { first, second } => write!(
                f,
                "{mode}: no, {} and {} have equal identifying sets",
                join(first),
                join(second)
            ),
        }
    }
}

/// Counts of pair witnesses: `p(c)` is the number of vertices `v` with
/// `I_r(v) = {c, c'}` for some other codeword `c'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCensus {
    pub r: u32,
    pub window: u32,
    pub per_codeword: Vec<(Vertex, usize)>,
    pub max_p: usize,
    pub sum_p: usize,
    pub codeword_count: usize,
}

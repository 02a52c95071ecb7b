use crate::bounds::log_lower;
use crate::error::{Error, Result};
use crate::model::graph::FiniteGraph;
use crate::verifier::verify_finite;

use super::Optimum;

pub const MAX_CODE_SEARCH_VERTICES: usize = 64;

/// Which sets must be distinct and nonempty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Every identifying set nonempty and all of them distinct.
    Standard,
    /// All identifying sets distinct; one of them may be empty.
    AllowOneEmpty,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "standard" => Ok(Mode::Standard),
            "allow-one-empty" | "one-empty" => Ok(Mode::AllowOneEmpty),
            _ => Err(Error::Parameter(format!("unknown mode {s:?}"))),
        }
    }
}

/// Minimum hitting set over a family of masks.
struct HittingSet {
    masks: Vec<u64>,
    nodes: u64,
}

impl HittingSet {
    fn new(mut masks: Vec<u64>) -> Self {
        masks.sort_by_key(|m| (m.count_ones(), *m));
        masks.dedup();
        // a mask containing another one is hit whenever the smaller one is
        let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
        for m in masks {
            if !kept.iter().any(|&k| k & m == k) {
                kept.push(m);
            }
        }
        HittingSet { masks: kept, nodes: 0 }
    }

    /// Disjoint unhit masks give a lower bound on the codewords still needed.
    fn packing_bound(&self, chosen: u64, excluded: u64) -> usize {
        let mut used = 0u64;
        let mut count = 0;
        for &m in &self.masks {
            if m & chosen != 0 {
                continue;
            }
            let avail = m & !excluded;
            if avail & used == 0 {
                used |= avail;
                count += 1;
            }
        }
        count
    }

    fn search(&mut self, chosen: u64, excluded: u64, budget: usize) -> Option<u64> {
        self.nodes += 1;
        let mut best: Option<u64> = None;
        for &m in &self.masks {
            if m & chosen != 0 {
                continue;
            }
            let avail = m & !excluded;
            if avail == 0 {
                return None;
            }
            if best.map_or(true, |b| avail.count_ones() < b.count_ones()) {
                best = Some(avail);
                if avail.count_ones() == 1 {
                    break;
                }
            }
        }
        let Some(mut candidates) = best else {
            return Some(chosen);
        };
        if budget == 0 || self.packing_bound(chosen, excluded) > budget {
            return None;
        }
        let mut excluded = excluded;
        while candidates != 0 {
            let bit = candidates & candidates.wrapping_neg();
            candidates ^= bit;
            if let Some(found) = self.search(chosen | bit, excluded, budget - 1) {
                return Some(found);
            }
            excluded |= bit;
        }
        None
    }
}

/// Smallest `r`-identifying code of `graph` (at most 64 vertices).
///
/// Branch-and-bound on the unmet constraint with the fewest candidates:
/// a vertex with an empty identifying set, or a pair with equal ones.
/// Sizes are tried upward from the logarithmic and ball-counting bounds,
/// so the first code found is optimal. The result is verified before it is
/// returned.
pub fn min_identifying_code(graph: &FiniteGraph, r: u32, mode: Mode) -> Result<Optimum> {
    let n = graph.n();
    if n > MAX_CODE_SEARCH_VERTICES {
        return Err(Error::CapExceeded {
            what: "vertices for code search",
            size: n as u128,
            cap: MAX_CODE_SEARCH_VERTICES as u128,
        });
    }
    if n == 0 {
        return Err(Error::Parameter("graph has no vertices".into()));
    }
    let balls: Vec<u64> = (0..n)
        .map(|v| graph.ball(v, r).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let mut masks = Vec::new();
    if mode == Mode::Standard {
        masks.extend_from_slice(&balls);
    }
    for u in 0..n {
        for v in u + 1..n {
            let diff = balls[u] ^ balls[v];
            if diff == 0 {
                return Err(Error::NoCode { r, twins: (u, v) });
            }
            masks.push(diff);
        }
    }
    let max_ball = balls.iter().map(|b| b.count_ones() as u64).max().unwrap_or(1);
    let n64 = n as u64;
    let start = match mode {
        Mode::Standard => {
            let karp = (2 * n64).div_ceil(max_ball + 1);
            (log_lower(n64) as u64).max(karp)
        }
        Mode::AllowOneEmpty => {
            let karp = (2 * n64 - 2).div_ceil(max_ball + 1);
            (log_lower(n64 - 1) as u64).max(karp)
        }
    } as usize;
    let mut solver = HittingSet::new(masks);
    for budget in start..=n {
        if let Some(code) = solver.search(0, 0, budget) {
            let set: Vec<usize> = (0..n).filter(|&i| code >> i & 1 == 1).collect();
            if mode == Mode::Standard && !verify_finite(graph, &set, r, 1)?.is_identifying() {
                return Err(Error::NotIdentifying { r });
            }
            return Ok(Optimum {
                size: set.len(),
                set,
                nodes: solver.nodes,
            });
        }
    }
    // Unreachable: without twins the whole vertex set is a code.
    Err(Error::NotIdentifying { r })
}

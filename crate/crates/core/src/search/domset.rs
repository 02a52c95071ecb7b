use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::graph::FiniteGraph;
use crate::verifier::is_dominating;

use super::Optimum;

pub const MAX_DOMSET_VERTICES: usize = 256;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DomOptions {
    /// The graph is vertex-transitive (e.g. a hypercube), so some optimum
    /// contains vertex 0.
    pub vertex_transitive: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, Debug)]
struct Bits([u64; 4]);

impl Bits {
    fn with(mut self, i: usize) -> Self {
        self.0[i / 64] |= 1 << (i % 64);
        self
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn or(self, o: Bits) -> Bits {
        Bits(std::array::from_fn(|k| self.0[k] | o.0[k]))
    }

    fn and_not(self, o: Bits) -> Bits {
        Bits(std::array::from_fn(|k| self.0[k] & !o.0[k]))
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn ones(self) -> impl Iterator<Item = usize> {
        (0..4).flat_map(move |k| {
            let mut w = self.0[k];
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    k * 64 + b
                })
            })
        })
    }
}

struct Solver {
    n: usize,
    closed: Vec<Bits>,
    all: Bits,
}

impl Solver {
    /// Lower bound: uncovered vertices over the best coverage still possible.
    fn bound(&self, covered: Bits, excluded: Bits) -> usize {
        let open = self.all.and_not(covered);
        let left = open.count() as usize;
        if left == 0 {
            return 0;
        }
        let best = (0..self.n)
            .filter(|&c| !excluded.get(c))
            .map(|c| (self.closed[c].and_not(covered)).count() as usize)
            .max()
            .unwrap_or(0);
        if best == 0 {
            usize::MAX
        } else {
            left.div_ceil(best)
        }
    }

    /// Searches for a dominating set extending `chosen` with at most `budget`
    /// more vertices. Returns the set and the node count.
    fn search(&self, chosen: Bits, covered: Bits, excluded: Bits, budget: usize, nodes: &mut u64) -> Option<Bits> {
        *nodes += 1;
        let open = self.all.and_not(covered);
        // uncovered vertex with the fewest available dominators
        let mut pick: Option<Bits> = None;
        for v in open.ones() {
            let cand = self.closed[v].and_not(excluded);
            let c = cand.count();
            if c == 0 {
                return None;
            }
            if pick.map_or(true, |p| c < p.count()) {
                pick = Some(cand);
                if c == 1 {
                    break;
                }
            }
        }
        let Some(cands) = pick else {
            return Some(chosen);
        };
        if budget == 0 || self.bound(covered, excluded) > budget {
            return None;
        }
        let mut excluded = excluded;
        for c in cands.ones() {
            if let Some(found) = self.search(
                chosen.with(c),
                covered.or(self.closed[c]),
                excluded,
                budget - 1,
                nodes,
            ) {
                return Some(found);
            }
            excluded = excluded.with(c);
        }
        None
    }

    fn greedy(&self) -> usize {
        let mut covered = Bits::default();
        let mut size = 0;
        while covered != self.all {
            let c = (0..self.n)
                .max_by_key(|&c| (self.closed[c].and_not(covered).count(), std::cmp::Reverse(c)))
                .expect("nonempty graph");
            covered = covered.or(self.closed[c]);
            size += 1;
        }
        size
    }
}

/// Minimum dominating set by branch-and-bound. Sizes are tried upward from
/// the coverage bound to the greedy solution; the top of the tree is
/// explored in parallel and the first branch in order wins, so the result
/// does not depend on scheduling.
pub fn min_dominating_set(graph: &FiniteGraph, opts: DomOptions) -> Result<Optimum> {
    let n = graph.n();
    if n > MAX_DOMSET_VERTICES {
        return Err(Error::CapExceeded {
            what: "vertices for dominating-set search",
            size: n as u128,
            cap: MAX_DOMSET_VERTICES as u128,
        });
    }
    if n == 0 {
        return Ok(Optimum { size: 0, set: vec![], nodes: 0 });
    }
    let closed: Vec<Bits> = (0..n)
        .map(|v| graph.neighbors(v).iter().fold(Bits::default().with(v), |b, &w| b.with(w)))
        .collect();
    let all = (0..n).fold(Bits::default(), |b, v| b.with(v));
    let solver = Solver { n, closed, all };
    let upper = solver.greedy();
    let start = solver.bound(Bits::default(), Bits::default()).max(1);

    let mut total_nodes = 1u64;
    for budget in start..=upper {
        // first level: either vertex 0 alone (vertex-transitive graphs) or
        // every dominator of vertex 0, each excluding the earlier ones
        let roots: Vec<usize> = if opts.vertex_transitive {
            vec![0]
        } else {
            solver.closed[0].ones().collect()
        };
        let results: Vec<(Option<Bits>, u64)> = roots
            .par_iter()
            .enumerate()
            .map(|(i, &c)| {
                let excluded = roots[..i].iter().fold(Bits::default(), |b, &x| b.with(x));
                let mut nodes = 0;
                let found = solver.search(
                    Bits::default().with(c),
                    solver.closed[c],
                    excluded,
                    budget - 1,
                    &mut nodes,
                );
                (found, nodes)
            })
            .collect();
        total_nodes += results.iter().map(|r| r.1).sum::<u64>();
        if let Some(found) = results.into_iter().find_map(|r| r.0) {
            let set: Vec<usize> = found.ones().collect();
            debug_assert!(is_dominating(graph, &set));
            return Ok(Optimum {
                size: set.len(),
                set,
                nodes: total_nodes,
            });
        }
    }
    unreachable!("the greedy solution has size {upper}")
}

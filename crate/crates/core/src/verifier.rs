//! Deciding the identifying property.
//!
//! For a periodic code on an infinite grid the check is finite: a
//! translation by a period vector is an automorphism mapping the code to
//! itself, so `I_r(u + p) = I_r(u) + p` and it suffices to look at vertices
//! `u` of one fundamental domain. Two vertices at distance greater than `2r`
//! have disjoint balls, so once every identifying set is nonempty they cannot
//! collide; only partners `v` in `B_2r(u)` need comparing.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{check_radius, Vertex};
use crate::model::code::PeriodicCode;
use crate::model::graph::FiniteGraph;
use crate::model::report::{PairCensus, Status, VerificationReport};

/// Default cap on `domain size * |B_2r|` pair comparisons.
pub const DEFAULT_MAX_PAIRS: u128 = 1_000_000_000;
/// Cap on the number of vertex subsets enumerated in `(r, <= ell)` mode.
pub const MAX_SUBSETS: u128 = 5_000_000;

/// The pair cap, overridable through `IDCODE_MAX_PAIRS`.
pub fn max_pairs() -> u128 {
    std::env::var("IDCODE_MAX_PAIRS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_PAIRS)
}

/// Identifying sets of every fundamental-domain vertex, stored flat
/// (`dim` coordinates per codeword, sorted lexicographically).
struct DomainSets {
    dim: usize,
    sets: Vec<Vec<i64>>,
}

impl DomainSets {
    fn compute(code: &PeriodicCode, r: u32) -> Self {
        let grid = code.grid();
        let dim = grid.dimension();
        let lattice = code.lattice();
        let offsets: Vec<_> = (0..grid.class_count())
            .map(|c| grid.ball_offsets(c, r))
            .collect();
        let sets = (0..lattice.det() as usize)
            .into_par_iter()
            .map(|idx| {
                let u = lattice.residue_at(idx);
                let mut set = Vec::new();
                let mut w = vec![0i64; dim];
                for off in offsets[grid.class_of(&u)].iter() {
                    for i in 0..dim {
                        w[i] = u[i] + off[i];
                    }
                    let mut res = w.clone();
                    lattice.reduce_in_place(&mut res);
                    if code.member_residue_index(lattice.residue_index(&res)) {
                        set.extend_from_slice(&w);
                    }
                }
                set
            })
            .collect();
        DomainSets { dim, sets }
    }

    /// Whether `I(u_idx) == I(res_idx) + shift`.
    fn equal_shifted(&self, u_idx: usize, res_idx: usize, shift: &[i64]) -> bool {
        let a = &self.sets[u_idx];
        let b = &self.sets[res_idx];
        a.len() == b.len()
            && a.iter()
                .zip(b)
                .enumerate()
                .all(|(k, (x, y))| *x == y + shift[k % self.dim])
    }
}

/// Decides whether `code` is `r`-identifying on its grid.
///
/// On failure the witness is the lexicographically smallest: an empty set at
/// the smallest domain vertex, else the smallest pair `(u, v)` with `u` in the
/// canonical fundamental domain. The result does not depend on the number of
/// worker threads.
pub fn verify_periodic(code: &PeriodicCode, r: u32) -> Result<VerificationReport> {
    if r == 0 {
        return Err(Error::Parameter("radius must be at least 1".into()));
    }
    check_radius(r)?;
    let grid = code.grid();
    for col in code.period() {
        if !grid.is_translation_automorphism(col) {
            return Err(Error::PeriodNotAutomorphism(col.clone()));
        }
    }
    let lattice = code.lattice();
    let pair_offsets: Vec<_> = (0..grid.class_count())
        .map(|c| grid.ball_offsets(c, 2 * r))
        .collect();
    let work = lattice.det() as u128 * pair_offsets[0].len() as u128;
    let cap = max_pairs();
    if work > cap {
        return Err(Error::CapExceeded {
            what: "pair checks",
            size: work,
            cap,
        });
    }

    let sets = DomainSets::compute(code, r);
    if let Some(idx) = sets.sets.iter().position(Vec::is_empty) {
        return Ok(VerificationReport {
            r,
            ell: 1,
            status: Status::EmptySet {
                witness: vec![Vertex(lattice.residue_at(idx))],
            },
        });
    }

    let dim = grid.dimension();
    let failure = (0..lattice.det() as usize)
        .into_par_iter()
        .map(|u_idx| {
            let u = lattice.residue_at(u_idx);
            let mut v = vec![0i64; dim];
            for off in pair_offsets[grid.class_of(&u)].iter() {
                if off.iter().all(|&x| x == 0) {
                    continue;
                }
                for i in 0..dim {
                    v[i] = u[i] + off[i];
                }
                let mut res = v.clone();
                let shift = lattice.reduce_in_place(&mut res);
                if sets.equal_shifted(u_idx, lattice.residue_index(&res), &shift) {
                    return Some((u, v));
                }
            }
            None
        })
        .find_first(Option::is_some)
        .flatten();

    Ok(match failure {
        None => VerificationReport::identifying(r, 1),
        Some((u, v)) => VerificationReport {
            r,
            ell: 1,
            status: Status::Indistinguishable {
                first: vec![Vertex(u)],
                second: vec![Vertex(v)],
            },
        },
    })
}

/// `I_r(v)` on the infinite grid, as a sorted list of codewords.
pub fn identifying_set(code: &PeriodicCode, v: &Vertex, r: u32) -> Result<Vec<Vertex>> {
    let ball = code.grid().ball(v, r)?;
    Ok(ball
        .into_iter()
        .filter(|w| code.member_coords(w.coords()))
        .collect())
}

/// Bitset over graph vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
}

fn code_bits(graph: &FiniteGraph, code: &[usize]) -> Result<Bits> {
    let mut bits = Bits::new(graph.n());
    for &c in code {
        if c >= graph.n() {
            return Err(Error::VertexOutOfRange(c, graph.n()));
        }
        bits.set(c);
    }
    Ok(bits)
}

fn finite_identifying_sets(graph: &FiniteGraph, code: &Bits, r: u32) -> Vec<Bits> {
    (0..graph.n())
        .map(|v| {
            let mut bits = Bits::new(graph.n());
            for w in graph.ball(v, r) {
                if code.get(w) {
                    bits.set(w);
                }
            }
            bits
        })
        .collect()
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Calls `f` with every subset of `0..n` of size `1..=ell`, ordered by size
/// then lexicographically. Stops early when `f` returns `false`.
fn for_each_subset(n: usize, ell: usize, mut f: impl FnMut(&[usize]) -> bool) {
    for size in 1..=ell.min(n) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if !f(&idx) {
                return;
            }
            let mut i = size;
            while i > 0 && idx[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

/// Decides whether `code` is an `(r, <= ell)`-identifying code of `graph`
/// (`ell = 1` is the plain definition). `I_r(X)` is the union of `I_r(x)`
/// over `x` in `X`.
///
/// Witness order: empty sets are reported first; collisions report the
/// pair whose (first, second) subsets are smallest in enumeration order.
pub fn verify_finite(
    graph: &FiniteGraph,
    code: &[usize],
    r: u32,
    ell: usize,
) -> Result<VerificationReport<usize>> {
    if ell == 0 {
        return Err(Error::Parameter("ell must be at least 1".into()));
    }
    let subsets: u128 = (1..=ell.min(graph.n()))
        .map(|k| binomial(graph.n() as u128, k as u128))
        .fold(0u128, |a, b| a.saturating_add(b));
    if subsets > MAX_SUBSETS {
        return Err(Error::CapExceeded {
            what: "vertex subsets",
            size: subsets,
            cap: MAX_SUBSETS,
        });
    }
    let code = code_bits(graph, code)?;
    let sets = finite_identifying_sets(graph, &code, r);
    if let Some(v) = sets.iter().position(Bits::is_empty) {
        return Ok(VerificationReport {
            r,
            ell,
            status: Status::EmptySet { witness: vec![v] },
        });
    }
    let mut seen: HashMap<Bits, Vec<usize>> = HashMap::new();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for_each_subset(graph.n(), ell, |xs| {
        let mut union = sets[xs[0]].clone();
        for &x in &xs[1..] {
            union.union_with(&sets[x]);
        }
        match seen.get(&union) {
            Some(first) => {
                let cand = (first.clone(), xs.to_vec());
                let better = match &best {
                    None => true,
                    Some(b) => (cand.0.len(), &cand.0, cand.1.len(), &cand.1) < (b.0.len(), &b.0, b.1.len(), &b.1),
                };
                if better {
                    best = Some(cand);
                }
            }
            None => {
                seen.insert(union, xs.to_vec());
            }
        }
        true
    });
    Ok(match best {
        None => VerificationReport::identifying(r, ell),
        Some((first, second)) => VerificationReport {
            r,
            ell,
            status: Status::Indistinguishable { first, second },
        },
    })
}

/// Whether `graph` admits an `r`-identifying code, i.e. has no two vertices
/// with equal closed `r`-balls. Returns the smallest twin pair otherwise.
pub fn admits_code(graph: &FiniteGraph, r: u32) -> (bool, Option<(usize, usize)>) {
    let mut first: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut twins: Option<(usize, usize)> = None;
    for v in 0..graph.n() {
        let ball = graph.ball(v, r);
        match first.get(&ball) {
            Some(&u) => {
                if twins.map_or(true, |t| (u, v) < t) {
                    twins = Some((u, v));
                }
            }
            None => {
                first.insert(ball, v);
            }
        }
    }
    (twins.is_none(), twins)
}

pub fn is_dominating(graph: &FiniteGraph, set: &[usize]) -> bool {
    first_undominated(graph, set).is_none()
}

pub fn first_undominated(graph: &FiniteGraph, set: &[usize]) -> Option<usize> {
    let mut covered = vec![false; graph.n()];
    for &d in set {
        if d >= graph.n() {
            continue;
        }
        covered[d] = true;
        for &w in graph.neighbors(d) {
            covered[w] = true;
        }
    }
    covered.iter().position(|c| !c)
}

/// Pair census of a periodic code over the window `Q_m`.
///
/// Counts every codeword `c` in `Q_{m-r}`; `p(c)` is the exact number of
/// vertices `v` (all lying in `B_r(c)`, hence in `Q_m`) with
/// `I_r(v) = {c, c'}`. Identifying sets are evaluated on the infinite code,
/// so no boundary effect enters the counts. The code is assumed to be
/// `r`-identifying.
pub fn pair_census(code: &PeriodicCode, r: u32, m: u32) -> Result<PairCensus> {
    if r == 0 {
        return Err(Error::Parameter("radius must be at least 1".into()));
    }
    check_radius(r)?;
    if m < 3 * r {
        return Err(Error::WindowTooSmall { m, r });
    }
    let grid = code.grid();
    let inner = code.codewords_in_window((m - r) as i64);
    let per_codeword: Vec<(Vertex, usize)> = inner
        .par_iter()
        .map(|c| {
            let ball = grid.ball(c, r).expect("codeword has grid dimension");
            let p = ball
                .iter()
                .filter(|v| {
                    let set = identifying_set(code, v, r).expect("dimension checked");
                    set.len() == 2 && set.contains(c)
                })
                .count();
            (c.clone(), p)
        })
        .collect();
    let max_p = per_codeword.iter().map(|(_, p)| *p).max().unwrap_or(0);
    let sum_p = per_codeword.iter().map(|(_, p)| *p).sum();
    Ok(PairCensus {
        r,
        window: m,
        codeword_count: per_codeword.len(),
        per_codeword,
        max_p,
        sum_p,
    })
}

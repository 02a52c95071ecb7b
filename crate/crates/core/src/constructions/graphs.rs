//! Finite graphs with prescribed codes: the logarithmic-size example, the
//! `n - 1` procedure and the subset-incidence gadget with its regular
//! completion.

use crate::bounds::{binomial, log_lower};
use crate::error::{Error, Result};
use crate::model::graph::FiniteGraph;
use crate::model::report::Status;
use crate::verifier::{admits_code, verify_finite};

pub const MAX_LOG_ORDER: usize = 1 << 16;
pub const MAX_GADGET_K: usize = 16;

fn require_code(graph: &FiniteGraph, code: &[usize], r: u32) -> Result<()> {
    if verify_finite(graph, code, r, 1)?.is_identifying() {
        Ok(())
    } else {
        Err(Error::NotIdentifying { r })
    }
}

/// Graph on `nv` vertices with a 1-identifying code of size
/// `⌈log₂(nv+1)⌉`. Code vertices come first; each remaining vertex is joined
/// to a distinct subset of the code of size at least 2, taken in
/// colexicographic order.
pub fn log_attaining_graph(nv: usize) -> Result<(FiniteGraph, Vec<usize>)> {
    if nv == 0 || nv > MAX_LOG_ORDER {
        return Err(Error::Parameter(format!("order {nv} outside 1..={MAX_LOG_ORDER}")));
    }
    let k = log_lower(nv as u64) as usize;
    let mut g = FiniteGraph::empty(nv);
    let subsets = (3usize..1 << k).filter(|m| m.count_ones() >= 2);
    for (v, mask) in (k..nv).zip(subsets) {
        for c in 0..k {
            if mask >> c & 1 == 1 {
                g.add_edge(v, c)?;
            }
        }
    }
    let code: Vec<usize> = (0..k).collect();
    require_code(&g, &code, 1)?;
    Ok((g, code))
}

/// Code of size `n - 1` in a connected graph that admits a code.
///
/// Drops vertex 0; if that fails, drops the twin `w` whose ball lost vertex
/// 0 instead. That second step is not always enough (on `P_3` it yields
/// `{0, 1}`), so as a last resort every `V - x` is tried in order.
pub fn n_minus_one_code(graph: &FiniteGraph, r: u32) -> Result<Vec<usize>> {
    let n = graph.n();
    if n < 2 {
        return Err(Error::Parameter("graph needs at least 2 vertices".into()));
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    if let (false, Some(twins)) = admits_code(graph, r) {
        return Err(Error::NoCode { r, twins });
    }
    let without = |x: usize| -> Vec<usize> { (0..n).filter(|&v| v != x).collect() };
    let works = |code: &[usize]| -> Result<bool> { Ok(verify_finite(graph, code, r, 1)?.is_identifying()) };
    let first = without(0);
    let report = verify_finite(graph, &first, r, 1)?;
    let second = match report.status {
        Status::Identifying => return Ok(first),
        Status::Indistinguishable { first: a, second: b } => {
            let (a, b) = (a[0], b[0]);
            if graph.ball(a, r).contains(&0) { b } else { a }
        }
        Status::EmptySet { .. } => 0,
    };
    let code = without(second);
    if works(&code)? {
        return Ok(code);
    }
    for x in 1..n {
        let code = without(x);
        if works(&code)? {
            return Ok(code);
        }
    }
    Err(Error::NotIdentifying { r })
}

fn check_gadget(k: usize, s: usize) -> Result<()> {
    if s < 1 || s + 1 > k || k > MAX_GADGET_K {
        return Err(Error::Parameter(format!(
            "gadget needs 2 <= s+1 <= k <= {MAX_GADGET_K}, got k = {k}, s = {s}"
        )));
    }
    Ok(())
}

/// `Σ_{i=1}^{s+1} C(k,i)`.
pub fn subset_gadget_order(k: usize, s: usize) -> u64 {
    (1..=s + 1).map(|i| binomial(k as u64, i as u64)).sum()
}

/// `Σ_{i=2}^{s+1} C(k-1,i-1)`, the degree of each code vertex.
pub fn subset_gadget_degree(k: usize, s: usize) -> u64 {
    (2..=s + 1).map(|i| binomial(k as u64 - 1, i as u64 - 1)).sum()
}

/// Subset masks of size `2..=s+1`, grouped by size, each group in
/// colexicographic order.
fn gadget_subsets(k: usize, s: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    for size in 2..=s as u32 + 1 {
        out.extend((0usize..1 << k).filter(|m| m.count_ones() == size).map(|m| (m, size)));
    }
    out
}

/// Code vertices `0..k` and one vertex per subset of the code of size
/// `2..=s+1`, joined to the members of its subset.
pub fn subset_code_graph(k: usize, s: usize) -> Result<(FiniteGraph, Vec<usize>)> {
    check_gadget(k, s)?;
    let subsets = gadget_subsets(k, s);
    let mut g = FiniteGraph::empty(k + subsets.len());
    for (i, (mask, _)) in subsets.iter().enumerate() {
        for c in 0..k {
            if mask >> c & 1 == 1 {
                g.add_edge(k + i, c)?;
            }
        }
    }
    let code: Vec<usize> = (0..k).collect();
    require_code(&g, &code, 1)?;
    Ok((g, code))
}

fn erdos_gallai(sorted: &[u64]) -> Result<()> {
    let n = sorted.len();
    let mut lhs = 0u64;
    for k in 1..=n {
        lhs += sorted[k - 1];
        let kk = k as u64;
        let rhs = kk * (kk - 1) + sorted[k..].iter().map(|&d| d.min(kk)).sum::<u64>();
        if lhs > rhs {
            return Err(Error::ErdosGallai { index: k, lhs, rhs });
        }
    }
    Ok(())
}

/// A simple graph with the given degree sequence (vertex `i` gets degree
/// `seq[i]`), built by repeatedly joining a vertex of largest remaining
/// degree to the next largest ones.
pub fn realize_degree_sequence(seq: &[u64]) -> Result<FiniteGraph> {
    let sum: u64 = seq.iter().sum();
    if sum % 2 == 1 {
        return Err(Error::OddDegreeSum(sum));
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    erdos_gallai(&sorted)?;

    let mut g = FiniteGraph::empty(seq.len());
    let mut rest: Vec<(u64, usize)> = seq.iter().copied().zip(0..).collect();
    loop {
        rest.retain(|&(d, _)| d > 0);
        if rest.is_empty() {
            return Ok(g);
        }
        rest.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let (d, v) = rest[0];
        let d = d as usize;
        if d >= rest.len() {
            // unreachable after the Erdos-Gallai check
            return Err(Error::Parameter("degree sequence is not graphic".into()));
        }
        for item in &mut rest[1..=d] {
            g.add_edge(v, item.1)?;
            item.0 -= 1;
        }
        rest[0].0 = 0;
    }
}

/// The subset gadget completed to a `d`-regular graph (or one with a single
/// vertex of degree `d - 1`) by adding edges among the non-code vertices
/// only, so every identifying set is unchanged.
pub fn regularize_subset_graph(k: usize, s: usize) -> Result<(FiniteGraph, Vec<usize>)> {
    let (mut g, code) = subset_code_graph(k, s)?;
    let d = subset_gadget_degree(k, s);
    let sizes: Vec<u64> = gadget_subsets(k, s).iter().map(|&(_, size)| size as u64).collect();
    if let Some(&big) = sizes.iter().find(|&&i| i > d) {
        return Err(Error::Parameter(format!(
            "degree {d} is below the subset size {big}; no completion exists"
        )));
    }
    let mut seq: Vec<u64> = sizes.iter().map(|&i| d - i).collect();
    if seq.iter().sum::<u64>() % 2 == 1 {
        let last_pair = sizes.iter().rposition(|&i| i == 2).expect("pairs are always present");
        if seq[last_pair] == 0 {
            return Err(Error::OddDegreeSum(seq.iter().sum()));
        }
        seq[last_pair] -= 1;
    }
    let extra = realize_degree_sequence(&seq)?;
    for (a, b) in extra.edges() {
        g.add_edge(k + a, k + b)?;
    }
    require_code(&g, &code, 1)?;
    Ok((g, code))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::f_value;

    #[test]
    fn log_graphs() {
        let (g, code) = log_attaining_graph(3).unwrap();
        assert_eq!(code, vec![0, 1]);
        assert_eq!(g.neighbors(2), &[0, 1]);
        for (nv, k) in [(1, 1), (7, 3), (10, 4), (15, 4), (16, 5), (100, 7)] {
            let (g, code) = log_attaining_graph(nv).unwrap();
            assert_eq!((g.n(), code.len()), (nv, k));
        }
        assert!(log_attaining_graph(0).is_err());
    }

    #[test]
    fn n_minus_one() {
        let star = FiniteGraph::star(5);
        assert_eq!(n_minus_one_code(&star, 1).unwrap().len(), 4);
        assert_eq!(n_minus_one_code(&FiniteGraph::cycle(4), 1).unwrap().len(), 3);
        assert_eq!(n_minus_one_code(&FiniteGraph::path(3), 1).unwrap().len(), 2);
        assert!(matches!(
            n_minus_one_code(&FiniteGraph::complete(3), 1),
            Err(Error::NoCode { .. })
        ));
        assert_eq!(
            n_minus_one_code(&FiniteGraph::empty(3), 1).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn n_minus_one_swaps_when_needed() {
        // On P_3, V - 0 leaves I(1) = I(2) = {1, 2}; dropping the twin 2
        // instead leaves I(0) = I(1) = {0, 1}. Only {0, 2} works.
        let p3 = FiniteGraph::path(3);
        assert!(!verify_finite(&p3, &[1, 2], 1, 1).unwrap().is_identifying());
        assert!(!verify_finite(&p3, &[0, 1], 1, 1).unwrap().is_identifying());
        assert_eq!(n_minus_one_code(&p3, 1).unwrap(), vec![0, 2]);
        for n in 4..10 {
            assert_eq!(n_minus_one_code(&FiniteGraph::path(n), 1).unwrap().len(), n - 1);
        }
    }

    #[test]
    fn gadget_k5_s2() {
        let (g, code) = subset_code_graph(5, 2).unwrap();
        assert_eq!((g.n(), g.max_degree(), code.len()), (25, 10, 5));
        assert_eq!(subset_gadget_order(5, 2), 25);
        assert_eq!(subset_gadget_degree(5, 2), 10);
        let (g, _) = subset_code_graph(3, 1).unwrap();
        assert_eq!((g.n(), g.max_degree()), (6, 2));
    }

    #[test]
    fn gadget_meets_f() {
        for k in 2..=7usize {
            for s in 1..k {
                let n = subset_gadget_order(k, s);
                let delta = subset_gadget_degree(k, s);
                assert_eq!(((delta + 1) * k as u64) as i128, f_value(n, k as u64, s as u64), "k={k} s={s}");
            }
        }
    }

    #[test]
    fn degree_sequences() {
        let tri = realize_degree_sequence(&[2, 2, 2]).unwrap();
        assert_eq!(tri.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        let star = realize_degree_sequence(&[3, 1, 1, 1]).unwrap();
        assert_eq!(star, FiniteGraph::star(4));
        assert_eq!(realize_degree_sequence(&[2, 2, 1]).unwrap_err(), Error::OddDegreeSum(5));
        assert!(matches!(
            realize_degree_sequence(&[3, 3, 1, 1]),
            Err(Error::ErdosGallai { index: 2, .. })
        ));
        assert_eq!(realize_degree_sequence(&[]).unwrap().n(), 0);
    }

    #[test]
    fn regular_completion() {
        let (g, code) = regularize_subset_graph(5, 2).unwrap();
        assert_eq!(code.len(), 5);
        assert!((0..g.n()).all(|v| g.degree(v) == 10));
        let (g, _) = regularize_subset_graph(4, 2).unwrap();
        let deficient = (0..g.n()).filter(|&v| g.degree(v) != 6).count();
        assert!(deficient <= 1);
        assert!((0..g.n()).all(|v| g.degree(v) >= 5));
    }

    #[test]
    fn odd_sum_completion() {
        // k = 3, s = 2: d = 3, three pair vertices want 1, one triple wants 0
        let (g, _) = regularize_subset_graph(3, 2).unwrap();
        let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        assert_eq!(degrees.iter().filter(|&&x| x == 2).count(), 1);
        assert!(degrees.iter().all(|&x| x == 3 || x == 2));
    }
}

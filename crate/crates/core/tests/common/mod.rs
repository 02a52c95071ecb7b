//! Oracles shared by the property and acceptance suites.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use idcode::model::{window, FiniteGraph, PeriodicCode};
use idcode::verifier::verify_finite;
use idcode::{GridKind, Vertex};

pub fn v2(x: i64, y: i64) -> Vertex {
    Vertex::new(vec![x, y])
}

/// BFS distances from `src` up to `depth`.
pub fn bfs(grid: GridKind, src: &Vertex, depth: u64) -> HashMap<Vertex, u64> {
    let mut dist = HashMap::from([(src.clone(), 0)]);
    let mut queue = VecDeque::from([src.clone()]);
    while let Some(u) = queue.pop_front() {
        let d = dist[&u];
        if d == depth {
            continue;
        }
        for w in grid.neighbors(&u).unwrap() {
            if !dist.contains_key(&w) {
                dist.insert(w.clone(), d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}


pub fn random_graph(n: usize, edges: &[(usize, usize)]) -> FiniteGraph {
    let pairs: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| (a % n, b % n))
        .filter(|(a, b)| a != b)
        .collect();
    let mut g = FiniteGraph::empty(n);
    for (a, b) in pairs {
        g.add_edge(a, b).unwrap();
    }
    g
}


pub fn is_code(g: &FiniteGraph, code: &[usize], r: u32) -> bool {
    verify_finite(g, code, r, 1).unwrap().is_identifying()
}


pub fn tile_code(grid: GridKind, w: i64, h: i64, bits: &[bool]) -> Option<PeriodicCode> {
    let base: Vec<Vertex> = (0..w * h)
        .filter(|&i| bits[i as usize % bits.len()])
        .map(|i| v2(i / h, i % h))
        .collect();
    if base.is_empty() {
        return None;
    }
    Some(PeriodicCode::new(grid, &[vec![w, 0], vec![0, h]], &base).unwrap())
}


/// Decides the identifying property by brute force on `Q_{4r}`, comparing
/// the identifying sets of all vertices of `Q_{3r}` (whose balls stay inside
/// the window).
pub fn brute_force_identifying(code: &PeriodicCode, r: u32) -> bool {
    let m = 4 * r;
    let g = window(code.grid(), m).unwrap();
    let labels = g.labels().unwrap();
    let members: Vec<usize> = (0..g.n())
        .filter(|&i| code.member(&labels[i]).unwrap())
        .collect();
    let member_set: HashSet<usize> = members.iter().copied().collect();
    let inner = 3 * r as i64;
    let mut seen = HashSet::new();
    for (i, p) in labels.iter().enumerate() {
        if p.coords().iter().any(|c| c.abs() > inner) {
            continue;
        }
        let mut set: Vec<usize> = g
            .ball(i, r)
            .into_iter()
            .filter(|w| member_set.contains(w))
            .collect();
        set.sort_unstable();
        if set.is_empty() || !seen.insert(set) {
            return false;
        }
    }
    true
}


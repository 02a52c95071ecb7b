//! The five infinite grid families on integer coordinates: adjacency,
//! graph distance, balls and ball sizes.
//!
//! All grids are translation invariant except the hex grid, whose brick-wall
//! embedding only admits translations by vectors with even coordinate sum.
//! Such grids are handled through *classes*: vertices in the same class are
//! related by an automorphic translation, so a ball shape computed once per
//! class can be reused anywhere.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_RADIUS: u32 = 64;
pub const MAX_DIMENSION: usize = 12;

/// A point of an integer lattice. Ordering is lexicographic on coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vertex(pub Vec<i64>);

impl Vertex {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        Vertex(coords.into())
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn offset(&self, delta: &[i64]) -> Vertex {
        Vertex(self.0.iter().zip(delta).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vertex) -> Vec<i64> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }
}

impl From<Vec<i64>> for Vertex {
    fn from(v: Vec<i64>) -> Self {
        Vertex(v)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridKind {
    Square,
    Hex,
    Triangular,
    King,
    Lattice(usize),
}

impl fmt::Display for GridKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridKind::Square => write!(f, "square"),
            GridKind::Hex => write!(f, "hex"),
            GridKind::Triangular => write!(f, "triangular"),
            GridKind::King => write!(f, "king"),
            GridKind::Lattice(n) => write!(f, "lattice({n})"),
        }
    }
}

impl std::str::FromStr for GridKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let grid = match s.as_str() {
            "square" => GridKind::Square,
            "hex" | "hexagonal" => GridKind::Hex,
            "triangular" | "tri" => GridKind::Triangular,
            "king" => GridKind::King,
            other => {
                let n = other
                    .strip_prefix("lattice")
                    .or_else(|| other.strip_prefix('l'))
                    .map(|rest| rest.trim_matches(|c| c == '(' || c == ')' || c == ':'))
                    .and_then(|rest| rest.parse::<usize>().ok())
                    .ok_or_else(|| Error::InvalidGrid(format!("unknown grid '{other}'")))?;
                GridKind::Lattice(n)
            }
        };
        grid.validate()?;
        Ok(grid)
    }
}

type BallKey = (GridKind, usize, u32);

fn ball_cache() -> &'static Mutex<HashMap<BallKey, Arc<Vec<Vec<i64>>>>> {
    static CACHE: OnceLock<Mutex<HashMap<BallKey, Arc<Vec<Vec<i64>>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn hex_distance_cache() -> &'static Mutex<HashMap<(usize, i64, i64), u64>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, i64, i64), u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn check_radius(r: u32) -> Result<()> {
    if r > MAX_RADIUS {
        return Err(Error::RadiusTooLarge(r));
    }
    Ok(())
}

impl GridKind {
    pub fn validate(&self) -> Result<()> {
        if let GridKind::Lattice(n) = *self {
            if n == 0 || n > MAX_DIMENSION {
                return Err(Error::InvalidGrid(format!(
                    "lattice dimension {n} outside 1..={MAX_DIMENSION}"
                )));
            }
        }
        Ok(())
    }

    pub fn dimension(&self) -> usize {
        match *self {
            GridKind::Lattice(n) => n,
            _ => 2,
        }
    }

    pub fn degree(&self) -> usize {
        match *self {
            GridKind::Hex => 3,
            GridKind::Square => 4,
            GridKind::Triangular => 6,
            GridKind::King => 8,
            GridKind::Lattice(n) => 2 * n,
        }
    }

    pub fn check_dim(&self, coords: &[i64]) -> Result<()> {
        if coords.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                grid: *self,
                expected: self.dimension(),
                got: coords.len(),
            });
        }
        Ok(())
    }

    /// Number of translation classes. Two vertices of the same class differ by
    /// a translation that is a graph automorphism.
    pub fn class_count(&self) -> usize {
        match self {
            GridKind::Hex => 2,
            _ => 1,
        }
    }

    pub fn class_of(&self, coords: &[i64]) -> usize {
        match self {
            GridKind::Hex => (coords[0] + coords[1]).rem_euclid(2) as usize,
            _ => 0,
        }
    }

    pub fn class_representative(&self, class: usize) -> Vec<i64> {
        let mut rep = vec![0; self.dimension()];
        if class == 1 {
            rep[0] = 1;
        }
        rep
    }

    /// Whether translating by `delta` is an automorphism of the grid.
    pub fn is_translation_automorphism(&self, delta: &[i64]) -> bool {
        match self {
            GridKind::Hex => (delta[0] + delta[1]).rem_euclid(2) == 0,
            _ => true,
        }
    }

    /// Neighbor offsets of a vertex with the given coordinates.
    ///
    /// Hex uses the brick-wall rule `u - v = (0, (-1)^(i+j+1))`: a vertex with
    /// even coordinate sum has its vertical edge going up, odd goes down.
    pub(crate) fn neighbor_offsets(&self, coords: &[i64]) -> Vec<Vec<i64>> {
        match *self {
            GridKind::Square => vec![vec![-1, 0], vec![0, -1], vec![0, 1], vec![1, 0]],
            GridKind::Hex => {
                let up = if self.class_of(coords) == 0 { 1 } else { -1 };
                vec![vec![-1, 0], vec![0, up], vec![1, 0]]
            }
            GridKind::Triangular => vec![
                vec![-1, -1],
                vec![-1, 0],
                vec![0, -1],
                vec![0, 1],
                vec![1, 0],
                vec![1, 1],
            ],
            GridKind::King => {
                let mut out = Vec::with_capacity(8);
                for dx in -1..=1 {
                    for dy in -1..=1 {
                        if dx != 0 || dy != 0 {
                            out.push(vec![dx, dy]);
                        }
                    }
                }
                out
            }
            GridKind::Lattice(n) => {
                let mut out = Vec::with_capacity(2 * n);
                for i in 0..n {
                    for s in [-1, 1] {
                        let mut d = vec![0; n];
                        d[i] = s;
                        out.push(d);
                    }
                }
                out.sort();
                out
            }
        }
    }

    /// Adjacent vertices, sorted lexicographically.
    pub fn neighbors(&self, v: &Vertex) -> Result<Vec<Vertex>> {
        self.check_dim(v.coords())?;
        let mut out: Vec<Vertex> = self
            .neighbor_offsets(v.coords())
            .iter()
            .map(|d| v.offset(d))
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn are_adjacent(&self, u: &[i64], v: &[i64]) -> bool {
        let delta: Vec<i64> = v.iter().zip(u).map(|(a, b)| a - b).collect();
        self.neighbor_offsets(u).contains(&delta)
    }

    /// Graph distance between two vertices.
    pub fn distance(&self, u: &Vertex, v: &Vertex) -> Result<u64> {
        self.check_dim(u.coords())?;
        self.check_dim(v.coords())?;
        let d = v.sub(u);
        Ok(match *self {
            GridKind::Square | GridKind::Lattice(_) => d.iter().map(|x| x.unsigned_abs()).sum(),
            GridKind::King => d.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0),
            GridKind::Triangular => {
                let (dx, dy) = (d[0], d[1]);
                if dx.signum() * dy.signum() >= 0 {
                    dx.unsigned_abs().max(dy.unsigned_abs())
                } else {
                    dx.unsigned_abs() + dy.unsigned_abs()
                }
            }
            GridKind::Hex => {
                let (dx, dy) = (d[0], d[1]);
                if dx.abs() >= dy.abs() {
                    dx.unsigned_abs() + dy.unsigned_abs()
                } else {
                    hex_bfs_distance(self.class_of(u.coords()), dx, dy)
                }
            }
        })
    }

    /// Offsets of `B_r(rep)` relative to the class representative, sorted
    /// lexicographically. Computed by breadth-first layers and cached.
    pub fn ball_offsets(&self, class: usize, r: u32) -> Arc<Vec<Vec<i64>>> {
        let key = (*self, class, r);
        if let Some(hit) = ball_cache().lock().unwrap().get(&key) {
            return Arc::clone(hit);
        }
        let rep = self.class_representative(class);
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        seen.insert(rep.clone());
        let mut frontier = vec![rep.clone()];
        for _ in 0..r {
            let mut next = Vec::new();
            for p in &frontier {
                for d in self.neighbor_offsets(p) {
                    let q: Vec<i64> = p.iter().zip(&d).map(|(a, b)| a + b).collect();
                    if seen.insert(q.clone()) {
                        next.push(q);
                    }
                }
            }
            frontier = next;
        }
        let mut offsets: Vec<Vec<i64>> = seen
            .into_iter()
            .map(|p| p.iter().zip(&rep).map(|(a, b)| a - b).collect())
            .collect();
        offsets.sort();
        let offsets = Arc::new(offsets);
        ball_cache()
            .lock()
            .unwrap()
            .insert(key, Arc::clone(&offsets));
        offsets
    }

    /// All vertices within distance `r` of `v`, sorted lexicographically.
    pub fn ball(&self, v: &Vertex, r: u32) -> Result<Vec<Vertex>> {
        self.check_dim(v.coords())?;
        check_radius(r)?;
        let offsets = self.ball_offsets(self.class_of(v.coords()), r);
        Ok(offsets.iter().map(|d| v.offset(d)).collect())
    }

    /// `|B_r(v)|`, identical for every vertex.
    pub fn ball_size(&self, r: u32) -> u64 {
        let r = r as u64;
        match *self {
            GridKind::Square => 2 * r * r + 2 * r + 1,
            GridKind::Triangular => 3 * r * r + 3 * r + 1,
            GridKind::King => (2 * r + 1) * (2 * r + 1),
            GridKind::Hex => {
                let m = r / 2;
                if r % 2 == 0 {
                    6 * m * m + 3 * m + 1
                } else {
                    6 * m * m + 9 * m + 4
                }
            }
            GridKind::Lattice(n) => lattice_ball_sizes(n, r as u32)[r as usize] as u64,
        }
    }

    /// `b_{r+1} - b_{r-1}`, the number of vertices whose membership can differ
    /// between the radius-`r` balls of two adjacent vertices.
    pub fn annulus_size(&self, r: u32) -> u64 {
        assert!(r >= 1, "annulus is defined for r >= 1");
        self.ball_size(r + 1) - self.ball_size(r - 1)
    }
}

/// Ball sizes `b_0..=b_r` in `L_n` via `b^{(n+1)}_r = 2 * sum_{k<=r} b^{(n)}_k - b^{(n)}_r`,
/// starting from `b^{(1)}_r = 2r + 1`.
pub fn lattice_ball_sizes(n: usize, r: u32) -> Vec<u128> {
    let mut sizes: Vec<u128> = (0..=r as u128).map(|k| 2 * k + 1).collect();
    for _ in 1..n {
        let mut prefix = 0u128;
        sizes = sizes
            .iter()
            .map(|&b| {
                prefix += b;
                2 * prefix - b
            })
            .collect();
    }
    sizes
}

fn hex_bfs_distance(class: usize, dx: i64, dy: i64) -> u64 {
    if let Some(&d) = hex_distance_cache().lock().unwrap().get(&(class, dx, dy)) {
        return d;
    }
    let grid = GridKind::Hex;
    let start = grid.class_representative(class);
    let target = vec![start[0] + dx, start[1] + dy];
    let bound = (dx.unsigned_abs() + 2 * dy.unsigned_abs() + 2) as u64;
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    let mut dist = 0u64;
    let found = loop {
        if frontier.iter().any(|p| *p == target) {
            break dist;
        }
        assert!(dist <= bound, "hex BFS exceeded its distance bound");
        let mut next = Vec::new();
        for p in &frontier {
            for d in grid.neighbor_offsets(p) {
                let q = vec![p[0] + d[0], p[1] + d[1]];
                if seen.insert(q.clone()) {
                    next.push(q);
                }
            }
        }
        frontier = next;
        dist += 1;
    };
    hex_distance_cache()
        .lock()
        .unwrap()
        .insert((class, dx, dy), found);
    found
}

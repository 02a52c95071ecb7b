use rayon::prelude::*;

use crate::bounds::binomial;
use crate::error::{Error, Result};
use crate::grid::{check_radius, GridKind, Vertex};
use crate::model::code::PeriodicCode;
use crate::model::lattice::PeriodLattice;
use crate::verifier::verify_periodic;

pub const MAX_TILE_CELLS: usize = 128;
pub const MAX_COMBINATIONS: u128 = 100_000_000;
const BATCH: usize = 1 << 16;

/// A verified code found by [`search_periodic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicHit {
    pub code: PeriodicCode,
    pub tile: (i64, i64),
    /// Placements examined up to and including the hit.
    pub examined: u64,
}

/// The tile schedule used for the 2/9 king-grid target.
pub fn king_schedule() -> Vec<((i64, i64), usize)> {
    vec![((3, 3), 2), ((3, 6), 4), ((6, 6), 8)]
}

/// Constraint masks over the cells of the `w × h` torus: a placement is an
/// `r`-identifying code iff it meets every mask. One mask per ball (nonempty
/// identifying sets) and one per nearby pair `u, v` holding the residues of
/// `B_r(u) Δ B_r(v)` (the pair is separated iff a codeword lies there).
fn constraint_masks(grid: GridKind, r: u32, lattice: &PeriodLattice) -> Vec<u128> {
    let mut masks = Vec::new();
    let bit = |p: &[i64]| -> u128 { 1u128 << lattice.residue_index(&lattice.residue(p)) };
    let absolute = |u: &[i64], radius: u32| -> Vec<Vec<i64>> {
        grid.ball_offsets(grid.class_of(u), radius)
            .iter()
            .map(|o| vec![u[0] + o[0], u[1] + o[1]])
            .collect()
    };
    for u in lattice.residues() {
        let bu = absolute(&u, r);
        masks.push(bu.iter().fold(0, |m, p| m | bit(p)));
        for v in absolute(&u, 2 * r) {
            if v <= u {
                continue;
            }
            let bv = absolute(&v, r);
            let only_u = bu.iter().filter(|p| bv.binary_search(p).is_err());
            let only_v = bv.iter().filter(|p| bu.binary_search(p).is_err());
            masks.push(only_u.chain(only_v).fold(0, |m, p| m | bit(p)));
        }
    }
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut kept: Vec<u128> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&k| k & m == k) {
            kept.push(m);
        }
    }
    kept
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 1 && idx[i - 1] == n - k + i - 1 {
        i -= 1;
    }
    // the first entry is fixed by the caller
    if i <= 1 {
        return false;
    }
    idx[i - 1] += 1;
    for j in i..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// Exhaustive search for an `r`-identifying code with `count` codewords per
/// `w × h` tile (period `diag(w, h)`).
///
/// Placements are enumerated in lexicographic order of their sorted cell
/// indices (`x·h + y`). A translation moves some codeword to the first
/// cell, so only placements containing cell 0 are tried; on the hex grid
/// only even translations are symmetries and placements starting at cell 1
/// are tried too. The first verified placement is returned.
pub fn search_periodic(grid: GridKind, r: u32, tile: (i64, i64), count: usize) -> Result<Option<PeriodicHit>> {
    grid.validate()?;
    check_radius(r)?;
    if r == 0 {
        return Err(Error::Parameter("radius must be at least 1".into()));
    }
    if grid.dimension() != 2 {
        return Err(Error::Parameter(format!("periodic search needs a planar grid, got {grid}")));
    }
    let (w, h) = tile;
    if w < 1 || h < 1 {
        return Err(Error::Parameter(format!("tile {w}x{h} must have positive sides")));
    }
    let area = (w * h) as usize;
    if area > MAX_TILE_CELLS {
        return Err(Error::CapExceeded {
            what: "tile cells",
            size: area as u128,
            cap: MAX_TILE_CELLS as u128,
        });
    }
    let period = vec![vec![w, 0], vec![0, h]];
    for col in &period {
        if !grid.is_translation_automorphism(col) {
            return Err(Error::PeriodNotAutomorphism(col.clone()));
        }
    }
    if count == 0 || count > area {
        return Ok(None);
    }
    let firsts: Vec<usize> = if grid == GridKind::Hex { vec![0, 1] } else { vec![0] };
    let total: u128 = firsts
        .iter()
        .filter(|&&f| f < area)
        .map(|&f| binomial((area - 1 - f) as u64, count as u64 - 1) as u128)
        .sum();
    if total > MAX_COMBINATIONS {
        return Err(Error::CapExceeded {
            what: "tile placements",
            size: total,
            cap: MAX_COMBINATIONS,
        });
    }
    let lattice = PeriodLattice::from_columns(&period)?;
    let masks = constraint_masks(grid, r, &lattice);
    let hits_all = |idx: &[usize]| {
        let code = idx.iter().fold(0u128, |m, &i| m | 1 << i);
        masks.iter().all(|&m| m & code != 0)
    };

    let mut examined = 0u64;
    for &first in &firsts {
        if first + count > area {
            continue;
        }
        let mut idx: Vec<usize> = (first..first + count).collect();
        let mut more = true;
        while more {
            let mut batch = Vec::with_capacity(BATCH);
            while more && batch.len() < BATCH {
                batch.push(idx.clone());
                more = next_combination(&mut idx, area);
            }
            let found = batch.par_iter().position_first(|c| hits_all(c));
            match found {
                None => examined += batch.len() as u64,
                Some(pos) => {
                    examined += pos as u64 + 1;
                    let words: Vec<Vertex> =
                        batch[pos].iter().map(|&i| Vertex(lattice.residue_at(i))).collect();
                    let code = PeriodicCode::new(grid, &period, &words)?;
                    if !verify_periodic(&code, r)?.is_identifying() {
                        return Err(Error::NotIdentifying { r });
                    }
                    return Ok(Some(PeriodicHit { code, tile, examined }));
                }
            }
        }
    }
    Ok(None)
}

/// Runs [`search_periodic`] over a schedule of `(tile, count)` pairs and
/// stops at the first success. Also returns the attempts made.
pub fn search_schedule(
    grid: GridKind,
    r: u32,
    schedule: &[((i64, i64), usize)],
) -> Result<(Option<PeriodicHit>, Vec<((i64, i64), usize, bool)>)> {
    let mut log = Vec::new();
    for &(tile, count) in schedule {
        let hit = search_periodic(grid, r, tile, count)?;
        log.push((tile, count, hit.is_some()));
        if hit.is_some() {
            return Ok((hit, log));
        }
    }
    Ok((None, log))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::rational::ratio;

    #[test]
    fn masks_agree_with_verifier() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for grid in [GridKind::Square, GridKind::Hex, GridKind::King, GridKind::Triangular] {
            let (w, h) = (4, 6);
            let period = vec![vec![w, 0], vec![0, h]];
            let lattice = PeriodLattice::from_columns(&period).unwrap();
            for r in 1..=2 {
                let masks = constraint_masks(grid, r, &lattice);
                for _ in 0..40 {
                    let code: u128 = rng.gen::<u128>() & ((1 << 24) - 1);
                    let words: Vec<Vertex> = (0..24)
                        .filter(|i| code >> i & 1 == 1)
                        .map(|i| Vertex(lattice.residue_at(i)))
                        .collect();
                    let c = PeriodicCode::new(grid, &period, &words).unwrap();
                    let fast = masks.iter().all(|&m| m & code != 0);
                    assert_eq!(fast, verify_periodic(&c, r).unwrap().is_identifying(), "{grid} r={r}");
                }
            }
        }
    }

    #[test]
    fn combinations_keep_first() {
        let mut idx = vec![0, 1, 2];
        let mut seen = 1;
        while next_combination(&mut idx, 5) {
            assert_eq!(idx[0], 0);
            seen += 1;
        }
        assert_eq!(seen, 6);
    }

    #[test]
    fn empty_count() {
        assert_eq!(search_periodic(GridKind::Square, 1, (4, 4), 0).unwrap(), None);
    }

    #[test]
    fn hex_tiles_must_be_even() {
        assert!(matches!(
            search_periodic(GridKind::Hex, 1, (3, 2), 2),
            Err(Error::PeriodNotAutomorphism(_))
        ));
    }

    #[test]
    fn square_full_rows() {
        // with 2 of every 2 cells in a 1x2 tile the code is everything
        let hit = search_periodic(GridKind::Square, 1, (1, 2), 2).unwrap().unwrap();
        assert_eq!(hit.code.density(), ratio(1, 1));
    }
}

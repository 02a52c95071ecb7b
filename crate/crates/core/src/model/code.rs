use crate::error::{Error, Result};
use crate::grid::{GridKind, Vertex};
use crate::model::lattice::PeriodLattice;
use crate::model::rational::{ratio, Rational};

/// Residue tables larger than this are refused.
pub const MAX_PERIOD_CELLS: u64 = 10_000_000;

/// An infinite code given by a period lattice and the codewords of one
/// fundamental domain. Always canonical: `base` holds sorted, distinct
/// residues of the Hermite-normal-form box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicCode {
    grid: GridKind,
    lattice: PeriodLattice,
    base: Vec<Vertex>,
    table: Vec<bool>,
}

/// Reduces `codewords` modulo the lattice spanned by `period` (columns) and
/// validates the code against `grid`.
pub fn canonicalize(grid: GridKind, period: &[Vec<i64>], codewords: &[Vertex]) -> Result<PeriodicCode> {
    PeriodicCode::new(grid, period, codewords)
}

impl PeriodicCode {
    pub fn new(grid: GridKind, period: &[Vec<i64>], codewords: &[Vertex]) -> Result<Self> {
        grid.validate()?;
        let n = grid.dimension();
        if period.len() != n || period.iter().any(|c| c.len() != n) {
            return Err(Error::PeriodShape { expected: n });
        }
        let lattice = PeriodLattice::from_columns(period)?;
        Self::from_lattice(grid, lattice, codewords)
    }

    pub fn from_lattice(grid: GridKind, lattice: PeriodLattice, codewords: &[Vertex]) -> Result<Self> {
        for col in lattice.columns() {
            if !grid.is_translation_automorphism(col) {
                return Err(Error::PeriodNotAutomorphism(col.clone()));
            }
        }
        if lattice.det() > MAX_PERIOD_CELLS {
            return Err(Error::CapExceeded {
                what: "fundamental domain size",
                size: lattice.det() as u128,
                cap: MAX_PERIOD_CELLS as u128,
            });
        }
        let mut table = vec![false; lattice.det() as usize];
        for c in codewords {
            grid.check_dim(c.coords())?;
            let res = lattice.residue(c.coords());
            table[lattice.residue_index(&res)] = true;
        }
        let base = table
            .iter()
            .enumerate()
            .filter(|(_, &on)| on)
            .map(|(i, _)| Vertex(lattice.residue_at(i)))
            .collect();
        Ok(PeriodicCode {
            grid,
            lattice,
            base,
            table,
        })
    }

    /// Returns the canonical form. Codes are stored canonically, so this is a
    /// clone; it exists for symmetry with [`canonicalize`].
    pub fn canonicalize(&self) -> PeriodicCode {
        self.clone()
    }

    pub fn grid(&self) -> GridKind {
        self.grid
    }

    pub fn lattice(&self) -> &PeriodLattice {
        &self.lattice
    }

    pub fn period(&self) -> &[Vec<i64>] {
        self.lattice.columns()
    }

    pub fn base(&self) -> &[Vertex] {
        &self.base
    }

    pub fn domain_size(&self) -> u64 {
        self.lattice.det()
    }

    pub fn member(&self, v: &Vertex) -> Result<bool> {
        self.grid.check_dim(v.coords())?;
        Ok(self.member_coords(v.coords()))
    }

    pub(crate) fn member_coords(&self, v: &[i64]) -> bool {
        let res = self.lattice.residue(v);
        self.table[self.lattice.residue_index(&res)]
    }

    pub(crate) fn member_residue_index(&self, idx: usize) -> bool {
        self.table[idx]
    }

    pub fn density(&self) -> Rational {
        ratio(self.base.len() as i128, self.lattice.det() as i128)
    }

    /// Codewords inside `Q_m = [-m, m]^n`, lexicographically sorted.
    pub fn codewords_in_window(&self, m: i64) -> Vec<Vertex> {
        window_points(self.grid.dimension(), m)
            .filter(|p| self.member_coords(p))
            .map(Vertex)
            .collect()
    }
}

/// Lexicographic enumeration of `[-m, m]^dim`.
pub fn window_points(dim: usize, m: i64) -> impl Iterator<Item = Vec<i64>> {
    let side = (2 * m + 1) as u64;
    let total = side.pow(dim as u32);
    (0..total).map(move |mut idx| {
        let mut p = vec![0i64; dim];
        for i in (0..dim).rev() {
            p[i] = (idx % side) as i64 - m;
            idx /= side;
        }
        p
    })
}

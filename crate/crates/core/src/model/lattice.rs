//! Full-rank sublattices of `Z^n` in column-style Hermite normal form.
//!
//! The basis is lower triangular with positive diagonal `h_ii` and
//! `0 <= h_ij < h_ii` below the diagonal. Every integer vector has exactly one
//! residue in the box `prod [0, h_ii)`, found by reducing coordinates in
//! order.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodLattice {
    /// `basis[j]` is the j-th column; `basis[j][i] == 0` for `i < j`.
    basis: Vec<Vec<i64>>,
    det: u64,
}

impl PeriodLattice {
    /// Builds the lattice spanned by `columns` (each of length `n`, `n` columns).
    pub fn from_columns(columns: &[Vec<i64>]) -> Result<Self> {
        let n = columns.len();
        if n == 0 || columns.iter().any(|c| c.len() != n) {
            return Err(Error::PeriodShape { expected: n.max(1) });
        }
        // a[row][col]
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|i| columns.iter().map(|c| c[i] as i128).collect())
            .collect();
        let col_sub = |a: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| {
            for row in a.iter_mut() {
                row[dst] -= q * row[src];
            }
        };
        let col_swap = |a: &mut Vec<Vec<i128>>, x: usize, y: usize| {
            for row in a.iter_mut() {
                row.swap(x, y);
            }
        };
        for i in 0..n {
            for j in i + 1..n {
                while a[i][j] != 0 {
                    let q = a[i][i] / a[i][j];
                    col_sub(&mut a, i, j, q);
                    col_swap(&mut a, i, j);
                }
            }
            if a[i][i] == 0 {
                return Err(Error::SingularPeriod);
            }
            if a[i][i] < 0 {
                for row in a.iter_mut() {
                    row[i] = -row[i];
                }
            }
        }
        for i in 1..n {
            for j in 0..i {
                let q = a[i][j].div_euclid(a[i][i]);
                if q != 0 {
                    col_sub(&mut a, j, i, q);
                }
            }
        }
        let det: i128 = (0..n).map(|i| a[i][i]).product();
        let to_i64 = |x: i128| {
            i64::try_from(x).map_err(|_| Error::CapExceeded {
                what: "period entry",
                size: x.unsigned_abs(),
                cap: i64::MAX as u128,
            })
        };
        let basis = (0..n)
            .map(|j| (0..n).map(|i| to_i64(a[i][j])).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let det = u64::try_from(det).map_err(|_| Error::CapExceeded {
            what: "period determinant",
            size: det.unsigned_abs(),
            cap: u64::MAX as u128,
        })?;
        Ok(PeriodLattice { basis, det })
    }

    pub fn diagonal(n: usize, periods: &[i64]) -> Result<Self> {
        assert_eq!(periods.len(), n);
        let cols: Vec<Vec<i64>> = (0..n)
            .map(|j| {
                let mut c = vec![0; n];
                c[j] = periods[j];
                c
            })
            .collect();
        Self::from_columns(&cols)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// |det|, the number of residues.
    pub fn det(&self) -> u64 {
        self.det
    }

    pub fn box_sides(&self) -> Vec<i64> {
        (0..self.dim()).map(|i| self.basis[i][i]).collect()
    }

    /// Reduces `v` in place to its canonical residue and returns the lattice
    /// vector that was subtracted.
    pub fn reduce_in_place(&self, v: &mut [i64]) -> Vec<i64> {
        let n = self.dim();
        let mut shift = vec![0i64; n];
        for j in 0..n {
            let q = v[j].div_euclid(self.basis[j][j]);
            if q != 0 {
                for i in j..n {
                    let d = q * self.basis[j][i];
                    v[i] -= d;
                    shift[i] += d;
                }
            }
        }
        shift
    }

    pub fn residue(&self, v: &[i64]) -> Vec<i64> {
        let mut out = v.to_vec();
        self.reduce_in_place(&mut out);
        out
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.residue(v).iter().all(|&x| x == 0)
    }

    /// Mixed-radix index of a canonical residue; agrees with lexicographic order.
    pub fn residue_index(&self, res: &[i64]) -> usize {
        let mut idx = 0usize;
        for (i, &x) in res.iter().enumerate() {
            idx = idx * self.basis[i][i] as usize + x as usize;
        }
        idx
    }

    pub fn residue_at(&self, mut idx: usize) -> Vec<i64> {
        let n = self.dim();
        let mut out = vec![0; n];
        for i in (0..n).rev() {
            let side = self.basis[i][i] as usize;
            out[i] = (idx % side) as i64;
            idx /= side;
        }
        out
    }

    /// All canonical residues in lexicographic order.
    pub fn residues(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        (0..self.det as usize).map(move |i| self.residue_at(i))
    }
}

//! Codes on `L_n`: dominating-set tilings, dimension lifts, the king lift and
//! the scaled parity construction.

use crate::error::{Error, Result};
use crate::grid::{GridKind, Vertex};
use crate::model::code::PeriodicCode;
use crate::model::graph::{hypercube, hypercube_index, hypercube_label};
use crate::verifier::{first_undominated, verify_periodic};

/// Codewords of the Hamming code of length `2^k - 1`: bit vectors whose set
/// positions (numbered from 1) XOR to zero.
pub fn hamming_dominating_set(k: u32) -> Result<Vec<Vertex>> {
    if !(2..=5).contains(&k) {
        return Err(Error::Parameter(format!("hamming parameter k = {k} outside 2..=5")));
    }
    let n = (1usize << k) - 1;
    Ok((0..1usize << n)
        .map(|v| hypercube_label(n, v))
        .filter(|x| {
            x.coords()
                .iter()
                .enumerate()
                .filter(|(_, &b)| b == 1)
                .fold(0, |acc, (j, _)| acc ^ (j + 1))
                == 0
        })
        .collect())
}

/// Tiles `L_n` with copies of a dominating set `D` of `H_n` on the lattice
/// `2Z^n`.
pub fn dominating_code(n: usize, d: &[Vertex]) -> Result<PeriodicCode> {
    let cube = hypercube(n)?;
    let mut idx = Vec::with_capacity(d.len());
    for v in d {
        if v.dim() != n || v.coords().iter().any(|&b| b != 0 && b != 1) {
            return Err(Error::Parameter(format!("{v} is not a vertex of H_{n}")));
        }
        idx.push(hypercube_index(v));
    }
    if let Some(u) = first_undominated(&cube, &idx) {
        return Err(Error::NotDominating(u));
    }
    let period = diagonal(&vec![2; n]);
    PeriodicCode::new(GridKind::Lattice(n), &period, d)
}

fn diagonal(entries: &[i64]) -> Vec<Vec<i64>> {
    (0..entries.len())
        .map(|j| {
            let mut c = vec![0; entries.len()];
            c[j] = entries[j];
            c
        })
        .collect()
}

fn require_identifying(code: &PeriodicCode, r: u32) -> Result<()> {
    if verify_periodic(code, r)?.is_identifying() {
        Ok(())
    } else {
        Err(Error::NotIdentifying { r })
    }
}

/// `C' = C × Z` on `L_{n+1}`. The input must be `r`-identifying on `L_n`
/// (the square grid counts as `L_2`).
pub fn lift_dimension(code: &PeriodicCode, r: u32) -> Result<PeriodicCode> {
    let n = match code.grid() {
        GridKind::Lattice(n) => n,
        GridKind::Square => 2,
        g => return Err(Error::Parameter(format!("dimension lift needs a lattice code, got {g}"))),
    };
    require_identifying(code, r)?;
    let mut period: Vec<Vec<i64>> = code
        .period()
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.push(0);
            c
        })
        .collect();
    let mut unit = vec![0; n + 1];
    unit[n] = 1;
    period.push(unit);
    let base: Vec<Vertex> = code
        .base()
        .iter()
        .map(|c| {
            let mut p = c.coords().to_vec();
            p.push(0);
            Vertex(p)
        })
        .collect();
    PeriodicCode::new(GridKind::Lattice(n + 1), &period, &base)
}

/// Copies a 1-identifying king-grid code into `L_4`, shifting by `(1,1)` per
/// step in `x_3` and `(1,-1)` per step in `x_4`.
pub fn lift_king_to_lattice4(code: &PeriodicCode) -> Result<PeriodicCode> {
    if code.grid() != GridKind::King {
        return Err(Error::Parameter(format!("king lift needs a king code, got {}", code.grid())));
    }
    require_identifying(code, 1)?;
    let mut period: Vec<Vec<i64>> = code
        .period()
        .iter()
        .map(|c| vec![c[0], c[1], 0, 0])
        .collect();
    period.push(vec![1, 1, 1, 0]);
    period.push(vec![1, -1, 0, 1]);
    let base: Vec<Vertex> = code
        .base()
        .iter()
        .map(|c| Vertex::new(vec![c.coords()[0], c.coords()[1], 0, 0]))
        .collect();
    PeriodicCode::new(GridKind::Lattice(4), &period, &base)
}

/// Choice of the scale `k` in [`lattice_r_code`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KVariant {
    /// `k = 2r₀/(n+1)`.
    PaperK,
    /// `k = 2r₀/(n+2)`, the value that balances `nk/2 + k = r₀`.
    AltK,
}

impl KVariant {
    pub fn scale(self, n: usize, r0: u32) -> Result<i64> {
        let div = match self {
            KVariant::PaperK => n as i64 + 1,
            KVariant::AltK => n as i64 + 2,
        };
        let twice = 2 * r0 as i64;
        if twice % div != 0 {
            return Err(Error::Parameter(format!(
                "{self:?} needs {div} to divide 2r0 = {twice}"
            )));
        }
        Ok(twice / div)
    }
}

impl std::fmt::Display for KVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            KVariant::PaperK => "paper-k",
            KVariant::AltK => "alt-k",
        })
    }
}

impl std::str::FromStr for KVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "paper-k" | "paperk" | "paper" => Ok(KVariant::PaperK),
            "alt-k" | "altk" | "alt" => Ok(KVariant::AltK),
            _ => Err(Error::Parameter(format!("unknown k variant {s:?}"))),
        }
    }
}

/// `{(k x_1, ..., k x_{n-1}, l) : x_1 + ... + x_{n-1} odd}` on `L_n`.
/// Not verified here: whether the result is `r₀`-identifying is exactly what
/// callers want to find out.
pub fn lattice_r_code(n: usize, r0: u32, variant: KVariant) -> Result<PeriodicCode> {
    if n < 2 {
        return Err(Error::Parameter(format!("dimension n = {n} must be at least 2")));
    }
    if r0 < 1 {
        return Err(Error::Parameter("r0 must be at least 1".into()));
    }
    let grid = GridKind::Lattice(n);
    grid.validate()?;
    let k = variant.scale(n, r0)?;
    let mut periods = vec![2 * k; n - 1];
    periods.push(1);
    let base: Vec<Vertex> = (0..1usize << (n - 1))
        .filter(|x| x.count_ones() % 2 == 1)
        .map(|x| {
            let mut p: Vec<i64> = (0..n - 1).map(|j| k * ((x >> j) & 1) as i64).collect();
            p.push(0);
            Vertex(p)
        })
        .collect();
    PeriodicCode::new(grid, &diagonal(&periods), &base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::rational::ratio;

    fn bits(s: &str) -> Vertex {
        Vertex::new(s.bytes().map(|b| (b - b'0') as i64).collect::<Vec<_>>())
    }

    #[test]
    fn hamming_sets() {
        assert_eq!(hamming_dominating_set(2).unwrap(), vec![bits("000"), bits("111")]);
        assert_eq!(hamming_dominating_set(3).unwrap().len(), 16);
        assert_eq!(hamming_dominating_set(4).unwrap().len(), 2048);
        assert!(hamming_dominating_set(1).is_err());
    }

    #[test]
    fn hamming_is_perfect() {
        let cube = hypercube(3).unwrap();
        let d: Vec<usize> = hamming_dominating_set(2)
            .unwrap()
            .iter()
            .map(hypercube_index)
            .collect();
        for v in 0..8 {
            let covers = d
                .iter()
                .filter(|&&c| c == v || cube.has_edge(c, v))
                .count();
            assert_eq!(covers, 1);
        }
    }

    #[test]
    fn dominating_tilings() {
        let c = dominating_code(3, &[bits("000"), bits("111")]).unwrap();
        assert_eq!(c.density(), ratio(1, 4));
        assert!(verify_periodic(&c, 1).unwrap().is_identifying());
        let c = dominating_code(1, &[bits("0")]).unwrap();
        assert_eq!(c.density(), ratio(1, 2));
        assert!(verify_periodic(&c, 1).unwrap().is_identifying());
        assert_eq!(
            dominating_code(3, &[bits("000")]).unwrap_err(),
            Error::NotDominating(3)
        );
    }

    #[test]
    fn lifts_preserve_density() {
        let c = dominating_code(3, &[bits("000"), bits("111")]).unwrap();
        let l4 = lift_dimension(&c, 1).unwrap();
        assert_eq!(l4.grid(), GridKind::Lattice(4));
        assert_eq!(l4.density(), c.density());
        assert!(verify_periodic(&l4, 1).unwrap().is_identifying());
    }

    #[test]
    fn lift_rejects_bad_input() {
        let sparse = PeriodicCode::new(
            GridKind::Lattice(2),
            &diagonal(&[5, 5]),
            &[Vertex::new(vec![0, 0])],
        )
        .unwrap();
        assert_eq!(lift_dimension(&sparse, 1).unwrap_err(), Error::NotIdentifying { r: 1 });
    }

    #[test]
    fn parity_code_shapes() {
        let c = lattice_r_code(2, 3, KVariant::PaperK).unwrap();
        assert_eq!(c.period(), &[vec![4, 0], vec![0, 1]]);
        assert_eq!(c.base(), &[Vertex::new(vec![2, 0])]);
        assert_eq!(c.density(), ratio(1, 4));
        let c = lattice_r_code(3, 4, KVariant::PaperK).unwrap();
        // (n+1)^(n-1) / (2^n r0^(n-1)) = 16/128
        assert_eq!(c.density(), ratio(1, 8));
        assert!(lattice_r_code(2, 3, KVariant::AltK).is_err());
        assert_eq!(lattice_r_code(2, 6, KVariant::AltK).unwrap().density(), ratio(1, 6));
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("paper-k".parse::<KVariant>().unwrap(), KVariant::PaperK);
        assert_eq!("AltK".parse::<KVariant>().unwrap(), KVariant::AltK);
        assert!("k".parse::<KVariant>().is_err());
    }
}

//! Lower-bound formulas, evaluated exactly, and the reference table of known
//! values.

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::constructions::{hex_density_counted, hex_density_even};
use crate::grid::{lattice_ball_sizes, GridKind};
use crate::model::rational::{fraction, integer, ratio, Rational};

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// `2 / (b_r + 1)`: every vertex is identified by one codeword at most once,
/// by two or more otherwise.
pub fn trivial_lower(grid: GridKind, r: u32) -> Rational {
    ratio(2, grid.ball_size(r) as i128 + 1)
}

/// `6 / (2 b_r + 4 + k)` when every codeword takes part in at most `k` pairs
/// (or `k` on average).
pub fn pair_lower(grid: GridKind, r: u32, k: u64) -> Rational {
    ratio(6, 2 * grid.ball_size(r) as i128 + 4 + k as i128)
}

/// `2n / (b_r + 1)` for a finite graph of order `n` whose balls have at most
/// `b_r` vertices.
pub fn karpov_finite_lower(n: u64, b_r: u64) -> Rational {
    ratio(2 * n as i128, b_r as i128 + 1)
}

/// `⌈log₂(nv + 1)⌉`: the least `t` with `2^t - 1 >= nv`.
pub fn log_lower(nv: u64) -> u32 {
    let mut t = 0u32;
    while t < 64 && (1u128 << t) - 1 < nv as u128 {
        t += 1;
    }
    t
}

/// `⌈log₂(2n+1)⌉ / (b_{r+1} - b_{r-1})` on `L_n`.
pub fn lattice_lower(n: usize, r: u32) -> Rational {
    let sizes = lattice_ball_sizes(n, r + 1);
    let annulus = sizes[r as usize + 1] - sizes[r as usize - 1];
    ratio(log_lower(2 * n as u64) as i128, annulus as i128)
}

/// `5 / (6r + 3)` for `(r, <= 2)`-identifying codes on the hex grid.
pub fn hex_ell2_lower(r: u32) -> Rational {
    ratio(5, 6 * r as i128 + 3)
}

/// `f(n,k,s) = Σ_{i=1}^s i C(k,i) + (s+1)(n - Σ_{i=1}^s C(k,i))`.
pub fn f_value(n: u64, k: u64, s: u64) -> i128 {
    let (weighted, plain) = (1..=s).fold((0i128, 0i128), |(w, p), i| {
        let c = binomial(k, i) as i128;
        (w + i as i128 * c, p + c)
    });
    weighted + (s as i128 + 1) * (n as i128 - plain)
}

/// `(a + sqrt(disc)) / 2` with integer `a` and nonnegative `disc`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfSurd {
    pub a: i128,
    pub disc: u128,
}

impl HalfSurd {
    fn sqrt_exact(&self) -> Option<BigInt> {
        let d = BigInt::from(self.disc);
        let s = d.sqrt();
        (&s * &s == d).then_some(s)
    }

    pub fn exact(&self) -> Option<Rational> {
        self.sqrt_exact()
            .map(|s| Rational::new(BigInt::from(self.a) + s, BigInt::from(2)))
    }

    /// Largest multiple of `10^-6` not above the value.
    pub fn floor_micro(&self) -> Rational {
        let scale = BigInt::from(1_000_000);
        let root = (BigInt::from(self.disc) * &scale * &scale).sqrt();
        let num = (BigInt::from(self.a) * &scale + root).div_floor(&BigInt::from(2));
        Rational::new(num, scale)
    }

    /// Whether the surd is strictly greater than `q`.
    pub fn exceeds(&self, q: &Rational) -> bool {
        // (a + √D)/2 > q  ⇔  √D > 2q - a
        let rhs = q * integer(2) - integer(self.a);
        if rhs.is_negative() {
            return true;
        }
        integer(self.disc as i128) > &rhs * &rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularBound {
    /// `2n / (Δ+2)`.
    pub linear: Rational,
    /// `(-(2Δ+5) + sqrt((2Δ+5)² + 24n)) / 2`.
    pub radical: HalfSurd,
    pub radical_wins: bool,
}

impl RegularBound {
    /// The bound when it is rational.
    pub fn exact(&self) -> Option<Rational> {
        if self.radical_wins {
            self.radical.exact()
        } else {
            Some(self.linear.clone())
        }
    }

    /// A rational value never above the bound; equal to it when exact.
    pub fn certified_floor(&self) -> Rational {
        self.exact().unwrap_or_else(|| self.radical.floor_micro())
    }

    /// Smallest code size allowed by the bound.
    pub fn min_size(&self) -> BigInt {
        match self.exact() {
            Some(q) => q.ceil().to_integer(),
            None => self.radical.floor_micro().floor().to_integer() + 1,
        }
    }
}

impl std::fmt::Display for RegularBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.exact() {
            Some(q) => write!(f, "{}", fraction(&q)),
            None => write!(
                f,
                "({} + sqrt({}))/2 >= {}",
                self.radical.a,
                self.radical.disc,
                fraction(&self.radical.floor_micro())
            ),
        }
    }
}

/// Maximum of the two lower bounds for codes in graphs of order `n` and
/// maximum degree `Δ`.
pub fn regular_2bound(n: u64, delta: u64) -> RegularBound {
    let linear = ratio(2 * n as i128, delta as i128 + 2);
    let b = 2 * delta as i128 + 5;
    let radical = HalfSurd {
        a: -b,
        disc: (b * b + 24 * n as i128) as u128,
    };
    let radical_wins = radical.exceeds(&linear);
    RegularBound {
        linear,
        radical,
        radical_wins,
    }
}

/// One term of the `s`-bound, or `None` when its bracket is negative.
pub fn sbound_term(n: u64, delta: u64, s: u64) -> Option<Rational> {
    let n_q = integer(n as i128);
    let d1 = integer(delta as i128 + 1);
    let s1 = integer(s as i128 + 1);
    let fact: BigInt = (1..s).map(BigInt::from).product();
    let sub = Rational::from_integer(num::pow(s1.to_integer(), s as usize - 1))
        * num::pow(n_q.clone(), s as usize - 1)
        / (Rational::from_integer(fact) * num::pow(d1.clone(), s as usize));
    let bracket = Rational::one() - sub;
    if bracket.is_negative() {
        return None;
    }
    Some(s1 * n_q / d1 * bracket)
}

/// Maximum over `1 <= s <= Δ` of the `s`-bound terms, with the maximizing
/// `s` (the smallest one on ties). `(0, None)` when every bracket is
/// negative.
pub fn regular_sbound(n: u64, delta: u64) -> (Rational, Option<u64>) {
    let mut best = (Rational::zero(), None);
    for s in 1..=delta {
        match sbound_term(n, delta, s) {
            Some(t) => {
                if best.1.is_none() || t > best.0 {
                    best = (t, Some(s));
                }
            }
            // the subtracted term grows with s once n > Δ, so nothing later helps
            None if n > delta => break,
            None => {}
        }
    }
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    /// Evaluated by this crate.
    Computed,
    /// Literature constant, display only.
    Reference,
    /// Value as stated alongside the results being reproduced.
    Stated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub grid: String,
    pub r: u32,
    pub bound_name: String,
    pub value_num: i64,
    pub value_den: i64,
    pub kind: RowKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flag: Option<String>,
}

impl TableRow {
    pub fn value(&self) -> Rational {
        ratio(self.value_num as i128, self.value_den as i128)
    }
}

fn row(grid: &str, r: u32, name: &str, q: &Rational, kind: RowKind) -> TableRow {
    TableRow {
        grid: grid.into(),
        r,
        bound_name: name.into(),
        value_num: q.numer().to_i64().expect("table values are small"),
        value_den: q.denom().to_i64().expect("table values are small"),
        kind,
        source: None,
        flag: None,
    }
}

fn cited(mut row: TableRow, key: &str) -> TableRow {
    row.source = Some(key.into());
    row
}

fn flagged(mut row: TableRow, flag: &str) -> TableRow {
    row.flag = Some(flag.into());
    row
}

/// Known values.
#[derive(Clone, Debug, Serialize)]
pub struct KnownTable {
    pub rows: Vec<TableRow>,
    /// Statements that the crate does not check.
    pub unverified: Vec<String>,
}

pub const DOMINATING_SIZES: [u64; 8] = [1, 2, 2, 4, 7, 12, 16, 32];

pub fn known_table() -> KnownTable {
    use RowKind::*;
    let mut rows = Vec::new();
    let grids = [
        ("square", GridKind::Square),
        ("hex", GridKind::Hex),
        ("triangular", GridKind::Triangular),
        ("king", GridKind::King),
    ];
    for (name, g) in grids {
        rows.push(row(name, 1, "trivial_lower", &trivial_lower(g, 1), Computed));
    }

    // pair-counting bounds next to earlier lower bounds and best known codes
    let pair_rows = [
        ("hex", GridKind::Hex, 2, 6, (2, 11, "Karpovsky1998"), (4, 19, "Charon2002")),
        ("hex", GridKind::Hex, 3, 8, (2, 17, "Charon2001"), (1, 6, "Charon2002")),
        ("square", GridKind::Square, 2, 7, (3, 20, "Charon2001"), (5, 29, "Honkala2002")),
    ];
    for (name, g, r, k, prev, upper) in pair_rows {
        rows.push(row(name, r, &format!("pair_lower(k={k})"), &pair_lower(g, r, k), Computed));
        rows.push(cited(row(name, r, "previous_lower", &ratio(prev.0, prev.1), Reference), prev.2));
        rows.push(cited(row(name, r, "upper", &ratio(upper.0, upper.1), Reference), upper.2));
    }
    rows.push(cited(row("hex", 2, "exact", &ratio(4, 19), Reference), "JunnilaSubmitted"));
    rows.push(cited(row("square", 1, "exact", &ratio(7, 20), Reference), "Ben-Haim2005"));
    rows.push(cited(row("hex", 1, "lower", &ratio(5, 12), Reference), "CukiermanSubmitted"));
    rows.push(cited(row("hex", 1, "lower", &ratio(12, 29), Reference), "Cranston2009"));
    rows.push(cited(row("hex", 1, "upper", &ratio(3, 7), Reference), "Cohen2000"));

    for r in 1..=3 {
        rows.push(row("hex", r, "ell2_lower", &hex_ell2_lower(r), Computed));
    }

    // hex construction densities, counted from the tile
    let stated: [(u32, i128, i128); 5] =
        [(15, 1227, 22528), (16, 83, 1632), (18, 31, 684), (19, 387, 8960), (20, 103, 2520)];
    for r in 2..=21u32 {
        let counted = hex_density_counted(r).expect("radius in range");
        rows.push(row("hex", r, "construction_density", &counted, Computed));
        if r % 2 == 0 {
            debug_assert_eq!(counted, hex_density_even(r));
        }
        if let Some(&(_, num, den)) = stated.iter().find(|s| s.0 == r) {
            let q = ratio(num, den);
            let mut s = row("hex", r, "construction_density", &q, Stated);
            if q != counted {
                s = flagged(s, &format!("differs from the tile count {}", fraction(&counted)));
            }
            rows.push(s);
        }
    }
    let r = 7;
    rows.push(flagged(
        row(
            "hex",
            r,
            "odd_formula (5r^2+10r-3)/((6r-2)(r+1)^2)",
            &crate::constructions::hex_density_printed_odd(r),
            Stated,
        ),
        &format!(
            "tile count gives (5r^2+7r-2)/((6r-2)(r+1)^2) = {}",
            fraction(&hex_density_counted(r).expect("radius in range"))
        ),
    ));

    // L_n
    for (n, r) in [(3, 1), (3, 2), (4, 1), (4, 2)] {
        rows.push(row(&format!("lattice{n}"), r, "lattice_lower", &lattice_lower(n, r), Computed));
    }
    for r in [1u32, 2] {
        let rr = r as i128;
        let stated = ratio(15, 8 * (2 * rr * rr * rr + 5 * rr * rr + 5 * rr + 3));
        let computed = lattice_lower(4, r);
        let mut s = row("lattice4", r, "lattice_lower", &stated, Stated);
        if stated != computed {
            s = flagged(s, &format!("differs from the computed {}", fraction(&computed)));
        }
        rows.push(s);
    }
    for n in 1..=10usize {
        let name = format!("lattice{n}");
        rows.push(row(&name, 1, "lower 1/(n+1)", &ratio(1, n as i128 + 1), Computed));
        let upper = match n {
            2 => cited(row(&name, 1, "exact", &ratio(7, 20), Reference), "Ben-Haim2005"),
            4 => row(&name, 1, "upper (king lift)", &ratio(2, 9), Computed),
            9 => row(&name, 1, "upper (dominating <= 62)", &ratio(62, 512), Reference),
            10 => row(&name, 1, "upper (dominating <= 120)", &ratio(120, 1024), Reference),
            _ => row(
                &name,
                1,
                "upper (dominating)",
                &ratio(DOMINATING_SIZES[n - 1] as i128, 1 << n),
                Computed,
            ),
        };
        rows.push(upper);
    }
    for (i, &k) in DOMINATING_SIZES.iter().enumerate() {
        rows.push(cited(
            row(&format!("hypercube{}", i + 1), 1, "K(n,1)", &integer(k as i128), Reference),
            "Cohen1997",
        ));
    }

    KnownTable {
        rows,
        unverified: vec![
            "asymptotic upper bound (1 + b ln ln n / ln n)/(n+1) on L_n: constant b unspecified".into(),
            "hex r >= 15: construction improves on previous upper bounds (codes not verified by the test suite)"
                .into(),
            "lattice codes of density 1/8 on L_8 and the K(n,1) values for n = 7, 8: literature".into(),
        ],
    }
}

impl KnownTable {
    pub fn to_text(&self, decimal: bool) -> String {
        let mut out = String::new();
        let width = self.rows.iter().map(|r| r.bound_name.len()).max().unwrap_or(0);
        for row in &self.rows {
            let value = if decimal {
                crate::model::rational::decimal(&row.value(), 4)
            } else {
                fraction(&row.value())
            };
            out.push_str(&format!(
                "{:<12} r={:<3} {:<width$} {:>12}  {:<9}",
                row.grid,
                row.r,
                row.bound_name,
                value,
                format!("{:?}", row.kind).to_lowercase(),
            ));
            if let Some(src) = &row.source {
                out.push_str(&format!(" [{src}]"));
            }
            if let Some(flag) = &row.flag {
                out.push_str(&format!(" MISMATCH: {flag}"));
            }
            out.push('\n');
        }
        for note in &self.unverified {
            out.push_str(&format!("UNVERIFIED: {note}\n"));
        }
        out
    }
}

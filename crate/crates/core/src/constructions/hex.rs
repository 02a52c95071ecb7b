//! The hexagonal-grid code `C = C' ∪ C''` built from horizontal lines.
//!
//! `C'` keeps every line `y ≡ 0 (mod r+1)` except the residues
//! `1, 3, ..., r-1` (odd values below `r`) modulo `M`, where `M = 3r` for
//! even `r` and `3r - 1` for odd `r`. `C''` adds sparse points on the lines
//! `y ≡ ⌊(r+1)/2⌋ (mod 2(r+1))`: `x ≡ δ (mod r)` for even `r` with `δ` the
//! parity of the line index, `x ≡ 0 (mod r+1)` for odd `r`.

use num::integer::lcm;

use crate::error::{Error, Result};
use crate::grid::{GridKind, Vertex};
use crate::model::code::PeriodicCode;
use crate::model::rational::{ratio, Rational};

pub const HEX_MIN_RADIUS: u32 = 2;
pub const HEX_MAX_RADIUS: u32 = 32;

fn check(r: u32) -> Result<()> {
    if !(HEX_MIN_RADIUS..=HEX_MAX_RADIUS).contains(&r) {
        return Err(Error::Parameter(format!(
            "hex construction needs {HEX_MIN_RADIUS} <= r <= {HEX_MAX_RADIUS}, got {r}"
        )));
    }
    Ok(())
}

/// Horizontal and vertical periods `(P, 2(r+1))`.
pub fn hex_period(r: u32) -> Result<(i64, i64)> {
    check(r)?;
    let r = r as i64;
    let horizontal = if r % 2 == 0 { 3 * r } else { lcm(3 * r - 1, r + 1) };
    Ok((horizontal, 2 * (r + 1)))
}

fn in_c_prime(r: i64, x: i64, y: i64) -> bool {
    if y.rem_euclid(r + 1) != 0 {
        return false;
    }
    let modulus = if r % 2 == 0 { 3 * r } else { 3 * r - 1 };
    let res = x.rem_euclid(modulus);
    !(res % 2 == 1 && res < r)
}

fn in_c_second(r: i64, x: i64, y: i64) -> bool {
    let line = (r + 1) / 2;
    if (y - line).rem_euclid(2 * (r + 1)) != 0 {
        return false;
    }
    if r % 2 == 0 {
        let delta = y.rem_euclid(2);
        x.rem_euclid(r) == delta
    } else {
        x.rem_euclid(r + 1) == 0
    }
}

/// Whether `(x, y)` belongs to the code for radius `r` (no range check).
pub(crate) fn hex_member(r: u32, x: i64, y: i64) -> bool {
    let r = r as i64;
    in_c_prime(r, x, y) || in_c_second(r, x, y)
}

pub fn hex_code(r: u32) -> Result<PeriodicCode> {
    let (w, h) = hex_period(r)?;
    let mut base = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if hex_member(r, x, y) {
                base.push(Vertex::new(vec![x, y]));
            }
        }
    }
    PeriodicCode::new(GridKind::Hex, &[vec![w, 0], vec![0, h]], &base)
}

/// `(5r+3) / (6r(r+1))`, the even-radius density.
pub fn hex_density_even(r: u32) -> Rational {
    let r = r as i128;
    ratio(5 * r + 3, 6 * r * (r + 1))
}

/// Density obtained by counting codewords per tile, valid for any `r`:
/// two `C'` lines per `2(r+1)` rows, each missing `⌊r/2⌋` residues per `M`,
/// plus one `C''` line.
pub fn hex_density_counted(r: u32) -> Result<Rational> {
    check(r)?;
    let r = r as i128;
    let height = 2 * (r + 1);
    let modulus = if r % 2 == 0 { 3 * r } else { 3 * r - 1 };
    let prime = ratio(2 * (modulus - r / 2), modulus * height);
    let spacing = if r % 2 == 0 { r } else { r + 1 };
    Ok(prime + ratio(1, spacing * height))
}

/// The published odd-radius formula,
/// `(5r²+10r-3) / ((6r-2)(r+1)²)`. Kept for the discrepancy report only.
pub fn hex_density_printed_odd(r: u32) -> Rational {
    let r = r as i128;
    ratio(5 * r * r + 10 * r - 3, (6 * r - 2) * (r + 1) * (r + 1))
}

//! Exact rational values. Every density and bound is a [`Rational`];
//! decimals only appear when rendering.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn ratio(num: i128, den: i128) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i128) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders `q` as `p/q` (or just `p` for integers).
pub fn fraction(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Decimal rendering with `sig` significant digits.
pub fn decimal(q: &Rational, sig: usize) -> String {
    let value = q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN);
    if value == 0.0 || !value.is_finite() {
        return format!("{value}");
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}

/// Largest `p / 10^6` not exceeding `q`.
pub fn floor_micro(q: &Rational) -> Rational {
    let scale = BigInt::from(1_000_000);
    let scaled = (q * Rational::from_integer(scale.clone())).floor();
    Rational::new(scaled.to_integer(), scale)
}

pub fn numer_i128(q: &Rational) -> Option<i128> {
    q.numer().to_i128()
}

pub fn denom_i128(q: &Rational) -> Option<i128> {
    q.denom().to_i128()
}

pub fn is_nonnegative(q: &Rational) -> bool {
    !q.is_negative() || q.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_rendering() {
        let q = ratio(6, 30);
        assert_eq!(fraction(&q), "1/5");
        assert_eq!(fraction(&ratio(-4, -2)), "2");
        assert_eq!(decimal(&ratio(6, 37), 4), "0.1622");
        assert_eq!(decimal(&ratio(13, 36), 4), "0.3611");
        assert_eq!(decimal(&integer(5), 4), "5.000");
    }

    #[test]
    fn micro_floor() {
        let q = ratio(1, 3);
        assert_eq!(floor_micro(&q), ratio(333_333, 1_000_000));
        assert_eq!(floor_micro(&ratio(-1, 3)), ratio(-333_334, 1_000_000));
    }
}

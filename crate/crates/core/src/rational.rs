//! Exact rational scalars and presentation helpers.
//!
//! Every quantity in this crate is an arbitrary-precision rational; floating
//! point never enters the computation path. Decimal strings are produced only
//! on demand, with an explicit digit count.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

/// Exact arbitrary-precision fraction, always in canonical form
/// (reduced, positive denominator).
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from a big integer.
pub fn rat_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, num_rational::ParseRatioError> {
    Rational::from_str(s.trim())
}

/// Exact square root, if the value is a perfect square of a rational.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    if &(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom() {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// `|a - b| <= tol`, exactly.
pub fn within(a: &Rational, b: &Rational, tol: &Rational) -> bool {
    (a - b).abs() <= *tol
}

/// Renders `r` as a decimal string with exactly `digits` fractional digits,
/// rounding half away from zero. All arithmetic is exact.
pub fn decimal_string(r: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = r * rat_big(scale.clone());
    // round(p/q) half away from zero = floor((2|p| + q) / 2q) with the sign restored
    let p = scaled.numer();
    let q = scaled.denom(); // > 0
    let two = BigInt::from(2);
    let rounded_abs = (p.abs() * &two + q).div_floor(&(q * &two));
    let (int_part, frac_part) = rounded_abs.div_rem(&scale);
    let sign = if r.is_negative() && !rounded_abs.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{frac:0>width$}",
            frac = frac_part.to_string(),
            width = digits as usize
        )
    }
}

/// Renders a rational in its exact `"p/q"` form (just `"p"` for integers).
pub fn exact_string(r: &Rational) -> String {
    r.to_string()
}

/// True if `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// The integer value of `r`, if it is one.
pub fn to_integer(r: &Rational) -> Option<BigInt> {
    is_integer(r).then(|| r.numer().clone())
}

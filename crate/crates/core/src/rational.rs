//! Exact rational coordinates.
//!
//! All geometry in this crate is exact: coordinates are arbitrary-precision
//! rationals, comparisons are decided by cross multiplication, and no floating
//! point ever enters a predicate. Values parse from integer (`7`), fraction
//! (`22/7`) or finite decimal (`-3.25`) text and display in reduced `p/q` form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number, always in reduced form with positive denominator.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n / d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses integer, `p/q`, or finite-decimal text into an exact rational.
pub fn parse_rat(text: &str) -> Result<Rat, Error> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty numeric field".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let (sign, int_digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if !int_digits.chars().all(|c| c.is_ascii_digit())
            || frac_part.is_empty()
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(Error::Parse(format!("bad decimal literal `{s}`")));
        }
        let int_digits = if int_digits.is_empty() { "0" } else { int_digits };
        let whole: BigInt = int_digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad decimal literal `{s}`")))?;
        let frac: BigInt = frac_part
            .parse()
            .map_err(|_| Error::Parse(format!("bad decimal literal `{s}`")))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let magnitude = whole * &scale + frac;
        return Ok(Rat::new(magnitude * BigInt::from(sign), scale));
    }
    let n: BigInt = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad numeric literal `{s}`")))?;
    Ok(Rat::from_integer(n))
}

/// Canonical text form: plain integer when the denominator is one, else `p/q`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rough f64 value, for human-readable report columns only.
pub fn rat_approx(r: &Rat) -> f64 {
    let n = r.numer();
    let d = r.denom();
    let nf = n.to_string().parse::<f64>().unwrap_or(f64::NAN);
    let df = d.to_string().parse::<f64>().unwrap_or(f64::NAN);
    nf / df
}

/// True when `r` is a (nonnegative) integer.
pub fn is_nonneg_int(r: &Rat) -> bool {
    r.denom().is_one() && !r.numer().is_negative()
}

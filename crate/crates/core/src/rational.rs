//! Exact rationals for user-supplied parameters (edge probabilities, epsilons).

use num_rational::Rational64;

use crate::error::{Error, Result};

/// Parses a fraction `"a/b"` or a plain number such as `"3"` or `"0.25"`.
pub fn parse_rational(text: &str) -> Result<Rational64> {
    let s = text.trim();
    let bad = || Error::InvalidRational(text.to_string());
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Rational64::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 15 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int: i64 = match int {
            "" | "-" | "+" => 0,
            _ => int.parse().map_err(|_| bad())?,
        };
        let scale = 10i64.pow(frac.len() as u32);
        let frac: i64 = frac.parse().map_err(|_| bad())?;
        let magnitude = int
            .abs()
            .checked_mul(scale)
            .and_then(|x| x.checked_add(frac))
            .ok_or_else(bad)?;
        return Ok(Rational64::new(if negative { -magnitude } else { magnitude }, scale));
    }
    s.parse::<i64>().map(Rational64::from_integer).map_err(|_| bad())
}

/// Comma-separated list of rationals, e.g. `"1/10,1/4,0.5"`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational64>> {
    text.split(',').map(parse_rational).collect()
}

pub fn format_rational(r: Rational64) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

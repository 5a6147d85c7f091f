use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact quarter-integer: the value is `quarters / 4`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Q4(i64);

impl Q4 {
    pub const ZERO: Q4 = Q4(0);

    #[inline]
    pub const fn from_quarters(quarters: i64) -> Self {
        Q4(quarters)
    }

    #[inline]
    pub const fn from_int(v: i64) -> Self {
        Q4(4 * v)
    }

    #[inline]
    pub const fn quarters(self) -> i64 {
        self.0
    }

    /// Integer value, if the quarter count is divisible by 4.
    pub const fn to_int(self) -> Option<i64> {
        if self.0 % 4 == 0 {
            Some(self.0 / 4)
        } else {
            None
        }
    }

    pub const fn ceil(self) -> i64 {
        self.0.div_euclid(4) + (self.0.rem_euclid(4) != 0) as i64
    }

    pub const fn floor(self) -> i64 {
        self.0.div_euclid(4)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 4.0
    }

    /// Exact decimal rendering (at most two fractional digits).
    pub fn decimal(self) -> String {
        let sign = if self.0 < 0 { "-" } else { "" };
        let abs = self.0.unsigned_abs();
        match abs % 4 {
            0 => format!("{sign}{}", abs / 4),
            1 => format!("{sign}{}.25", abs / 4),
            2 => format!("{sign}{}.5", abs / 4),
            _ => format!("{sign}{}.75", abs / 4),
        }
    }

    /// `"p/4"` form.
    pub fn exact(self) -> String {
        format!("{}/4", self.0)
    }

    pub fn parse_exact(s: &str) -> Option<Q4> {
        s.strip_suffix("/4")?.parse().ok().map(Q4)
    }
}

impl Add for Q4 {
    type Output = Q4;
    fn add(self, rhs: Q4) -> Q4 {
        Q4(self.0 + rhs.0)
    }
}

impl Sub for Q4 {
    type Output = Q4;
    fn sub(self, rhs: Q4) -> Q4 {
        Q4(self.0 - rhs.0)
    }
}

impl Neg for Q4 {
    type Output = Q4;
    fn neg(self) -> Q4 {
        Q4(-self.0)
    }
}

impl fmt::Display for Q4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.decimal())
    }
}

#[derive(Serialize, Deserialize)]
struct Q4Repr {
    exact: String,
    decimal: f64,
}

impl Serialize for Q4 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Q4Repr {
            exact: self.exact(),
            decimal: self.to_f64(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Q4 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = Q4Repr::deserialize(d)?;
        let q = Q4::parse_exact(&repr.exact)
            .ok_or_else(|| serde::de::Error::custom(format!("bad quarter-integer {:?}", repr.exact)))?;
        if q.to_f64() != repr.decimal {
            return Err(serde::de::Error::custom("exact and decimal renderings disagree"));
        }
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        assert_eq!(Q4::from_quarters(13).exact(), "13/4");
        assert_eq!(Q4::from_quarters(13).decimal(), "3.25");
        assert_eq!(Q4::from_quarters(-3).decimal(), "-0.75");
        assert_eq!(Q4::from_quarters(-6).decimal(), "-1.5");
        assert_eq!(Q4::from_int(5).decimal(), "5");
        assert_eq!(Q4::parse_exact("-7/4"), Some(Q4::from_quarters(-7)));
        assert_eq!(Q4::parse_exact("7/2"), None);
    }

    #[test]
    fn rounding_helpers() {
        assert_eq!(Q4::from_quarters(9).ceil(), 3);
        assert_eq!(Q4::from_quarters(8).ceil(), 2);
        assert_eq!(Q4::from_quarters(-1).ceil(), 0);
        assert_eq!(Q4::from_quarters(-1).floor(), -1);
        assert_eq!(Q4::from_quarters(12).to_int(), Some(3));
        assert_eq!(Q4::from_quarters(10).to_int(), None);
    }

    #[test]
    fn serde_form() {
        let q = Q4::from_quarters(21);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"{"exact":"21/4","decimal":5.25}"#);
        assert_eq!(serde_json::from_str::<Q4>(&json).unwrap(), q);
        assert!(serde_json::from_str::<Q4>(r#"{"exact":"21/4","decimal":5.0}"#).is_err());
    }
}

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Sub};
use std::str::FromStr;

use num::rational::Ratio;
use num::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::Error;

/// Exact nonnegative length value.
///
/// Backed by a reduced `i64` rational; all weighted lengths in this crate stay
/// far below the overflow range because weights are user-supplied rationals
/// with small terms and supports are capped.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Length(Ratio<i64>);

impl Length {
    pub const ZERO: Length = Length(Ratio::new_raw(0, 1));

    pub fn from_integer(n: i64) -> Self {
        Length(Ratio::from_integer(n))
    }

    pub fn new(numer: i64, denom: i64) -> Self {
        Length(Ratio::new(numer, denom))
    }

    pub fn from_ratio(r: Ratio<i64>) -> Self {
        Length(r)
    }

    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Length {
        Length(self.0.abs())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Largest integer `k` with `k <= self`.
    pub fn floor(&self) -> i64 {
        self.0.floor().to_integer()
    }

    pub fn min(self, other: Length) -> Length {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Length) -> Length {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl Add for Length {
    type Output = Length;
    fn add(self, rhs: Length) -> Length {
        Length(self.0 + rhs.0)
    }
}

impl AddAssign for Length {
    fn add_assign(&mut self, rhs: Length) {
        self.0 += rhs.0;
    }
}

impl Sub for Length {
    type Output = Length;
    fn sub(self, rhs: Length) -> Length {
        Length(self.0 - rhs.0)
    }
}

impl Mul<i64> for Length {
    type Output = Length;
    fn mul(self, rhs: i64) -> Length {
        Length(self.0 * Ratio::from_integer(rhs))
    }
}

impl Sum for Length {
    fn sum<I: Iterator<Item = Length>>(iter: I) -> Length {
        iter.fold(Length::ZERO, |a, b| a + b)
    }
}

impl From<i64> for Length {
    fn from(n: i64) -> Self {
        Length::from_integer(n)
    }
}

impl From<u64> for Length {
    fn from(n: u64) -> Self {
        Length::from_integer(n as i64)
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Length {
    type Err = Error;

    /// Accepts `"3"`, `"7/2"` and decimal forms like `"1.5"` (parsed exactly).
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_ratio(s).map(Length)
    }
}

impl Serialize for Length {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Length {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parse a rational from `"p"`, `"p/q"` or an exact decimal `"d.ddd"`.
pub fn parse_ratio(s: &str) -> Result<Ratio<i64>, Error> {
    let s = s.trim();
    let bad = |reason: &str| Error::InvalidArgument(format!("cannot parse rational '{s}': {reason}"));
    if let Some((p, q)) = s.split_once('/') {
        let numer: i64 = p.trim().parse().map_err(|_| bad("bad numerator"))?;
        let denom: i64 = q.trim().parse().map_err(|_| bad("bad denominator"))?;
        if denom == 0 {
            return Err(bad("zero denominator"));
        }
        return Ok(Ratio::new(numer, denom));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.trim_start().starts_with('-');
        let int_part: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse().map_err(|_| bad("bad integer part"))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("bad fractional part"));
        }
        let digits: i64 = frac.parse().map_err(|_| bad("fractional part too long"))?;
        let scale = 10_i64
            .checked_pow(frac.len() as u32)
            .ok_or_else(|| bad("fractional part too long"))?;
        let frac_ratio = Ratio::new(digits, scale);
        let int_ratio = Ratio::from_integer(int_part);
        return Ok(if negative {
            int_ratio - frac_ratio
        } else {
            int_ratio + frac_ratio
        });
    }
    let n: i64 = s.parse().map_err(|_| bad("not an integer"))?;
    Ok(Ratio::from_integer(n))
}

/// One for rationals, used when a default generator weight is needed.
pub fn ratio_one() -> Ratio<i64> {
    Ratio::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_formats() {
        assert_eq!("3".parse::<Length>().unwrap(), Length::from_integer(3));
        assert_eq!("7/2".parse::<Length>().unwrap(), Length::new(7, 2));
        assert_eq!("1.5".parse::<Length>().unwrap(), Length::new(3, 2));
        assert_eq!("-0.25".parse::<Length>().unwrap(), Length::new(-1, 4));
        assert_eq!(Length::new(9, 3).to_string(), "3");
        assert_eq!(Length::new(7, 2).to_string(), "7/2");
    }

    #[test]
    fn ordering_is_exact() {
        assert!(Length::new(1, 3) < Length::new(1, 2));
        assert_eq!(Length::new(2, 4), Length::new(1, 2));
    }
}

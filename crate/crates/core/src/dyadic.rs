//! Exact dyadic rationals `n / 2^k`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest exponent a reduced value may carry. Keeps every aligned
/// comparison inside `i128`.
pub const MAX_EXPONENT: u32 = 62;

/// A dyadic rational `numerator / 2^exponent`, always stored reduced
/// (exponent zero or odd numerator).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DyadicRational {
    numerator: i64,
    exponent: u32,
}

impl DyadicRational {
    pub const ZERO: DyadicRational = DyadicRational {
        numerator: 0,
        exponent: 0,
    };

    pub const fn integer(n: i64) -> Self {
        DyadicRational {
            numerator: n,
            exponent: 0,
        }
    }

    /// Builds `numerator / 2^exponent`, reducing as needed.
    pub fn new(numerator: i64, exponent: u32) -> Result<Self> {
        Self::from_wide(numerator as i128, exponent)
    }

    fn from_wide(mut numerator: i128, mut exponent: u32) -> Result<Self> {
        if numerator == 0 {
            return Ok(Self::ZERO);
        }
        while exponent > 0 && numerator % 2 == 0 {
            numerator /= 2;
            exponent -= 1;
        }
        if exponent > MAX_EXPONENT {
            return Err(Error::Overflow);
        }
        let numerator = i64::try_from(numerator).map_err(|_| Error::Overflow)?;
        Ok(DyadicRational {
            numerator,
            exponent,
        })
    }

    pub fn numerator(self) -> i64 {
        self.numerator
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    pub fn is_integer(self) -> bool {
        self.exponent == 0
    }

    /// Both values scaled to the common exponent.
    fn aligned(self, other: Self) -> (i128, i128, u32) {
        let e = self.exponent.max(other.exponent);
        (
            (self.numerator as i128) << (e - self.exponent),
            (other.numerator as i128) << (e - other.exponent),
            e,
        )
    }

    pub fn checked_neg(self) -> Result<Self> {
        Ok(DyadicRational {
            numerator: self.numerator.checked_neg().ok_or(Error::Overflow)?,
            exponent: self.exponent,
        })
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        let (a, b, e) = self.aligned(other);
        Self::from_wide(a + b, e)
    }

    pub fn checked_sub(self, other: Self) -> Result<Self> {
        let (a, b, e) = self.aligned(other);
        Self::from_wide(a - b, e)
    }

    /// `(self + other) / 2`.
    pub fn mean(self, other: Self) -> Result<Self> {
        let (a, b, e) = self.aligned(other);
        Self::from_wide(a + b, e + 1)
    }

    /// `2^-exponent`.
    pub fn unit(exponent: u32) -> Result<Self> {
        Self::new(1, exponent)
    }

    /// Largest integer not above the value.
    pub fn floor(self) -> i64 {
        self.numerator >> self.exponent
    }

    /// Smallest integer not below the value.
    pub fn ceil(self) -> i64 {
        -((-(self.numerator as i128)) >> self.exponent) as i64
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for DyadicRational {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, 1u64 << self.exponent)
        }
    }
}

impl Serialize for DyadicRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for DyadicRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let malformed = || Error::MalformedDyadic(s.to_string());
        match s.split_once('/') {
            None => s.parse::<i64>().map(Self::integer).map_err(|_| malformed()),
            Some((num, den)) => {
                let num: i64 = num.trim().parse().map_err(|_| malformed())?;
                let den: u64 = den.trim().parse().map_err(|_| malformed())?;
                if den == 0 || !den.is_power_of_two() {
                    return Err(malformed());
                }
                Self::new(num, den.trailing_zeros())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> DyadicRational {
        s.parse().unwrap()
    }

    #[test]
    fn reduces_on_construction() {
        assert_eq!(DyadicRational::new(6, 2).unwrap(), d("3/2"));
        assert_eq!(DyadicRational::new(4, 2).unwrap(), d("1"));
        assert_eq!(DyadicRational::new(0, 5).unwrap(), DyadicRational::ZERO);
        assert_eq!(d("2/4").exponent(), 1);
    }

    #[test]
    fn rejects_non_dyadic_denominators() {
        assert!(matches!("1/3".parse::<DyadicRational>(), Err(Error::MalformedDyadic(_))));
        assert!(matches!("1/0".parse::<DyadicRational>(), Err(Error::MalformedDyadic(_))));
        assert!("x".parse::<DyadicRational>().is_err());
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(d("-3/2").floor(), -2);
        assert_eq!(d("-3/2").ceil(), -1);
        assert_eq!(d("3/2").floor(), 1);
        assert_eq!(d("3/2").ceil(), 2);
        assert_eq!(d("-4").ceil(), -4);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(d("1/2").mean(d("1")).unwrap(), d("3/4"));
        assert_eq!(d("1/4").checked_add(d("-3/4")).unwrap(), d("-1/2"));
        assert_eq!(d("1").checked_sub(d("1/8")).unwrap(), d("7/8"));
        assert!(DyadicRational::integer(i64::MAX).checked_add(d("1")).is_err());
        assert!(DyadicRational::integer(i64::MIN).checked_neg().is_err());
        assert!(DyadicRational::new(1, MAX_EXPONENT)
            .unwrap()
            .mean(DyadicRational::ZERO)
            .is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "-7", "3/4", "-1/64"] {
            assert_eq!(d(s).to_string(), s);
        }
    }

    #[test]
    fn order_is_exact() {
        assert!(d("1/4") < d("1/2"));
        assert!(d("-1/2") < d("0"));
        assert!(d("5/8") > d("1/2"));
    }
}

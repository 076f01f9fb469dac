//! Exact rationals over `i64`.
//!
//! A thin wrapper over `num_rational::Ratio<i64>` that keeps values in lowest
//! terms with a positive denominator and routes every operation through the
//! checked arithmetic: an overflow panics instead of wrapping, since a
//! wrapped value would silently produce a wrong certificate. Serialized as a
//! `"p/q"` string.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseRationalError;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational(Ratio<i64>);

#[track_caller]
fn overflow(op: &str) -> ! {
    panic!("rational overflow in {op}")
}

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Builds `num/den` in lowest terms. Panics if `den == 0`.
    #[track_caller]
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "rational with zero denominator");
        if den < 0 {
            let n = num.checked_neg().unwrap_or_else(|| overflow("normalize"));
            let d = den.checked_neg().unwrap_or_else(|| overflow("normalize"));
            return Rational(Ratio::new(n, d));
        }
        Rational(Ratio::new(num, den))
    }

    pub const fn integer(n: i64) -> Rational {
        Rational(Ratio::new_raw(n, 1))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    pub fn is_negative(&self) -> bool {
        self.numer() < 0
    }

    pub fn is_positive(&self) -> bool {
        self.numer() > 0
    }

    pub fn is_integer(&self) -> bool {
        self.denom() == 1
    }

    #[track_caller]
    pub fn recip(self) -> Rational {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational::new(self.denom(), self.numer())
    }

    pub fn abs(self) -> Rational {
        if self.is_negative() {
            -self
        } else {
            self
        }
    }

    /// The same fraction written with denominator `p/q` always present.
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational::integer(n)
    }
}

impl Default for Rational {
    fn default() -> Rational {
        Rational::ZERO
    }
}

macro_rules! checked_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            #[track_caller]
            fn $method(self, rhs: Rational) -> Rational {
                match self.0.$checked(&rhs.0) {
                    Some(r) => Rational(r),
                    None => overflow(stringify!($method)),
                }
            }
        }
    };
}

checked_op!(Add, add, checked_add);
checked_op!(Sub, sub, checked_sub);
checked_op!(Mul, mul, checked_mul);

impl Div for Rational {
    type Output = Rational;
    #[track_caller]
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        match self.0.checked_div(&rhs.0) {
            Some(r) => Rational(r),
            None => overflow("div"),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    #[track_caller]
    fn neg(self) -> Rational {
        let n = self
            .numer()
            .checked_neg()
            .unwrap_or_else(|| overflow("neg"));
        Rational(Ratio::new_raw(n, self.denom()))
    }
}

impl Mul<i64> for Rational {
    type Output = Rational;
    #[track_caller]
    fn mul(self, rhs: i64) -> Rational {
        self * Rational::integer(rhs)
    }
}

impl Mul<Rational> for i64 {
    type Output = Rational;
    #[track_caller]
    fn mul(self, rhs: Rational) -> Rational {
        Rational::integer(self) * rhs
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Rational, ParseRationalError> {
        let bad = || ParseRationalError(s.to_string());
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: i64 = n.parse().map_err(|_| bad())?;
        let den: i64 = d.parse().map_err(|_| bad())?;
        if den <= 0 {
            return Err(bad());
        }
        Ok(Rational::new(num, den))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_fraction_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn normalizes_sign_and_common_factors() {
        assert_eq!(r(6, -4), r(-3, 2));
        assert_eq!(r(6, -4).numer(), -3);
        assert_eq!(r(6, -4).denom(), 2);
        assert_eq!(r(0, -7), Rational::ZERO);
        assert_eq!(r(0, -7).denom(), 1);
    }

    #[test]
    fn arithmetic_is_exact() {
        assert_eq!(r(1, 2) + r(2, 3), r(7, 6));
        assert_eq!(r(1, 5) - r(13, 60) * 4, r(-2, 3));
        assert_eq!(r(4, 5) / r(2, 15), r(6, 1));
        assert_eq!(-r(9, 5), r(-9, 5));
        assert_eq!(
            vec![r(1, 2), r(2, 3)].into_iter().sum::<Rational>(),
            r(7, 6)
        );
    }

    #[test]
    fn ordering_cross_multiplies() {
        assert!(r(1, 10) > r(1, 18));
        assert!(r(-4, 3) < Rational::ZERO);
        assert_eq!(r(1, 6).cmp(&r(2, 12)), Ordering::Equal);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(r(-4, 1).to_string(), "-4");
        assert_eq!(r(-4, 1).to_fraction_string(), "-4/1");
        assert_eq!(r(13, 60).to_string(), "13/60");
        assert_eq!("26/120".parse::<Rational>().unwrap(), r(13, 60));
        assert_eq!("-3".parse::<Rational>().unwrap(), r(-3, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_panics_instead_of_wrapping() {
        let big = Rational::integer(i64::MAX);
        let _ = big * Rational::integer(2);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn negating_min_panics() {
        let _ = -Rational::integer(i64::MIN);
    }

    #[test]
    fn wide_intermediates_that_reduce_are_fine() {
        let big = Rational::new(i64::MAX, 3);
        assert_eq!(big * r(3, i64::MAX), Rational::ONE);
    }

    #[test]
    #[should_panic(expected = "zero denominator")]
    fn zero_denominator_panics() {
        let _ = r(1, 0);
    }
}

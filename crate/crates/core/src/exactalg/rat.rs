//! Exact rational numbers.
//!
//! [`Rat`] is a thin newtype over an arbitrary-precision reduced fraction.  It
//! exists so that the rest of the crate can rely on a small, stable surface
//! (parsing from `"p/q"` strings, serde as strings, operator impls on
//! references) without leaking the backing crate.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// The rational `n / d`.  Panics if `d == 0`.
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Build from big integer numerator and denominator.  Panics if `d == 0`.
    pub fn from_bigints(n: BigInt, d: BigInt) -> Self {
        assert!(!d.is_zero(), "zero denominator");
        Rat(BigRational::new(n, d))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// The value as an `i64` if it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// Nearest `f64` (for display and diagnostics only).
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Multiplicative inverse.  Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Floor as a big integer.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Integer power (negative exponents allowed for non-zero values).
    pub fn pow(&self, e: i32) -> Self {
        if e >= 0 {
            let mut acc = Rat::one();
            for _ in 0..e {
                acc = &acc * self;
            }
            acc
        } else {
            self.recip().pow(-e)
        }
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Self {
        Rat::from(n as i64)
    }
}

impl From<usize> for Rat {
    fn from(n: usize) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat::from_bigint(n)
    }
}

/// Error returned when a string is not a valid rational literal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?} (expected \"p\" or \"p/q\")")]
pub struct ParseRatError(pub String);

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let err = || ParseRatError(s.to_string());
        match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| err())?;
                let d: BigInt = d.trim().parse().map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                Ok(Rat::from_bigints(n, d))
            }
            None => {
                let n: BigInt = t.parse().map_err(|_| err())?;
                Ok(Rat::from_bigint(n))
            }
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Str(String),
            Int(i64),
        }
        match Repr::deserialize(d)? {
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Int(n) => Ok(Rat::from(n)),
        }
    }
}

macro_rules! bin_op {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat(self.0.$m(rhs.0))
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                Rat(self.0.$m(&rhs.0))
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat((&self.0).$m(rhs.0))
            }
        }
        impl $atr<&Rat> for Rat {
            fn $am(&mut self, rhs: &Rat) {
                self.0.$am(&rhs.0);
            }
        }
        impl $atr<Rat> for Rat {
            fn $am(&mut self, rhs: Rat) {
                self.0.$am(rhs.0);
            }
        }
    };
}

bin_op!(Add, add, AddAssign, add_assign);
bin_op!(Sub, sub, SubAssign, sub_assign);
bin_op!(Mul, mul, MulAssign, mul_assign);
bin_op!(Div, div, DivAssign, div_assign);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

impl Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |a, b| a * b)
    }
}

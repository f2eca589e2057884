//! Extended rational slopes `p/q`, including `1/0`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An extended rational number in lowest terms with nonnegative denominator.
///
/// The point at infinity is stored as `1/0`, so `-(1/0) == 1/0`. Slopes model
/// rational tangles (by their fraction), essential curves on a torus, lens
/// space parameters and surgery coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    num: BigInt,
    den: BigInt,
}

impl Slope {
    /// Reduces `num/den`. Fails only for `0/0`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::ZeroOverZero);
        }
        Ok(Self::reduce(num, den))
    }

    /// Builds a slope from a vector known not to be `(0, 0)`.
    pub(crate) fn reduce(num: BigInt, den: BigInt) -> Self {
        debug_assert!(!(num.is_zero() && den.is_zero()));
        if den.is_zero() {
            return Self::infinity();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Slope { num, den }
    }

    pub fn infinity() -> Self {
        Slope {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Slope {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    /// Minimal geometric intersection number `|p v - q u|` of the two curves.
    ///
    /// Two rational tangles at distance `d` have meridians meeting `2d` times.
    pub fn distance(&self, other: &Slope) -> BigInt {
        (&self.num * &other.den - &self.den * &other.num).abs()
    }
}

impl Neg for Slope {
    type Output = Slope;

    fn neg(self) -> Slope {
        if self.is_infinite() {
            self
        } else {
            Slope {
                num: -self.num,
                den: self.den,
            }
        }
    }
}

impl Neg for &Slope {
    type Output = Slope;

    fn neg(self) -> Slope {
        -self.clone()
    }
}

/// Orders by value, with `1/0` above every finite slope.
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::notation::parse_slope(s)
    }
}

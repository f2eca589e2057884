//! Continued fractions with the minus-sign convention
//! `[a1, a2, ..., ak] = a1 - 1/(a2 - 1/(... - 1/ak))`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::slope::Slope;

/// A finite integer sequence read as a continued fraction. The coefficients
/// are also the twist counts of an open 4-plat read from the top down.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ContinuedFraction(pub Vec<BigInt>);

impl ContinuedFraction {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        ContinuedFraction(coeffs)
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        ContinuedFraction(coeffs.into_iter().map(BigInt::from).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Evaluates right to left on projective pairs, so a vanishing partial
    /// denominator simply produces `1/0` and keeps going.
    pub fn eval(&self) -> Slope {
        let (n, d) = self.projective();
        Slope::reduce(n, d)
    }

    /// The unreduced pair `(n, d)` produced by the recurrence
    /// `(n, d) <- (a n - d, n)` starting from `(1, 0)`. It always has
    /// `gcd(n, d) = 1` because each step has determinant one.
    pub(crate) fn projective(&self) -> (BigInt, BigInt) {
        let mut n = BigInt::one();
        let mut d = BigInt::zero();
        for a in self.0.iter().rev() {
            let next = a * &n - &d;
            d = std::mem::replace(&mut n, next);
        }
        (n, d)
    }

    /// The sequence `-c_n, ..., -c_1`.
    pub fn reverse_negate(&self) -> ContinuedFraction {
        ContinuedFraction(self.0.iter().rev().map(|c| -c).collect())
    }

    pub fn negate(&self) -> ContinuedFraction {
        ContinuedFraction(self.0.iter().map(|c| -c).collect())
    }

    pub fn concat(parts: &[&ContinuedFraction]) -> ContinuedFraction {
        ContinuedFraction(parts.iter().flat_map(|p| p.0.iter().cloned()).collect())
    }
}

/// Canonical expansion: each coefficient is the ceiling of the remaining
/// value, so every coefficient after the first is at least 2.
pub fn cf_expand(s: &Slope) -> ContinuedFraction {
    let mut coeffs = Vec::new();
    let mut p = s.num().clone();
    let mut q = s.den().clone();
    while !q.is_zero() {
        let a = -((-&p).div_floor(&q));
        let r = &a * &q - &p;
        coeffs.push(a);
        p = std::mem::replace(&mut q, r);
    }
    ContinuedFraction(coeffs)
}

pub fn cf_eval(cf: &ContinuedFraction) -> Slope {
    cf.eval()
}

pub fn cf_equal(x: &ContinuedFraction, y: &ContinuedFraction) -> bool {
    x.eval() == y.eval()
}

impl From<Vec<BigInt>> for ContinuedFraction {
    fn from(v: Vec<BigInt>) -> Self {
        ContinuedFraction(v)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::notation::parse_cf(s)
    }
}

//! The modular group PSL(2, Z) acting on slopes.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::arith::mod_inverse;
use crate::error::{Error, Result};
use crate::slope::Slope;

/// `z -> (a z + b) / (c z + d)` with `ad - bc = 1`.
///
/// A matrix and its negative act identically, so the stored representative
/// has the first nonzero entry of `(a, b)` positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMap {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl UnimodularMap {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        if &a * &d - &b * &c != BigInt::one() {
            return Err(Error::NotUnimodular {
                a: a.to_string(),
                b: b.to_string(),
                c: c.to_string(),
                d: d.to_string(),
            });
        }
        Ok(Self::canonical(a, b, c, d))
    }

    fn canonical(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        let flip = a.is_negative() || (a.is_zero() && b.is_negative());
        if flip {
            UnimodularMap {
                a: -a,
                b: -b,
                c: -c,
                d: -d,
            }
        } else {
            UnimodularMap { a, b, c, d }
        }
    }

    pub fn identity() -> Self {
        Self::canonical(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// `z -> z + n`.
    pub fn translation(n: impl Into<BigInt>) -> Self {
        Self::canonical(BigInt::one(), n.into(), BigInt::zero(), BigInt::one())
    }

    pub fn entries(&self) -> [[&BigInt; 2]; 2] {
        [[&self.a, &self.b], [&self.c, &self.d]]
    }

    pub fn apply(&self, s: &Slope) -> Slope {
        let (p, q) = (s.num(), s.den());
        Slope::reduce(&self.a * p + &self.b * q, &self.c * p + &self.d * q)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        Self::canonical(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
    }

    pub fn inverse(&self) -> UnimodularMap {
        Self::canonical(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }
}

/// A map sending `s` to `1/0`: `z -> (a z + b) / (-q z + p)` with `a` the
/// inverse of `p` modulo `q` taken in `[0, q)`.
pub fn unimodular_taking(s: &Slope) -> UnimodularMap {
    let (p, q) = (s.num(), s.den());
    if q.is_zero() {
        return UnimodularMap::identity();
    }
    let a = mod_inverse(p, q).expect("slope is reduced");
    let b = (BigInt::one() - &a * p).div_floor(q);
    UnimodularMap::canonical(a, b, -q, p.clone())
}

pub fn unimodular_apply(f: &UnimodularMap, s: &Slope) -> Slope {
    f.apply(s)
}

impl fmt::Display for UnimodularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// Serializes as `[[a,b],[c,d]]` with integer JSON numbers.
impl Serialize for UnimodularMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = [[&self.a, &self.b], [&self.c, &self.d]];
        let mut seq = serializer.serialize_seq(Some(2))?;
        for row in rows {
            seq.serialize_element(&[crate::json::Int(row[0]), crate::json::Int(row[1])])?;
        }
        seq.end()
    }
}

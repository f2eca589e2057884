//! Small integer helpers shared by the rest of the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Bezout coefficients `(x, y)` with `a*x + b*y = gcd(a, b) >= 0`.
pub(crate) fn bezout(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Inverse of `a` modulo `m` (`m >= 1`), reduced into `[0, m)`.
pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let (g, x, _) = bezout(&a.mod_floor(m), m);
    if g.is_one() {
        Some(x.mod_floor(m))
    } else {
        None
    }
}

/// Exact integer square root, if `n` is a perfect square.
pub(crate) fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Positive divisors of `|n|` in increasing order. `n` must be nonzero.
pub(crate) fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    debug_assert!(!n.is_zero());
    if let Some(small) = n.to_u64() {
        return small_divisors(small).into_iter().map(BigInt::from).collect();
    }
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                high.push(q);
            }
            low.push(d.clone());
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

fn small_divisors(n: u64) -> Vec<u64> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            if n / d != d {
                high.push(n / d);
            }
            low.push(d);
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

/// `a / b` when `b` divides `a` exactly.
pub(crate) fn exact_div(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    if b.is_zero() {
        return None;
    }
    let (q, r) = a.div_rem(b);
    r.is_zero().then_some(q)
}

pub(crate) fn sign_of(n: &BigInt) -> i8 {
    if n.is_negative() {
        -1
    } else if n.is_zero() {
        0
    } else {
        1
    }
}

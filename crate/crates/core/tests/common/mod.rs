//! Independent reference arithmetic on machine integers, kept deliberately
//! separate from the library's big-integer code paths.

#![allow(dead_code)]

use num_traits::ToPrimitive;
use tanglekit::{LensSpace, Slope, TwoBridgeLink};

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(g, x, y)` with `ax + by = g`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

pub fn inverse_mod(a: i128, m: i128) -> i128 {
    if m == 1 {
        return 0;
    }
    let (g, x, _) = ext_gcd(a.rem_euclid(m), m);
    assert_eq!(g, 1, "{a} is not a unit mod {m}");
    x.rem_euclid(m)
}

/// A reduced fraction with nonnegative denominator; `1/0` is infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frac {
    pub n: i128,
    pub d: i128,
}

impl Frac {
    pub fn new(n: i128, d: i128) -> Frac {
        assert!(n != 0 || d != 0, "0/0");
        let g = gcd(n, d);
        let (n, d) = (n / g, d / g);
        if d < 0 || (d == 0 && n < 0) {
            Frac { n: -n, d: -d }
        } else {
            Frac { n, d }
        }
    }

    pub fn int(n: i128) -> Frac {
        Frac { n, d: 1 }
    }

    pub const INF: Frac = Frac { n: 1, d: 0 };

    pub fn of(s: &Slope) -> Frac {
        Frac {
            n: s.num().to_i128().expect("fits i128"),
            d: s.den().to_i128().expect("fits i128"),
        }
    }

    pub fn slope(self) -> Slope {
        Slope::new(self.n, self.d).expect("valid")
    }
}

/// `[a1, ..., ak] = a1 - 1/[a2, ..., ak]` with `[] = 1/0`, by direct recursion.
pub fn cf_value(v: &[i128]) -> Frac {
    match v.split_first() {
        None => Frac::INF,
        Some((&a, rest)) => {
            let r = cf_value(rest);
            if r.d == 0 {
                Frac::int(a)
            } else if r.n == 0 {
                Frac::INF
            } else {
                // a - d/n
                Frac::new(a * r.n - r.d, r.n)
            }
        }
    }
}

pub fn cf_of(cf: &tanglekit::ContinuedFraction) -> Vec<i128> {
    cf.coeffs()
        .iter()
        .map(|c| c.to_i128().expect("fits i128"))
        .collect()
}

/// `(p, q)` of the closure `S(p, q)` of the tangle `n/d`, with `0 <= q < p`.
pub fn closure(f: Frac) -> (i128, i128) {
    if f.n == 0 {
        (0, 1)
    } else if f.n.abs() == 1 {
        (1, 0)
    } else {
        let p = f.n.abs();
        (p, (f.n.signum() * f.d).rem_euclid(p))
    }
}

/// Schubert's classification, up to mirror image.
pub fn links_equivalent(x: (i128, i128), y: (i128, i128)) -> bool {
    if x.0 != y.0 {
        return false;
    }
    let p = x.0;
    if p <= 1 {
        return true;
    }
    let inv = inverse_mod(x.1, p);
    [x.1, inv, p - x.1, p - inv]
        .iter()
        .any(|r| r.rem_euclid(p) == y.1)
}

pub fn link(x: (i128, i128)) -> TwoBridgeLink {
    TwoBridgeLink::new(x.0, x.1).expect("canonical")
}

pub fn lens(x: (i128, i128)) -> LensSpace {
    LensSpace::new(x.0, x.1).expect("coprime")
}

/// Homeomorphism type of the slope pair `{x, y}`: the distance `s` and the
/// least element of the residue orbit `{±r, ±r⁻¹} mod s`, where `(1/0, r/s)`
/// is an image of the pair under the modular group.
pub fn pair_class(x: Frac, y: Frac) -> (i128, i128) {
    let s = (x.n * y.d - x.d * y.n).abs();
    assert!(s > 0, "degenerate pair");
    // A matrix [[a, b], [-q, p]] sends x = p/q to 1/0 and y = u/v to
    // (au + bv) / (pv - qu).
    let (g, a, b) = ext_gcd(x.n, x.d);
    assert_eq!(g.abs(), 1);
    let (a, b) = (a * g, b * g);
    let r = (a * y.n + b * y.d).rem_euclid(s);
    orbit_min(r, s)
}

pub fn orbit_min(r: i128, s: i128) -> (i128, i128) {
    if s == 1 {
        return (1, 0);
    }
    let r = r.rem_euclid(s);
    let inv = inverse_mod(r, s);
    let least = [r, s - r, inv, s - inv]
        .into_iter()
        .map(|v| v.rem_euclid(s))
        .min()
        .unwrap();
    (s, least)
}

/// Reduced slopes `n/d` with `|n| <= bound`, `0 <= d <= bound`.
pub fn slopes_in_box(bound: i128) -> Vec<Frac> {
    let mut out = vec![Frac::INF];
    for d in 1..=bound {
        for n in -bound..=bound {
            if gcd(n, d) == 1 {
                out.push(Frac { n, d });
            }
        }
    }
    out
}

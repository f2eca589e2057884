//! Lens spaces, the Seifert invariants that describe them, and the surgery
//! formulas for torus knots and Klein-bottle fibers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{bezout, exact_div, exact_sqrt, mod_inverse, positive_divisors};
use crate::error::{Error, Result};
use crate::json::Int;
use crate::slope::Slope;

/// `L(p, q)` with the oriented canonical form `0 <= q < p`, plus `L(0,1)`
/// for `S¹×S²`. `L(1,0)` is the 3-sphere and `-L(p,q) = L(p,-q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LensSpace {
    p: BigInt,
    q: BigInt,
}

impl LensSpace {
    /// Normalizes any coprime `(p, q)`; a negative `p` negates both entries.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (mut p, mut q) = (p.into(), q.into());
        if p.is_negative() {
            p = -p;
            q = -q;
        }
        if !p.gcd(&q).is_one() {
            return Err(Error::InvalidLens {
                p: p.to_string(),
                q: q.to_string(),
            });
        }
        if p.is_zero() {
            return Ok(LensSpace::s1_s2());
        }
        let q = q.mod_floor(&p);
        Ok(LensSpace { p, q })
    }

    pub fn sphere() -> Self {
        LensSpace {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn s1_s2() -> Self {
        LensSpace {
            p: BigInt::zero(),
            q: BigInt::one(),
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// The orientation reversal `L(p, -q)`.
    pub fn mirror(&self) -> Self {
        LensSpace::new(self.p.clone(), -&self.q).expect("coprime")
    }

    fn reps(&self) -> Vec<BigInt> {
        if self.p <= BigInt::one() {
            return vec![self.q.clone()];
        }
        let inv = mod_inverse(&self.q, &self.p).expect("coprime");
        if inv == self.q {
            vec![inv]
        } else {
            vec![self.q.clone(), inv]
        }
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

impl FromStr for LensSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::notation::parse_lens(s)
    }
}

/// Serializes as `{"lens":[p,q],"oriented":true}`.
impl Serialize for LensSpace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("LensSpace", 2)?;
        st.serialize_field("lens", &[Int(&self.p), Int(&self.q)])?;
        st.serialize_field("oriented", &true)?;
        st.end()
    }
}

/// Oriented: `q' = q^{±1} mod p`. Unoriented also allows `q' = -q^{±1}`.
pub fn lens_equiv(x: &LensSpace, y: &LensSpace, oriented: bool) -> bool {
    if x.p != y.p {
        return false;
    }
    if x.p <= BigInt::one() {
        return true;
    }
    let reps = x.reps();
    reps.contains(&y.q) || (!oriented && reps.iter().any(|r| (-r).mod_floor(&x.p) == y.q))
}

/// Generalized Seifert invariant `M(g; (α₁,β₁), ...)`; negative `g` means a
/// non-orientable base.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SeifertInvariant {
    pub g: i64,
    #[serde(serialize_with = "pairs")]
    pub pairs: Vec<(BigInt, BigInt)>,
}

fn pairs<S: Serializer>(v: &[(BigInt, BigInt)], serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(v.iter().map(|(a, b)| [Int(a), Int(b)]))
}

impl SeifertInvariant {
    pub fn new(g: i64, pairs: Vec<(BigInt, BigInt)>) -> Self {
        SeifertInvariant { g, pairs }
    }

    fn klein_alpha(&self) -> Option<&BigInt> {
        match (self.g, self.pairs.as_slice()) {
            (-1, [(alpha, beta)]) if beta.is_one() => Some(alpha),
            _ => None,
        }
    }
}

/// The lens space of `M(0; (α₁,β₁), (α₂,β₂))` or `M(-1; (α,1))`; `None`
/// for any other shape.
///
/// For the genus zero shape, `p = α₁β₂ + α₂β₁` and `q = -(α₂y + β₂x)` where
/// `α₁y - β₁x = 1`; other Bezout choices change `q` by multiples of `p`.
pub fn lens_of_seifert(s: &SeifertInvariant) -> Option<LensSpace> {
    if let Some(alpha) = s.klein_alpha() {
        let four = BigInt::from(4) * alpha;
        return LensSpace::new(four, BigInt::from(2) * alpha - 1).ok();
    }
    match (s.g, s.pairs.as_slice()) {
        (0, [(a1, b1), (a2, b2)]) => {
            let (g, y, x) = bezout(a1, b1);
            if !g.is_one() {
                return None;
            }
            // a1*y + b1*x = 1, so (x, y) -> (-x, y) solves a1*y - b1*(-x) = 1.
            let x = -x;
            let p = a1 * b2 + a2 * b1;
            let q = -(a2 * &y + b2 * &x);
            LensSpace::new(p, q).ok()
        }
        _ => None,
    }
}

/// `M(-1; (α,1)) -> M(0; (2,1), (2,-1), (-1,α)) -> M(0; (2,1), (2,2α-1))`.
pub fn seifert_normalize(s: &SeifertInvariant) -> Result<SeifertInvariant> {
    let alpha = s.klein_alpha().ok_or(Error::SeifertShape)?;
    Ok(SeifertInvariant {
        g: 0,
        pairs: vec![
            (BigInt::from(2), BigInt::one()),
            (BigInt::from(2), BigInt::from(2) * alpha - 1),
        ],
    })
}

/// Result of `1/n` surgery on the `(P, Q)` torus knot in `L(r, s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusSurgery {
    #[serde(rename = "P", serialize_with = "crate::json::int")]
    pub big_p: BigInt,
    #[serde(rename = "Q", serialize_with = "crate::json::int")]
    pub big_q: BigInt,
    #[serde(serialize_with = "crate::json::int")]
    pub n: BigInt,
    #[serde(serialize_with = "crate::json::int")]
    pub delta: BigInt,
    pub result: LensSpace,
    /// The knot is a core of a Heegaard solid torus (`|P| = 1` or `|δ| = 1`).
    pub core: bool,
    /// The knot bounds a disk or is isotopic into the surgery torus
    /// (`δ = 0` or `P = 0`), so the surgery does not change the manifold.
    pub trivial: bool,
}

/// `L(r + nδP, s + nδQ)` with `δ = Ps - rQ`.
pub fn torus_knot_surgery(
    r: &BigInt,
    s: &BigInt,
    big_p: &BigInt,
    big_q: &BigInt,
    n: &BigInt,
) -> Result<TorusSurgery> {
    for (a, b) in [(r, s), (big_p, big_q)] {
        if !a.gcd(b).is_one() {
            return Err(Error::NotCoprime {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
    }
    let delta = big_p * s - r * big_q;
    let step = n * &delta;
    let result = LensSpace::new(r + &step * big_p, s + &step * big_q)?;
    Ok(TorusSurgery {
        core: big_p.abs().is_one() || delta.abs().is_one(),
        trivial: delta.is_zero() || big_p.is_zero(),
        big_p: big_p.clone(),
        big_q: big_q.clone(),
        n: n.clone(),
        delta,
        result,
    })
}

/// Every `(P, Q, n)` with `|n| = d` whose surgery on `from` gives `to` up to
/// orientation. `from` is read in both Heegaard parametrizations.
pub fn torus_knot_surgery_solve(from: &LensSpace, to: &LensSpace, d: u64) -> Result<Vec<TorusSurgery>> {
    if d == 0 {
        return Err(Error::InvalidDistance(d));
    }
    let r = from.p.clone();
    let mut out: Vec<TorusSurgery> = Vec::new();
    let mut push = |sol: TorusSurgery| {
        if lens_equiv(&sol.result, to, false) && !out.contains(&sol) {
            out.push(sol);
        }
    };
    for s in from.reps() {
        for n in [BigInt::from(d), -BigInt::from(d)] {
            if lens_equiv(from, to, false) {
                // Knots that do not change the manifold.
                push(torus_knot_surgery(&r, &s, &r, &s, &n)?);
                push(torus_knot_surgery(&r, &s, &BigInt::zero(), &BigInt::one(), &n)?);
            }
            for sigma in [1i64, -1] {
                let target = &to.p * sigma;
                let Some(k) = exact_div(&(&target - &r), &n) else {
                    continue;
                };
                if k.is_zero() {
                    continue;
                }
                if r.is_zero() {
                    // δ = P, so n P² = ±u and Q only matters modulo P.
                    let Some(big_p) = exact_sqrt(&k) else { continue };
                    let Some(bound) = big_p.to_u64() else { continue };
                    for q in 0..bound {
                        let big_q = BigInt::from(q);
                        if big_q.gcd(&big_p).is_one() {
                            push(torus_knot_surgery(&r, &s, &big_p, &big_q, &n)?);
                        }
                    }
                    continue;
                }
                for big_p in positive_divisors(&k) {
                    for big_p in [big_p.clone(), -big_p] {
                        let delta = &k / &big_p;
                        let Some(big_q) = exact_div(&(&big_p * &s - &delta), &r) else {
                            continue;
                        };
                        if big_p.gcd(&big_q).is_one() {
                            push(torus_knot_surgery(&r, &s, &big_p, &big_q, &n)?);
                        }
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| (a.trivial, &a.n, &a.big_p, &a.big_q).cmp(&(b.trivial, &b.n, &b.big_p, &b.big_q)));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KleinKind {
    TrivialKnot,
    TorusKnot,
    ToroidalNonfibered,
}

/// The regular fiber of `M(-1; (k,1))`, a knot in `L(4k, 2k-1)`.
pub fn klein_fiber_classify(k: &BigInt) -> KleinKind {
    if k.is_zero() {
        KleinKind::TrivialKnot
    } else if k.abs().is_one() {
        KleinKind::TorusKnot
    } else {
        KleinKind::ToroidalNonfibered
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KleinSurgery {
    #[serde(serialize_with = "crate::json::display")]
    pub slope: Slope,
    pub result: LensSpace,
}

/// Nontrivial surgeries on the Klein-bottle fiber that yield lens spaces,
/// with slopes measured against the Klein-bottle framing. The infinite
/// families for `k = 0` and `|k| = 1` are cut off at `|n| <= n_bound`.
pub fn klein_fiber_surgeries(k: &BigInt, n_bound: u64) -> Vec<KleinSurgery> {
    let ns = || {
        let b = n_bound as i64;
        (-b..=b).filter(|n| *n != 0)
    };
    let l83 = LensSpace::new(8, 3).expect("coprime");
    match klein_fiber_classify(k) {
        KleinKind::TrivialKnot => ns()
            .map(|n| KleinSurgery {
                slope: Slope::new(1, n).expect("nonzero"),
                result: LensSpace::s1_s2(),
            })
            .collect(),
        KleinKind::TorusKnot => {
            let sign = if k.is_positive() { 1 } else { -1 };
            ns().map(|n| {
                let m = BigInt::from(n + 1);
                let lens = LensSpace::new(BigInt::from(4) * &m, BigInt::from(2) * &m - 1)
                    .expect("consecutive odd and multiple of four are coprime");
                KleinSurgery {
                    slope: Slope::new(sign * (n + 1), n).expect("nonzero"),
                    result: if sign > 0 { lens } else { lens.mirror() },
                }
            })
            .collect()
        }
        KleinKind::ToroidalNonfibered => match k.to_i64() {
            Some(2) => vec![KleinSurgery {
                slope: Slope::integer(1),
                result: l83.mirror(),
            }],
            Some(-2) => vec![KleinSurgery {
                slope: Slope::integer(-1),
                result: l83,
            }],
            _ => Vec::new(),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KleinFiber {
    #[serde(serialize_with = "crate::json::int")]
    pub k: BigInt,
    pub kind: KleinKind,
    /// Position of the knot in the list of grid number one knots in `L(4k, 2k-1)`.
    #[serde(serialize_with = "crate::json::int")]
    pub grid_number_one_index: BigInt,
}

/// Knots in a lens space with Seifert-fibered exterior that may carry a
/// nontrivial lens space surgery.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertCatalog {
    pub torus_knots: bool,
    pub klein_fiber: Option<KleinFiber>,
}

pub fn seifert_knot_catalog(y: &LensSpace) -> SeifertCatalog {
    let klein_fiber = klein_k(y).map(|k| KleinFiber {
        kind: klein_fiber_classify(&k),
        grid_number_one_index: BigInt::from(2) * k.abs(),
        k,
    });
    SeifertCatalog {
        torus_knots: true,
        klein_fiber,
    }
}

/// The signed `k` with `y` homeomorphic to `L(4k, 2k-1)`.
fn klein_k(y: &LensSpace) -> Option<BigInt> {
    let four = BigInt::from(4);
    if !y.p.is_multiple_of(&four) {
        return None;
    }
    let k = &y.p / four;
    let model = LensSpace::new(BigInt::from(4) * &k, BigInt::from(2) * &k - 1).ok()?;
    if lens_equiv(&model, y, true) {
        Some(k)
    } else if lens_equiv(&model, y, false) {
        Some(-k)
    } else {
        None
    }
}

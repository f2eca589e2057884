//! The five families of tangle pairs related by a distance `d` rational
//! subtangle replacement, with membership tests that produce certificates.
//!
//! Every family is described by a normalized pair `(1/0, F)`. A witness
//! records the parameters of `F` together with a map that carries the
//! normalized pair (possibly mirrored) onto the queried pair.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{exact_div, exact_sqrt, positive_divisors, sign_of};
use crate::cf::{cf_expand, ContinuedFraction};
use crate::error::{Error, Result};
use crate::modular::{unimodular_taking, UnimodularMap};
use crate::pair::{pair_canonical, PairClass};
use crate::plat::PlatDesc;
use crate::slope::Slope;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    O,
    I,
    II,
    III,
    IV,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::O, Family::I, Family::II, Family::III, Family::IV];

    pub fn name(self) -> &'static str {
        match self {
            Family::O => "O",
            Family::I => "I",
            Family::II => "II",
            Family::III => "III",
            Family::IV => "IV",
        }
    }

    fn needs_distance_one(self) -> bool {
        matches!(self, Family::II | Family::III | Family::IV)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Certificate that a pair of slopes lies in one of the families.
///
/// `(a, b)` are the normalized parameters of `F`; for family O, `a/d` is
/// `F` itself and `b` is zero. `branch` is the sign of `2ab - 2a - b`
/// (family III) or `2ab + a - b` (family IV). The pair is
/// `{transport(1/0), transport(eps * F)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RsrWitness {
    pub family: Family,
    pub d: u64,
    pub eps: i8,
    #[serde(serialize_with = "crate::json::int")]
    pub a: BigInt,
    #[serde(serialize_with = "crate::json::int")]
    pub b: BigInt,
    pub branch: Option<i8>,
    pub transport: Option<UnimodularMap>,
}

impl RsrWitness {
    pub fn normalized_value(&self) -> Result<Slope> {
        family_normalized_value(self.family, self.d, &self.a, &self.b)
    }

    /// The slope pair this witness certifies, in the order
    /// `(transport(1/0), transport(eps * F))`.
    pub fn pair(&self) -> Result<(Slope, Slope)> {
        let f = self.normalized_value()?;
        let f = if self.eps < 0 { -f } else { f };
        Ok(match &self.transport {
            Some(t) => (t.apply(&Slope::infinity()), t.apply(&f)),
            None => (Slope::infinity(), f),
        })
    }

    /// Whether the witness reproduces the unordered pair `{x, y}` exactly.
    pub fn certifies(&self, x: &Slope, y: &Slope) -> bool {
        match self.pair() {
            Ok((u, v)) => (&u == x && &v == y) || (&u == y && &v == x),
            Err(_) => false,
        }
    }
}

fn check_distance(family: Family, d: u64) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidDistance(d));
    }
    if family.needs_distance_one() && d != 1 {
        return Err(Error::RequiresDistanceOne(family));
    }
    Ok(())
}

fn check_coprime(a: &BigInt, b: &BigInt) -> Result<()> {
    if a.gcd(b).is_one() {
        Ok(())
    } else {
        Err(Error::NotCoprime {
            a: a.to_string(),
            b: b.to_string(),
        })
    }
}

/// The slope `r/s` paired with `1/0` in the normalized form of a family.
///
/// Family O returns `a/d` and ignores `b`. Degenerate parameters of
/// families III and IV give `1/0`.
pub fn family_normalized_value(family: Family, d: u64, a: &BigInt, b: &BigInt) -> Result<Slope> {
    check_distance(family, d)?;
    let d = BigInt::from(d);
    match family {
        Family::O => {
            check_coprime(a, &d)?;
            Ok(Slope::reduce(a.clone(), d))
        }
        Family::I | Family::II => {
            check_coprime(a, b)?;
            let ds = if family == Family::I { d } else { BigInt::from(4) };
            Ok(Slope::reduce(BigInt::one() + &ds * a * b, ds * a * a))
        }
        Family::III | Family::IV => Ok(upper_value(family, a, b)),
    }
}

/// `2ab - 2a - b` (III) or `2ab + a - b` (IV); the square root of the
/// denominator up to sign.
fn upper_root(family: Family, a: &BigInt, b: &BigInt) -> BigInt {
    let two_ab = BigInt::from(2) * a * b;
    match family {
        Family::III => two_ab - BigInt::from(2) * a - b,
        _ => two_ab + a - b,
    }
}

fn upper_value(family: Family, a: &BigInt, b: &BigInt) -> Slope {
    let m = upper_root(family, a, b);
    let num = match family {
        // (b-1)(4ab-4a-2b-1) = (b-1)(2m-1)
        Family::III => (b - 1) * (BigInt::from(2) * &m - 1),
        // (2a-1)(2ab+a-b+1) = (2a-1)(m+1)
        _ => (BigInt::from(2) * a - 1) * (&m + 1),
    };
    Slope::reduce(num, &m * &m)
}

/// The companion value with numerator `-r⁻¹` modulo the same denominator.
fn upper_value_inverse(family: Family, a: &BigInt, b: &BigInt) -> Slope {
    let m = upper_root(family, a, b);
    let two_a = BigInt::from(2) * a;
    let num = match family {
        Family::III => (&two_a - 1) * (&two_a - 1) * (b - 1),
        _ => (BigInt::from(2) * b + 1) * (&m + 1),
    };
    Slope::reduce(num, &m * &m)
}

/// Parameters `(eps, a, b)` of the general family formula
/// `(p + eps d a t) / (q + eps d b t)` with `t = aq - bp`, found for the
/// ordered pair `(x, y)` by the square test `qu - pv = eps d t²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GeneralParams {
    pub eps: i8,
    #[serde(serialize_with = "crate::json::int")]
    pub a: BigInt,
    #[serde(serialize_with = "crate::json::int")]
    pub b: BigInt,
    #[serde(serialize_with = "crate::json::int")]
    pub t: BigInt,
}

fn square_test(x: &Slope, y: &Slope, ds: &BigInt) -> Vec<GeneralParams> {
    let (p, q) = (x.num(), x.den());
    let mut out = Vec::new();
    for sigma in [1i8, -1] {
        let (u, v) = if sigma > 0 {
            (y.num().clone(), y.den().clone())
        } else {
            (-y.num(), -y.den())
        };
        let big_d = q * &u - p * &v;
        let eps = sign_of(&big_d);
        if eps == 0 {
            continue;
        }
        let Some(t2) = exact_div(&big_d.abs(), ds) else {
            continue;
        };
        let Some(t) = exact_sqrt(&t2) else { continue };
        let step = ds * &t * BigInt::from(eps);
        let (Some(a), Some(b)) = (exact_div(&(&u - p), &step), exact_div(&(&v - q), &step)) else {
            continue;
        };
        if a.gcd(&b).is_one() && &a * q - &b * p == t {
            out.push(GeneralParams { eps, a, b, t });
        }
    }
    out
}

/// Family I parameters relative to the base slope `x`, so that `y` is given
/// by the general formula with base `x`.
pub fn family_i_general_params(x: &Slope, y: &Slope, d: u64) -> Vec<GeneralParams> {
    square_test(x, y, &BigInt::from(d))
}

/// All `(eps, map)` with `map(1/0)` and `map(eps * f)` equal to `{x, y}`.
fn fit_transport(x: &Slope, y: &Slope, f: &Slope) -> Vec<(i8, UnimodularMap)> {
    let mut out = Vec::new();
    let s = f.den();
    if s.is_zero() {
        return out;
    }
    for (first, second) in [(x, y), (y, x)] {
        let taking = unimodular_taking(first);
        let image = taking.apply(second);
        if image.den() != s {
            continue;
        }
        for eps in [1i8, -1] {
            let diff = image.num() - BigInt::from(eps) * f.num();
            if let Some(k) = exact_div(&diff, s) {
                out.push((eps, taking.inverse().compose(&UnimodularMap::translation(k))));
            }
        }
    }
    out
}

fn witness(
    family: Family,
    d: u64,
    a: BigInt,
    b: BigInt,
    branch: Option<i8>,
    fit: (i8, UnimodularMap),
) -> RsrWitness {
    let transport = (fit.1 != UnimodularMap::identity()).then_some(fit.1);
    RsrWitness {
        family,
        d,
        eps: fit.0,
        a,
        b,
        branch,
        transport,
    }
}

fn family_o(x: &Slope, y: &Slope, d: u64, all: bool) -> Vec<RsrWitness> {
    let db = BigInt::from(d);
    if x.distance(y) != db {
        return Vec::new();
    }
    let r = unimodular_taking(x).apply(y).num().mod_floor(&db);
    let f = Slope::reduce(r.clone(), db);
    let mut fits = fit_transport(x, y, &f);
    fits.truncate(if all { fits.len() } else { 1 });
    fits.into_iter()
        .map(|fit| witness(Family::O, d, r.clone(), BigInt::zero(), None, fit))
        .collect()
}

/// Families I (`ds = d`) and II (`ds = 4`, `d = 1`).
fn family_lower(family: Family, x: &Slope, y: &Slope, d: u64, all: bool) -> Vec<RsrWitness> {
    let ds = if family == Family::I {
        BigInt::from(d)
    } else {
        BigInt::from(4)
    };
    let found = square_test(x, y, &ds)
        .into_iter()
        .chain(square_test(y, x, &ds))
        .next();
    let Some(params) = found else { return Vec::new() };
    // The square test fixes t; the normalized form is (1 + ds t B) / (ds t²)
    // where eps r = 1 + ds t B for the image r/s of the second slope.
    let t = params.t;
    let mut out: Vec<RsrWitness> = Vec::new();
    for (first, second) in [(x, y), (y, x)] {
        let taking = unimodular_taking(first);
        let image = taking.apply(second);
        for eps in [1i8, -1] {
            let r = BigInt::from(eps) * image.num();
            let Some(b) = exact_div(&(r - 1), &(&ds * &t)) else {
                continue;
            };
            if !b.gcd(&t).is_one() {
                continue;
            }
            let w = witness(family, d, t.clone(), b, None, (eps, taking.inverse()));
            if w.certifies(x, y) && !out.contains(&w) {
                out.push(w);
            }
        }
    }
    debug_assert!(!out.is_empty(), "square test passed without a normalized witness");
    out.truncate(if all { out.len() } else { 1 });
    out
}

/// Every `(a, b, σ)` with `2ab - 2a - b = σm` (family III) or
/// `2ab + a - b = σm` (family IV), for `m >= 1`; these are the parameters
/// whose normalized value has denominator `m²`. Other families have none.
pub fn family_params_for_root(family: Family, m: &BigInt) -> Vec<(BigInt, BigInt, i8)> {
    let mut out = Vec::new();
    if !matches!(family, Family::III | Family::IV) || !m.is_positive() {
        return out;
    }
    for sigma in [1i8, -1] {
        let sm = BigInt::from(sigma) * m;
        match family {
            Family::III => {
                // (2a - 1)(b - 1) = 1 + sm
                let n = BigInt::one() + &sm;
                if n.is_zero() {
                    out.push((BigInt::one(), BigInt::one(), sigma));
                    continue;
                }
                for delta in signed_odd_divisors(&n) {
                    let a = (&delta + 1) / 2;
                    let b = BigInt::one() + &n / &delta;
                    out.push((a, b, sigma));
                }
            }
            _ => {
                // (2a - 1)(2b + 1) = 2 sm - 1
                let n = BigInt::from(2) * &sm - 1;
                for delta in signed_odd_divisors(&n) {
                    let b = (&delta - 1) / 2;
                    let a = (&n / &delta + 1) / 2;
                    out.push((a, b, sigma));
                }
            }
        }
    }
    out
}

fn signed_odd_divisors(n: &BigInt) -> Vec<BigInt> {
    positive_divisors(n)
        .into_iter()
        .filter(|d| d.is_odd())
        .flat_map(|d| [d.clone(), -d])
        .collect()
}

fn family_upper(family: Family, x: &Slope, y: &Slope, class: &PairClass, all: bool) -> Vec<RsrWitness> {
    let Some(m) = exact_sqrt(&class.dist) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for (a, b, sigma) in family_params_for_root(family, &m) {
        let f = upper_value(family, &a, &b);
        if f.den() != &class.dist || !class.contains(f.num()) {
            continue;
        }
        if let Some(fit) = fit_transport(x, y, &f).into_iter().next() {
            let w = witness(family, 1, a, b, Some(sigma), fit);
            if !out.contains(&w) {
                out.push(w);
            }
            if !all {
                break;
            }
        }
    }
    out
}

/// Every family into which the pair `{x, y}` fits at distance `d`.
///
/// Without `verbose` one witness per family is returned; with it, every
/// distinct witness found by the search.
pub fn classify_rsr(x: &Slope, y: &Slope, d: u64, verbose: bool) -> Result<Vec<RsrWitness>> {
    if x == y {
        return Err(Error::DegeneratePair);
    }
    if d == 0 {
        return Err(Error::InvalidDistance(d));
    }
    let mut out = family_o(x, y, d, verbose);
    out.extend(family_lower(Family::I, x, y, d, verbose));
    if d == 1 {
        out.extend(family_lower(Family::II, x, y, d, verbose));
        let class = pair_canonical(x, y)?;
        if exact_sqrt(&class.dist).is_some() {
            out.extend(family_upper(Family::III, x, y, &class, verbose));
            out.extend(family_upper(Family::IV, x, y, &class, verbose));
        }
    }
    Ok(out)
}

/// Family tags only; the same decision as [`classify_rsr`].
pub fn rsr_families(x: &Slope, y: &Slope, d: u64) -> Result<Vec<Family>> {
    let mut tags: Vec<Family> = classify_rsr(x, y, d, false)?
        .into_iter()
        .map(|w| w.family)
        .collect();
    tags.dedup();
    Ok(tags)
}

/// One member of a family around a fixed base slope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    #[serde(serialize_with = "crate::json::display")]
    pub slope: Slope,
    pub witness: RsrWitness,
    /// Parameter triples `(eps, a, b)` of the generating formula that hit
    /// this slope: `a/d` for O, the general formula for I and II, and the
    /// normalized parameters for III and IV.
    pub generators: Vec<(i8, String, String)>,
}

/// Members `u/v` of a family with base `p/q`, generated from parameters
/// with `|a|, |b| <= bound` (and integer shifts up to `bound` for III and IV),
/// deduplicated and sorted by value.
pub fn family_general_members(base: &Slope, d: u64, family: Family, bound: u64) -> Result<Vec<FamilyMember>> {
    check_distance(family, d)?;
    let bound = bound as i64;
    let back = unimodular_taking(base).inverse();
    let mut hits: Vec<(Slope, (i8, BigInt, BigInt))> = Vec::new();
    let db = BigInt::from(d);
    match family {
        Family::O => {
            for a in -bound..=bound {
                let a = BigInt::from(a);
                if a.gcd(&db).is_one() {
                    let u = back.apply(&Slope::reduce(a.clone(), db.clone()));
                    hits.push((u, (1, a, BigInt::zero())));
                }
            }
        }
        Family::I | Family::II => {
            let ds = if family == Family::I { db } else { BigInt::from(4) };
            let (p, q) = (base.num(), base.den());
            for a in -bound..=bound {
                for b in -bound..=bound {
                    let (a, b) = (BigInt::from(a), BigInt::from(b));
                    if !a.gcd(&b).is_one() {
                        continue;
                    }
                    let t = &a * q - &b * p;
                    if t.is_zero() {
                        continue;
                    }
                    for eps in [1i8, -1] {
                        let k = BigInt::from(eps) * &ds * &t;
                        let u = Slope::reduce(p + &k * &a, q + &k * &b);
                        hits.push((u, (eps, a.clone(), b.clone())));
                    }
                }
            }
        }
        Family::III | Family::IV => {
            for a in -bound..=bound {
                for b in -bound..=bound {
                    let (a, b) = (BigInt::from(a), BigInt::from(b));
                    let f = upper_value(family, &a, &b);
                    if f.is_infinite() {
                        continue;
                    }
                    let g = upper_value_inverse(family, &a, &b);
                    for w in [&f, &g] {
                        for eps in [1i8, -1] {
                            let w = if eps > 0 { w.clone() } else { -w };
                            for n in -bound..=bound {
                                let shifted = UnimodularMap::translation(n).apply(&w);
                                hits.push((back.apply(&shifted), (eps, a.clone(), b.clone())));
                            }
                        }
                    }
                }
            }
        }
    }
    hits.sort_by(|l, r| l.0.cmp(&r.0));
    let mut members: Vec<FamilyMember> = Vec::new();
    for (slope, (eps, a, b)) in hits {
        let generator = (eps, a.to_string(), b.to_string());
        if let Some(last) = members.last_mut() {
            if last.slope == slope {
                if !last.generators.contains(&generator) {
                    last.generators.push(generator);
                }
                continue;
            }
        }
        let witness = classify_rsr(base, &slope, d, false)?
            .into_iter()
            .find(|w| w.family == family)
            .expect("generated member is certified by the classifier");
        members.push(FamilyMember {
            slope,
            witness,
            generators: vec![generator],
        });
    }
    Ok(members)
}

/// A pair of continued fractions `(first, second)` whose values form a pair
/// homeomorphic to `(1/0, F)`.
pub fn representative_cf_pair(w: &RsrWitness) -> Result<(ContinuedFraction, ContinuedFraction)> {
    w.normalized_value()?;
    let ints = |v: Vec<BigInt>| ContinuedFraction::new(v);
    let (a, b) = (&w.a, &w.b);
    let second = match w.family {
        Family::O => cf_expand(&Slope::reduce(a.clone(), BigInt::from(w.d))),
        Family::I | Family::II => {
            let ds = if w.family == Family::I {
                BigInt::from(w.d)
            } else {
                BigInt::from(4)
            };
            let c = cf_expand(&Slope::reduce(a.clone(), b.clone()));
            let mut v = vec![BigInt::zero()];
            v.extend(c.coeffs().iter().cloned());
            v.push(ds);
            v.extend(c.reverse_negate().0);
            ints(v)
        }
        Family::III => ints(vec![
            BigInt::zero(),
            -a,
            BigInt::from(-2),
            -b,
            BigInt::from(-2),
            a.clone(),
            BigInt::one(),
            b.clone(),
        ]),
        Family::IV => ints(vec![
            BigInt::zero(),
            -b - 1,
            BigInt::from(-1),
            BigInt::one(),
            -a + 1,
            b.clone(),
            BigInt::from(-2),
            a - 1,
        ]),
    };
    Ok((ContinuedFraction::default(), second))
}

const FRAMING_NOTE: &str = "site arc framed by the plane of the page";

/// Odd-length expansion of `a/b`, using `[.., x] = [.., x + 1, 1]`.
fn odd_expansion(a: &BigInt, b: &BigInt) -> ContinuedFraction {
    let mut c = cf_expand(&Slope::reduce(a.clone(), b.clone()));
    if c.len().is_multiple_of(2) {
        match c.0.last_mut() {
            Some(last) => {
                *last += 1;
                c.0.push(BigInt::one());
            }
            None => c = ContinuedFraction::from_ints([0, 1, 1]),
        }
    }
    c
}

/// Plat presentations before and after the replacement, differing only in
/// the marked twist region.
pub fn site_plat(w: &RsrWitness) -> Result<(PlatDesc, PlatDesc)> {
    w.normalized_value()?;
    let note = Some(FRAMING_NOTE.to_string());
    let with_site = |cf: ContinuedFraction, site: Option<usize>, note: &Option<String>| {
        let mut p = PlatDesc::from_cf(&cf);
        p.site = site;
        p.framing_note = note.clone();
        p
    };
    match w.family {
        Family::O => {
            let d = BigInt::from(w.d);
            let r = w.a.mod_floor(&d);
            let unit = r.is_one() || r == &d - 1 || d.is_one();
            if unit {
                let before = with_site(ContinuedFraction::from_ints([0]), Some(0), &note);
                let after = with_site(ContinuedFraction::new(vec![d]), Some(0), &note);
                Ok((before, after))
            } else {
                // No single twist region realizes this class; the site is
                // the core of the whole tangle.
                let note = Some("full replacement: the site is the core of the whole tangle".into());
                let (first, second) = representative_cf_pair(w)?;
                Ok((with_site(first, None, &note), with_site(second, None, &note)))
            }
        }
        Family::I => {
            let c = odd_expansion(&w.a, &w.b);
            let site = 1 + c.len();
            let build = |mid: BigInt| {
                let mut v = vec![BigInt::zero()];
                v.extend(c.coeffs().iter().cloned());
                v.push(mid);
                v.extend(c.reverse_negate().0);
                ContinuedFraction::new(v)
            };
            Ok((
                with_site(build(BigInt::zero()), Some(site), &note),
                with_site(build(BigInt::from(w.d)), Some(site), &note),
            ))
        }
        Family::II => {
            let tail = cf_expand(&Slope::reduce(w.a.clone(), w.b.clone())).reverse_negate();
            let build = |head: i64| {
                let mut v = vec![BigInt::from(head)];
                v.extend(tail.coeffs().iter().cloned());
                ContinuedFraction::new(v)
            };
            Ok((
                with_site(build(2), Some(0), &note),
                with_site(build(-2), Some(0), &note),
            ))
        }
        Family::III | Family::IV => {
            let (first, second) = representative_cf_pair(w)?;
            Err(Error::UnsupportedSite {
                family: w.family,
                first,
                second,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::pairs_homeomorphic;

    fn s(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    fn n(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn normalized_values() {
        assert_eq!(
            family_normalized_value(Family::I, 2, &n(2), &n(3)).unwrap(),
            s(13, 8)
        );
        assert_eq!(
            family_normalized_value(Family::O, 1, &n(0), &n(0)).unwrap(),
            s(0, 1)
        );
        assert_eq!(
            family_normalized_value(Family::III, 1, &n(2), &n(3)).unwrap(),
            s(18, 25)
        );
        assert_eq!(
            family_normalized_value(Family::III, 1, &n(3), &n(1)).unwrap(),
            s(0, 1)
        );
        assert!(matches!(
            family_normalized_value(Family::I, 2, &n(2), &n(4)),
            Err(Error::NotCoprime { .. })
        ));
        assert_eq!(
            family_normalized_value(Family::II, 2, &n(1), &n(1)),
            Err(Error::RequiresDistanceOne(Family::II))
        );
    }

    #[test]
    fn upper_numerators_are_inverse_up_to_sign() {
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                for fam in [Family::III, Family::IV] {
                    let f = upper_value(fam, &n(a), &n(b));
                    if f.is_infinite() {
                        continue;
                    }
                    let g = upper_value_inverse(fam, &n(a), &n(b));
                    assert_eq!(f.den(), g.den());
                    let prod: BigInt = (f.num() * g.num() + 1i32).mod_floor(f.den());
                    assert!(prod.is_zero(), "{fam} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn classify_examples() {
        let ws = classify_rsr(&Slope::infinity(), &s(13, 8), 2, false).unwrap();
        assert_eq!(ws.len(), 1);
        let w = &ws[0];
        assert_eq!(
            (w.family, w.eps, w.a.clone(), w.b.clone()),
            (Family::I, 1, n(2), n(3))
        );
        assert_eq!(w.transport, None);

        let ws = classify_rsr(&s(3, 1), &s(23, 5), 2, false).unwrap();
        assert_eq!(ws.iter().map(|w| w.family).collect::<Vec<_>>(), vec![Family::I]);
        assert!(ws[0].certifies(&s(3, 1), &s(23, 5)));
        let general = family_i_general_params(&s(3, 1), &s(23, 5), 2);
        assert!(general.contains(&GeneralParams {
            eps: 1,
            a: n(5),
            b: n(1),
            t: n(2)
        }));

        let tags = rsr_families(&Slope::infinity(), &s(1, 1), 1).unwrap();
        assert!(tags.contains(&Family::O) && tags.contains(&Family::I));
        assert!(classify_rsr(&Slope::infinity(), &s(1, 5), 2, false)
            .unwrap()
            .is_empty());
        assert_eq!(
            classify_rsr(&s(1, 2), &s(1, 2), 1, false),
            Err(Error::DegeneratePair)
        );
        assert_eq!(
            classify_rsr(&s(1, 2), &s(1, 3), 0, false),
            Err(Error::InvalidDistance(0))
        );
    }

    #[test]
    fn upper_families_found_from_values() {
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                for fam in [Family::III, Family::IV] {
                    let f = upper_value(fam, &n(a), &n(b));
                    if f.is_infinite() {
                        continue;
                    }
                    let ws = classify_rsr(&Slope::infinity(), &f, 1, true).unwrap();
                    let hit = ws.iter().find(|w| w.family == fam);
                    let hit = hit.unwrap_or_else(|| panic!("{fam} a={a} b={b} missing"));
                    assert!(hit.certifies(&Slope::infinity(), &f));
                }
            }
        }
    }

    #[test]
    fn general_members_contain_examples() {
        let members = family_general_members(&s(2, 1), 1, Family::I, 3).unwrap();
        let three = members.iter().find(|m| m.slope == s(3, 1)).unwrap();
        assert!(three.generators.contains(&(1, "1".into(), "0".into())));
        assert!(three.witness.certifies(&s(2, 1), &s(3, 1)));

        let around_inf = family_general_members(&Slope::infinity(), 2, Family::I, 4).unwrap();
        for m in &around_inf {
            assert_eq!(m.witness.family, Family::I);
        }
        assert!(around_inf.iter().any(|m| m.slope == s(13, 8)));

        let o = family_general_members(&s(3, 7), 3, Family::O, 6).unwrap();
        assert!(o.iter().all(|m| m.slope.distance(&s(3, 7)) == n(3)));
    }

    #[test]
    fn representative_pairs_match_values() {
        let w = RsrWitness {
            family: Family::I,
            d: 1,
            eps: 1,
            a: n(5),
            b: n(3),
            branch: None,
            transport: None,
        };
        let (first, second) = representative_cf_pair(&w).unwrap();
        assert!(first.is_empty());
        assert_eq!(second, ContinuedFraction::from_ints([0, 2, 3, 1, -3, -2]));
        assert_eq!(second.eval(), s(-16, 25));
    }

    #[test]
    fn site_plats() {
        let w = RsrWitness {
            family: Family::I,
            d: 2,
            eps: 1,
            a: n(2),
            b: n(1),
            branch: None,
            transport: None,
        };
        let (before, after) = site_plat(&w).unwrap();
        assert_eq!(before.coefficients(), ContinuedFraction::from_ints([0, 2, 0, -2]));
        assert_eq!(after.coefficients(), ContinuedFraction::from_ints([0, 2, 2, -2]));
        assert_eq!(before.site, Some(2));
        assert_eq!(before.value(), Slope::infinity());
        assert_eq!(after.value(), s(-5, 8));

        let w2 = RsrWitness {
            family: Family::II,
            d: 1,
            a: n(1),
            b: n(1),
            ..w.clone()
        };
        let (before, after) = site_plat(&w2).unwrap();
        let f = w2.normalized_value().unwrap();
        assert!(pairs_homeomorphic((&before.value(), &after.value()), (&Slope::infinity(), &f)).unwrap());

        let w3 = RsrWitness {
            family: Family::III,
            d: 1,
            a: n(2),
            b: n(3),
            branch: Some(-1),
            ..w
        };
        assert!(matches!(site_plat(&w3), Err(Error::UnsupportedSite { .. })));
    }
}

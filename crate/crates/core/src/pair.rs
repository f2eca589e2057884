//! Unordered slope pairs up to homeomorphism of the torus (or of the pillowcase
//! for tangles).

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::mod_inverse;
use crate::error::{Error, Result};
use crate::modular::unimodular_taking;
use crate::slope::Slope;

/// Complete invariant of an unordered pair of distinct slopes.
///
/// Any pair can be moved to `(1/0, r/s)`, and the stabilizer of `1/0` only
/// shifts `r` by multiples of `s`. Swapping the pair replaces `r` by `r⁻¹`
/// and mirroring replaces it by `-r`, hence the orbit `{±r, ±r⁻¹} mod s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PairClass {
    #[serde(serialize_with = "crate::json::int")]
    pub dist: BigInt,
    #[serde(serialize_with = "ints")]
    pub residues: Vec<BigInt>,
}

fn ints<S: serde::Serializer>(v: &[BigInt], serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(v.iter().map(crate::json::Int))
}

/// `{r, -r, r⁻¹, -r⁻¹} mod s`, sorted. For `s = 1` this is `{0}`.
pub fn pair_orbit_residues(r_s: &Slope) -> Result<Vec<BigInt>> {
    let s = r_s.den();
    if s.is_zero() {
        return Err(Error::DegeneratePair);
    }
    Ok(orbit(r_s.num(), s))
}

pub(crate) fn orbit(r: &BigInt, s: &BigInt) -> Vec<BigInt> {
    let r = r.mod_floor(s);
    let inv = mod_inverse(&r, s).expect("residue of a reduced slope is a unit");
    let set: BTreeSet<BigInt> = [(-&r).mod_floor(s), (-&inv).mod_floor(s), r, inv]
        .into_iter()
        .collect();
    set.into_iter().collect()
}

pub fn pair_canonical(x: &Slope, y: &Slope) -> Result<PairClass> {
    let image = unimodular_taking(x).apply(y);
    let residues = pair_orbit_residues(&image)?;
    Ok(PairClass {
        dist: image.den().clone(),
        residues,
    })
}

pub fn pairs_homeomorphic(a: (&Slope, &Slope), b: (&Slope, &Slope)) -> Result<bool> {
    Ok(pair_canonical(a.0, a.1)? == pair_canonical(b.0, b.1)?)
}

impl PairClass {
    /// Whether `w mod dist` lies in the residue orbit.
    pub fn contains(&self, w: &BigInt) -> bool {
        if self.dist.is_one() {
            return true;
        }
        self.residues.binary_search(&w.mod_floor(&self.dist)).is_ok()
    }
}

//! Exact arithmetic for rational tangles and 2-bridge links: continued
//! fractions, the modular group action on slopes, the families of tangle
//! pairs related by rational subtangle replacement, and the lens space
//! surgery calculus of their branched double covers.

mod arith;
pub mod cf;
pub mod error;
pub mod json;
pub mod lens;
pub mod modular;
pub mod notation;
pub mod pair;
pub mod plat;
pub mod rsr;
pub mod slope;
pub mod two_bridge;

pub use cf::{cf_equal, cf_eval, cf_expand, ContinuedFraction};
pub use error::{Error, Result};
pub use lens::{
    klein_fiber_classify, klein_fiber_surgeries, lens_equiv, lens_of_seifert, seifert_knot_catalog,
    seifert_normalize, torus_knot_surgery, torus_knot_surgery_solve, KleinFiber, KleinKind, KleinSurgery,
    LensSpace, SeifertCatalog, SeifertInvariant, TorusSurgery,
};
pub use modular::{unimodular_apply, unimodular_taking, UnimodularMap};
pub use notation::{
    parse_cf, parse_lens, parse_link, parse_slope, parse_tangle_notation, Notation, ParseError,
};
pub use pair::{pair_canonical, pair_orbit_residues, pairs_homeomorphic, PairClass};
pub use plat::{cf_to_plat, plat_closure, plat_render, PlatDesc, Region, RenderFormat};
pub use rsr::{
    classify_rsr, family_general_members, family_i_general_params, family_normalized_value,
    family_params_for_root, representative_cf_pair, rsr_families, site_plat, Family, FamilyMember,
    GeneralParams, RsrWitness,
};
pub use slope::Slope;
pub use two_bridge::{
    greene_check, lisca_check, tb_closure, tb_equiv, tb_rsr_decide, tb_rsr_site_cf, Certificate, CheckResult,
    TbRsr, TwoBridgeLink,
};

/// `|x.num * y.den - x.den * y.num|`.
pub fn slope_distance(x: &Slope, y: &Slope) -> num_bigint::BigInt {
    x.distance(y)
}

use thiserror::Error;

use crate::cf::ContinuedFraction;
use crate::notation::ParseError;
use crate::rsr::Family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("0/0 is not a slope")]
    ZeroOverZero,
    #[error("matrix [[{a}, {b}], [{c}, {d}]] does not have determinant 1")]
    NotUnimodular {
        a: String,
        b: String,
        c: String,
        d: String,
    },
    #[error("slope pair is degenerate (the two slopes coincide)")]
    DegeneratePair,
    #[error("parameters {a} and {b} are not coprime")]
    NotCoprime { a: String, b: String },
    #[error("family {0} exists only for distance d = 1")]
    RequiresDistanceOne(Family),
    #[error("invalid distance {0}")]
    InvalidDistance(u64),
    #[error("S({p},{q}) is not a canonical 2-bridge link")]
    NonCanonicalLink { p: String, q: String },
    #[error("L({p},{q}) is not a lens space")]
    InvalidLens { p: String, q: String },
    #[error("Seifert invariant does not have the M(-1;(a,1)) shape")]
    SeifertShape,
    #[error("no plat site description for family {family}; representative pair is {first} <-> {second}")]
    UnsupportedSite {
        family: Family,
        first: ContinuedFraction,
        second: ContinuedFraction,
    },
    #[error("site continued fractions could not be verified against the inputs")]
    SiteVerification,
    #[error("{0} is too large for this operation")]
    TooLarge(String),
    #[error("unknown render format {0:?}")]
    UnknownFormat(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    /// Stable machine-readable tag for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroOverZero => "zero-over-zero",
            Error::NotUnimodular { .. } => "not-unimodular",
            Error::DegeneratePair => "degenerate-pair",
            Error::NotCoprime { .. } => "not-coprime",
            Error::RequiresDistanceOne(_) => "requires-distance-one",
            Error::InvalidDistance(_) => "invalid-distance",
            Error::NonCanonicalLink { .. } => "non-canonical-link",
            Error::InvalidLens { .. } => "invalid-lens",
            Error::SeifertShape => "seifert-shape",
            Error::UnsupportedSite { .. } => "unsupported-site",
            Error::SiteVerification => "site-verification",
            Error::TooLarge(_) => "too-large",
            Error::UnknownFormat(_) => "unknown-format",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

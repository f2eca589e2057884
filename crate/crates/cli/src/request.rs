//! Requests, shared by the command line and the JSON-lines batch format.

use std::str::FromStr;

use clap::{Args, Subcommand};
use num_bigint::BigInt;
use serde::{Deserialize, Deserializer};

/// An integer argument of any size; JSON accepts a number or a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl FromStr for Int {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.trim()
            .parse()
            .map(Int)
            .map_err(|_| format!("invalid integer {s:?}"))
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match serde_json::Value::deserialize(deserializer)? {
            serde_json::Value::Number(n) => n.to_string().parse().map_err(D::Error::custom),
            serde_json::Value::String(s) => s.parse().map_err(D::Error::custom),
            other => Err(D::Error::custom(format!("expected an integer, found {other}"))),
        }
    }
}

#[derive(Subcommand, Deserialize, Debug)]
#[serde(
    tag = "command",
    content = "args",
    rename_all = "kebab-case",
    deny_unknown_fields
)]
pub enum Command {
    /// Value of a slope or continued fraction
    Eval(Value),
    /// Canonical continued fraction of a slope
    Expand(Value),
    /// Homeomorphism invariant of a pair of slopes
    PairCanon(SlopePair),
    /// Families relating two tangles at distance d, with witnesses
    ClassifyRsr(Classify),
    /// Members of a family around a base tangle
    EnumerateFamily(Enumerate),
    /// Decide whether two 2-bridge links are related at distance d >= 2
    TbRsr(LinkPair),
    /// Site continued fractions for a related pair of 2-bridge links
    TbSite(TbSite),
    /// Greene's criterion for banding to the unknot
    Greene(OneLink),
    /// Lisca's criterion for banding to the unlink
    Lisca(OneLink),
    /// 1/n surgery on a torus knot in a lens space
    Surgery(Surgery),
    /// Torus knot surgeries between two lens spaces
    SurgerySolve(SurgerySolve),
    /// Lens space surgeries on the Klein-bottle fiber
    Klein(Klein),
    /// Seifert-exterior knots of a lens space
    Catalog(OneLens),
    /// Draw a continued fraction as a 4-plat
    Render(Render),
}

#[derive(Args, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct Value {
    /// Slope `p/q` or continued fraction `[a,b,...]`
    #[arg(allow_hyphen_values = true)]
    pub input: String,
}

#[derive(Args, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct SlopePair {
    #[arg(allow_hyphen_values = true)]
    pub x: String,
    #[arg(allow_hyphen_values = true)]
    pub y: String,
}

#[derive(Args, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct Classify {
    #[arg(allow_hyphen_values = true)]
    pub x: String,
    #[arg(allow_hyphen_values = true)]
    pub y: String,
    #[arg(long)]
    pub d: u64,
    /// Report every witness instead of one per family
    #[arg(long)]
    #[serde(default)]
    pub verbose: bool,
    /// Also draw the site plats of each witness
    #[arg(long)]
    #[serde(default)]
    pub format: Option<String>,
}

#[derive(Args, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct Enumerate {
    #[arg(allow_hyphen_values = true)]
    pub base: String,
    /// O, I, II, III or IV
    pub family: String,
    #[arg(long)]
    pub d: u64,
    /// Largest parameter size
    #[arg(long)]
    pub bound: u64,
}

#[derive(Args, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct LinkPair {
    /// `S(p,q)`
    pub x: String,
    pub y: String,
    #[arg(long)]
    pub d: u64,
}

#[derive(Args, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct TbSite {
    pub x: String,
    pub y: String,
    #[arg(long)]
    pub d: u64,
    /// Also draw the two plats
    #[arg(long)]
    #[serde(default)]
    pub format: Option<String>,
}

#[derive(Args, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct OneLink {
    /// `S(p,q)`
    pub link: String,
}

#[derive(Args, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct OneLens {
    /// `L(p,q)`
    pub lens: String,
}

#[derive(Args, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct Surgery {
    /// `L(r,s)`
    pub lens: String,
    #[arg(allow_hyphen_values = true)]
    #[serde(rename = "P")]
    pub big_p: Int,
    #[arg(allow_hyphen_values = true)]
    #[serde(rename = "Q")]
    pub big_q: Int,
    #[arg(allow_hyphen_values = true)]
    pub n: Int,
}

#[derive(Args, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct SurgerySolve {
    pub from: String,
    pub to: String,
    #[arg(long)]
    pub d: u64,
    /// Keep only results homeomorphic to the target preserving orientation
    #[arg(long)]
    #[serde(default)]
    pub oriented: bool,
}

#[derive(Args, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct Klein {
    #[arg(allow_hyphen_values = true)]
    pub k: Int,
    /// Largest |n| listed for the infinite families
    #[arg(long)]
    pub bound: u64,
}

#[derive(Args, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct Render {
    /// Continued fraction, or a slope drawn through its canonical expansion
    #[arg(allow_hyphen_values = true)]
    pub input: String,
    #[arg(long, default_value = "ascii")]
    #[serde(default = "ascii")]
    pub format: String,
    /// Twist region to mark as the site
    #[arg(long)]
    #[serde(default)]
    pub site: Option<usize>,
}

fn ascii() -> String {
    "ascii".into()
}

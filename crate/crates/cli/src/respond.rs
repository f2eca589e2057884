//! Evaluation of a request into its JSON response.

use serde::Serialize;
use serde_json::{json, Value};
use tanglekit::{
    cf_expand, classify_rsr, family_general_members, greene_check, klein_fiber_classify,
    klein_fiber_surgeries, lens_equiv, lisca_check, pair_canonical, parse_lens, parse_link, parse_slope,
    parse_tangle_notation, plat_render, seifert_knot_catalog, site_plat, tb_rsr_decide, tb_rsr_site_cf,
    torus_knot_surgery, torus_knot_surgery_solve, CheckResult, ContinuedFraction, Error, Family, Notation,
    PlatDesc, RenderFormat, TwoBridgeLink,
};

use crate::request::Command;

#[derive(Debug)]
pub enum Failure {
    Library(Error),
    /// The request itself is malformed.
    Request(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    pub fn to_json(&self) -> Value {
        let (kind, message) = match self {
            Failure::Library(e) => (e.kind(), e.to_string()),
            Failure::Request(m) => ("request", m.clone()),
        };
        json!({ "kind": kind, "message": message })
    }
}

type Response = Result<Value, Failure>;

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("responses serialize")
}

fn format(name: &str) -> Result<RenderFormat, Failure> {
    Ok(name.parse::<RenderFormat>()?)
}

fn drawings(before: &PlatDesc, after: &PlatDesc, fmt: RenderFormat) -> Value {
    json!({ "before": plat_render(before, fmt), "after": plat_render(after, fmt) })
}

pub fn respond(command: &Command) -> Response {
    match command {
        Command::Eval(v) => {
            let value = parse_tangle_notation(&v.input)?.value();
            Ok(json!({ "slope": value.to_string() }))
        }
        Command::Expand(v) => {
            let value = parse_tangle_notation(&v.input)?.value();
            Ok(json!({ "slope": value.to_string(), "cf": cf_expand(&value).to_string() }))
        }
        Command::PairCanon(a) => {
            let (x, y) = (parse_slope(&a.x)?, parse_slope(&a.y)?);
            Ok(to_value(pair_canonical(&x, &y)?))
        }
        Command::ClassifyRsr(a) => {
            let (x, y) = (parse_slope(&a.x)?, parse_slope(&a.y)?);
            let fmt = a.format.as_deref().map(format).transpose()?;
            let witnesses = classify_rsr(&x, &y, a.d, a.verbose)?;
            let mut families: Vec<Family> = witnesses.iter().map(|w| w.family).collect();
            families.dedup();
            let mut out = json!({ "families": families, "witnesses": witnesses });
            if let Some(fmt) = fmt {
                let sites: Vec<Value> = witnesses
                    .iter()
                    .map(|w| match site_plat(w) {
                        Ok((before, after)) => drawings(&before, &after, fmt),
                        Err(e) => json!({ "error": Failure::Library(e).to_json() }),
                    })
                    .collect();
                out["sites"] = Value::Array(sites);
            }
            Ok(out)
        }
        Command::EnumerateFamily(a) => {
            let base = parse_slope(&a.base)?;
            let family: Family = a.family.parse().map_err(Failure::Request)?;
            let members = family_general_members(&base, a.d, family, a.bound)?;
            Ok(json!({
                "base": base.to_string(),
                "family": family,
                "d": a.d,
                "bound": a.bound,
                "members": members,
            }))
        }
        Command::TbRsr(a) => {
            let (x, y) = (parse_link(&a.x)?, parse_link(&a.y)?);
            let found = tb_rsr_decide(&x, &y, a.d)?;
            let mut out = json!({ "related": found.is_some() });
            if let Some(found) = found {
                if let (Value::Object(out), Value::Object(found)) = (&mut out, to_value(found)) {
                    out.extend(found);
                }
            }
            Ok(out)
        }
        Command::TbSite(a) => {
            let (x, y) = (parse_link(&a.x)?, parse_link(&a.y)?);
            let fmt = a.format.as_deref().map(format).transpose()?;
            let found = tb_rsr_decide(&x, &y, a.d)?.ok_or_else(|| {
                Failure::Request(format!("{x} and {y} are not related at distance {}", a.d))
            })?;
            let (before, after) = tb_rsr_site_cf(&x, &y, &found)?;
            let site = site_index(&before, &after);
            let mut out = json!({
                "before": before.to_string(),
                "after": after.to_string(),
                "site": site,
            });
            if let Some(fmt) = fmt {
                let plat = |cf: &ContinuedFraction| {
                    let mut p = PlatDesc::from_cf(cf);
                    p.site = Some(site);
                    p
                };
                out["drawings"] = drawings(&plat(&before), &plat(&after), fmt);
            }
            Ok(out)
        }
        Command::Greene(a) => {
            let link = parse_link(&a.link)?;
            Ok(check(&link, greene_check(&link)?))
        }
        Command::Lisca(a) => {
            let link = parse_link(&a.link)?;
            Ok(check(&link, lisca_check(&link)?))
        }
        Command::Surgery(a) => {
            let l = parse_lens(&a.lens)?;
            Ok(to_value(torus_knot_surgery(
                l.p(),
                l.q(),
                &a.big_p.0,
                &a.big_q.0,
                &a.n.0,
            )?))
        }
        Command::SurgerySolve(a) => {
            let (from, to) = (parse_lens(&a.from)?, parse_lens(&a.to)?);
            let mut solutions = torus_knot_surgery_solve(&from, &to, a.d)?;
            if a.oriented {
                solutions.retain(|s| lens_equiv(&s.result, &to, true));
            }
            Ok(json!({ "from": from, "to": to, "d": a.d, "solutions": solutions }))
        }
        Command::Klein(a) => Ok(json!({
            "k": tanglekit::json::Int(&a.k.0),
            "kind": klein_fiber_classify(&a.k.0),
            "surgeries": klein_fiber_surgeries(&a.k.0, a.bound),
        })),
        Command::Catalog(a) => {
            let lens = parse_lens(&a.lens)?;
            let catalog = seifert_knot_catalog(&lens);
            Ok(json!({
                "space": lens,
                "torus_knots": catalog.torus_knots,
                "klein_fiber": catalog.klein_fiber,
            }))
        }
        Command::Render(a) => {
            let fmt = format(&a.format)?;
            let cf = match parse_tangle_notation(&a.input)? {
                Notation::Cf(cf) => cf,
                Notation::Slope(s) => cf_expand(&s),
            };
            let mut plat = PlatDesc::from_cf(&cf);
            if let Some(site) = a.site {
                if site >= cf.len() {
                    return Err(Failure::Request(format!(
                        "site {site} is out of range for {} twist regions",
                        cf.len()
                    )));
                }
                plat.site = Some(site);
            }
            Ok(json!({
                "format": a.format,
                "cf": cf.to_string(),
                "slope": plat.value().to_string(),
                "text": plat_render(&plat, fmt),
            }))
        }
    }
}

fn check(link: &TwoBridgeLink, result: CheckResult) -> Value {
    json!({ "link": link, "holds": result.holds, "certificates": result.certificates })
}

/// The one twist region in which the two site fractions differ.
fn site_index(before: &ContinuedFraction, after: &ContinuedFraction) -> usize {
    before
        .coeffs()
        .iter()
        .zip(after.coeffs())
        .position(|(b, a)| b != a)
        .expect("site fractions differ in one region")
}

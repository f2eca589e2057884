//! Open 4-plat presentations and their ASCII/SVG renderings.
//!
//! Twist regions alternate between strands 1-2 and strands 2-3, starting
//! with strands 1-2 at the top. A positive count is drawn as right-handed
//! half-twists.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::cf::ContinuedFraction;
use crate::error::{Error, Result};
use crate::slope::Slope;
use crate::two_bridge::{tb_closure, TwoBridgeLink};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Region {
    /// 0 for strands 1-2, 1 for strands 2-3.
    pub position: u8,
    #[serde(serialize_with = "crate::json::int")]
    pub twists: BigInt,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PlatDesc {
    pub regions: Vec<Region>,
    pub site: Option<usize>,
    pub framing_note: Option<String>,
}

impl PlatDesc {
    pub fn from_cf(cf: &ContinuedFraction) -> Self {
        let regions = cf
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, t)| Region {
                position: (i % 2) as u8,
                twists: t.clone(),
            })
            .collect();
        PlatDesc {
            regions,
            site: None,
            framing_note: None,
        }
    }

    pub fn coefficients(&self) -> ContinuedFraction {
        ContinuedFraction::new(self.regions.iter().map(|r| r.twists.clone()).collect())
    }

    pub fn value(&self) -> Slope {
        self.coefficients().eval()
    }
}

pub fn cf_to_plat(cf: &ContinuedFraction) -> PlatDesc {
    PlatDesc::from_cf(cf)
}

pub fn plat_closure(p: &PlatDesc) -> TwoBridgeLink {
    tb_closure(&p.value())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Twist regions longer than this are drawn with an ellipsis.
const MAX_DRAWN: u64 = 4;
const DRAWN_WHEN_ELIDED: u64 = 3;

fn drawn_half_twists(t: &BigInt) -> (u64, bool) {
    let n = t.abs().to_u64().unwrap_or(u64::MAX);
    if n > MAX_DRAWN {
        (DRAWN_WHEN_ELIDED, true)
    } else {
        (n, false)
    }
}

pub fn plat_render(p: &PlatDesc, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(p),
        RenderFormat::Svg => render_svg(p),
    }
}

const STRANDS: &str = "|   |   |   |";

fn ascii_row(position: u8, glyphs: [char; 3]) -> String {
    let mut row: Vec<char> = STRANDS.chars().collect();
    let c = 4 * position as usize;
    row[c] = glyphs[0];
    row[c + 1..c + 4].iter_mut().for_each(|ch| *ch = ' ');
    row[c + 2] = glyphs[1];
    row[c + 4] = glyphs[2];
    row.into_iter().collect()
}

fn render_ascii(p: &PlatDesc) -> String {
    let mut out = String::new();
    out.push_str(STRANDS);
    out.push('\n');
    for (i, region) in p.regions.iter().enumerate() {
        let (n, elided) = drawn_half_twists(&region.twists);
        let mut label = format!("   [{i}] {}", region.twists);
        if elided {
            label.push_str(&format!(" (drawn {DRAWN_WHEN_ELIDED} half-twists)"));
        }
        if p.site == Some(i) {
            label.push_str("  <== RSR site");
        }
        let mut rows: Vec<String> = Vec::new();
        let over = if region.twists.is_positive() { '/' } else { '\\' };
        for _ in 0..n {
            rows.push(ascii_row(region.position, ['\\', ' ', '/']));
            rows.push(ascii_row(region.position, [' ', over, ' ']));
            rows.push(ascii_row(region.position, ['/', ' ', '\\']));
        }
        if elided {
            rows.push(ascii_row(region.position, [' ', ':', ' ']));
        }
        if rows.is_empty() {
            rows.push(STRANDS.to_string());
        }
        for (j, row) in rows.iter().enumerate() {
            out.push_str(row);
            if j == 0 {
                out.push_str(&label);
            }
            out.push('\n');
        }
        out.push_str(STRANDS);
        out.push('\n');
    }
    out.push_str("\\___/   \\___/\n");
    if let Some(note) = &p.framing_note {
        out.push_str("note: ");
        out.push_str(note);
        out.push('\n');
    }
    out
}

const SPACING: u64 = 40;
const HALF_TWIST: u64 = 20;
const MARGIN: u64 = 20;
const LABEL_WIDTH: u64 = 220;

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn render_svg(p: &PlatDesc) -> String {
    let x = |strand: u64| MARGIN + strand * SPACING;
    let mut body = String::new();
    let mut y = MARGIN;
    let straight = |body: &mut String, strands: &[u64], y0: u64, y1: u64| {
        for &s in strands {
            let _ = writeln!(
                body,
                "  <line x1=\"{0}\" y1=\"{y0}\" x2=\"{0}\" y2=\"{y1}\" class=\"strand\"/>",
                x(s)
            );
        }
    };
    for (i, region) in p.regions.iter().enumerate() {
        let (n, elided) = drawn_half_twists(&region.twists);
        let rows = n.max(1) + u64::from(elided);
        let height = rows * HALF_TWIST;
        let left = region.position as u64;
        let others: Vec<u64> = (0..4).filter(|s| *s != left && *s != left + 1).collect();
        if p.site == Some(i) {
            let _ = writeln!(
                body,
                "  <rect x=\"{}\" y=\"{y}\" width=\"{}\" height=\"{height}\" class=\"site\"/>",
                x(left) - MARGIN / 2,
                SPACING + MARGIN
            );
        }
        straight(&mut body, &others, y, y + height);
        if n == 0 {
            straight(&mut body, &[left, left + 1], y, y + height);
        }
        let (xl, xr) = (x(left), x(left + 1));
        let xm = (xl + xr) / 2;
        for k in 0..n {
            let y0 = y + k * HALF_TWIST;
            let y1 = y0 + HALF_TWIST;
            // Right-handed: the strand running from top right to bottom left
            // passes over.
            let (over, under) = if region.twists.is_positive() {
                ((xr, xl), (xl, xr))
            } else {
                ((xl, xr), (xr, xl))
            };
            let _ = writeln!(
                body,
                "  <line x1=\"{}\" y1=\"{y0}\" x2=\"{}\" y2=\"{y1}\" class=\"strand\"/>",
                over.0, over.1
            );
            // The under strand is broken around the crossing point.
            let (ux0, ux1) = (under.0 as i64, under.1 as i64);
            let dir = if ux1 > ux0 { 1 } else { -1 };
            let _ = writeln!(
                body,
                "  <line x1=\"{ux0}\" y1=\"{y0}\" x2=\"{}\" y2=\"{}\" class=\"strand\"/>",
                ux0 + dir * 16,
                y0 + 8
            );
            let _ = writeln!(
                body,
                "  <line x1=\"{}\" y1=\"{}\" x2=\"{ux1}\" y2=\"{y1}\" class=\"strand\"/>",
                ux0 + dir * 24,
                y0 + 12
            );
        }
        if elided {
            let y0 = y + n * HALF_TWIST;
            straight(&mut body, &[left, left + 1], y0, y0 + HALF_TWIST);
            let _ = writeln!(
                body,
                "  <text x=\"{xm}\" y=\"{}\" class=\"ellipsis\">...</text>",
                y0 + HALF_TWIST / 2 + 4
            );
        }
        let mut label = format!("[{i}] {}", region.twists);
        if p.site == Some(i) {
            label.push_str(" RSR site");
        }
        let _ = writeln!(
            body,
            "  <text x=\"{}\" y=\"{}\" class=\"label\">{}</text>",
            x(3) + MARGIN,
            y + HALF_TWIST / 2 + 4,
            xml_escape(&label)
        );
        y += height;
    }
    // Bottom caps closing strands 1-2 and 3-4.
    for left in [0u64, 2] {
        let _ = writeln!(
            body,
            "  <path d=\"M {} {y} Q {} {} {} {y}\" class=\"strand\"/>",
            x(left),
            (x(left) + x(left + 1)) / 2,
            y + HALF_TWIST,
            x(left + 1)
        );
    }
    y += HALF_TWIST;
    if let Some(note) = &p.framing_note {
        y += HALF_TWIST;
        let _ = writeln!(
            body,
            "  <text x=\"{MARGIN}\" y=\"{y}\" class=\"note\">{}</text>",
            xml_escape(note)
        );
    }
    let width = x(3) + MARGIN + LABEL_WIDTH;
    let height = y + MARGIN;
    let mut out = String::new();
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    out.push_str("  <style>.strand{stroke:#000;stroke-width:2;fill:none}.site{fill:#ffe08a}.label,.note,.ellipsis{font:12px monospace}</style>\n");
    out.push_str(&body);
    out.push_str("</svg>\n");
    out
}

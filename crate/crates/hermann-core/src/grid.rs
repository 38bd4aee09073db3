//! Lattice samples of the field, CSV round trip and SVG phase portraits.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::GridError;
use crate::field::{field_vector, potential, EPS_WALL};
use crate::model::Action;
use crate::roots::Vec2;

pub const CSV_HEADER: &str = "x1,x2,X1,X2,normX,phi";

/// Ten significant digits. Plain decimals between 1e-5 and 1e15, scientific
/// otherwise; zero prints as `0.0000000000`.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let x = if x == 0.0 { 0.0 } else { x };
    if x == 0.0 {
        return "0.0000000000".to_string();
    }
    let sci = format!("{x:.9e}");
    let exp: i32 = sci.rsplit_once('e').and_then(|(_, e)| e.parse().ok()).unwrap_or(0);
    if !(-5..15).contains(&exp) {
        return sci;
    }
    let decimals = (9 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridRow {
    pub x1: f64,
    pub x2: f64,
    pub fx1: f64,
    pub fx2: f64,
    pub norm: f64,
    pub phi: f64,
}

impl GridRow {
    pub fn csv_line(&self) -> String {
        [self.x1, self.x2, self.fx1, self.fx2, self.norm, self.phi].map(fmt_num).join(",")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridSample {
    pub action_id: String,
    pub resolution: usize,
    /// `[xmin, xmax, ymin, ymax]` of the lattice.
    pub bbox: [f64; 4],
    pub vertices: [Vec2; 3],
    /// Sorted by (x1, x2).
    pub rows: Vec<GridRow>,
}

fn lattice(lo: f64, hi: f64, n: usize, i: usize) -> f64 {
    lo + (hi - lo) * i as f64 / (n - 1) as f64
}

/// The bounding box of the simplex on an `n × n` lattice, keeping points
/// whose wall margin exceeds `10·ε_wall`.
pub fn sample_grid(action: &Action, n: usize) -> Result<GridSample, GridError> {
    if !(2..=2000).contains(&n) {
        return Err(GridError::Resolution(n));
    }
    let bbox = action.simplex.bbox();
    let columns: Vec<Vec<GridRow>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let x1 = lattice(bbox[0], bbox[1], n, i);
            (0..n)
                .filter_map(|j| {
                    let z = [x1, lattice(bbox[2], bbox[3], n, j)];
                    if !action.simplex.contains(z, 10.0 * EPS_WALL) {
                        return None;
                    }
                    let x = field_vector(action, z).ok()?;
                    let phi = potential(action, z).ok()?;
                    let norm = x[0].hypot(x[1]);
                    [x[0], x[1], norm, phi].iter().all(|v| v.is_finite()).then_some(GridRow {
                        x1: z[0],
                        x2: z[1],
                        fx1: x[0],
                        fx2: x[1],
                        norm,
                        phi,
                    })
                })
                .collect()
        })
        .collect();
    Ok(GridSample {
        action_id: action.id().to_string(),
        resolution: n,
        bbox,
        vertices: action.simplex.vertices,
        rows: columns.into_iter().flatten().collect(),
    })
}

pub fn to_csv(sample: &GridSample) -> String {
    let mut out = String::with_capacity(64 * (sample.rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in &sample.rows {
        out.push_str(&r.csv_line());
        out.push('\n');
    }
    out
}

pub fn read_csv(text: &str) -> Result<Vec<GridRow>, GridError> {
    let mut lines = text.lines();
    if lines.next() != Some(CSV_HEADER) {
        return Err(GridError::Parse { line: 1, reason: "missing header".into() });
    }
    lines
        .enumerate()
        .map(|(k, line)| {
            let bad = |reason: String| GridError::Parse { line: k + 2, reason };
            let v: Vec<f64> = line
                .split(',')
                .map(|s| s.parse::<f64>().map_err(|e| bad(format!("{s}: {e}"))))
                .collect::<Result<_, _>>()?;
            if v.len() != 6 {
                return Err(bad(format!("{} fields", v.len())));
            }
            Ok(GridRow { x1: v[0], x2: v[1], fx1: v[2], fx2: v[3], norm: v[4], phi: v[5] })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SvgStyle {
    pub width: u32,
    pub arrows: bool,
    /// Roughly this many arrows per axis.
    pub arrows_per_axis: usize,
    pub markers: Vec<Vec2>,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle { width: 640, arrows: true, arrows_per_axis: 24, markers: Vec::new() }
    }
}

pub fn render_svg(sample: &GridSample, style: &SvgStyle) -> Result<String, GridError> {
    if sample.rows.is_empty() {
        return Err(GridError::Empty);
    }
    let [x0, x1, y0, y1] = sample.bbox;
    let pad = 20.0;
    let w = style.width as f64;
    let scale = (w - 2.0 * pad) / (x1 - x0).max(y1 - y0);
    let h = (y1 - y0) * scale + 2.0 * pad;
    let px = |z: Vec2| (pad + (z[0] - x0) * scale, h - pad - (z[1] - y0) * scale);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{:.0}" viewBox="0 0 {} {:.2}">"#,
        style.width, h, style.width, h
    );
    let _ = writeln!(s, "<title>{}</title>", sample.action_id);
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let pts: Vec<String> = sample
        .vertices
        .iter()
        .map(|v| {
            let (a, b) = px(*v);
            format!("{a:.2},{b:.2}")
        })
        .collect();
    let _ = writeln!(s, r##"<polygon points="{}" fill="none" stroke="#000000" stroke-width="1.5"/>"##, pts.join(" "));

    if style.arrows {
        let n = sample.resolution;
        let stride = n.div_ceil(style.arrows_per_axis.max(1)).max(1);
        let cell = stride as f64 * (x1 - x0).max(y1 - y0) / (n - 1) as f64 * scale;
        let index = |v: f64, lo: f64, hi: f64| ((v - lo) / (hi - lo) * (n - 1) as f64).round() as usize;
        let picked: Vec<&GridRow> = sample
            .rows
            .iter()
            .filter(|r| index(r.x1, x0, x1) % stride == 0 && index(r.x2, y0, y1) % stride == 0)
            .collect();
        let lmax = picked.iter().map(|r| r.norm.ln_1p()).fold(0.0, f64::max);
        let _ = writeln!(s, r##"<g stroke="#1f4e99" stroke-width="1">"##);
        for r in picked {
            if r.norm == 0.0 || lmax == 0.0 {
                continue;
            }
            let len = 0.9 * cell * r.norm.ln_1p() / lmax;
            let (a, b) = px([r.x1, r.x2]);
            let (dx, dy) = (r.fx1 / r.norm * len, -r.fx2 / r.norm * len);
            let (ex, ey) = (a + dx, b + dy);
            // arrow head: two short strokes back from the tip
            let hl = 0.3 * len;
            let (ux, uy) = (dx / len, dy / len);
            let h1 = (ex - hl * (ux * 0.866 - uy * 0.5), ey - hl * (uy * 0.866 + ux * 0.5));
            let h2 = (ex - hl * (ux * 0.866 + uy * 0.5), ey - hl * (uy * 0.866 - ux * 0.5));
            let _ = writeln!(
                s,
                r#"<path d="M{a:.2},{b:.2}L{ex:.2},{ey:.2}M{:.2},{:.2}L{ex:.2},{ey:.2}L{:.2},{:.2}" fill="none"/>"#,
                h1.0, h1.1, h2.0, h2.1
            );
        }
        let _ = writeln!(s, "</g>");
    }
    for m in &style.markers {
        let (a, b) = px(*m);
        let _ = writeln!(s, r##"<circle cx="{a:.2}" cy="{b:.2}" r="4" fill="#c0392b"/>"##);
    }
    s.push_str("</svg>\n");
    Ok(s)
}

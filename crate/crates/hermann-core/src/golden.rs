//! Printed equilibria and their reproduction by the solvers.

use std::f64::consts::PI;

use crate::error::GoldenError;
use crate::model::Action;
use crate::roots::Vec2;
use crate::solver::{find_edge_equilibria, find_interior_equilibrium, EquilibriumKind};

const S3: f64 = 1.732_050_807_568_877_2;
pub const DECIMAL_TOL: f64 = 1e-4;
pub const CLOSED_FORM_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct GoldenValue {
    pub text: String,
    pub value: f64,
    /// Exact expressions (and a bare 0) are held to a tighter tolerance than decimals.
    pub closed_form: bool,
}

impl GoldenValue {
    pub fn tolerance(&self) -> f64 {
        if self.closed_form {
            CLOSED_FORM_TOL
        } else {
            DECIMAL_TOL
        }
    }
}

/// `[k]π/m`, `[k]π/(m√3)`
fn parse_pi(s: &str) -> Option<f64> {
    let (num, den) = s.split_once('/')?;
    let k: f64 = match num.strip_suffix('π')? {
        "" => 1.0,
        k => k.parse().ok()?,
    };
    let den = match den.strip_prefix('(').and_then(|d| d.strip_suffix("√3)")) {
        Some(m) => m.parse::<f64>().ok()? * S3,
        None => den.parse().ok()?,
    };
    Some(k * PI / den)
}

pub fn parse_golden(text: &str) -> Result<GoldenValue, GoldenError> {
    let t = text.trim().replace('−', "-");
    let (sign, body) = match t.strip_prefix('-') {
        Some(b) => (-1.0, b),
        None => (1.0, t.as_str()),
    };
    let err = || GoldenError::Parse(text.to_string());
    let (value, closed_form) = if body == "arctan(1/3)" {
        ((1.0f64 / 3.0).atan(), true)
    } else if body.contains('π') {
        (parse_pi(body).ok_or_else(err)?, true)
    } else {
        let v: f64 = body.parse().map_err(|_| err())?;
        (v, v == 0.0)
    };
    Ok(GoldenValue { text: text.to_string(), value: sign * value, closed_form })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointCheck {
    pub golden: [GoldenValue; 2],
    pub got: Vec2,
    pub kind: EquilibriumKind,
    pub deviation: [f64; 2],
    pub pass: bool,
}

impl PointCheck {
    fn new(golden: [GoldenValue; 2], got: Vec2, kind: EquilibriumKind) -> Self {
        let deviation = [(got[0] - golden[0].value).abs(), (got[1] - golden[1].value).abs()];
        let pass = deviation[0] <= golden[0].tolerance() && deviation[1] <= golden[1].tolerance();
        PointCheck { golden, got, kind, deviation, pass }
    }

    fn score(&self) -> f64 {
        (self.deviation[0] / self.golden[0].tolerance()).max(self.deviation[1] / self.golden[1].tolerance())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table31Report {
    pub id: String,
    pub interior: Option<PointCheck>,
    /// One entry per printed edge point, matched to the computed edge
    /// equilibrium that fits it best (printed order is not edge order).
    pub edges: Vec<PointCheck>,
}

impl Table31Report {
    pub fn interior_pass(&self) -> bool {
        self.interior.as_ref().is_none_or(|c| c.pass)
    }

    pub fn edges_pass(&self) -> bool {
        self.edges.iter().all(|c| c.pass)
    }

    pub fn pass(&self) -> bool {
        self.interior_pass() && self.edges_pass()
    }
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Runs both solvers and compares against the printed values.
pub fn reproduce_table31(action: &Action) -> Result<Table31Report, GoldenError> {
    let missing = || GoldenError::MissingGolden(action.id().to_string());
    let t = action.spec.table31.as_ref().ok_or_else(missing)?;
    if t.interior.is_none() && t.edges.is_empty() {
        return Err(missing());
    }
    let pair = |p: &[String; 2]| -> Result<[GoldenValue; 2], GoldenError> {
        Ok([parse_golden(&p[0])?, parse_golden(&p[1])?])
    };
    let interior = match &t.interior {
        Some(p) => {
            let r = find_interior_equilibrium(action)?;
            Some(PointCheck::new(pair(p)?, r.location, r.kind))
        }
        None => None,
    };
    let mut edges = Vec::new();
    if !t.edges.is_empty() {
        let found = find_edge_equilibria(action)?;
        let golden: Vec<[GoldenValue; 2]> = t.edges.iter().map(pair).collect::<Result<_, _>>()?;
        let mut best: Option<(f64, Vec<PointCheck>)> = None;
        for perm in PERMS {
            let checks: Vec<PointCheck> = golden
                .iter()
                .zip(perm)
                .map(|(g, k)| PointCheck::new(g.clone(), found[k].location, found[k].kind))
                .collect();
            let score = checks.iter().map(PointCheck::score).fold(0.0, f64::max);
            if best.as_ref().is_none_or(|b| score < b.0) {
                best = Some((score, checks));
            }
        }
        edges = best.map(|b| b.1).unwrap_or_default();
    }
    Ok(Table31Report { id: action.id().to_string(), interior, edges })
}

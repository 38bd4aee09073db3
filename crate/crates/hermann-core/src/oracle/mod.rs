//! Explicit per-action field formulas, kept exactly as printed, for checking
//! the generic root-sum construction. Nothing outside verification uses them.

mod formulas;

use std::fmt;

use crate::catalog::{HermannActionSpec, Params};
use crate::error::OracleError;
use crate::field::field_vector;
use crate::model::{Action, Family};
use crate::roots::{RootSystemKind, Vec2};

const S3: f64 = 1.732_050_807_568_877_2;
/// Sample points stay this far (λ units) from every wall.
const SAMPLE_MARGIN: f64 = 1e-3;
pub const PASS_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Func {
    Cot,
    Tan,
}

/// `coef · func(a·x + b·y)` in component `comp` (0 = x, 1 = y).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Term {
    pub comp: u8,
    pub coef: crate::catalog::Mult,
    pub func: Func,
    pub a: i64,
    pub b: i64,
}

/// A printed domain and the vertices of the triangle it describes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Domain {
    pub text: &'static str,
    pub vertices: [Vec2; 3],
}

impl Domain {
    /// Smallest distance to a side, negative outside.
    pub fn margin(&self, z: Vec2) -> f64 {
        let v = self.vertices;
        let mut m = f64::INFINITY;
        for i in 0..3 {
            let (a, b, c) = (v[i], v[(i + 1) % 3], v[(i + 2) % 3]);
            let n = [b[1] - a[1], a[0] - b[0]];
            let len = n[0].hypot(n[1]);
            let side = |p: Vec2| (n[0] * (p[0] - a[0]) + n[1] * (p[1] - a[1])) / len;
            let s = side(c).signum();
            m = m.min(s * side(z));
        }
        m
    }
}

struct RawRow {
    id: &'static str,
    kind: RootSystemKind,
    terms: &'static [Term],
    domain: Domain,
}

/// Rows whose printed formula differs from the root-sum construction, with
/// the printed and the predicted terms.
pub const FLAGGED: &[(&str, &str)] = &[
    ("rho2_Sp3_SU6_Sp3", "x prints 4tan(x-√3y) + 2tan(x-√3y), repeating one argument; catalog 4tan(x-√3y) + 4tan(x+√3y). \
        y prints 4√3tan(x-√3y) - 4√3tan(x+√3y); catalog has the opposite signs"),
    ("SOq2_SUq2_SU2xUq", "x prints (q-2)tan x - tan(x-y) + tan(x+y) + tan 2x; catalog 2(q-2)tan x + 2tan(x-y) + 2tan(x+y) + 2tan 2x. \
        y prints (q-2)tan y - tan(x-y) + tan(x+y) + 2tan 2y; catalog 2(q-2)tan y - 2tan(x-y) + 2tan(x+y) + 4tan 2y"),
    ("SO4_SU4_SU2xU2", "x prints -tan(x-y); catalog +tan(x-y)"),
    ("SUj1xUqj1_SUq2_SU2xUq", "x prints -2tan(x-y); catalog +2tan(x-y)"),
    ("SO4xSO4_SO8_U4", "x and y print -2cot(x+y); catalog -cot(x+y)"),
    ("SO4xSO6_SO10_U5", "every coefficient is half the catalog's (x prints -cot x, catalog -2cot x); \
        y prints -cot(x-y), catalog +2cot(x-y)"),
    ("SO5xSO5_SO10_U5", "every coefficient is half the catalog's (x prints tan 2x, catalog 2tan 2x); \
        y prints -cot(x-y), catalog +2cot(x-y)"),
    ("SO2sqxSO3sq_SO5xSO5_SO5", "y prints -2cot(x+y); catalog -cot(x+y)"),
    ("SU6SU2_E6_Spin10U1", "x and y print 3tan(x+y); catalog tan(x+y) from the printed H multiplicity 1 of 2α+β"),
    ("rho12_Spin10U1_E6_Spin10U1", "x prints -2cot 2x + 5tan x + 4tan(x-y) + 2tan(x+y); \
        catalog 2tan x + 5tan(x-y) + 4tan(x+y) + 2tan 2x"),
    ("rho13_F4_E6_F4", "x prints 8tan(3x-√3y), not an A2 root; catalog 8tan(x+√3y)"),
    ("rho14_SO4_G2_SO4", "x prints -tan(x-√3y) - 3tan(3x-√3y), y prints -√3tan(x+√3y); catalog has the opposite signs"),
    ("rho15_SO4_G2_SO4", "x prints -tan(x-√3y) - 3tan(3x-√3y), y prints -√3tan(x+√3y); catalog has the opposite signs"),
    ("rho16_G2_G2xG2_G2", "x prints -2tan(x-√3y) - 6tan(3x-√3y), y prints -2√3tan(x+√3y); catalog has the opposite signs"),
    ("SU2p4_G2xG2_G2", "y prints -√3cot(x-√3y); catalog +√3cot(x-√3y)"),
];

#[derive(Clone, Debug, PartialEq)]
pub struct ExplicitFormula {
    /// Catalog id without parameter suffix.
    pub id: &'static str,
    pub kind: RootSystemKind,
    pub terms: &'static [Term],
    pub domain: Domain,
    pub flagged_terms: Vec<String>,
}

fn sqrt3_kind(kind: RootSystemKind) -> bool {
    matches!(kind, RootSystemKind::A2 | RootSystemKind::G2)
}

pub fn base_id(id: &str) -> &str {
    id.split("_q").next().unwrap_or(id)
}

pub fn formulas() -> Vec<ExplicitFormula> {
    formulas::table()
        .into_iter()
        .map(|r| ExplicitFormula {
            id: r.id,
            kind: r.kind,
            terms: r.terms,
            domain: r.domain,
            flagged_terms: FLAGGED.iter().filter(|f| f.0 == r.id).map(|f| f.1.to_string()).collect(),
        })
        .collect()
}

pub fn formula_for(id: &str) -> Result<ExplicitFormula, OracleError> {
    let base = base_id(id);
    formulas().into_iter().find(|f| f.id == base).ok_or_else(|| OracleError::Unsupported(id.to_string()))
}

impl ExplicitFormula {
    /// Evaluates the printed expression, without a domain check.
    pub fn eval(&self, params: Option<&Params>, z: Vec2) -> Vec2 {
        let s = if sqrt3_kind(self.kind) { S3 } else { 1.0 };
        let mut out = [0.0; 2];
        for t in self.terms {
            let u = t.a as f64 * z[0] + t.b as f64 * s * z[1];
            let f = match t.func {
                Func::Cot => 1.0 / u.tan(),
                Func::Tan => u.tan(),
            };
            let c = t.coef.eval(params) as f64 * if t.comp == 1 { s } else { 1.0 };
            out[t.comp as usize] += c * f;
        }
        out
    }

    pub fn is_flagged(&self) -> bool {
        !self.flagged_terms.is_empty()
    }
}

/// The printed formula for `action`, evaluated strictly inside its printed domain.
pub fn explicit_field(action: &Action, z: Vec2) -> Result<Vec2, OracleError> {
    let f = formula_for(action.id())?;
    if f.domain.margin(z) <= 0.0 {
        return Err(OracleError::OutsideDomain(z));
    }
    Ok(f.eval(action.spec.params.as_ref(), z))
}

/// A trig term keyed by component, function and normalized argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TermKey {
    pub comp: u8,
    pub func: Func,
    pub a: i64,
    pub b: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermDiff {
    pub key: TermKey,
    pub printed: i64,
    pub predicted: i64,
    pub sqrt3: bool,
}

fn arg_text(a: i64, b: i64, sqrt3: bool) -> String {
    let y = if sqrt3 { "√3y" } else { "y" };
    let coef = |k: i64, var: &str| match k {
        1 => var.to_string(),
        -1 => format!("-{var}"),
        k => format!("{k}{var}"),
    };
    match (a, b) {
        (a, 0) => coef(a, "x"),
        (0, b) => coef(b, y),
        (a, b) if b > 0 => format!("{}+{}", coef(a, "x"), coef(b, y)),
        (a, b) => format!("{}-{}", coef(a, "x"), coef(-b, y)),
    }
}

impl TermDiff {
    fn coef_text(&self, c: i64) -> String {
        if self.sqrt3 && self.key.comp == 1 && c != 0 {
            match c {
                1 => "√3".into(),
                -1 => "-√3".into(),
                c => format!("{c}√3"),
            }
        } else {
            c.to_string()
        }
    }
}

impl fmt::Display for TermDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let func = match self.key.func {
            Func::Cot => "cot",
            Func::Tan => "tan",
        };
        write!(
            f,
            "{}: {}({}) printed {}, catalog {}",
            ["x", "y"][self.key.comp as usize],
            func,
            arg_text(self.key.a, self.key.b, self.sqrt3),
            self.coef_text(self.printed),
            self.coef_text(self.predicted)
        )
    }
}

fn normalize(key: TermKey, coef: i64) -> (TermKey, i64) {
    if key.a < 0 || (key.a == 0 && key.b < 0) {
        (TermKey { a: -key.a, b: -key.b, ..key }, -coef)
    } else {
        (key, coef)
    }
}

fn integer_vector(kind: RootSystemKind, p: u8, q: u8) -> (i64, i64) {
    let (p, q) = (p as i64, q as i64);
    match kind {
        RootSystemKind::A2 => (2 * p - q, q),
        RootSystemKind::G2 => (2 * p - 3 * q, q),
        RootSystemKind::B2 | RootSystemKind::BC2 => (p - q, q),
    }
}

fn accumulate(map: &mut std::collections::BTreeMap<TermKey, i64>, key: TermKey, coef: i64) {
    let (key, coef) = normalize(key, coef);
    *map.entry(key).or_insert(0) += coef;
}

/// Terms of the root-sum field `−Σ m cot λ·v + Σ m tan λ·v`, merged and
/// normalized like the printed ones.
pub fn predicted_terms(action: &Action) -> std::collections::BTreeMap<TermKey, i64> {
    let mut map = std::collections::BTreeMap::new();
    for t in &action.terms {
        let (a, b) = integer_vector(action.spec.kind, t.p, t.q);
        let (func, sign) = match t.family {
            Family::V => (Func::Cot, -1),
            Family::H => (Func::Tan, 1),
        };
        let m = t.m as i64;
        accumulate(&mut map, TermKey { comp: 0, func, a, b }, sign * m * a);
        accumulate(&mut map, TermKey { comp: 1, func, a, b }, sign * m * b);
    }
    map.retain(|_, c| *c != 0);
    map
}

pub fn printed_terms(formula: &ExplicitFormula, params: Option<&Params>) -> std::collections::BTreeMap<TermKey, i64> {
    let mut map = std::collections::BTreeMap::new();
    for t in formula.terms {
        accumulate(&mut map, TermKey { comp: t.comp, func: t.func, a: t.a, b: t.b }, t.coef.eval(params));
    }
    map.retain(|_, c| *c != 0);
    map
}

/// Every trig term whose printed coefficient differs from the predicted one.
pub fn term_diff(action: &Action, formula: &ExplicitFormula) -> Vec<TermDiff> {
    let printed = printed_terms(formula, action.spec.params.as_ref());
    let predicted = predicted_terms(action);
    let mut keys: Vec<TermKey> = printed.keys().chain(predicted.keys()).copied().collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter_map(|key| {
            let (p, c) = (printed.get(&key).copied().unwrap_or(0), predicted.get(&key).copied().unwrap_or(0));
            (p != c).then_some(TermDiff { key, printed: p, predicted: c, sqrt3: sqrt3_kind(action.spec.kind) })
        })
        .collect()
}

/// Radical inverse of `i` in `base`.
pub fn halton(mut i: u64, base: u64) -> f64 {
    let (mut f, mut r) = (1.0, 0.0);
    while i > 0 {
        f /= base as f64;
        r += f * (i % base) as f64;
        i /= base;
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleStatus {
    Pass,
    Flagged,
    Fail,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeviationReport {
    pub id: String,
    pub samples: usize,
    pub max_deviation: [f64; 2],
    pub status: OracleStatus,
    pub term_diffs: Vec<TermDiff>,
    pub explanation: Vec<String>,
}

/// Low-discrepancy interior points of the simplex. The printed domain is
/// not used: on some rows it is a different chamber from the simplex.
pub fn sample_points(action: &Action, n: usize) -> Vec<Vec2> {
    let [a, b, c] = action.simplex.vertices;
    let mut pts = Vec::with_capacity(n);
    let mut i = 1;
    while pts.len() < n && i <= 100 * n as u64 + 1000 {
        let (mut u, mut v) = (halton(i, 2), halton(i, 3));
        i += 1;
        if u + v > 1.0 {
            (u, v) = (1.0 - u, 1.0 - v);
        }
        let z = [a[0] + u * (b[0] - a[0]) + v * (c[0] - a[0]), a[1] + u * (b[1] - a[1]) + v * (c[1] - a[1])];
        if action.simplex.contains(z, SAMPLE_MARGIN) {
            pts.push(z);
        }
    }
    pts
}

/// Maximum per-component deviation between the printed formula and the
/// root-sum field over `n` interior points.
pub fn compare_fields(action: &Action, n: usize) -> Result<DeviationReport, OracleError> {
    let formula = formula_for(action.id())?;
    let params = action.spec.params.as_ref();
    let pts = sample_points(action, n);
    let mut dev = [0.0f64; 2];
    for z in &pts {
        let x = field_vector(action, *z).map_err(|_| OracleError::OutsideDomain(*z))?;
        let e = formula.eval(params, *z);
        for i in 0..2 {
            dev[i] = dev[i].max((x[i] - e[i]).abs());
        }
    }
    let ok = dev[0] < PASS_TOL && dev[1] < PASS_TOL;
    let status = match (ok, formula.is_flagged()) {
        (true, _) => OracleStatus::Pass,
        (false, true) => OracleStatus::Flagged,
        (false, false) => OracleStatus::Fail,
    };
    Ok(DeviationReport {
        id: action.id().to_string(),
        samples: pts.len(),
        max_deviation: dev,
        status,
        term_diffs: term_diff(action, &formula),
        explanation: formula.flagged_terms.clone(),
    })
}

/// Whether `spec` has a printed formula.
pub fn has_formula(spec: &HermannActionSpec) -> bool {
    formula_for(&spec.id).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{find, load_catalog};
    use std::f64::consts::PI;

    fn act(id: &str) -> Action {
        Action::new(find(id).unwrap()).unwrap()
    }

    #[test]
    fn rho1_spot_values() {
        let a = act("rho1_SO3_SU3_SO3");
        let x = explicit_field(&a, [PI / 4.0, 0.0]).unwrap();
        assert!((x[0] - 2.0).abs() < 1e-14 && x[1].abs() < 1e-14);
        let x = explicit_field(&a, [PI / 6.0, 0.0]).unwrap();
        assert!(x[0].abs() < 1e-14 && x[1].abs() < 1e-14);
        assert!(matches!(explicit_field(&a, [-0.1, 0.0]), Err(OracleError::OutsideDomain(_))));
    }

    #[test]
    fn every_row_has_a_formula() {
        for spec in load_catalog() {
            assert!(has_formula(&spec), "{}", spec.id);
        }
    }

    #[test]
    fn arg_text_forms() {
        assert_eq!(arg_text(2, 0, false), "2x");
        assert_eq!(arg_text(1, -1, true), "x-√3y");
        assert_eq!(arg_text(3, 1, true), "3x+√3y");
        assert_eq!(arg_text(0, 2, true), "2√3y");
    }

    #[test]
    fn halton_prefix() {
        let h: Vec<f64> = (1..5).map(|i| halton(i, 2)).collect();
        assert_eq!(h, [0.5, 0.25, 0.75, 0.125]);
    }

    #[test]
    fn flags_are_exactly_the_rows_with_term_differences() {
        for spec in load_catalog() {
            let a = Action::new(spec).unwrap();
            let r = compare_fields(&a, 100).unwrap();
            assert_eq!(r.samples, 100);
            assert_eq!(r.term_diffs.is_empty(), r.explanation.is_empty(), "{}: {:?}", r.id, r.term_diffs);
            assert_ne!(r.status, OracleStatus::Fail, "{}", r.id);
        }
    }

    #[test]
    fn rho13_names_the_foreign_argument() {
        let a = act("rho13_F4_E6_F4");
        let d: Vec<String> = compare_fields(&a, 100).unwrap().term_diffs.iter().map(|d| d.to_string()).collect();
        assert_eq!(d, ["x: tan(x+√3y) printed 0, catalog 8", "x: tan(3x-√3y) printed 8, catalog 0"]);
    }
}

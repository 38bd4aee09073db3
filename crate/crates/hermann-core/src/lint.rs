//! Consistency audit of a catalog row. Reports; never fails.

use crate::catalog::HermannActionSpec;
use crate::model::Action;
use crate::oracle::formula_for;
use crate::roots::Vec2;

#[derive(Clone, Debug, PartialEq)]
pub struct RootLint {
    pub label: String,
    pub mult_v: i64,
    pub mult_h: i64,
    pub mult_total: i64,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LintReport {
    pub id: String,
    pub roots: Vec<RootLint>,
    pub domain_text: Option<&'static str>,
    pub simplex_vertices: Option<[Vec2; 3]>,
    /// Whether the printed domain has the same vertices as the simplex.
    pub domain_matches: Option<bool>,
    pub findings: Vec<String>,
}

impl LintReport {
    pub fn clean(&self) -> bool {
        self.findings.is_empty()
    }
}

fn same_vertices(a: &[Vec2; 3], b: &[Vec2; 3]) -> bool {
    a.iter().all(|p| b.iter().any(|q| (p[0] - q[0]).abs() < 1e-9 && (p[1] - q[1]).abs() < 1e-9))
}

pub fn lint_catalog(spec: &HermannActionSpec) -> LintReport {
    let mut findings = Vec::new();
    let roots: Vec<RootLint> = spec
        .roots
        .iter()
        .map(|r| {
            let (v, h, t) = (spec.mult_v(r), spec.mult_h(r), spec.mult_total(r));
            if v + h != t {
                findings.push(format!("root {}: V {v} + H {h} ≠ total {t}", r.label()));
            }
            RootLint { label: r.label(), mult_v: v, mult_h: h, mult_total: t, consistent: v + h == t }
        })
        .collect();
    let simplex_vertices = match Action::new(spec.clone()) {
        Ok(a) => Some(a.simplex.vertices),
        Err(e) => {
            findings.push(format!("simplex: {e}"));
            None
        }
    };
    let formula = formula_for(&spec.id).ok();
    let domain_text = formula.as_ref().map(|f| f.domain.text);
    let domain_matches = match (&formula, &simplex_vertices) {
        (Some(f), Some(v)) => {
            let m = same_vertices(&f.domain.vertices, v);
            if !m {
                findings.push(format!("printed domain `{}` differs from the simplex {:?}", f.domain.text, v));
            }
            Some(m)
        }
        _ => None,
    };
    LintReport { id: spec.id.clone(), roots, domain_text, simplex_vertices, domain_matches, findings }
}

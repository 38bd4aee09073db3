//! A catalog row compiled into root terms plus its orbit simplex.

use crate::catalog::HermannActionSpec;
use crate::error::CatalogError;
use crate::roots::{root_label, root_vector, Vec2};
use crate::simplex::{build_simplex_from_terms, OrbitSimplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    V,
    H,
}

/// One summand of the field: a root in one family with its multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct RootTerm {
    pub p: u8,
    pub q: u8,
    pub family: Family,
    pub m: f64,
    pub v: Vec2,
}

impl RootTerm {
    pub fn label(&self) -> String {
        root_label(self.p, self.q)
    }
}

#[derive(Clone, Debug)]
pub struct Action {
    pub spec: HermannActionSpec,
    pub terms: Vec<RootTerm>,
    pub simplex: OrbitSimplex,
}

impl Action {
    pub fn new(spec: HermannActionSpec) -> Result<Self, CatalogError> {
        let terms = compile_terms(&spec)?;
        let simplex = build_simplex_from_terms(&spec.id, &terms)?;
        Ok(Action { spec, terms, simplex })
    }

    pub fn id(&self) -> &str {
        &self.spec.id
    }

    pub fn terms(&self, family: Family) -> impl Iterator<Item = &RootTerm> {
        self.terms.iter().filter(move |t| t.family == family)
    }
}

/// V terms first, then H terms, each in catalog root order.
pub fn compile_terms(spec: &HermannActionSpec) -> Result<Vec<RootTerm>, CatalogError> {
    let mut terms = Vec::new();
    for family in [Family::V, Family::H] {
        for root in &spec.roots {
            let v = root_vector(spec.kind, root.p, root.q)?;
            let m = match family {
                Family::V => spec.mult_v(root),
                Family::H => spec.mult_h(root),
            };
            if m < 0 {
                return Err(CatalogError::InvalidParams {
                    id: spec.id.clone(),
                    reason: format!("negative multiplicity for {}", root.label()),
                });
            }
            if m > 0 {
                terms.push(RootTerm { p: root.p, q: root.q, family, m: m as f64, v });
            }
        }
    }
    let spans = terms.iter().any(|a| terms.iter().any(|b| (a.v[0] * b.v[1] - a.v[1] * b.v[0]).abs() > 1e-9));
    if !spans {
        return Err(CatalogError::Degenerate { id: spec.id.clone() });
    }
    Ok(terms)
}

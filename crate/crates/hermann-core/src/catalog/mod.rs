//! The classification of cohomogeneity-two commuting Hermann actions.
//!
//! Rows are kept in a fixed order (the order of the explicit field table,
//! which is the most complete listing). Parametric families appear once per
//! preset; [`HermannActionSpec::with_params`] instantiates other members.

mod data;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CatalogError;
use crate::roots::{root_label, RootSystemKind};

/// A multiplicity `c + q·q_param + j·j_param`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mult {
    pub c: i64,
    pub q: i64,
    pub j: i64,
}

impl Mult {
    pub const fn k(c: i64) -> Self {
        Mult { c, q: 0, j: 0 }
    }

    pub const fn affine(c: i64, q: i64, j: i64) -> Self {
        Mult { c, q, j }
    }

    pub fn is_constant(&self) -> bool {
        self.q == 0 && self.j == 0
    }

    pub fn eval(&self, params: Option<&Params>) -> i64 {
        let (q, j) = params.map_or((0, 0), |p| (p.q, p.j.unwrap_or(0)));
        self.c + self.q * q + self.j * j
    }
}

impl fmt::Display for Mult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "{}", self.c);
        }
        let mut out = String::new();
        for (k, s) in [(self.q, "q"), (self.j, "j")] {
            match k {
                0 => continue,
                1 if out.is_empty() => out.push_str(s),
                1 => out.push_str(&format!("+{s}")),
                -1 => out.push_str(&format!("-{s}")),
                k if k > 0 && !out.is_empty() => out.push_str(&format!("+{k}{s}")),
                k => out.push_str(&format!("{k}{s}")),
            }
        }
        match self.c {
            0 => {}
            c if c > 0 => out.push_str(&format!("+{c}")),
            c => out.push_str(&format!("{c}")),
        }
        f.write_str(&out)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum MultRepr {
    Const(i64),
    Affine {
        #[serde(rename = "const")]
        c: i64,
        q: i64,
        j: i64,
    },
}

impl Serialize for Mult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.is_constant() {
            MultRepr::Const(self.c).serialize(s)
        } else {
            MultRepr::Affine { c: self.c, q: self.q, j: self.j }.serialize(s)
        }
    }
}

impl<'de> Deserialize<'de> for Mult {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(match MultRepr::deserialize(d)? {
            MultRepr::Const(c) => Mult::k(c),
            MultRepr::Affine { c, q, j } => Mult { c, q, j },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PositiveRoot {
    pub p: u8,
    pub q: u8,
    pub mult_total: Mult,
    pub mult_v: Mult,
    pub mult_h: Mult,
}

impl PositiveRoot {
    pub fn label(&self) -> String {
        root_label(self.p, self.q)
    }
}

/// Family parameters. `q_min` and the implicit `1 ≤ j ≤ q−1` are the
/// validity ranges; every instantiated multiplicity must also be ≥ 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub q: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    pub q_min: i64,
}

/// Printed equilibria, kept as the literal strings of the table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table31 {
    pub interior: Option<[String; 2]>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HermannActionSpec {
    pub id: String,
    pub display_name: String,
    pub dual_name: String,
    pub l_star_name: String,
    pub kind: RootSystemKind,
    pub basis: [[f64; 2]; 2],
    pub roots: Vec<PositiveRoot>,
    pub params: Option<Params>,
    pub table31: Option<Table31>,
    pub known_inconsistencies: Vec<String>,
}

impl HermannActionSpec {
    pub fn mult_v(&self, root: &PositiveRoot) -> i64 {
        root.mult_v.eval(self.params.as_ref())
    }

    pub fn mult_h(&self, root: &PositiveRoot) -> i64 {
        root.mult_h.eval(self.params.as_ref())
    }

    pub fn mult_total(&self, root: &PositiveRoot) -> i64 {
        root.mult_total.eval(self.params.as_ref())
    }

    pub fn root(&self, p: u8, q: u8) -> Option<&PositiveRoot> {
        self.roots.iter().find(|r| r.p == p && r.q == q)
    }

    pub fn is_parametric(&self) -> bool {
        self.params.is_some()
    }

    /// Another member of a parametric family. The result carries no
    /// golden data; its id gets the parameters appended.
    pub fn with_params(&self, q: i64, j: Option<i64>) -> Result<Self, CatalogError> {
        let bad = |reason: String| CatalogError::InvalidParams { id: self.id.clone(), reason };
        let Some(cur) = &self.params else {
            return Err(bad("row has no parameters".into()));
        };
        if q < cur.q_min {
            return Err(bad(format!("q = {q} below minimum {}", cur.q_min)));
        }
        match (cur.j, j) {
            (Some(_), Some(j)) if !(1..q).contains(&j) => {
                return Err(bad(format!("j = {j} outside 1..={}", q - 1)))
            }
            (Some(_), None) => return Err(bad("j is required".into())),
            (None, Some(_)) => return Err(bad("row takes no j".into())),
            _ => {}
        }
        let params = Params { q, j, q_min: cur.q_min };
        for r in &self.roots {
            for m in [r.mult_total, r.mult_v, r.mult_h] {
                if m.eval(Some(&params)) < 0 {
                    return Err(bad(format!("negative multiplicity for {}", r.label())));
                }
            }
        }
        let base = self.id.split("_q").next().unwrap_or(&self.id);
        let id = match j {
            Some(j) => format!("{base}_q{q}_j{j}"),
            None => format!("{base}_q{q}"),
        };
        Ok(HermannActionSpec { id, params: Some(params), table31: None, ..self.clone() })
    }
}

/// Every row, in the documented order.
pub fn load_catalog() -> Vec<HermannActionSpec> {
    data::rows()
}

/// The exported catalog document: `{"actions": [...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogDocument {
    pub actions: Vec<HermannActionSpec>,
}

pub fn export_json(actions: &[HermannActionSpec]) -> String {
    let doc = CatalogDocument { actions: actions.to_vec() };
    serde_json::to_string_pretty(&doc).expect("catalog serializes") + "\n"
}

pub fn import_json(text: &str) -> Result<Vec<HermannActionSpec>, serde_json::Error> {
    serde_json::from_str::<CatalogDocument>(text).map(|d| d.actions)
}

pub fn find(id: &str) -> Result<HermannActionSpec, CatalogError> {
    load_catalog()
        .into_iter()
        .find(|a| a.id == id)
        .ok_or_else(|| CatalogError::UnknownAction(id.to_string()))
}

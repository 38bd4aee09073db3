//! The orbit space: the triangle cut out by the wall half-planes
//! `0 < λ(Z) < π` (V roots) and `−π/2 < λ(Z) < π/2` (H roots).

use std::cmp::Ordering;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::catalog::HermannActionSpec;
use crate::error::CatalogError;
use crate::model::{compile_terms, Family, RootTerm};
use crate::roots::{dot, norm, root_label, Vec2};

const ON_LINE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WallSide {
    VZero,
    VPi,
    HNeg,
    HPos,
}

impl WallSide {
    pub fn level(self) -> f64 {
        match self {
            WallSide::VZero => 0.0,
            WallSide::VPi => PI,
            WallSide::HNeg => -FRAC_PI_2,
            WallSide::HPos => FRAC_PI_2,
        }
    }

    /// +1 when the admissible side is λ > level.
    fn orientation(self) -> f64 {
        match self {
            WallSide::VZero | WallSide::HNeg => 1.0,
            WallSide::VPi | WallSide::HPos => -1.0,
        }
    }

    fn level_text(self) -> &'static str {
        match self {
            WallSide::VZero => "0",
            WallSide::VPi => "π",
            WallSide::HNeg => "-π/2",
            WallSide::HPos => "π/2",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Wall {
    pub p: u8,
    pub q: u8,
    pub family: Family,
    pub side: WallSide,
    pub v: Vec2,
}

impl Wall {
    /// `(λ(Z) − level)` signed so that the admissible side is positive.
    pub fn margin(&self, z: Vec2) -> f64 {
        self.side.orientation() * (dot(self.v, z) - self.side.level())
    }

    /// Euclidean distance from `z` to the wall line.
    pub fn distance(&self, z: Vec2) -> f64 {
        (dot(self.v, z) - self.side.level()).abs() / norm(self.v)
    }

    /// Unit normal pointing into the admissible side.
    pub fn inward_normal(&self) -> Vec2 {
        let s = self.side.orientation() / norm(self.v);
        [s * self.v[0], s * self.v[1]]
    }

    pub fn label(&self) -> String {
        format!("{}={}", root_label(self.p, self.q), self.side.level_text())
    }

    fn same_line(&self, other: &Wall) -> bool {
        let (n1, n2) = (norm(self.v), norm(other.v));
        let cross = (self.v[0] * other.v[1] - self.v[1] * other.v[0]) / (n1 * n2);
        if cross.abs() > 1e-12 {
            return false;
        }
        let s = dot(self.v, other.v).signum();
        (self.side.level() / n1 - s * other.side.level() / n2).abs() < 1e-12
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    /// Vertex indices, lexicographically smaller first.
    pub endpoints: [usize; 2],
    /// Index into [`OrbitSimplex::walls`] of the defining wall.
    pub wall: usize,
    pub tangent: Vec2,
    pub length: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitSimplex {
    pub vertices: [Vec2; 3],
    /// Edges in the order (v0,v1), (v0,v2), (v1,v2).
    pub edges: [Edge; 3],
    pub walls: Vec<Wall>,
    /// Whether each wall contains an edge of the triangle.
    pub active: Vec<bool>,
}

impl OrbitSimplex {
    pub fn edge_wall(&self, edge: usize) -> &Wall {
        &self.walls[self.edges[edge].wall]
    }

    /// Smallest signed wall margin (λ units); positive strictly inside.
    pub fn margin(&self, z: Vec2) -> f64 {
        self.walls.iter().map(|w| w.margin(z)).fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, z: Vec2, margin: f64) -> bool {
        self.walls.iter().all(|w| w.margin(z) > margin)
    }

    pub fn distance_to_boundary(&self, z: Vec2) -> f64 {
        self.edges.iter().map(|e| self.walls[e.wall].distance(z)).fold(f64::INFINITY, f64::min)
    }

    pub fn incenter(&self) -> Vec2 {
        let [a, b, c] = self.vertices;
        let la = norm(sub(b, c));
        let lb = norm(sub(a, c));
        let lc = norm(sub(a, b));
        let s = la + lb + lc;
        [(la * a[0] + lb * b[0] + lc * c[0]) / s, (la * a[1] + lb * b[1] + lc * c[1]) / s]
    }

    pub fn edge_point(&self, edge: usize, s: f64) -> Vec2 {
        let e = &self.edges[edge];
        let a = self.vertices[e.endpoints[0]];
        [a[0] + s * e.tangent[0], a[1] + s * e.tangent[1]]
    }

    /// Axis-aligned bounding box `[xmin, xmax, ymin, ymax]`.
    pub fn bbox(&self) -> [f64; 4] {
        let xs = self.vertices.map(|v| v[0]);
        let ys = self.vertices.map(|v| v[1]);
        let lo = |a: [f64; 3]| a.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = |a: [f64; 3]| a.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        [lo(xs), hi(xs), lo(ys), hi(ys)]
    }
}

fn sub(a: Vec2, b: Vec2) -> Vec2 {
    [a[0] - b[0], a[1] - b[1]]
}

fn snap(x: f64) -> f64 {
    if x.abs() < 1e-15 {
        0.0
    } else {
        x
    }
}

fn lex(a: &Vec2, b: &Vec2) -> Ordering {
    if (a[0] - b[0]).abs() > 1e-12 {
        a[0].total_cmp(&b[0])
    } else {
        a[1].total_cmp(&b[1])
    }
}

pub fn walls_of(terms: &[RootTerm]) -> Vec<Wall> {
    let mut walls = Vec::new();
    for t in terms {
        let sides = match t.family {
            Family::V => [WallSide::VZero, WallSide::VPi],
            Family::H => [WallSide::HNeg, WallSide::HPos],
        };
        for side in sides {
            walls.push(Wall { p: t.p, q: t.q, family: t.family, side, v: t.v });
        }
    }
    walls
}

fn intersect(a: &Wall, b: &Wall) -> Option<Vec2> {
    let det = a.v[0] * b.v[1] - a.v[1] * b.v[0];
    if det.abs() < 1e-12 {
        return None;
    }
    let (ca, cb) = (a.side.level(), b.side.level());
    Some([(ca * b.v[1] - cb * a.v[1]) / det, (a.v[0] * cb - b.v[0] * ca) / det])
}

pub fn build_simplex(spec: &HermannActionSpec) -> Result<OrbitSimplex, CatalogError> {
    let terms = compile_terms(spec)?;
    build_simplex_from_terms(&spec.id, &terms)
}

pub fn build_simplex_from_terms(id: &str, terms: &[RootTerm]) -> Result<OrbitSimplex, CatalogError> {
    let walls = walls_of(terms);
    let not_triangle = |found| CatalogError::NotATriangle { id: id.to_string(), found };

    let mut pts: Vec<Vec2> = Vec::new();
    for i in 0..walls.len() {
        for j in i + 1..walls.len() {
            let Some(z) = intersect(&walls[i], &walls[j]) else { continue };
            if walls.iter().all(|w| w.margin(z) > -ON_LINE)
                && !pts.iter().any(|p| norm(sub(*p, z)) < 1e-9)
            {
                pts.push(z);
            }
        }
    }
    if pts.len() != 3 {
        return Err(not_triangle(pts.len()));
    }
    let mut vertices: [Vec2; 3] = [pts[0], pts[1], pts[2]].map(|p| [snap(p[0]), snap(p[1])]);
    vertices.sort_by(lex);

    let on = |w: &Wall, z: Vec2| w.margin(z).abs() < ON_LINE;
    let mut active = vec![false; walls.len()];
    let mut edges = Vec::with_capacity(3);
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let (za, zb) = (vertices[a], vertices[b]);
        let mut defining = None;
        for (k, w) in walls.iter().enumerate() {
            if on(w, za) && on(w, zb) {
                active[k] = true;
                defining.get_or_insert(k);
            }
        }
        // an unbounded region can still yield three vertices; every pair must share a wall
        let wall = defining.ok_or_else(|| not_triangle(3))?;
        let d = sub(zb, za);
        let length = norm(d);
        edges.push(Edge { endpoints: [a, b], wall, tangent: [d[0] / length, d[1] / length], length });
    }
    debug_assert!(walls.iter().enumerate().all(|(i, w)| {
        active[i] == edges.iter().any(|e| walls[e.wall].same_line(w))
    }));
    let edges: [Edge; 3] = edges.try_into().expect("three edges");
    Ok(OrbitSimplex { vertices, edges, walls, active })
}

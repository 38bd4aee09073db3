//! Zeros of the field: the minimal principal orbit in the interior and the
//! minimal singular orbit on each edge.

use crate::error::SolverError;
use crate::field::{boundary_jacobian, boundary_potential, field_vector, jacobian, potential, EPS_WALL};
use crate::model::Action;
use crate::roots::{dot, norm, Vec2};

pub const TOL_NEWTON: f64 = 1e-12;
pub const MAX_ITER: usize = 100;
pub const MAX_HALVINGS: usize = 30;
const VERTEX_OFFSET: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquilibriumKind {
    Interior,
    Edge(usize),
    Vertex(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquilibriumResult {
    pub location: Vec2,
    /// |X| at the location; on a vertex the stratum is a point and this is 0.
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
    pub kind: EquilibriumKind,
}

fn solve2(m: [[f64; 2]; 2], b: Vec2) -> Vec2 {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    [(b[0] * m[1][1] - b[1] * m[0][1]) / det, (m[0][0] * b[1] - m[1][0] * b[0]) / det]
}

/// Damped Newton on X from `seed`; each step is halved until the iterate
/// stays inside with margin and Φ does not drop.
pub fn newton_from(action: &Action, seed: Vec2) -> Result<EquilibriumResult, SolverError> {
    let simplex = &action.simplex;
    let mut z = seed;
    let mut x = field_vector(action, z)?;
    let mut phi = potential(action, z)?;
    for it in 0..MAX_ITER {
        let r = norm(x);
        if r < TOL_NEWTON {
            return Ok(EquilibriumResult {
                location: z,
                residual: r,
                iterations: it,
                converged: true,
                kind: EquilibriumKind::Interior,
            });
        }
        let d = solve2(jacobian(action, z)?, x);
        let mut step = 1.0;
        let mut accepted = false;
        for _ in 0..=MAX_HALVINGS {
            let cand = [z[0] - step * d[0], z[1] - step * d[1]];
            if simplex.contains(cand, EPS_WALL) {
                let p = potential(action, cand)?;
                let xn = field_vector(action, cand)?;
                if p >= phi - 1e-14 * phi.abs().max(1.0) || norm(xn) < r {
                    z = cand;
                    x = xn;
                    phi = p;
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    Err(SolverError::NoConvergence { id: action.id().to_string(), iterations: MAX_ITER, residual: norm(x) })
}

/// The unique maximizer of Φ, seeded at the incenter.
pub fn find_interior_equilibrium(action: &Action) -> Result<EquilibriumResult, SolverError> {
    newton_from(action, action.simplex.incenter())
}

/// Tangential field ⟨X^σ, t⟩ and its derivative tᵀ J^σ t at arclength `s`.
fn tangential(action: &Action, edge: usize, s: f64) -> Result<(f64, f64), SolverError> {
    let t = action.simplex.edges[edge].tangent;
    let z = action.simplex.edge_point(edge, s);
    let g = dot(field_vector(action, z)?, t);
    let j = boundary_jacobian(action, z)?;
    let dg = t[0] * (j[0][0] * t[0] + j[0][1] * t[1]) + t[1] * (j[1][0] * t[0] + j[1][1] * t[1]);
    Ok((g, dg))
}

/// Maximizer of the boundary potential along one edge.
pub fn find_edge_equilibrium(action: &Action, edge: usize) -> Result<EquilibriumResult, SolverError> {
    let simplex = &action.simplex;
    let e = &simplex.edges[edge];
    let len = e.length;
    let vertex = |k: usize, it| EquilibriumResult {
        location: simplex.vertices[e.endpoints[k]],
        residual: 0.0,
        iterations: it,
        converged: true,
        kind: EquilibriumKind::Vertex(e.endpoints[k]),
    };
    // g = ⟨X^σ, t⟩ = −dΦ^σ/ds is increasing along the edge. The bracket starts
    // far enough from the vertices that the walls through them are still active.
    let (mut lo, mut hi) = (VERTEX_OFFSET, len - VERTEX_OFFSET);
    if tangential(action, edge, lo)?.0 >= 0.0 {
        return Ok(vertex(0, 0));
    }
    if tangential(action, edge, hi)?.0 <= 0.0 {
        return Ok(vertex(1, 0));
    }
    let mut s = 0.5 * (lo + hi);
    for it in 1..=MAX_ITER {
        let (g, dg) = tangential(action, edge, s)?;
        let z = simplex.edge_point(edge, s);
        let residual = norm(field_vector(action, z)?);
        if g.abs() < TOL_NEWTON * 1e-1 || residual < TOL_NEWTON || hi - lo < 4.0 * f64::EPSILON * len {
            let kind = if s <= VERTEX_OFFSET {
                EquilibriumKind::Vertex(e.endpoints[0])
            } else if len - s <= VERTEX_OFFSET {
                EquilibriumKind::Vertex(e.endpoints[1])
            } else {
                EquilibriumKind::Edge(edge)
            };
            return Ok(EquilibriumResult { location: z, residual, iterations: it, converged: true, kind });
        }
        if g < 0.0 {
            lo = s;
        } else {
            hi = s;
        }
        let newton = s - g / dg;
        s = if dg > 0.0 && newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
    }
    let z = simplex.edge_point(edge, s);
    Err(SolverError::NoConvergence {
        id: action.id().to_string(),
        iterations: MAX_ITER,
        residual: norm(field_vector(action, z)?),
    })
}

pub fn find_edge_equilibria(action: &Action) -> Result<Vec<EquilibriumResult>, SolverError> {
    (0..3).map(|e| find_edge_equilibrium(action, e)).collect()
}

/// Φ^σ along an edge, for checking that a vertex answer really maximizes it.
pub fn edge_potential(action: &Action, edge: usize, s: f64) -> Result<f64, SolverError> {
    Ok(boundary_potential(action, action.simplex.edge_point(edge, s))?)
}

//! Mean curvature flow of orbits as the flow of X on the orbit simplex.

use crate::error::{FieldError, FlowError};
use crate::field::{boundary_second_fundamental_norm_sq, boundary_shape_spectrum, field_vector, EPS_WALL};
use crate::model::Action;
use crate::roots::{norm, Vec2};

pub const EQUILIBRIUM_SPEED: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct FlowParams {
    pub t_max: f64,
    pub delta_stop: f64,
    pub atol: f64,
    pub rtol: f64,
    pub max_steps: usize,
    /// Integrate Z′ = −X instead.
    pub reverse: bool,
}

impl Default for FlowParams {
    fn default() -> Self {
        FlowParams { t_max: 100.0, delta_stop: 1e-6, atol: 1e-10, rtol: 1e-10, max_steps: 200_000, reverse: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stratum {
    Edge(usize),
    Vertex(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Termination {
    Equilibrium,
    WallContact(Stratum),
    MaxTime,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub z: Vec2,
    pub speed: f64,
    pub h_norm_sq: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<Sample>,
    pub termination: Termination,
    pub collapse_time_estimate: Option<f64>,
    /// Edges the start point lies on; the flow stays in their intersection.
    pub pinned: Vec<usize>,
}

impl Trajectory {
    pub fn last(&self) -> &Sample {
        self.samples.last().expect("trajectory has a start sample")
    }
}

// Dormand–Prince 5(4) tableau.
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B5: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

/// One Dormand–Prince step of an autonomous system: fifth-order solution and
/// the difference to the embedded fourth-order one.
pub fn dopri_step<F, E>(f: &F, z: Vec2, h: f64) -> Result<(Vec2, Vec2), E>
where
    F: Fn(Vec2) -> Result<Vec2, E>,
{
    let _ = C;
    let mut k = [[0.0; 2]; 7];
    for s in 0..7 {
        let mut y = z;
        for (a, kj) in A[s].iter().zip(&k).take(s) {
            y[0] += h * a * kj[0];
            y[1] += h * a * kj[1];
        }
        k[s] = f(y)?;
    }
    let mut y5 = z;
    let mut err = [0.0; 2];
    for s in 0..7 {
        for i in 0..2 {
            y5[i] += h * B5[s] * k[s][i];
            err[i] += h * (B5[s] - B4[s]) * k[s][i];
        }
    }
    Ok((y5, err))
}

fn pinned_edges(action: &Action, z: Vec2) -> Vec<usize> {
    (0..3).filter(|&e| action.simplex.edge_wall(e).margin(z).abs() <= EPS_WALL).collect()
}

/// Orthogonal projection onto the line of the single pinned edge, if any.
fn onto_pinned(action: &Action, pinned: &[usize], z: Vec2) -> Vec2 {
    let [e] = pinned else { return z };
    let w = action.simplex.edge_wall(*e);
    let (m, n) = (w.margin(z) / norm(w.v), w.inward_normal());
    [z[0] - m * n[0], z[1] - m * n[1]]
}

fn free_distance(action: &Action, z: Vec2, pinned: &[usize]) -> f64 {
    (0..3)
        .filter(|e| !pinned.contains(e))
        .map(|e| action.simplex.edge_wall(e).distance(z))
        .fold(f64::INFINITY, f64::min)
}

fn inside(action: &Action, z: Vec2, pinned: &[usize]) -> bool {
    (0..3).filter(|e| !pinned.contains(e)).all(|e| action.simplex.edge_wall(e).margin(z) > 0.0)
}

/// Vertex if the two nearest edges are both within `10·δ`, else the nearest edge.
pub fn nearest_stratum(action: &Action, z: Vec2, delta_stop: f64, pinned: &[usize]) -> Stratum {
    let mut d: Vec<(f64, usize)> = (0..3)
        .map(|e| (if pinned.contains(&e) { 0.0 } else { action.simplex.edge_wall(e).distance(z) }, e))
        .collect();
    d.sort_by(|a, b| a.0.total_cmp(&b.0));
    if d[1].0 < 10.0 * delta_stop {
        let (e1, e2) = (&action.simplex.edges[d[0].1], &action.simplex.edges[d[1].1]);
        let v = e1.endpoints.iter().find(|v| e2.endpoints.contains(v)).copied().expect("edges share a vertex");
        Stratum::Vertex(v)
    } else {
        Stratum::Edge(d[0].1)
    }
}

fn sample(action: &Action, t: f64, z: Vec2, x: Vec2) -> Sample {
    let h_norm_sq = boundary_second_fundamental_norm_sq(action, z).unwrap_or(f64::INFINITY);
    Sample { t, z, speed: norm(x), h_norm_sq }
}

/// Integrates Z′ = X(Z) (boundary field on an edge) with an adaptive
/// Dormand–Prince 5(4) pair. Near walls the step is capped at
/// `0.25·d/|X|` so the singular barrier is never stepped over.
pub fn integrate_flow(action: &Action, z0: Vec2, params: &FlowParams) -> Result<Trajectory, FlowError> {
    let sign = if params.reverse { -1.0 } else { 1.0 };
    let pinned = pinned_edges(action, z0);
    // on an edge the boundary field is tangent; project away round-off so
    // the state cannot leave the wall and re-activate the dropped roots
    let tangent = match pinned[..] {
        [e] => Some(action.simplex.edges[e].tangent),
        _ => None,
    };
    let f = |z: Vec2| -> Result<Vec2, FieldError> {
        let x = field_vector(action, z)?;
        let x = match tangent {
            Some(t) => {
                let c = x[0] * t[0] + x[1] * t[1];
                [c * t[0], c * t[1]]
            }
            None => x,
        };
        Ok([sign * x[0], sign * x[1]])
    };
    let mut z = onto_pinned(action, &pinned, z0);
    let mut x = f(z)?;
    let mut t = 0.0;
    let mut samples = vec![sample(action, t, z, x)];
    let done = |samples: Vec<Sample>, termination, pinned: Vec<usize>| Trajectory {
        samples,
        termination,
        collapse_time_estimate: None,
        pinned,
    };
    if pinned.len() >= 2 || norm(x) < EQUILIBRIUM_SPEED {
        return Ok(done(samples, Termination::Equilibrium, pinned));
    }
    let mut d = free_distance(action, z, &pinned);
    if d < params.delta_stop {
        let s = nearest_stratum(action, z, params.delta_stop, &pinned);
        return Ok(done(samples, Termination::WallContact(s), pinned));
    }
    let mut h = (0.25 * d / norm(x)).min(1e-2);
    for _ in 0..params.max_steps {
        if t >= params.t_max {
            return Ok(done(samples, Termination::MaxTime, pinned));
        }
        h = h.min(params.t_max - t).min(0.25 * d / norm(x));
        if t + h <= t || h < 1e-300 {
            return Err(FlowError::StepCollapse { t, z });
        }
        let step = dopri_step(&f, z, h);
        let (zn, err) = match step {
            Ok((zn, err)) => (onto_pinned(action, &pinned, zn), err),
            Err(_) => {
                h *= 0.25;
                continue;
            }
        };
        let scale = |i: usize| params.atol + params.rtol * z[i].abs().max(zn[i].abs());
        let en = (err[0].abs() / scale(0)).max(err[1].abs() / scale(1));
        if en > 1.0 || !inside(action, zn, &pinned) {
            h *= if en > 1.0 { (0.9 * en.powf(-0.2)).max(0.2) } else { 0.25 };
            continue;
        }
        let xn = match f(zn) {
            Ok(v) => v,
            Err(_) => {
                h *= 0.25;
                continue;
            }
        };
        t += h;
        z = zn;
        x = xn;
        samples.push(sample(action, t, z, x));
        d = free_distance(action, z, &pinned);
        if d < params.delta_stop {
            let s = nearest_stratum(action, z, params.delta_stop, &pinned);
            return Ok(done(samples, Termination::WallContact(s), pinned));
        }
        if norm(x) < EQUILIBRIUM_SPEED {
            return Ok(done(samples, Termination::Equilibrium, pinned));
        }
        let grow = if en == 0.0 { 5.0 } else { (0.9 * en.powf(-0.2)).clamp(0.2, 5.0) };
        h *= grow;
    }
    Err(FlowError::StepCollapse { t, z })
}

#[derive(Clone, Debug, PartialEq)]
pub struct CollapseDiagnostics {
    pub collapse_time: f64,
    pub stratum: Stratum,
    /// `(T − t, (T − t)·max|κ|²)` for every sample before T.
    pub type1_series: Vec<(f64, f64)>,
    pub type1_sup: f64,
    /// Ratio of the statistic across the final decade of `T − t`.
    pub final_decade_growth: f64,
    pub bounded: bool,
}

/// Distance to the limit stratum (edge line or vertex point).
fn stratum_distance(action: &Action, z: Vec2, s: Stratum) -> f64 {
    match s {
        Stratum::Edge(e) => action.simplex.edge_wall(e).distance(z),
        Stratum::Vertex(v) => {
            let p = action.simplex.vertices[v];
            (z[0] - p[0]).hypot(z[1] - p[1])
        }
    }
}

/// Collapse time from a least-squares fit of `d² = a + b·t` over the last
/// ten samples (distance ~ C·√(T − t)), the limit stratum and the type-I
/// statistic `(T − t)·max|κ|²`.
pub fn collapse_diagnostics(action: &Action, traj: &Trajectory) -> Result<CollapseDiagnostics, FlowError> {
    let Termination::WallContact(stratum) = traj.termination else {
        return Err(FlowError::NotCollapsed);
    };
    let tail = &traj.samples[traj.samples.len().saturating_sub(10)..];
    let pts: Vec<(f64, f64)> = tail.iter().map(|s| (s.t, stratum_distance(action, s.z, stratum).powi(2))).collect();
    let n = pts.len() as f64;
    let (mt, md) = (pts.iter().map(|p| p.0).sum::<f64>() / n, pts.iter().map(|p| p.1).sum::<f64>() / n);
    let sxx: f64 = pts.iter().map(|p| (p.0 - mt).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mt) * (p.1 - md)).sum();
    let t_last = traj.last().t;
    let collapse_time = if pts.len() >= 3 && sxx > 0.0 && sxy < 0.0 {
        let b = sxy / sxx;
        let a = md - b * mt;
        (-a / b).max(t_last)
    } else {
        t_last
    };
    let mut series = Vec::new();
    for s in &traj.samples {
        let tau = collapse_time - s.t;
        if tau <= 0.0 {
            continue;
        }
        let mut kmax: f64 = 0.0;
        for normal in [[1.0, 0.0], [0.0, 1.0]] {
            let spec = boundary_shape_spectrum(action, s.z, normal)?;
            kmax = kmax.max(spec.max_abs());
        }
        series.push((tau, tau * kmax * kmax));
    }
    let type1_sup = series.iter().map(|p| p.1).fold(0.0, f64::max);
    let tau_end = series.last().map_or(0.0, |p| p.0);
    let decade: Vec<f64> = series.iter().filter(|p| p.0 <= 10.0 * tau_end).map(|p| p.1).collect();
    let final_decade_growth = match (decade.first(), decade.last()) {
        (Some(a), Some(b)) if decade.len() >= 2 && *a > 0.0 => b / a,
        _ => 1.0,
    };
    Ok(CollapseDiagnostics {
        collapse_time,
        stratum,
        type1_series: series,
        type1_sup,
        final_decade_growth,
        bounded: final_decade_growth < 2.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::find;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn rho1() -> Action {
        Action::new(find("rho1_SO3_SU3_SO3").unwrap()).unwrap()
    }

    #[test]
    fn equilibrium_start_is_stationary() {
        let a = rho1();
        let tr = integrate_flow(&a, [PI / 6.0, 0.0], &FlowParams::default()).unwrap();
        assert_eq!(tr.termination, Termination::Equilibrium);
        assert_eq!(tr.samples.len(), 1);
        assert!(matches!(collapse_diagnostics(&a, &tr), Err(FlowError::NotCollapsed)));
    }

    #[test]
    fn axis_run_hits_the_far_vertex() {
        let a = rho1();
        let tr = integrate_flow(&a, [PI / 4.0, 0.0], &FlowParams::default()).unwrap();
        assert_eq!(tr.termination, Termination::WallContact(Stratum::Vertex(2)));
        assert!(tr.samples.windows(2).all(|w| w[1].z[0] > w[0].z[0]));
        assert!(tr.samples.iter().all(|s| s.z[1].abs() < 1e-12));
        let end = tr.last().z;
        assert!((end[0] - FRAC_PI_2).abs() < 1e-5);
        let dg = collapse_diagnostics(&a, &tr).unwrap();
        assert_eq!(dg.stratum, Stratum::Vertex(2));
        assert!(dg.collapse_time.is_finite() && dg.collapse_time >= tr.last().t);
    }

    #[test]
    fn near_alpha_wall_collapses_onto_it() {
        let a = rho1();
        let tr = integrate_flow(&a, [0.1, 0.0], &FlowParams::default()).unwrap();
        assert_eq!(tr.termination, Termination::WallContact(Stratum::Edge(0)));
    }

    #[test]
    fn max_time_is_honoured() {
        let a = rho1();
        let p = FlowParams { t_max: 1e-3, ..FlowParams::default() };
        let tr = integrate_flow(&a, [0.6, 0.1], &p).unwrap();
        assert_eq!(tr.termination, Termination::MaxTime);
        assert!((tr.last().t - 1e-3).abs() < 1e-15);
    }
}

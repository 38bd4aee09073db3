#![allow(dead_code)]

use hermann_core::catalog::{find, load_catalog};
use hermann_core::field::{field_vector, potential, Mat2};
use hermann_core::{Action, Vec2};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn actions() -> Vec<Action> {
    load_catalog().into_iter().map(|s| Action::new(s).unwrap()).collect()
}

pub fn action(id: &str) -> Action {
    Action::new(find(id).unwrap()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn inradius(a: &Action) -> f64 {
    a.simplex.distance_to_boundary(a.simplex.incenter())
}

/// Uniform on the triangle, barycentric coordinates in `[0, 1]`.
pub fn triangle_point(a: &Action, u: f64, v: f64) -> Vec2 {
    let (u, v) = if u + v > 1.0 { (1.0 - u, 1.0 - v) } else { (u, v) };
    let [p, q, r] = a.simplex.vertices;
    [p[0] + u * (q[0] - p[0]) + v * (r[0] - p[0]), p[1] + u * (q[1] - p[1]) + v * (r[1] - p[1])]
}

/// Random points at least `frac · inradius` away from every wall.
pub fn random_interior(a: &Action, rng: &mut impl Rng, n: usize, frac: f64) -> Vec<Vec2> {
    let m = frac * inradius(a);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let z = triangle_point(a, rng.gen(), rng.gen());
        if a.simplex.distance_to_boundary(z) >= m {
            out.push(z);
        }
    }
    out
}

/// 5×5 starts spread over the open triangle.
pub fn start_grid(a: &Action) -> Vec<Vec2> {
    let [p, q, r] = a.simplex.vertices;
    let mut out = Vec::new();
    for i in 1..=5 {
        for j in 1..=5 {
            let (u, v) = (i as f64 / 6.0, j as f64 / 6.0);
            let w = [(1.0 - v) * (q[0] - p[0]) + v * (r[0] - p[0]), (1.0 - v) * (q[1] - p[1]) + v * (r[1] - p[1])];
            out.push([p[0] + u * w[0], p[1] + u * w[1]]);
        }
    }
    out
}

/// Five-point central difference.
pub fn diff5(f: impl Fn(f64) -> f64, h: f64) -> f64 {
    (f(-2.0 * h) - 8.0 * f(-h) + 8.0 * f(h) - f(2.0 * h)) / (12.0 * h)
}

/// A step well inside the wall distance; truncation error ~ (h/d)⁴.
pub fn fd_step(a: &Action, z: Vec2) -> f64 {
    (2e-3 * a.simplex.distance_to_boundary(z)).max(1e-6)
}

pub fn fd_gradient(a: &Action, z: Vec2) -> Vec2 {
    let h = fd_step(a, z);
    [
        diff5(|t| potential(a, [z[0] + t, z[1]]).unwrap(), h),
        diff5(|t| potential(a, [z[0], z[1] + t]).unwrap(), h),
    ]
}

/// Columns are ∂X/∂x₁, ∂X/∂x₂; returned as rows `J[i][j] = ∂X_i/∂x_j`.
pub fn fd_jacobian(a: &Action, z: Vec2) -> Mat2 {
    let h = fd_step(a, z);
    std::array::from_fn(|i| {
        std::array::from_fn(|k| {
            diff5(
                |t| {
                    let mut w = z;
                    w[k] += t;
                    field_vector(a, w).unwrap()[i]
                },
                h,
            )
        })
    })
}

pub fn mat_norm(m: &Mat2) -> f64 {
    m.iter().flatten().map(|v| v * v).sum::<f64>().sqrt()
}

/// Eigenvalues of a symmetric 2×2 matrix, ascending.
pub fn sym_eigen(m: &Mat2) -> [f64; 2] {
    let (tr, det) = (m[0][0] + m[1][1], m[0][0] * m[1][1] - m[0][1] * m[1][0]);
    let disc = (tr * tr / 4.0 - det).max(0.0).sqrt();
    [tr / 2.0 - disc, tr / 2.0 + disc]
}

/// Best assignment of expected points to computed ones; returns the max
/// per-coordinate deviation for each expected point.
pub fn match_points(expected: &[Vec2], got: &[Vec2]) -> Vec<f64> {
    assert_eq!(expected.len(), got.len());
    let dev = |e: Vec2, g: Vec2| (e[0] - g[0]).abs().max((e[1] - g[1]).abs());
    let n = expected.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<f64>> = None;
    permute(&mut perm, 0, &mut |p| {
        let d: Vec<f64> = (0..n).map(|i| dev(expected[i], got[p[i]])).collect();
        let worst = d.iter().cloned().fold(0.0, f64::max);
        if best.as_ref().is_none_or(|b| worst < b.iter().cloned().fold(0.0, f64::max)) {
            best = Some(d);
        }
    });
    best.unwrap_or_default()
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

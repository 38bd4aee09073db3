//! One PASS/FAIL line per acceptance criterion.
//!
//! Some printed equilibria are not zeros of the field built from the
//! catalog multiplicities. Those sub-checks are listed in `KNOWN` with the
//! reason; they keep their criterion red but do not fail the run. The run
//! fails on any unlisted failure, and on a listed check that now passes.

mod common;

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use hermann_core::catalog::{export_json, import_json, load_catalog};
use hermann_core::field::{field_vector, jacobian, potential, second_fundamental_norm_sq, shape_spectrum};
use hermann_core::flow::{collapse_diagnostics, integrate_flow, FlowParams, Stratum, Termination};
use hermann_core::golden::reproduce_table31;
use hermann_core::grid::{render_svg, sample_grid, to_csv, SvgStyle};
use hermann_core::oracle::{compare_fields, has_formula, OracleStatus, PASS_TOL};
use hermann_core::solver::{find_edge_equilibria, find_interior_equilibrium, newton_from};
use hermann_core::{Action, Vec2};
use rayon::prelude::*;

use common::*;

const S3: f64 = 1.732_050_807_568_877_2;

const EXACT_TOL: f64 = 1e-10;
const EDGE_EXACT_TOL: f64 = 1e-9;
const GRAD_TOL: f64 = 1e-6;
const JAC_REL_TOL: f64 = 1e-6;
const MIN_EIGEN: f64 = 1e-9;
const TRACE_TOL: f64 = 1e-10;
const H_SPOT_TOL: f64 = 1e-12;
const EDGE_DRIFT_TOL: f64 = 1e-9;
const SEED_AGREE_TOL: f64 = 1e-8;
const GRID_N: usize = 200;
const LIPSCHITZ_FACTOR: f64 = 10.0;

const ARCTAN_THIRD: &str = "on x=0 the restricted field is −cot y+3tan y, zero at π/6; arctan(1/3) drops the square";
const NOT_A_ZERO: &str = "not a zero of the catalog field or the printed explicit formula at any q, j";
const VERTEX_LISTED: &str = "printed triple lists a simplex vertex where the edge field has an interior zero";

/// (criterion, sub-check, reason)
const KNOWN: &[(u8, &str, &str)] = &[
    (2, "SOq2_SUq2_SU2xUq_q3 interior", "zeroes one component of the printed formula only"),
    (2, "SO4_SU4_SU2xU2 interior", NOT_A_ZERO),
    (2, "SUj1xUqj1_SUq2_SU2xUq_q3_j2 interior", NOT_A_ZERO),
    (2, "SOj1xSOqj1_SOq2_SO2xSOq_q4_j2 interior", NOT_A_ZERO),
    (2, "SO4xSO4_SO8_U4 interior", "zeroes one component of the printed formula only"),
    (2, "rho4_U4_SO8_U4 interior", "data are x↔y symmetric, so the unique zero is on x=y"),
    (2, "SO4xSO6_SO10_U5 interior", NOT_A_ZERO),
    (2, "SO5xSO5_SO10_U5 interior", NOT_A_ZERO),
    (2, "Spj1xSpqj1_Spq2_Sp2xSpq_q3_j2 interior", "zeroes one component of the printed formula only"),
    (2, "Sp2xSp2_Sp4_Sp2xSp2 interior", "x agrees to 1e-6; printed y 0.8711 vs 0.4871"),
    (3, "SO6_SU6_Sp3 edge (3π/8, π/(8√3))", "outside the simplex; the edge zero is (π/8, 3π/(8√3))"),
    (3, "SOq2_SUq2_SU2xUq_q3 edge (0, π/4)", VERTEX_LISTED),
    (3, "SOq2_SUq2_SU2xUq_q3 edge (0, 0)", VERTEX_LISTED),
    (3, "SOq2_SUq2_SU2xUq_q3 edge (π/4, π/4)", VERTEX_LISTED),
    (3, "SO4_SU4_SU2xU2 edge (0, arctan(1/3))", ARCTAN_THIRD),
    (3, "SO4_SU4_SU2xU2 edge (0.477658, 0.477658)", "equals the computed interior zero, not an edge point"),
    (3, "SO4_SU4_SU2xU2 edge (0.33312, π/4)", NOT_A_ZERO),
    (3, "SUj1xUqj1_SUq2_SU2xUq_q3_j2 edge (0, 0.31416)", NOT_A_ZERO),
    (3, "SUj1xUqj1_SUq2_SU2xUq_q3_j2 edge (0.560791, 0.560791)", NOT_A_ZERO),
    (3, "SUj1xUqj1_SUq2_SU2xUq_q3_j2 edge (0.428528, π/4)", NOT_A_ZERO),
    (3, "SU2xU2_SU4_SU2xU2_nonisotropy edge (0, arctan(1/3))", ARCTAN_THIRD),
    (3, "SU2xU2_SU4_SU2xU2_nonisotropy edge (arctan(1/3), 0)", ARCTAN_THIRD),
    (3, "SOj1xSOqj1_SOq2_SO2xSOq_q4_j2 edge (0, arctan(1/3))", ARCTAN_THIRD),
    (3, "SOj1xSOqj1_SOq2_SO2xSOq_q4_j2 edge (arctan(1/3), 0)", ARCTAN_THIRD),
    (3, "SO4xSO4_SO8_U4 edge (0, 0.85707)", NOT_A_ZERO),
    (3, "SO4xSO4_SO8_U4 edge (1.00685, π/2)", NOT_A_ZERO),
    (3, "rho3_SO4xSO4_SO8_U4 edge (0, 1.00685)", NOT_A_ZERO),
    (3, "SO4xSO6_SO10_U5 edge (0, 0)", VERTEX_LISTED),
    (3, "SO4xSO6_SO10_U5 edge (π/4, π/4)", VERTEX_LISTED),
    (3, "SO5xSO5_SO10_U5 edge (0.5916, π/4)", NOT_A_ZERO),
    (3, "rho5_U5_SO10_U5 edge (0, 0.36137)", NOT_A_ZERO),
    (3, "rho5_U5_SO10_U5 edge (0.54453, 1.02627)", NOT_A_ZERO),
    (3, "SO2sqxSO3sq_SO5xSO5_SO5 edge (0, 0)", VERTEX_LISTED),
    (3, "SO2sqxSO3sq_SO5xSO5_SO5 edge (0, π/2)", VERTEX_LISTED),
    (3, "SU4_Sp4_Sp2xSp2 edge (0, 0)", VERTEX_LISTED),
    (3, "SU4_Sp4_Sp2xSp2 edge (0, π/2)", VERTEX_LISTED),
    (3, "U4_Sp4_Sp2xSp2 edge (0, 0)", VERTEX_LISTED),
    (3, "U4_Sp4_Sp2xSp2 edge (0, π/2)", VERTEX_LISTED),
    (3, "Spj1xSpqj1_Spq2_Sp2xSpq_q3_j2 edge (0, π/2)", VERTEX_LISTED),
    (3, "Sp2xSp2_Sp4_Sp2xSp2 edge (0.930274, 0.63355)", "near the neighbouring row's edge zero (0.930274, 0.640522)"),
    (3, "SU2sqSO2sq_Sp2xSp2_Sp2 edge (0, 0)", VERTEX_LISTED),
    (3, "SU2sqSO2sq_Sp2xSp2_Sp2 edge (0, π/2)", VERTEX_LISTED),
];

struct Sub {
    name: String,
    pass: bool,
    detail: String,
}

fn sub(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Sub {
    Sub { name: name.into(), pass, detail: detail.into() }
}

fn dev(a: Vec2, b: Vec2) -> f64 {
    (a[0] - b[0]).abs().max((a[1] - b[1]).abs())
}

fn criterion1() -> Vec<Sub> {
    [("rho1_SO3_SU3_SO3", [PI / 6.0, 0.0]), ("rho8_Sp2_Sp2xSp2_Sp2", [PI / 6.0, PI / 6.0])]
        .into_iter()
        .map(|(id, want)| {
            let got = find_interior_equilibrium(&action(id)).unwrap().location;
            let d = dev(got, want);
            sub(format!("{id} interior"), d <= EXACT_TOL, format!("{got:?} dev {d:.1e}"))
        })
        .collect()
}

fn criterion2(all: &[Action]) -> Vec<Sub> {
    let mut out = Vec::new();
    for a in all {
        let Ok(r) = reproduce_table31(a) else { continue };
        if let Some(c) = r.interior {
            let d = c.deviation[0].max(c.deviation[1]);
            let detail = format!("got ({:.6}, {:.6}) printed ({}, {}) dev {d:.2e}", c.got[0], c.got[1], c.golden[0].text, c.golden[1].text);
            out.push(sub(format!("{} interior", a.id()), c.pass, detail));
        }
    }
    out
}

fn edge_set(id: &str, want: &[(Vec2, &str)]) -> Vec<Sub> {
    let got: Vec<Vec2> = find_edge_equilibria(&action(id)).unwrap().iter().map(|e| e.location).collect();
    let pts: Vec<Vec2> = want.iter().map(|w| w.0).collect();
    match_points(&pts, &got)
        .into_iter()
        .zip(want)
        .map(|(d, (_, text))| sub(format!("{id} edge {text}"), d <= EDGE_EXACT_TOL, format!("dev {d:.2e}")))
        .collect()
}

fn criterion3(all: &[Action]) -> Vec<Sub> {
    let q = PI / (4.0 * S3);
    let mut out = edge_set(
        "rho1_SO3_SU3_SO3",
        &[([0.0, 0.0], "(0, 0)"), ([PI / 4.0, -q], "(π/4, −π/(4√3))"), ([PI / 4.0, q], "(π/4, π/(4√3))")],
    );
    out.extend(edge_set(
        "SO6_SU6_Sp3",
        &[
            ([0.0, q], "(0, π/(4√3))"),
            ([PI / 8.0, q / 2.0], "(π/8, π/(8√3))"),
            ([3.0 * PI / 8.0, q / 2.0], "(3π/8, π/(8√3))"),
        ],
    ));
    for a in all {
        if matches!(a.id(), "rho1_SO3_SU3_SO3" | "SO6_SU6_Sp3") {
            continue;
        }
        let Ok(r) = reproduce_table31(a) else { continue };
        for c in r.edges {
            let d = c.deviation[0].max(c.deviation[1]);
            out.push(sub(
                format!("{} edge ({}, {})", a.id(), c.golden[0].text, c.golden[1].text),
                c.pass,
                format!("got ({:.6}, {:.6}) dev {d:.2e}", c.got[0], c.got[1]),
            ));
        }
    }
    out
}

fn criterion4(all: &[Action]) -> Vec<Sub> {
    let mut out = Vec::new();
    let mut flagged = BTreeSet::new();
    for a in all.iter().filter(|a| has_formula(&a.spec)) {
        let r = compare_fields(a, 100).unwrap();
        let d = r.max_deviation[0].max(r.max_deviation[1]);
        match r.status {
            OracleStatus::Pass => out.push(sub(a.id(), d <= PASS_TOL && r.samples == 100, format!("dev {d:.1e}"))),
            OracleStatus::Flagged => {
                flagged.insert(a.id().to_string());
                let ok = !r.term_diffs.is_empty() && !r.explanation.is_empty();
                out.push(sub(a.id(), ok, format!("flagged, {} term differences", r.term_diffs.len())));
            }
            OracleStatus::Fail => out.push(sub(a.id(), false, format!("unflagged deviation {d:.1e}"))),
        }
    }
    for id in ["rho2_Sp3_SU6_Sp3", "rho13_F4_E6_F4"] {
        out.push(sub(format!("{id} is flagged"), flagged.contains(id), ""));
    }
    out
}

fn criterion5(all: &[Action]) -> Vec<Sub> {
    all.par_iter()
        .enumerate()
        .map(|(k, a)| {
            let mut r = rng(500 + k as u64);
            let (mut worst_g, mut worst_j, mut worst_asym, mut min_eig) = (0.0f64, 0.0f64, 0.0f64, f64::INFINITY);
            for z in random_interior(a, &mut r, 100, 0.05) {
                let x = field_vector(a, z).unwrap();
                let g = fd_gradient(a, z);
                let scale = 1.0f64.max(x[0].hypot(x[1]));
                worst_g = worst_g.max((x[0] + g[0]).abs().max((x[1] + g[1]).abs()) / scale);
                let j = jacobian(a, z).unwrap();
                let fj = fd_jacobian(a, z);
                let jn = mat_norm(&j);
                let diff = [[j[0][0] - fj[0][0], j[0][1] - fj[0][1]], [j[1][0] - fj[1][0], j[1][1] - fj[1][1]]];
                worst_j = worst_j.max(mat_norm(&diff) / jn);
                worst_asym = worst_asym.max((j[0][1] - j[1][0]).abs() / jn);
                min_eig = min_eig.min(sym_eigen(&j)[0]);
            }
            let pass = worst_g <= GRAD_TOL && worst_j <= JAC_REL_TOL && worst_asym <= 1e-14 && min_eig >= MIN_EIGEN;
            let detail = format!("grad {worst_g:.1e} jac {worst_j:.1e} asym {worst_asym:.0e} λmin {min_eig:.3e}");
            sub(a.id(), pass, detail)
        })
        .collect()
}

fn criterion6(all: &[Action]) -> Vec<Sub> {
    let mut out: Vec<Sub> = all
        .par_iter()
        .enumerate()
        .map(|(k, a)| {
            let mut r = rng(600 + k as u64);
            let mut worst = 0.0f64;
            for z in random_interior(a, &mut r, 50, 0.02) {
                let x = field_vector(a, z).unwrap();
                for (i, n) in [[1.0, 0.0], [0.0, 1.0]].into_iter().enumerate() {
                    let t = shape_spectrum(a, z, n).unwrap().weighted_trace();
                    worst = worst.max((t - x[i]).abs());
                }
            }
            sub(a.id(), worst <= TRACE_TOL, format!("max {worst:.1e}"))
        })
        .collect();
    let h = second_fundamental_norm_sq(&action("rho1_SO3_SU3_SO3"), [PI / 6.0, 0.0]).unwrap();
    out.push(sub("rho1 |h|² at (π/6, 0)", (h - 4.0).abs() <= H_SPOT_TOL, format!("{h:.15}")));
    out
}

fn criterion7(all: &[Action]) -> Vec<Sub> {
    let params = FlowParams::default();
    let mut out: Vec<Sub> = all
        .par_iter()
        .map(|a| {
            let eq = find_interior_equilibrium(a).unwrap().location;
            let ball = 0.05 * inradius(a);
            let (mut runs, mut bad_phi, mut not_wall, mut t_max) = (0, 0, 0, 0.0f64);
            for z in start_grid(a).into_iter().filter(|z| dev(*z, eq) > ball) {
                runs += 1;
                let tr = integrate_flow(a, z, &params).unwrap();
                let phi: Vec<f64> = tr.samples.iter().map(|s| potential(a, s.z).unwrap()).collect();
                if phi.windows(2).any(|w| w[1] >= w[0]) {
                    bad_phi += 1;
                }
                match tr.termination {
                    Termination::WallContact(_) => t_max = t_max.max(tr.last().t),
                    _ => not_wall += 1,
                }
            }
            let mut edge_drift = 0.0f64;
            for e in 0..3 {
                for s in [0.2, 0.5, 0.8] {
                    let z = a.simplex.edge_point(e, s * a.simplex.edges[e].length);
                    let tr = integrate_flow(a, z, &params).unwrap();
                    let w = a.simplex.edge_wall(e);
                    edge_drift = tr.samples.iter().map(|p| w.distance(p.z)).fold(edge_drift, f64::max);
                }
            }
            let pass = bad_phi == 0 && not_wall == 0 && edge_drift <= EDGE_DRIFT_TOL && t_max.is_finite();
            let detail = format!("{runs} runs, Φ up {bad_phi}, no contact {not_wall}, T ≤ {t_max:.3}, edge drift {edge_drift:.0e}");
            sub(a.id(), pass, detail)
        })
        .collect();
    let a = action("rho1_SO3_SU3_SO3");
    let tr = integrate_flow(&a, [PI / 4.0, 0.0], &params).unwrap();
    let d = collapse_diagnostics(&a, &tr).unwrap();
    let detail = format!(
        "T {:.6} at {:?}, sup (T−t)|A|² {:.4}, final-decade ratio {:.4}",
        d.collapse_time, d.stratum, d.type1_sup, d.final_decade_growth
    );
    let ok = d.type1_sup.is_finite() && d.bounded && matches!(d.stratum, Stratum::Vertex(_));
    out.push(sub("rho1 axis type-I statistic", ok, detail));
    out
}

fn criterion8(all: &[Action]) -> Vec<Sub> {
    all.par_iter()
        .enumerate()
        .map(|(k, a)| {
            let eq = find_interior_equilibrium(a).unwrap().location;
            let mut r = rng(800 + k as u64);
            let mut spread = 0.0f64;
            let mut diverged = 0;
            for seed in random_interior(a, &mut r, 100, 0.01) {
                match newton_from(a, seed) {
                    Ok(s) if s.converged => spread = spread.max(dev(s.location, eq)),
                    _ => diverged += 1,
                }
            }
            // exhaustive lattice: a zero can sit in a cell only if
            // |X(c)| ≤ ‖J(c)‖·(half diagonal); keep a 10× margin
            let [x0, x1, y0, y1] = a.simplex.bbox();
            let (hx, hy) = ((x1 - x0) / GRID_N as f64, (y1 - y0) / GRID_N as f64);
            let half_diag = 0.5 * hx.hypot(hy);
            let mut candidates = 0;
            let mut strays = 0;
            for i in 0..GRID_N {
                for j in 0..GRID_N {
                    let c = [x0 + (i as f64 + 0.5) * hx, y0 + (j as f64 + 0.5) * hy];
                    if !a.simplex.contains(c, 1e-9) {
                        continue;
                    }
                    let x = field_vector(a, c).unwrap();
                    let bound = LIPSCHITZ_FACTOR * mat_norm(&jacobian(a, c).unwrap()) * half_diag;
                    if x[0].hypot(x[1]) >= bound {
                        continue;
                    }
                    candidates += 1;
                    let in_eq_cell = (c[0] - eq[0]).abs() <= 0.5 * hx && (c[1] - eq[1]).abs() <= 0.5 * hy;
                    if in_eq_cell {
                        continue;
                    }
                    match newton_from(a, c) {
                        Ok(s) if s.converged && dev(s.location, eq) <= SEED_AGREE_TOL => {}
                        _ => strays += 1,
                    }
                }
            }
            let pass = spread <= SEED_AGREE_TOL && diverged == 0 && strays == 0;
            sub(a.id(), pass, format!("seed spread {spread:.1e}, {candidates} lattice candidates, {strays} stray"))
        })
        .collect()
}

fn criterion9(all: &[Action]) -> Vec<Sub> {
    let render = |a: &Action| {
        let g = sample_grid(a, 60).unwrap();
        let eq = find_interior_equilibrium(a).unwrap().location;
        (to_csv(&g), render_svg(&g, &SvgStyle { markers: vec![eq], ..SvgStyle::default() }).unwrap())
    };
    let pool = |n| rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
    let mut out: Vec<Sub> = all
        .iter()
        .map(|a| {
            let one = pool(1).install(|| render(a));
            let four = pool(4).install(|| render(a));
            let again = pool(4).install(|| render(a));
            sub(a.id(), one == four && four == again, format!("{} csv bytes, {} svg bytes", one.0.len(), one.1.len()))
        })
        .collect();
    let cat = load_catalog();
    let text = export_json(&cat);
    let back = import_json(&text).unwrap();
    out.push(sub("catalog JSON round trip", back == cat && export_json(&back) == text, format!("{} bytes", text.len())));
    out
}

fn main() -> ExitCode {
    let start = Instant::now();
    let all = actions();
    let criteria: [(u8, &str, Vec<Sub>); 9] = [
        (1, "closed-form equilibria", criterion1()),
        (2, "decimal equilibria", criterion2(&all)),
        (3, "edge equilibria", criterion3(&all)),
        (4, "oracle equivalence", criterion4(&all)),
        (5, "gradient and Jacobian", criterion5(&all)),
        (6, "trace identity", criterion6(&all)),
        (7, "flow properties", criterion7(&all)),
        (8, "uniqueness", criterion8(&all)),
        (9, "determinism", criterion9(&all)),
    ];
    let mut unexpected = Vec::new();
    let mut seen = BTreeSet::new();
    for (n, title, subs) in &criteria {
        let failed: Vec<&Sub> = subs.iter().filter(|s| !s.pass).collect();
        let status = if failed.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} {n}. {title} ({}/{} sub-checks)", subs.len() - failed.len(), subs.len());
        for s in subs {
            let known = KNOWN.iter().find(|k| k.0 == *n && k.1 == s.name);
            if let Some(k) = known {
                seen.insert((k.0, k.1));
            }
            match (s.pass, known) {
                (false, Some(k)) => println!("    known  {}: {} [{}]", s.name, s.detail, k.2),
                (false, None) => {
                    println!("    FAIL   {}: {}", s.name, s.detail);
                    unexpected.push(format!("{n}: {} failed", s.name));
                }
                (true, Some(_)) => {
                    println!("    STALE  {}: {}", s.name, s.detail);
                    unexpected.push(format!("{n}: {} passes but is listed as known", s.name));
                }
                (true, None) => {}
            }
        }
        if *n == 7 {
            if let Some(s) = subs.last() {
                println!("    {}: {}", s.name, s.detail);
            }
        }
    }
    for k in KNOWN.iter().filter(|k| !seen.contains(&(k.0, k.1))) {
        unexpected.push(format!("{}: known entry {} was not checked", k.0, k.1));
    }
    println!("elapsed {:.1}s", start.elapsed().as_secs_f64());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            eprintln!("unexpected: {u}");
        }
        ExitCode::FAILURE
    }
}

mod common;

use std::collections::BTreeSet;
use std::f64::consts::PI;

use hermann_core::catalog::{export_json, find, import_json, load_catalog};
use hermann_core::error::CatalogError;
use hermann_core::lint::lint_catalog;
use hermann_core::roots::{root_vector, RootSystemKind};
use hermann_core::simplex::build_simplex;
use proptest::prelude::*;

const S3: f64 = 1.732_050_807_568_877_2;

fn close(a: [f64; 2], b: [f64; 2], tol: f64) -> bool {
    (a[0] - b[0]).abs() <= tol && (a[1] - b[1]).abs() <= tol
}

#[test]
fn rho1_row() {
    let s = find("rho1_SO3_SU3_SO3").unwrap();
    assert_eq!(s.kind, RootSystemKind::A2);
    let m = |p, q| {
        let r = s.root(p, q).unwrap();
        (s.mult_v(r), s.mult_h(r))
    };
    assert_eq!(m(1, 0), (1, 0));
    assert_eq!(m(0, 1), (0, 1));
    assert_eq!(m(1, 1), (0, 1));
}

#[test]
fn so6_row_splits_evenly() {
    let s = find("SO6_SU6_Sp3").unwrap();
    assert_eq!(s.roots.len(), 3);
    for r in &s.roots {
        assert_eq!((s.mult_v(r), s.mult_h(r), s.mult_total(r)), (2, 2, 4), "{}", r.label());
    }
}

#[test]
fn ids_unique_and_order_stable() {
    let a = load_catalog();
    let ids: BTreeSet<&str> = a.iter().map(|s| s.id.as_str()).collect();
    assert_eq!(ids.len(), a.len());
    assert_eq!(a, load_catalog());
    assert!(matches!(find("nope"), Err(CatalogError::UnknownAction(_))));
}

#[test]
fn root_vectors() {
    assert!(close(root_vector(RootSystemKind::A2, 1, 1).unwrap(), [1.0, S3], 1e-15));
    assert!(close(root_vector(RootSystemKind::B2, 2, 1).unwrap(), [1.0, 1.0], 1e-15));
    assert!(close(root_vector(RootSystemKind::G2, 3, 2).unwrap(), [0.0, 2.0 * S3], 1e-15));
    assert!(root_vector(RootSystemKind::A2, 2, 1).is_err());
    assert!(root_vector(RootSystemKind::B2, 2, 2).is_err());
}

#[test]
fn every_row_uses_roots_of_its_kind() {
    for s in load_catalog() {
        for r in &s.roots {
            assert!(s.kind.contains(r.p, r.q), "{}: {}", s.id, r.label());
            assert!(s.mult_v(r) >= 0 && s.mult_h(r) >= 0, "{}: {}", s.id, r.label());
        }
    }
}

#[test]
fn rho1_simplex() {
    let a = common::action("rho1_SO3_SU3_SO3");
    let h = PI / (2.0 * S3);
    let want = [[0.0, -h], [0.0, h], [PI / 2.0, 0.0]];
    for (v, w) in a.simplex.vertices.iter().zip(want) {
        assert!(close(*v, w, 1e-14), "{v:?} vs {w:?}");
    }
    let mut labels: Vec<String> = (0..3).map(|e| a.simplex.edge_wall(e).label()).collect();
    labels.sort();
    assert_eq!(labels, ["α+β=π/2", "α=0", "β=-π/2"]);
}

#[test]
fn so6_simplex_matches_its_domain() {
    // 0 < x, x/√3 < y < −x/√3 + π/(2√3)
    let a = common::action("SO6_SU6_Sp3");
    let want = [[0.0, 0.0], [0.0, PI / (2.0 * S3)], [PI / 4.0, PI / (4.0 * S3)]];
    for (v, w) in a.simplex.vertices.iter().zip(want) {
        assert!(close(*v, w, 1e-14), "{v:?} vs {w:?}");
    }
}

#[test]
fn vertices_sit_on_exactly_two_edges() {
    for a in common::actions() {
        for v in a.simplex.vertices {
            let on = (0..3).filter(|&e| a.simplex.edge_wall(e).distance(v) < 1e-12).count();
            assert_eq!(on, 2, "{} {v:?}", a.id());
        }
        let sorted = a.simplex.vertices.windows(2).all(|w| w[0] <= w[1]);
        assert!(sorted, "{}", a.id());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn simplex_ignores_root_order(idx in 0usize..36, seed in any::<u64>()) {
        let mut s = load_catalog().swap_remove(idx);
        let before = build_simplex(&s).unwrap();
        let n = s.roots.len();
        s.roots.rotate_left((seed as usize) % n);
        if seed & 1 == 1 {
            s.roots.reverse();
        }
        let after = build_simplex(&s).unwrap();
        for (a, b) in before.vertices.iter().zip(after.vertices) {
            prop_assert!(close(*a, b, 1e-15));
        }
    }
}

#[test]
fn lint_examples() {
    assert!(lint_catalog(&find("SO6_SU6_Sp3").unwrap()).clean());
    assert!(lint_catalog(&find("rho1_SO3_SU3_SO3").unwrap()).clean());
    let r = lint_catalog(&find("SU6SU2_E6_Spin10U1").unwrap());
    let bad: Vec<_> = r.roots.iter().filter(|l| !l.consistent).map(|l| l.label.as_str()).collect();
    assert_eq!(bad, ["2α+β"]);
}

#[test]
fn parametric_rows() {
    let s = find("SOq2_SUq2_SU2xUq_q3").unwrap();
    assert!(s.is_parametric());
    let t = s.with_params(5, None).unwrap();
    assert_eq!(t.id, "SOq2_SUq2_SU2xUq_q5");
    assert!(t.table31.is_none());
    assert!(s.with_params(5, Some(2)).is_err());
    let u = find("SUj1xUqj1_SUq2_SU2xUq_q3_j2").unwrap();
    assert_eq!(u.with_params(6, Some(3)).unwrap().id, "SUj1xUqj1_SUq2_SU2xUq_q6_j3");
    assert!(u.with_params(6, Some(6)).is_err());
    assert!(u.with_params(6, None).is_err());
    assert!(find("rho1_SO3_SU3_SO3").unwrap().with_params(3, None).is_err());
}

#[test]
fn json_round_trip() {
    let cat = load_catalog();
    let text = export_json(&cat);
    let back = import_json(&text).unwrap();
    assert_eq!(back, cat);
    assert_eq!(export_json(&back), text);
    assert!(import_json("{}").is_err());
}

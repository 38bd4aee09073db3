mod common;

use std::f64::consts::PI;

use common::*;
use hermann_core::error::GridError;
use hermann_core::grid::{read_csv, render_svg, sample_grid, to_csv, GridSample, SvgStyle};

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(f)
}

#[test]
fn rho1_minimum_sits_at_the_equilibrium() {
    let g = sample_grid(&action("rho1_SO3_SU3_SO3"), 50).unwrap();
    let dist = |r: &hermann_core::grid::GridRow| (r.x1 - PI / 6.0).hypot(r.x2);
    let nearest = g.rows.iter().min_by(|a, b| dist(a).total_cmp(&dist(b))).unwrap();
    let smallest = g.rows.iter().min_by(|a, b| a.norm.total_cmp(&b.norm)).unwrap();
    assert_eq!(nearest, smallest);
}

#[test]
fn rows_sorted_and_bounded() {
    for a in actions() {
        let g = sample_grid(&a, 30).unwrap();
        assert!(!g.rows.is_empty() && g.rows.len() <= 30 * 30, "{}", a.id());
        assert!(g.rows.windows(2).all(|w| (w[0].x1, w[0].x2) < (w[1].x1, w[1].x2)), "{}", a.id());
        assert!(g.rows.iter().all(|r| a.simplex.contains([r.x1, r.x2], 0.0)));
    }
}

#[test]
fn csv_round_trip() {
    let g = sample_grid(&action("SO6_SU6_Sp3"), 40).unwrap();
    let text = to_csv(&g);
    let back = read_csv(&text).unwrap();
    assert_eq!(back.len(), g.rows.len());
    for (line, r) in text.lines().skip(1).zip(&back) {
        assert_eq!(line, r.csv_line());
    }
    assert!(matches!(read_csv("x,y\n"), Err(GridError::Parse { line: 1, .. })));
    let (head, body) = text.split_once('\n').unwrap();
    let broken = format!("{head}\n{}", body.replacen(',', ";", 1));
    assert!(matches!(read_csv(&broken), Err(GridError::Parse { line: 2, .. })));
}

#[test]
fn output_ignores_thread_count() {
    let a = action("rho8_Sp2_Sp2xSp2_Sp2");
    let style = SvgStyle::default();
    let run = || {
        let g = sample_grid(&a, 60).unwrap();
        (to_csv(&g), render_svg(&g, &style).unwrap())
    };
    let one = in_pool(1, run);
    assert_eq!(one, in_pool(4, run));
    assert_eq!(one, in_pool(3, run));
}

#[test]
fn svg_arrows_toggle() {
    let g = sample_grid(&action("rho1_SO3_SU3_SO3"), 40).unwrap();
    let on = render_svg(&g, &SvgStyle::default()).unwrap();
    let off = render_svg(&g, &SvgStyle { arrows: false, ..SvgStyle::default() }).unwrap();
    assert!(on.contains("<path") || on.contains("<line"));
    assert!(!off.contains("<path") && !off.contains("<line"));
    assert!(off.starts_with("<svg") && off.trim_end().ends_with("</svg>"));
}

#[test]
fn bad_inputs() {
    let a = action("rho1_SO3_SU3_SO3");
    assert_eq!(sample_grid(&a, 1), Err(GridError::Resolution(1)));
    assert_eq!(sample_grid(&a, 2001), Err(GridError::Resolution(2001)));
    let mut g: GridSample = sample_grid(&a, 10).unwrap();
    g.rows.clear();
    assert_eq!(render_svg(&g, &SvgStyle::default()), Err(GridError::Empty));
}

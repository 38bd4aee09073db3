//! `hermann-flow`: catalog inspection, field queries, equilibria, flow runs,
//! grid sampling and the verification suite.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use hermann_core::catalog::{export_json, find, load_catalog};
use hermann_core::field::{field_at, jacobian, potential, second_fundamental_norm_sq, shape_spectrum};
use hermann_core::flow::{collapse_diagnostics, integrate_flow, FlowParams, Termination};
use hermann_core::golden::reproduce_table31;
use hermann_core::grid::{fmt_num, render_svg, sample_grid, to_csv, SvgStyle};
use hermann_core::lint::lint_catalog;
use hermann_core::oracle::{compare_fields, OracleStatus};
use hermann_core::solver::{find_edge_equilibria, find_interior_equilibrium, EquilibriumKind};
use hermann_core::{Action, HermannActionSpec, Vec2};

const GRAMMAR: &str = "hermann-flow <list|info|field|equilibrium|flow|grid|verify|export-catalog> [args] [--flags]
  list
  info ACTION
  field ACTION --at X1,X2
  equilibrium ACTION
  flow ACTION --from X1,X2 [--t-max T] [--csv PATH] [--reverse]
  grid ACTION --res N --out PATH.(csv|svg) [--no-arrows]
  verify (--all | ACTION)
  export-catalog [--out PATH]";

const OUT_DIR_VAR: &str = "HERMANN_FLOW_OUT";

#[derive(Parser)]
#[command(name = "hermann-flow", about = "Mean curvature flow of Hermann action orbits", override_usage = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One line per action: id, display name, root kind
    List,
    /// Roots, multiplicities, simplex and lint findings of one action
    Info { action: String },
    /// The field, its norm and the potential at a point
    Field {
        action: String,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        at: Vec2,
    },
    /// Interior and edge equilibria
    Equilibrium { action: String },
    /// Integrate the flow from a point
    Flow {
        action: String,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        from: Vec2,
        #[arg(long, default_value_t = 100.0)]
        t_max: f64,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        reverse: bool,
    },
    /// Sample the field on an N×N lattice and write CSV or SVG
    Grid {
        action: String,
        #[arg(long)]
        res: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        no_arrows: bool,
    },
    /// Lint, golden equilibria, explicit formulas and spot checks
    Verify {
        #[arg(long)]
        all: bool,
        action: Option<String>,
    },
    /// Write the catalog as JSON
    ExportCatalog {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_point(s: &str) -> Result<Vec2, String> {
    let (a, b) = s.split_once(',').ok_or("expected X1,X2")?;
    let p = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t}: {e}"));
    Ok([p(a)?, p(b)?])
}

/// Domain errors exit 1, usage errors 2, failed verification 3.
enum Failure {
    Domain(String),
    Usage(String),
    Verify,
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn out_path(p: PathBuf) -> PathBuf {
    match std::env::var_os(OUT_DIR_VAR) {
        Some(dir) if p.is_relative() => PathBuf::from(dir).join(p),
        _ => p,
    }
}

fn action(id: &str) -> Result<Action, Failure> {
    Ok(Action::new(find(id)?)?)
}

fn pt(z: Vec2) -> String {
    format!("({}, {})", fmt_num(z[0]), fmt_num(z[1]))
}

fn kind_text(a: &Action, k: EquilibriumKind) -> String {
    match k {
        EquilibriumKind::Interior => "INTERIOR".into(),
        EquilibriumKind::Edge(e) => format!("EDGE {}", a.simplex.edge_wall(e).label()),
        EquilibriumKind::Vertex(v) => format!("VERTEX {}", pt(a.simplex.vertices[v])),
    }
}

fn list(out: &mut impl Write) -> io::Result<()> {
    for s in load_catalog() {
        writeln!(out, "{}\t{}\t{}", s.id, s.display_name, s.kind.name())?;
    }
    Ok(())
}

fn info(out: &mut impl Write, id: &str) -> Result<(), Failure> {
    let a = action(id)?;
    let s = &a.spec;
    writeln!(out, "{}", s.display_name)?;
    writeln!(out, "id: {}", s.id)?;
    writeln!(out, "dual: {}", s.dual_name)?;
    writeln!(out, "L*: {}", s.l_star_name)?;
    writeln!(out, "kind: {}", s.kind.name())?;
    if let Some(p) = &s.params {
        match p.j {
            Some(j) => writeln!(out, "params: q={} j={}", p.q, j)?,
            None => writeln!(out, "params: q={}", p.q)?,
        }
    }
    writeln!(out, "roots:")?;
    for r in &s.roots {
        writeln!(
            out,
            "  {:<8} total {:>3}  V {:>3}  H {:>3}",
            r.label(),
            s.mult_total(r),
            s.mult_v(r),
            s.mult_h(r)
        )?;
    }
    writeln!(out, "vertices: {}", a.simplex.vertices.map(pt).join(" "))?;
    for (i, e) in a.simplex.edges.iter().enumerate() {
        writeln!(out, "edge {i}: {} (v{}-v{})", a.simplex.edge_wall(i).label(), e.endpoints[0], e.endpoints[1])?;
    }
    for k in &s.known_inconsistencies {
        writeln!(out, "note: {k}")?;
    }
    for f in lint_catalog(s).findings {
        writeln!(out, "lint: {f}")?;
    }
    Ok(())
}

fn field(out: &mut impl Write, id: &str, z: Vec2) -> Result<(), Failure> {
    let a = action(id)?;
    let f = field_at(&a, z)?;
    let x = f.vector;
    writeln!(out, "X = {}", pt(x))?;
    writeln!(out, "|X| = {}", fmt_num(x[0].hypot(x[1])))?;
    let label = |r: &[(u8, u8)]| r.iter().map(|&(p, q)| hermann_core::roots::root_label(p, q)).collect::<Vec<_>>().join(" ");
    writeln!(out, "active V: {}", label(&f.active_v))?;
    writeln!(out, "active H: {}", label(&f.active_h))?;
    if f.active_v.len() + f.active_h.len() == a.terms.len() {
        writeln!(out, "phi = {}", fmt_num(potential(&a, z)?))?;
        writeln!(out, "|h|^2 = {}", fmt_num(second_fundamental_norm_sq(&a, z)?))?;
    }
    Ok(())
}

fn equilibrium(out: &mut impl Write, id: &str) -> Result<(), Failure> {
    let a = action(id)?;
    let r = find_interior_equilibrium(&a)?;
    writeln!(out, "interior {} residual {}", pt(r.location), fmt_num(r.residual))?;
    for (i, e) in find_edge_equilibria(&a)?.into_iter().enumerate() {
        writeln!(out, "edge {i} {} {} residual {}", pt(e.location), kind_text(&a, e.kind), fmt_num(e.residual))?;
    }
    Ok(())
}

fn flow(out: &mut impl Write, id: &str, z: Vec2, t_max: f64, csv: Option<PathBuf>, reverse: bool) -> Result<(), Failure> {
    let a = action(id)?;
    if !a.simplex.contains(z, -hermann_core::field::EPS_WALL) {
        return Err(Failure::Domain(format!("start {} is outside the simplex", pt(z))));
    }
    let params = FlowParams { t_max, reverse, ..FlowParams::default() };
    let tr = integrate_flow(&a, z, &params)?;
    let last = tr.last();
    let term = match tr.termination {
        Termination::Equilibrium => "EQUILIBRIUM".to_string(),
        Termination::MaxTime => "MAX_TIME".to_string(),
        Termination::WallContact(hermann_core::flow::Stratum::Edge(e)) => {
            format!("WALL_CONTACT edge {e} {}", a.simplex.edge_wall(e).label())
        }
        Termination::WallContact(hermann_core::flow::Stratum::Vertex(v)) => {
            format!("WALL_CONTACT vertex {v} {}", pt(a.simplex.vertices[v]))
        }
    };
    writeln!(out, "termination {term}")?;
    writeln!(out, "samples {}", tr.samples.len())?;
    writeln!(out, "t {}", fmt_num(last.t))?;
    writeln!(out, "end {}", pt(last.z))?;
    if let Ok(d) = collapse_diagnostics(&a, &tr) {
        writeln!(out, "collapse time {}", fmt_num(d.collapse_time))?;
        writeln!(out, "type-I sup {}", fmt_num(d.type1_sup))?;
        writeln!(out, "type-I final decade growth {}", fmt_num(d.final_decade_growth))?;
    }
    if let Some(path) = csv {
        let mut s = String::from("t,x1,x2,speed,h_norm_sq\n");
        for p in &tr.samples {
            s.push_str(&[p.t, p.z[0], p.z[1], p.speed, p.h_norm_sq].map(fmt_num).join(","));
            s.push('\n');
        }
        std::fs::write(out_path(path), s)?;
    }
    Ok(())
}

fn grid(out: &mut impl Write, id: &str, res: usize, path: PathBuf, arrows: bool) -> Result<(), Failure> {
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("").to_ascii_lowercase();
    if ext != "csv" && ext != "svg" {
        return Err(Failure::Usage(format!("--out must end in .csv or .svg: {}", path.display())));
    }
    if !(2..=2000).contains(&res) {
        return Err(Failure::Usage(format!("--res {res} outside 2..=2000")));
    }
    let a = action(id)?;
    let g = sample_grid(&a, res)?;
    let text = if ext == "csv" {
        to_csv(&g)
    } else {
        let eq = find_interior_equilibrium(&a)?.location;
        render_svg(&g, &SvgStyle { arrows, markers: vec![eq], ..SvgStyle::default() })?
    };
    let path = out_path(path);
    std::fs::write(&path, text)?;
    writeln!(out, "{} rows -> {}", g.rows.len(), path.display())?;
    Ok(())
}

#[derive(Default)]
struct Tally {
    pass: usize,
    flag: usize,
    fail: usize,
    lines: Vec<String>,
}

impl Tally {
    fn record(&mut self, status: &str, what: String) {
        match status {
            "PASS" => self.pass += 1,
            "FLAG" => self.flag += 1,
            _ => self.fail += 1,
        }
        self.lines.push(format!("{status} {what}"));
    }
}

/// Field-module invariants at the incenter and one interior point.
fn spot_checks(a: &Action, t: &mut Tally) {
    let c = a.simplex.incenter();
    let h = 1e-5;
    let grad_ok = (|| -> Result<bool, hermann_core::error::FieldError> {
        let x = field_at(a, c)?.vector;
        let d0 = (potential(a, [c[0] + h, c[1]])? - potential(a, [c[0] - h, c[1]])?) / (2.0 * h);
        let d1 = (potential(a, [c[0], c[1] + h])? - potential(a, [c[0], c[1] - h])?) / (2.0 * h);
        let scale = 1.0f64.max(x[0].hypot(x[1]));
        let j = jacobian(a, c)?;
        let sym = (j[0][1] - j[1][0]).abs() <= 1e-12 * scale.max(j[0][0].abs());
        let (tr, det) = (j[0][0] + j[1][1], j[0][0] * j[1][1] - j[0][1] * j[1][0]);
        let lmin = 0.5 * (tr - (tr * tr - 4.0 * det).max(0.0).sqrt());
        let mut trace_ok = true;
        for (i, n) in [[1.0, 0.0], [0.0, 1.0]].into_iter().enumerate() {
            trace_ok &= (shape_spectrum(a, c, n)?.weighted_trace() - x[i]).abs() <= 1e-10 * scale;
        }
        Ok((x[0] + d0).abs() <= 1e-6 * scale && (x[1] + d1).abs() <= 1e-6 * scale && sym && lmin >= 1e-9 && trace_ok)
    })();
    match grad_ok {
        Ok(true) => t.record("PASS", format!("{} invariants at incenter", a.id())),
        Ok(false) => t.record("FAIL", format!("{} invariants at incenter", a.id())),
        Err(e) => t.record("FAIL", format!("{} invariants at incenter: {e}", a.id())),
    }
}

fn verify_one(spec: HermannActionSpec) -> Tally {
    let mut t = Tally::default();
    let lint = lint_catalog(&spec);
    if lint.clean() {
        t.record("PASS", format!("{} lint", spec.id));
    } else {
        for f in &lint.findings {
            t.record("FLAG", format!("{} lint: {f}", spec.id));
        }
    }
    let a = match Action::new(spec.clone()) {
        Ok(a) => {
            t.record("PASS", format!("{} simplex", spec.id));
            a
        }
        Err(e) => {
            t.record("FAIL", format!("{} simplex: {e}", spec.id));
            return t;
        }
    };
    match reproduce_table31(&a) {
        Ok(r) => {
            if let Some(i) = &r.interior {
                let s = if i.pass { "PASS" } else { "FAIL" };
                t.record(s, format!("{} interior {} vs printed ({}, {})", a.id(), pt(i.got), i.golden[0].text, i.golden[1].text));
            }
            for e in &r.edges {
                let s = if e.pass { "PASS" } else { "FAIL" };
                t.record(s, format!("{} edge {} vs printed ({}, {})", a.id(), pt(e.got), e.golden[0].text, e.golden[1].text));
            }
        }
        Err(hermann_core::error::GoldenError::MissingGolden(_)) => {
            if let Ok(r) = find_interior_equilibrium(&a) {
                t.lines.push(format!("INFO {} no printed equilibria; interior {}", a.id(), pt(r.location)));
            }
        }
        Err(e) => t.record("FAIL", format!("{} golden: {e}", a.id())),
    }
    match compare_fields(&a, 100) {
        Ok(r) => {
            let dev = fmt_num(r.max_deviation[0].max(r.max_deviation[1]));
            match r.status {
                OracleStatus::Pass => t.record("PASS", format!("{} explicit formula (max deviation {dev})", a.id())),
                OracleStatus::Flagged => {
                    t.record("FLAG", format!("{} explicit formula: {}", a.id(), r.explanation.join("; ")));
                }
                OracleStatus::Fail => {
                    let d: Vec<String> = r.term_diffs.iter().map(|d| d.to_string()).collect();
                    t.record("FAIL", format!("{} explicit formula: {}", a.id(), d.join("; ")));
                }
            }
        }
        Err(e) => t.record("FAIL", format!("{} explicit formula: {e}", a.id())),
    }
    spot_checks(&a, &mut t);
    t
}

fn verify(out: &mut impl Write, all: bool, id: Option<String>) -> Result<(), Failure> {
    let specs = match (all, id) {
        (true, None) => load_catalog(),
        (false, Some(id)) => vec![find(&id)?],
        _ => return Err(Failure::Usage("verify takes either --all or one ACTION".into())),
    };
    let tallies: Vec<Tally> = specs.into_par_iter().map(verify_one).collect();
    let mut total = Tally::default();
    for t in tallies {
        for l in &t.lines {
            writeln!(out, "{l}")?;
        }
        total.pass += t.pass;
        total.flag += t.flag;
        total.fail += t.fail;
    }
    let summary = serde_json::json!({ "pass": total.pass, "flag": total.flag, "fail": total.fail });
    writeln!(out, "{summary}")?;
    if total.fail > 0 {
        Err(Failure::Verify)
    } else {
        Ok(())
    }
}

fn export(out: &mut impl Write, path: Option<PathBuf>) -> Result<(), Failure> {
    let json = export_json(&load_catalog());
    match path {
        Some(p) => std::fs::write(out_path(p), json)?,
        None => out.write_all(json.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::List => Ok(list(out)?),
        Command::Info { action } => info(out, &action),
        Command::Field { action, at } => field(out, &action, at),
        Command::Equilibrium { action } => equilibrium(out, &action),
        Command::Flow { action, from, t_max, csv, reverse } => flow(out, &action, from, t_max, csv, reverse),
        Command::Grid { action, res, out: path, no_arrows } => grid(out, &action, res, path, !no_arrows),
        Command::Verify { all, action } => verify(out, all, action),
        Command::ExportCatalog { out: path } => export(out, path),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            if !e.use_stderr() {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let msg = e.render().to_string();
            if msg.contains(GRAMMAR) {
                eprint!("{msg}");
            } else {
                eprintln!("{}\n\nusage: {GRAMMAR}", msg.trim_end());
            }
            return ExitCode::from(2);
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(m)) => {
            let _ = out.flush();
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            let _ = out.flush();
            eprintln!("error: {m}\n\nusage: {GRAMMAR}");
            ExitCode::from(2)
        }
        Err(Failure::Verify) => ExitCode::from(3),
    };
    let _ = out.flush();
    code
}

use thiserror::Error;

use crate::roots::{RootSystemKind, Vec2};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("root {p}α+{q}β is not a positive root of {kind:?}")]
    InvalidRoot { kind: RootSystemKind, p: u8, q: u8 },
    #[error("{id}: wall half-planes cut out {found} vertices, expected a bounded triangle")]
    NotATriangle { id: String, found: usize },
    #[error("{id}: invalid parameters ({reason})")]
    InvalidParams { id: String, reason: String },
    #[error("{id}: root directions do not span the plane")]
    Degenerate { id: String },
    #[error("unknown action `{0}`")]
    UnknownAction(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FieldError {
    #[error("point ({}, {}) lies outside the simplex: {root} = {value} beyond its range", .z[0], .z[1])]
    OutsideDomain { z: Vec2, root: String, value: f64 },
    #[error("point ({}, {}) touches the wall {root} = {level}", .z[0], .z[1])]
    WallContact { z: Vec2, root: String, level: f64 },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolverError {
    #[error("{id}: no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { id: String, iterations: usize, residual: f64 },
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FlowError {
    #[error("step size collapsed at t = {t} near ({}, {})", .z[0], .z[1])]
    StepCollapse { t: f64, z: Vec2 },
    #[error("trajectory did not end in wall contact")]
    NotCollapsed,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("no explicit formula for `{0}`")]
    Unsupported(String),
    #[error("point ({}, {}) is outside the printed domain", .0[0], .0[1])]
    OutsideDomain(Vec2),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GoldenError {
    #[error("{0}: no printed equilibria")]
    MissingGolden(String),
    #[error("cannot read golden value `{0}`")]
    Parse(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GridError {
    #[error("resolution {0} outside 2..=2000")]
    Resolution(usize),
    #[error("grid sample has no rows")]
    Empty,
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

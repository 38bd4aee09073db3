//! Mean curvature flow of orbits of commuting Hermann actions of
//! cohomogeneity two on rank-two compact symmetric spaces.
//!
//! The orbit space is a triangle in the flat section; the flow of orbits is
//! the flow of the vector field
//! `X = −Σ_V m cot λ(Z) v_λ + Σ_H m tan λ(Z) v_λ` on that triangle.

pub mod catalog;
pub mod error;
pub mod field;
pub mod flow;
pub mod golden;
pub mod grid;
pub mod lint;
pub mod model;
pub mod oracle;
pub mod roots;
pub mod simplex;
pub mod solver;

pub use catalog::{load_catalog, HermannActionSpec};
pub use model::Action;
pub use roots::Vec2;

//! The mean curvature vector field on the orbit space, its potential,
//! Jacobian and the shape-operator spectrum of each orbit.
//!
//! Every evaluation first classifies the roots: a root within
//! [`EPS_WALL`] of a singular level is dropped, which turns the field into
//! the boundary field of the stratum containing the point.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::FieldError;
use crate::model::{Action, Family, RootTerm};
use crate::roots::{dot, Vec2};

pub const EPS_WALL: f64 = 1e-9;

pub type Mat2 = [[f64; 2]; 2];

#[derive(Clone, Debug, PartialEq)]
pub struct FieldValue {
    pub vector: Vec2,
    pub active_v: Vec<(u8, u8)>,
    pub active_h: Vec<(u8, u8)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Eigen {
    pub value: f64,
    pub multiplicity: u32,
    pub root: (u8, u8),
    pub family: Family,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ShapeSpectrum {
    pub eigen: Vec<Eigen>,
    pub normal: Vec2,
}

impl ShapeSpectrum {
    pub fn weighted_trace(&self) -> f64 {
        self.eigen.iter().map(|e| e.value * f64::from(e.multiplicity)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.eigen.iter().map(|e| e.value.abs()).fold(0.0, f64::max)
    }
}

/// λ(Z) = ⟨v_λ, Z⟩.
pub fn eval_root(action: &Action, p: u8, q: u8, z: Vec2) -> Option<f64> {
    let spec = &action.spec;
    spec.root(p, q)?;
    crate::roots::root_vector(spec.kind, p, q).ok().map(|v| dot(v, z))
}

/// Classify one term at `z`: `Ok(Some(λ))` if active, `Ok(None)` if on its wall.
#[inline]
fn classify(t: &RootTerm, z: Vec2) -> Result<Option<f64>, FieldError> {
    let lam = dot(t.v, z);
    let outside = |value| FieldError::OutsideDomain { z, root: t.label(), value };
    match t.family {
        Family::V => {
            if !(-EPS_WALL..=PI + EPS_WALL).contains(&lam) {
                return Err(outside(lam));
            }
            Ok((lam > EPS_WALL && lam < PI - EPS_WALL).then_some(lam))
        }
        Family::H => {
            if lam.abs() > FRAC_PI_2 + EPS_WALL {
                return Err(outside(lam));
            }
            Ok((lam.abs() < FRAC_PI_2 - EPS_WALL).then_some(lam))
        }
    }
}

fn wall_contact(t: &RootTerm, z: Vec2) -> FieldError {
    let lam = dot(t.v, z);
    let level = match t.family {
        Family::V if lam < FRAC_PI_2 => 0.0,
        Family::V => PI,
        Family::H => FRAC_PI_2.copysign(lam),
    };
    FieldError::WallContact { z, root: t.label(), level }
}

/// Active terms with their λ values; `strict` turns any dropped term into an error.
fn active(action: &Action, z: Vec2, strict: bool) -> Result<Vec<(&RootTerm, f64)>, FieldError> {
    let mut out = Vec::with_capacity(action.terms.len());
    for t in &action.terms {
        match classify(t, z)? {
            Some(lam) => out.push((t, lam)),
            None if strict => return Err(wall_contact(t, z)),
            None => {}
        }
    }
    Ok(out)
}

/// Coefficient of v_λ in the field for one term.
#[inline]
fn coeff(t: &RootTerm, lam: f64) -> f64 {
    match t.family {
        Family::V => -t.m / lam.tan(),
        Family::H => t.m * lam.tan(),
    }
}

/// Field vector only, without allocating.
pub fn field_vector(action: &Action, z: Vec2) -> Result<Vec2, FieldError> {
    let mut x = [0.0, 0.0];
    for t in &action.terms {
        if let Some(lam) = classify(t, z)? {
            let c = coeff(t, lam);
            x[0] += c * t.v[0];
            x[1] += c * t.v[1];
        }
    }
    Ok(x)
}

pub fn field_at(action: &Action, z: Vec2) -> Result<FieldValue, FieldError> {
    let mut out = FieldValue { vector: [0.0, 0.0], active_v: vec![], active_h: vec![] };
    for (t, lam) in active(action, z, false)? {
        let c = coeff(t, lam);
        out.vector[0] += c * t.v[0];
        out.vector[1] += c * t.v[1];
        match t.family {
            Family::V => out.active_v.push((t.p, t.q)),
            Family::H => out.active_h.push((t.p, t.q)),
        }
    }
    Ok(out)
}

fn potential_terms(terms: &[(&RootTerm, f64)]) -> f64 {
    terms
        .iter()
        .map(|(t, lam)| match t.family {
            Family::V => t.m * lam.sin().ln(),
            Family::H => t.m * lam.cos().ln(),
        })
        .sum()
}

/// Φ = Σ_V m log sin λ + Σ_H m log cos λ, so that X = −∇Φ.
pub fn potential(action: &Action, z: Vec2) -> Result<f64, FieldError> {
    Ok(potential_terms(&active(action, z, true)?))
}

/// Potential of the stratum containing `z` (dropped roots omitted).
pub fn boundary_potential(action: &Action, z: Vec2) -> Result<f64, FieldError> {
    Ok(potential_terms(&active(action, z, false)?))
}

fn jacobian_terms(terms: &[(&RootTerm, f64)]) -> Mat2 {
    let mut j = [[0.0; 2]; 2];
    for (t, lam) in terms {
        let w = match t.family {
            Family::V => t.m / lam.sin().powi(2),
            Family::H => t.m / lam.cos().powi(2),
        };
        for (a, row) in j.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell += w * t.v[a] * t.v[b];
            }
        }
    }
    j[1][0] = j[0][1];
    j
}

/// ∂X = Σ_V m/sin²λ v vᵀ + Σ_H m/cos²λ v vᵀ = −Hess Φ.
pub fn jacobian(action: &Action, z: Vec2) -> Result<Mat2, FieldError> {
    Ok(jacobian_terms(&active(action, z, true)?))
}

pub fn boundary_jacobian(action: &Action, z: Vec2) -> Result<Mat2, FieldError> {
    Ok(jacobian_terms(&active(action, z, false)?))
}

fn spectrum_terms(terms: &[(&RootTerm, f64)], normal: Vec2) -> ShapeSpectrum {
    let eigen = terms
        .iter()
        .map(|(t, lam)| {
            let lv = dot(t.v, normal);
            let value = match t.family {
                Family::V => -lv / lam.tan(),
                Family::H => lv * lam.tan(),
            };
            Eigen { value, multiplicity: t.m as u32, root: (t.p, t.q), family: t.family }
        })
        .collect();
    ShapeSpectrum { eigen, normal }
}

/// Principal curvatures of the orbit through `z` in direction `normal`.
pub fn shape_spectrum(action: &Action, z: Vec2, normal: Vec2) -> Result<ShapeSpectrum, FieldError> {
    Ok(spectrum_terms(&active(action, z, true)?, normal))
}

pub fn boundary_shape_spectrum(action: &Action, z: Vec2, normal: Vec2) -> Result<ShapeSpectrum, FieldError> {
    Ok(spectrum_terms(&active(action, z, false)?, normal))
}

fn h_norm_terms(terms: &[(&RootTerm, f64)]) -> f64 {
    terms
        .iter()
        .map(|(t, lam)| {
            let f = match t.family {
                Family::V => 1.0 / lam.tan(),
                Family::H => lam.tan(),
            };
            t.m * dot(t.v, t.v) * f * f
        })
        .sum()
}

/// ‖h‖² = Σ_V m|v|²cot²λ + Σ_H m|v|²tan²λ.
pub fn second_fundamental_norm_sq(action: &Action, z: Vec2) -> Result<f64, FieldError> {
    Ok(h_norm_terms(&active(action, z, true)?))
}

pub fn boundary_second_fundamental_norm_sq(action: &Action, z: Vec2) -> Result<f64, FieldError> {
    Ok(h_norm_terms(&active(action, z, false)?))
}

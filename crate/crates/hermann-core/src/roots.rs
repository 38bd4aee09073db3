//! Rank-two root systems in the coordinates of the flat section.

use serde::{Deserialize, Serialize};

use crate::error::CatalogError;

pub type Vec2 = [f64; 2];

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[inline]
pub fn dot(a: Vec2, b: Vec2) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

#[inline]
pub fn norm(a: Vec2) -> f64 {
    a[0].hypot(a[1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootSystemKind {
    A2,
    B2,
    BC2,
    G2,
}

const A2_ROOTS: [(u8, u8); 3] = [(1, 0), (0, 1), (1, 1)];
const B2_ROOTS: [(u8, u8); 4] = [(1, 0), (0, 1), (1, 1), (2, 1)];
const BC2_ROOTS: [(u8, u8); 6] = [(1, 0), (0, 1), (1, 1), (2, 1), (2, 0), (2, 2)];
const G2_ROOTS: [(u8, u8); 6] = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)];

impl RootSystemKind {
    /// Simple roots (v_α, v_β). G2 uses the short-α labelling.
    pub fn basis(self) -> [Vec2; 2] {
        match self {
            RootSystemKind::A2 => [[2.0, 0.0], [-1.0, SQRT3]],
            RootSystemKind::B2 | RootSystemKind::BC2 => [[1.0, 0.0], [-1.0, 1.0]],
            RootSystemKind::G2 => [[2.0, 0.0], [-3.0, SQRT3]],
        }
    }

    /// Positive roots as coefficient pairs (p, q) of pα + qβ.
    pub fn positive_roots(self) -> &'static [(u8, u8)] {
        match self {
            RootSystemKind::A2 => &A2_ROOTS,
            RootSystemKind::B2 => &B2_ROOTS,
            RootSystemKind::BC2 => &BC2_ROOTS,
            RootSystemKind::G2 => &G2_ROOTS,
        }
    }

    pub fn contains(self, p: u8, q: u8) -> bool {
        self.positive_roots().contains(&(p, q))
    }

    pub fn name(self) -> &'static str {
        match self {
            RootSystemKind::A2 => "A2",
            RootSystemKind::B2 => "B2",
            RootSystemKind::BC2 => "BC2",
            RootSystemKind::G2 => "G2",
        }
    }
}

/// Human-readable label such as `2α+β`.
pub fn root_label(p: u8, q: u8) -> String {
    let part = |c: u8, s: &str| match c {
        0 => String::new(),
        1 => s.to_string(),
        c => format!("{c}{s}"),
    };
    match (p, q) {
        (0, _) => part(q, "β"),
        (_, 0) => part(p, "α"),
        _ => format!("{}+{}", part(p, "α"), part(q, "β")),
    }
}

/// v_{pα+qβ} = p·v_α + q·v_β.
pub fn root_vector(kind: RootSystemKind, p: u8, q: u8) -> Result<Vec2, CatalogError> {
    if !kind.contains(p, q) {
        return Err(CatalogError::InvalidRoot { kind, p, q });
    }
    let [a, b] = kind.basis();
    let (p, q) = (f64::from(p), f64::from(q));
    Ok([p * a[0] + q * b[0], p * a[1] + q * b[1]])
}

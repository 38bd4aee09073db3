//! Printed per-action field formulas. Arguments are `a·x + b·y`; on A2 and
//! G2 rows the `y` coefficient and every y-component coefficient carry an
//! implied factor √3.

use super::{Domain, Func::*, RawRow, Term};
use crate::catalog::Mult;
use crate::roots::RootSystemKind::*;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

const fn k(c: i64) -> Mult {
    Mult::k(c)
}

const fn t(comp: u8, coef: Mult, func: super::Func, a: i64, b: i64) -> Term {
    Term { comp, coef, func, a, b }
}

fn row(id: &'static str, kind: crate::roots::RootSystemKind, terms: &'static [Term], domain: Domain) -> RawRow {
    RawRow { id, kind, terms, domain }
}

const S3: f64 = 1.732_050_807_568_877_2;

const D1: Domain = Domain {
    text: "0 < x, x/√3 − π/(2√3) < y < −x/√3 + π/(2√3)",
    vertices: [[0.0, -FRAC_PI_2 / S3], [0.0, FRAC_PI_2 / S3], [FRAC_PI_2, 0.0]],
};
const D2: Domain = Domain {
    text: "0 < x, x/√3 < y < −x/√3 + π/(2√3)",
    vertices: [[0.0, 0.0], [0.0, FRAC_PI_2 / S3], [FRAC_PI_4, FRAC_PI_4 / S3]],
};
const D3: Domain = Domain { text: "0 < x < y < π/4", vertices: [[0.0, 0.0], [0.0, FRAC_PI_4], [FRAC_PI_4, FRAC_PI_4]] };
const D4: Domain =
    Domain { text: "0 < x, 0 < y, x+y < π/2", vertices: [[0.0, 0.0], [0.0, FRAC_PI_2], [FRAC_PI_2, 0.0]] };
const D5: Domain = Domain { text: "0 < y < x, x+y < π", vertices: [[0.0, 0.0], [FRAC_PI_2, FRAC_PI_2], [PI, 0.0]] };
const D6: Domain =
    Domain { text: "0 < x < y, x+y < π/2", vertices: [[0.0, 0.0], [0.0, FRAC_PI_2], [FRAC_PI_4, FRAC_PI_4]] };
const D7: Domain =
    Domain { text: "0 < x, x − π/2 < y, x+y < π/2", vertices: [[0.0, -FRAC_PI_2], [0.0, FRAC_PI_2], [FRAC_PI_2, 0.0]] };
const D8: Domain = Domain {
    text: "0 < x, 0 < y < −√3x + π/(2√3)",
    vertices: [[0.0, 0.0], [0.0, FRAC_PI_2 / S3], [PI / 6.0, 0.0]],
};
const D9: Domain = Domain {
    text: "0 < x, √3x < y < π/(4√3)",
    vertices: [[0.0, 0.0], [0.0, FRAC_PI_4 / S3], [PI / 12.0, FRAC_PI_4 / S3]],
};

const RHO1_TERMS: &[Term] = &[
    t(0, k(1), Tan, 1, 1),
    t(0, k(-2), Cot, 2, 0),
    t(0, k(1), Tan, 1, -1),
    t(1, k(1), Tan, 1, 1),
    t(1, k(-1), Tan, 1, -1),
];

const SO6_TERMS: &[Term] = &[
    t(0, k(-4), Cot, 2, 0),
    t(0, k(-2), Cot, 1, -1),
    t(0, k(-2), Cot, 1, 1),
    t(0, k(4), Tan, 2, 0),
    t(0, k(2), Tan, 1, -1),
    t(0, k(2), Tan, 1, 1),
    t(1, k(2), Cot, 1, -1),
    t(1, k(-2), Cot, 1, 1),
    t(1, k(-2), Tan, 1, -1),
    t(1, k(2), Tan, 1, 1),
];

const RHO2_TERMS: &[Term] = &[
    t(0, k(-8), Cot, 2, 0),
    t(0, k(4), Tan, 1, -1),
    t(0, k(2), Tan, 1, -1),
    t(1, k(4), Tan, 1, -1),
    t(1, k(-4), Tan, 1, 1),
];

const SOQ2_TERMS: &[Term] = &[
    t(0, Mult::affine(2, -1, 0), Cot, 1, 0),
    t(0, k(-1), Cot, 1, -1),
    t(0, k(-1), Cot, 1, 1),
    t(0, Mult::affine(-2, 1, 0), Tan, 1, 0),
    t(0, k(-1), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(0, k(1), Tan, 2, 0),
    t(1, k(1), Cot, 1, -1),
    t(1, Mult::affine(2, -1, 0), Cot, 0, 1),
    t(1, k(-1), Cot, 1, 1),
    t(1, k(-1), Tan, 1, -1),
    t(1, Mult::affine(-2, 1, 0), Tan, 0, 1),
    t(1, k(1), Tan, 1, 1),
    t(1, k(2), Tan, 0, 2),
];

const SO4_SU4_TERMS: &[Term] = &[
    t(0, k(-1), Cot, 1, 0),
    t(0, k(1), Tan, 1, 0),
    t(0, k(-1), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(1, k(-1), Cot, 0, 1),
    t(1, k(-1), Tan, 1, -1),
    t(1, k(1), Tan, 0, 1),
    t(1, k(1), Tan, 1, 1),
];

const SUJ_TERMS: &[Term] = &[
    t(0, Mult::affine(2, 0, -2), Cot, 1, 0),
    t(0, k(-2), Cot, 2, 0),
    t(0, Mult::affine(-2, 2, -2), Tan, 1, 0),
    t(0, k(-2), Tan, 1, -1),
    t(0, k(2), Tan, 1, 1),
    t(1, Mult::affine(2, -2, 2), Cot, 0, 1),
    t(1, k(-2), Cot, 0, 2),
    t(1, k(-2), Tan, 1, -1),
    t(1, Mult::affine(-2, 0, 2), Tan, 0, 1),
    t(1, k(2), Tan, 1, 1),
];

const SU2U2NI_TERMS: &[Term] = &[
    t(0, k(-1), Cot, 1, 0),
    t(0, k(1), Tan, 1, 0),
    t(0, k(1), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(1, k(-1), Cot, 0, 1),
    t(1, k(-1), Tan, 1, -1),
    t(1, k(1), Tan, 0, 1),
    t(1, k(1), Tan, 1, 1),
];

const SOJ_TERMS: &[Term] = &[
    t(0, Mult::affine(1, 0, -1), Cot, 1, 0),
    t(0, Mult::affine(-1, 1, -1), Tan, 1, 0),
    t(0, k(1), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(1, Mult::affine(1, -1, 1), Cot, 0, 1),
    t(1, k(-1), Tan, 1, -1),
    t(1, Mult::affine(-1, 0, 1), Tan, 0, 1),
    t(1, k(1), Tan, 1, 1),
];

const SO4SO4_TERMS: &[Term] = &[
    t(0, k(-2), Cot, 1, 0),
    t(0, k(-1), Cot, 1, -1),
    t(0, k(-2), Cot, 1, 1),
    t(0, k(2), Tan, 1, 0),
    t(1, k(1), Cot, 1, -1),
    t(1, k(-2), Cot, 0, 1),
    t(1, k(-2), Cot, 1, 1),
    t(1, k(2), Tan, 0, 1),
];

const RHO3_TERMS: &[Term] = &[
    t(0, k(-2), Cot, 1, 0),
    t(0, k(2), Tan, 1, 0),
    t(0, k(1), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(1, k(-2), Cot, 0, 1),
    t(1, k(-1), Tan, 1, -1),
    t(1, k(2), Tan, 0, 1),
    t(1, k(1), Tan, 1, 1),
];

const RHO4_TERMS: &[Term] = &[
    t(0, k(-1), Cot, 1, 0),
    t(0, k(3), Tan, 1, 0),
    t(0, k(1), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(1, k(-1), Cot, 0, 1),
    t(1, k(-1), Tan, 1, -1),
    t(1, k(3), Tan, 0, 1),
    t(1, k(1), Tan, 1, 1),
];

const SO4SO6_TERMS: &[Term] = &[
    t(0, k(-1), Cot, 1, 0),
    t(0, k(-1), Cot, 1, -1),
    t(0, k(-1), Cot, 1, 1),
    t(0, k(-1), Cot, 2, 0),
    t(0, k(1), Tan, 1, 0),
    t(0, k(1), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(1, k(-1), Cot, 1, -1),
    t(1, k(-1), Cot, 0, 1),
    t(1, k(-1), Cot, 1, 1),
    t(1, k(-1), Cot, 0, 2),
    t(1, k(-1), Tan, 1, -1),
    t(1, k(1), Tan, 0, 1),
    t(1, k(1), Tan, 1, 1),
];

const SO5SO5_TERMS: &[Term] = &[
    t(0, k(-1), Cot, 1, 0),
    t(0, k(-1), Cot, 1, -1),
    t(0, k(-1), Cot, 1, 1),
    t(0, k(1), Tan, 1, 0),
    t(0, k(1), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(0, k(1), Tan, 2, 0),
    t(1, k(-1), Cot, 1, -1),
    t(1, k(-1), Cot, 0, 1),
    t(1, k(-1), Cot, 1, 1),
    t(1, k(-1), Tan, 1, -1),
    t(1, k(1), Tan, 0, 1),
    t(1, k(1), Tan, 1, 1),
    t(1, k(1), Tan, 0, 2),
];

const RHO5_TERMS: &[Term] = &[
    t(0, k(-4), Cot, 1, 0),
    t(0, k(-2), Cot, 2, 0),
    t(0, k(4), Tan, 1, -1),
    t(0, k(4), Tan, 1, 1),
    t(1, k(-2), Cot, 0, 2),
    t(1, k(-4), Tan, 1, -1),
    t(1, k(4), Tan, 1, 1),
    t(1, k(4), Tan, 0, 1),
];

const SO2SO3_TERMS: &[Term] = &[
    t(0, k(-1), Cot, 1, 0),
    t(0, k(-1), Cot, 1, -1),
    t(0, k(-1), Cot, 1, 1),
    t(0, k(1), Tan, 1, 0),
    t(0, k(1), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(1, k(1), Cot, 1, -1),
    t(1, k(-1), Cot, 0, 1),
    t(1, k(-2), Cot, 1, 1),
    t(1, k(-1), Tan, 1, -1),
    t(1, k(1), Tan, 0, 1),
    t(1, k(1), Tan, 1, 1),
];

const RHO6_TERMS: &[Term] = &[
    t(0, k(-2), Cot, 1, 0),
    t(0, k(2), Tan, 1, -1),
    t(0, k(2), Tan, 1, 1),
    t(1, k(-2), Tan, 1, -1),
    t(1, k(2), Tan, 0, 1),
    t(1, k(2), Tan, 1, 1),
];

const RHO7_TERMS: &[Term] = &[
    t(0, k(-1), Cot, 1, 0),
    t(0, k(1), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(1, k(-1), Cot, 0, 1),
    t(1, k(-1), Tan, 1, -1),
    t(1, k(1), Tan, 1, 1),
];

const SUQ2SP_TERMS: &[Term] = &[
    t(0, Mult::affine(4, -2, 0), Cot, 1, 0),
    t(0, k(-2), Cot, 1, -1),
    t(0, k(-2), Cot, 1, 1),
    t(0, k(-2), Cot, 2, 0),
    t(0, Mult::affine(-4, 2, 0), Tan, 1, 0),
    t(0, k(2), Tan, 1, -1),
    t(0, k(2), Tan, 1, 1),
    t(0, k(4), Tan, 2, 0),
    t(1, k(2), Cot, 1, -1),
    t(1, Mult::affine(4, -2, 0), Cot, 0, 1),
    t(1, k(-2), Cot, 1, 1),
    t(1, k(-2), Cot, 0, 2),
    t(1, k(-2), Tan, 1, -1),
    t(1, Mult::affine(-4, 2, 0), Tan, 0, 1),
    t(1, k(2), Tan, 1, 1),
    t(1, k(4), Tan, 0, 2),
];

const SU4SP4_TERMS: &[Term] = &[
    t(0, k(-2), Cot, 1, 0),
    t(0, k(-1), Cot, 1, -1),
    t(0, k(-1), Cot, 1, 1),
    t(0, k(2), Tan, 1, 0),
    t(0, k(2), Tan, 1, -1),
    t(0, k(3), Tan, 1, 1),
    t(1, k(1), Cot, 1, -1),
    t(1, k(-2), Cot, 0, 1),
    t(1, k(-1), Cot, 1, 1),
    t(1, k(-2), Tan, 1, -1),
    t(1, k(1), Tan, 0, 1),
    t(1, k(3), Tan, 1, 1),
];

const U4SP4_TERMS: &[Term] = &[
    t(0, k(-2), Cot, 1, 0),
    t(0, k(-2), Cot, 1, -1),
    t(0, k(-2), Cot, 1, 1),
    t(0, k(2), Tan, 1, 0),
    t(0, k(1), Tan, 1, -1),
    t(0, k(2), Tan, 1, 1),
    t(1, k(2), Cot, 1, -1),
    t(1, k(-2), Cot, 0, 1),
    t(1, k(-2), Cot, 1, 1),
    t(1, k(-1), Tan, 1, -1),
    t(1, k(1), Tan, 0, 1),
    t(1, k(2), Tan, 1, 1),
];

const SPJ_TERMS: &[Term] = &[
    t(0, Mult::affine(4, 0, -4), Cot, 1, 0),
    t(0, k(-6), Cot, 2, 0),
    t(0, Mult::affine(-4, 4, -4), Tan, 1, 0),
    t(0, k(4), Tan, 1, -1),
    t(0, k(4), Tan, 1, 1),
    t(1, Mult::affine(4, -4, 4), Cot, 0, 1),
    t(1, k(-6), Cot, 0, 2),
    t(1, k(-4), Tan, 1, -1),
    t(1, Mult::affine(-4, 0, 4), Tan, 0, 1),
    t(1, k(4), Tan, 1, 1),
];

const SP2SP2_TERMS: &[Term] = &[
    t(0, k(-3), Cot, 1, 0),
    t(0, k(1), Tan, 1, 0),
    t(0, k(3), Tan, 1, -1),
    t(0, k(4), Tan, 1, 1),
    t(1, k(-3), Cot, 0, 1),
    t(1, k(-3), Tan, 1, -1),
    t(1, k(4), Tan, 1, 1),
];

const SU2SO2_TERMS: &[Term] = &[
    t(0, k(-1), Cot, 1, 0),
    t(0, k(-1), Cot, 1, -1),
    t(0, k(-1), Cot, 1, 1),
    t(0, k(1), Tan, 1, 0),
    t(0, k(1), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(1, k(1), Cot, 1, -1),
    t(1, k(-1), Cot, 0, 1),
    t(1, k(-1), Cot, 1, 1),
    t(1, k(-1), Tan, 1, -1),
    t(1, k(1), Tan, 0, 1),
    t(1, k(1), Tan, 1, 1),
];

const RHO8_TERMS: &[Term] = &[
    t(0, k(-2), Cot, 1, 0),
    t(0, k(2), Tan, 1, -1),
    t(0, k(2), Tan, 1, 1),
    t(1, k(-2), Cot, 0, 1),
    t(1, k(-2), Tan, 1, -1),
    t(1, k(2), Tan, 1, 1),
];

const SP4E6_TERMS: &[Term] = &[
    t(0, k(-4), Cot, 1, 0),
    t(0, k(-3), Cot, 1, -1),
    t(0, k(-4), Cot, 1, 1),
    t(0, k(4), Tan, 1, 0),
    t(0, k(3), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(1, k(3), Cot, 1, -1),
    t(1, k(-3), Cot, 0, 1),
    t(1, k(-4), Cot, 1, 1),
    t(1, k(-3), Tan, 1, -1),
    t(1, k(6), Tan, 0, 1),
    t(1, k(1), Tan, 1, 1),
];

const SU6SU2_TERMS: &[Term] = &[
    t(0, k(-4), Cot, 1, 0),
    t(0, k(-2), Cot, 1, -1),
    t(0, k(-2), Cot, 1, 1),
    t(0, k(-2), Cot, 2, 0),
    t(0, k(4), Tan, 1, 0),
    t(0, k(4), Tan, 1, -1),
    t(0, k(3), Tan, 1, 1),
    t(1, k(2), Cot, 1, -1),
    t(1, k(-4), Cot, 0, 1),
    t(1, k(-2), Cot, 1, 1),
    t(1, k(-2), Cot, 0, 2),
    t(1, k(-4), Tan, 1, -1),
    t(1, k(5), Tan, 0, 1),
    t(1, k(3), Tan, 1, 1),
];

const RHO10_TERMS: &[Term] = &[
    t(0, k(-4), Cot, 1, 0),
    t(0, k(-4), Cot, 1, -1),
    t(0, k(-4), Cot, 1, 1),
    t(0, k(-2), Cot, 2, 0),
    t(0, k(4), Tan, 1, 0),
    t(0, k(2), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(1, k(4), Cot, 1, -1),
    t(1, k(-4), Cot, 0, 1),
    t(1, k(-4), Cot, 1, 1),
    t(1, k(-2), Cot, 0, 2),
    t(1, k(-2), Tan, 1, -1),
    t(1, k(5), Tan, 0, 1),
    t(1, k(1), Tan, 1, 1),
];

const RHO11_TERMS: &[Term] = &[
    t(0, k(-8), Cot, 1, 0),
    t(0, k(-2), Cot, 2, 0),
    t(0, k(6), Tan, 1, -1),
    t(0, k(5), Tan, 1, 1),
    t(1, k(-2), Cot, 0, 2),
    t(1, k(-6), Tan, 1, -1),
    t(1, k(9), Tan, 0, 1),
    t(1, k(5), Tan, 1, 1),
];

const RHO12_TERMS: &[Term] = &[
    t(0, k(-6), Cot, 1, 0),
    t(0, k(-1), Cot, 1, -1),
    t(0, k(-1), Cot, 1, 1),
    t(0, k(-2), Cot, 2, 0),
    t(0, k(5), Tan, 1, 0),
    t(0, k(4), Tan, 1, -1),
    t(0, k(2), Tan, 1, 1),
    t(1, k(1), Cot, 1, -1),
    t(1, k(-6), Cot, 0, 1),
    t(1, k(-1), Cot, 1, 1),
    t(1, k(-5), Tan, 1, -1),
    t(1, k(3), Tan, 0, 1),
    t(1, k(4), Tan, 1, 1),
    t(1, k(2), Tan, 0, 2),
];

const SP4F4_TERMS: &[Term] = &[
    t(0, k(-8), Cot, 2, 0),
    t(0, k(-4), Cot, 1, -1),
    t(0, k(-4), Cot, 1, 1),
    t(0, k(8), Tan, 2, 0),
    t(0, k(4), Tan, 1, -1),
    t(0, k(4), Tan, 1, 1),
    t(1, k(4), Cot, 1, -1),
    t(1, k(-4), Cot, 1, 1),
    t(1, k(-4), Tan, 1, -1),
    t(1, k(4), Tan, 1, 1),
];

const RHO13_TERMS: &[Term] = &[
    t(0, k(-16), Cot, 2, 0),
    t(0, k(8), Tan, 3, -1),
    t(0, k(8), Tan, 1, -1),
    t(1, k(-8), Tan, 1, -1),
    t(1, k(8), Tan, 1, 1),
];

const RHO14_TERMS: &[Term] = &[
    t(0, k(-2), Cot, 2, 0),
    t(0, k(-3), Tan, 3, -1),
    t(0, k(-1), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(0, k(3), Tan, 3, 1),
    t(1, k(-2), Cot, 0, 2),
    t(1, k(-1), Tan, 3, -1),
    t(1, k(-1), Tan, 1, -1),
    t(1, k(-1), Tan, 1, 1),
    t(1, k(1), Tan, 3, 1),
];

const RHO15_TERMS: &[Term] = &[
    t(0, k(-2), Cot, 2, 0),
    t(0, k(-3), Tan, 3, -1),
    t(0, k(-1), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(0, k(3), Tan, 3, 1),
    t(1, k(-2), Cot, 0, 2),
    t(1, k(-1), Tan, 3, -1),
    t(1, k(-1), Tan, 1, -1),
    t(1, k(-1), Tan, 1, 1),
    t(1, k(1), Tan, 3, 1),
];

const RHO16_TERMS: &[Term] = &[
    t(0, k(-4), Cot, 2, 0),
    t(0, k(-6), Tan, 3, -1),
    t(0, k(-2), Tan, 1, -1),
    t(0, k(2), Tan, 1, 1),
    t(0, k(6), Tan, 3, 1),
    t(1, k(-4), Cot, 0, 2),
    t(1, k(-2), Tan, 3, -1),
    t(1, k(-2), Tan, 1, -1),
    t(1, k(-2), Tan, 1, 1),
    t(1, k(2), Tan, 3, 1),
];

const SU2_4_TERMS: &[Term] = &[
    t(0, k(-2), Cot, 2, 0),
    t(0, k(-3), Cot, 3, -1),
    t(0, k(-1), Cot, 1, -1),
    t(0, k(-1), Cot, 1, 1),
    t(0, k(-3), Cot, 3, 1),
    t(0, k(2), Tan, 2, 0),
    t(0, k(3), Tan, 3, -1),
    t(0, k(1), Tan, 1, -1),
    t(0, k(1), Tan, 1, 1),
    t(0, k(3), Tan, 3, 1),
    t(1, k(1), Cot, 3, -1),
    t(1, k(-1), Cot, 1, -1),
    t(1, k(-1), Cot, 1, 1),
    t(1, k(-1), Cot, 3, 1),
    t(1, k(-2), Cot, 0, 2),
    t(1, k(-1), Tan, 3, -1),
    t(1, k(-1), Tan, 1, -1),
    t(1, k(1), Tan, 1, 1),
    t(1, k(1), Tan, 3, 1),
    t(1, k(2), Tan, 0, 2),
];

pub(super) fn table() -> Vec<RawRow> {
    vec![
    row("rho1_SO3_SU3_SO3", A2, RHO1_TERMS, D1),
    row("SO6_SU6_Sp3", A2, SO6_TERMS, D2),
    row("rho2_Sp3_SU6_Sp3", A2, RHO2_TERMS, D1),
    row("SOq2_SUq2_SU2xUq", BC2, SOQ2_TERMS, D3),
    row("SO4_SU4_SU2xU2", BC2, SO4_SU4_TERMS, D3),
    row("SUj1xUqj1_SUq2_SU2xUq", BC2, SUJ_TERMS, D3),
    row("SU2xU2_SU4_SU2xU2_nonisotropy", BC2, SU2U2NI_TERMS, D4),
    row("SOj1xSOqj1_SOq2_SO2xSOq", BC2, SOJ_TERMS, D4),
    row("SO4xSO4_SO8_U4", BC2, SO4SO4_TERMS, D5),
    row("rho3_SO4xSO4_SO8_U4", BC2, RHO3_TERMS, D4),
    row("rho4_U4_SO8_U4", BC2, RHO4_TERMS, D4),
    row("SO4xSO6_SO10_U5", BC2, SO4SO6_TERMS, D6),
    row("SO5xSO5_SO10_U5", BC2, SO5SO5_TERMS, D3),
    row("rho5_U5_SO10_U5", BC2, RHO5_TERMS, D4),
    row("SO2sqxSO3sq_SO5xSO5_SO5", BC2, SO2SO3_TERMS, D6),
    row("rho6_SO5_SO5xSO5_SO5", BC2, RHO6_TERMS, D7),
    row("rho7_U2_Sp2_U2", BC2, RHO7_TERMS, D4),
    row("SUq2_Spq2_Sp2xSpq", BC2, SUQ2SP_TERMS, D3),
    row("SU4_Sp4_Sp2xSp2", BC2, SU4SP4_TERMS, D6),
    row("U4_Sp4_Sp2xSp2", BC2, U4SP4_TERMS, D6),
    row("Spj1xSpqj1_Spq2_Sp2xSpq", BC2, SPJ_TERMS, D6),
    row("Sp2xSp2_Sp4_Sp2xSp2", BC2, SP2SP2_TERMS, D6),
    row("SU2sqSO2sq_Sp2xSp2_Sp2", BC2, SU2SO2_TERMS, D6),
    row("rho8_Sp2_Sp2xSp2_Sp2", BC2, RHO8_TERMS, D4),
    row("rho9_Sp2_Sp2xSp2_Sp2", BC2, RHO8_TERMS, D4),
    row("Sp4_E6_Spin10U1", BC2, SP4E6_TERMS, D6),
    row("SU6SU2_E6_Spin10U1", BC2, SU6SU2_TERMS, D6),
    row("rho10_SU6SU2_E6_Spin10U1", BC2, RHO10_TERMS, D6),
    row("rho11_Spin10U1_E6_Spin10U1", BC2, RHO11_TERMS, D4),
    row("rho12_Spin10U1_E6_Spin10U1", BC2, RHO12_TERMS, D3),
    row("Sp4_E6_F4", A2, SP4F4_TERMS, D2),
    row("rho13_F4_E6_F4", A2, RHO13_TERMS, D1),
    row("rho14_SO4_G2_SO4", G2, RHO14_TERMS, D8),
    row("rho15_SO4_G2_SO4", G2, RHO15_TERMS, D8),
    row("rho16_G2_G2xG2_G2", G2, RHO16_TERMS, D8),
    row("SU2p4_G2xG2_G2", G2, SU2_4_TERMS, D9),
    ]
}

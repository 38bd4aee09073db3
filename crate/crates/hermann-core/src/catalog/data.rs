use super::{HermannActionSpec, Mult, Params, PositiveRoot, Table31};
use crate::roots::RootSystemKind::{self, A2, B2, BC2, G2};

const fn k(c: i64) -> Mult {
    Mult::k(c)
}

const fn aff(c: i64, q: i64, j: i64) -> Mult {
    Mult::affine(c, q, j)
}

const Z: Mult = Mult::k(0);

fn r(p: u8, q: u8, total: Mult, v: Mult, h: Mult) -> PositiveRoot {
    PositiveRoot { p, q, mult_total: total, mult_v: v, mult_h: h }
}

/// Root with all three multiplicities constant.
fn c(p: u8, q: u8, total: i64, v: i64, h: i64) -> PositiveRoot {
    r(p, q, k(total), k(v), k(h))
}

/// Printed interior point and edge points.
type Golden = (Option<[&'static str; 2]>, Vec<[&'static str; 2]>);

struct Row {
    id: &'static str,
    display: &'static str,
    dual: &'static str,
    lstar: &'static str,
    kind: RootSystemKind,
    roots: Vec<PositiveRoot>,
    params: Option<Params>,
    golden: Option<Golden>,
    notes: Vec<&'static str>,
}

impl Row {
    fn new(id: &'static str, display: &'static str, kind: RootSystemKind, roots: Vec<PositiveRoot>) -> Self {
        Row { id, display, dual: "", lstar: "", kind, roots, params: None, golden: None, notes: vec![] }
    }

    fn dual(mut self, dual: &'static str, lstar: &'static str) -> Self {
        self.dual = dual;
        self.lstar = lstar;
        self
    }

    fn params(mut self, q: i64, j: Option<i64>, q_min: i64) -> Self {
        self.params = Some(Params { q, j, q_min });
        self
    }

    fn golden(mut self, interior: Option<[&'static str; 2]>, edges: &[[&'static str; 2]]) -> Self {
        self.golden = Some((interior, edges.to_vec()));
        self
    }

    fn note(mut self, n: &'static str) -> Self {
        self.notes.push(n);
        self
    }

    fn build(self) -> HermannActionSpec {
        let s = |x: &str| x.to_string();
        HermannActionSpec {
            id: s(self.id),
            display_name: s(self.display),
            dual_name: s(self.dual),
            l_star_name: s(self.lstar),
            kind: self.kind,
            basis: self.kind.basis(),
            roots: self.roots,
            params: self.params,
            table31: self.golden.map(|(i, e)| Table31 {
                interior: i.map(|[a, b]| [s(a), s(b)]),
                edges: e.iter().map(|[a, b]| [s(a), s(b)]).collect(),
            }),
            known_inconsistencies: self.notes.into_iter().map(s).collect(),
        }
    }
}

const RHO1_EDGES: [[&str; 2]; 3] = [["0", "0"], ["π/4", "-π/(4√3)"], ["π/4", "π/(4√3)"]];
const ARCTAN_EDGES: [[&str; 2]; 3] = [["0", "arctan(1/3)"], ["arctan(1/3)", "0"], ["π/4", "π/4"]];

fn g2_rows(m: i64) -> Vec<PositiveRoot> {
    vec![
        c(1, 0, m, m, 0),
        c(0, 1, m, 0, m),
        c(1, 1, m, 0, m),
        c(2, 1, m, 0, m),
        c(3, 1, m, 0, m),
        c(3, 2, m, m, 0),
    ]
}

const G2_SIGNS: &str = "explicit field: x-component terms of β, α+β and the y-component term of \
    α+β carry signs that no fixed basis reproduces; catalog multiplicities used";

pub(super) fn rows() -> Vec<HermannActionSpec> {
    let rows = vec![
        Row::new("rho1_SO3_SU3_SO3", "ρ1(SO(3)) ↷ SU(3)/SO(3)", A2,
            vec![c(1, 0, 1, 1, 0), c(0, 1, 1, 0, 1), c(1, 1, 1, 0, 1)])
            .dual("SO0(1,2) ↷ SL(3,R)/SO(3)", "(SL(2,R)/SO(2)) × R")
            .golden(Some(["π/6", "0"]), &RHO1_EDGES),
        Row::new("SO6_SU6_Sp3", "SO(6) ↷ SU(6)/Sp(3)", A2,
            vec![c(1, 0, 4, 2, 2), c(0, 1, 4, 2, 2), c(1, 1, 4, 2, 2)])
            .dual("SO*(6) ↷ SU*(6)/Sp(3)", "SL(3,C)/SU(3)")
            .golden(Some(["0.261799", "0.45345"]),
                &[["0", "π/(4√3)"], ["π/8", "π/(8√3)"], ["3π/8", "π/(8√3)"]]),
        Row::new("rho2_Sp3_SU6_Sp3", "ρ2(Sp(3)) ↷ SU(6)/Sp(3)", A2,
            vec![c(1, 0, 4, 4, 0), c(0, 1, 4, 0, 4), c(1, 1, 4, 0, 4)])
            .dual("Sp(1,2) ↷ SU*(6)/Sp(3)", "(SU*(4)/Sp(2)) × U(1)")
            .golden(Some(["π/6", "0"]), &RHO1_EDGES)
            .note("explicit field: x-component prints 4tan(x−√3y) + 2tan(x−√3y); the data predict 4tan(x−√3y) + 4tan(x+√3y), and the y-component signs are reversed"),
        Row::new("SOq2_SUq2_SU2xUq_q3", "SO(q+2) ↷ SU(q+2)/S(U(2)×U(q))", BC2,
            vec![
                r(1, 0, aff(-4, 2, 0), aff(-2, 1, 0), aff(-4, 2, 0)),
                c(0, 1, 2, 1, 2),
                r(1, 1, aff(-4, 2, 0), aff(-2, 1, 0), aff(-4, 2, 0)),
                c(2, 1, 2, 1, 2),
                c(2, 0, 1, 0, 1),
                c(2, 2, 2, 0, 2),
            ])
            .dual("SO0(2,q) ↷ SU(2,q)/S(U(2)×U(q))", "SO0(2,q)/SO(2)×SO(q)")
            .params(3, None, 3)
            .golden(Some(["0.242863", "0.608349"]), &[["0", "π/4"], ["0", "0"], ["π/4", "π/4"]])
            .note("H column printed identical to the total column, so V + H exceeds the total for every root")
            .note("explicit field: coefficients of tan x, tan(x±y), tan 2x, tan y, tan 2y are half of what the data give, and the x-component sign of tan(x−y) is reversed")
            .note("printed equilibrium (0.242863, 0.608349) zeroes the x-component of the explicit field only; not a zero of either field"),
        Row::new("SO4_SU4_SU2xU2", "SO(4) ↷ SU(4)/S(U(2)×U(2))", B2,
            vec![c(1, 0, 2, 1, 1), c(0, 1, 1, 0, 1), c(1, 1, 2, 1, 1), c(2, 1, 1, 0, 1)])
            .golden(Some(["0.343408", "0.639725"]),
                &[["0", "arctan(1/3)"], ["0.477658", "0.477658"], ["0.33312", "π/4"]])
            .note("absent from the multiplicity table; multiplicities read off the explicit field")
            .note("explicit field: x-component term −tan(x−y) implies a negative β multiplicity; resolved from the y-component (β H 1)")
            .note("printed domain 0 < x < y < π/4 differs from the simplex of the data"),
        Row::new("SUj1xUqj1_SUq2_SU2xUq_q3_j2", "S(U(j+1)×U(q−j+1)) ↷ SU(q+2)/S(U(2)×U(q))", BC2,
            vec![
                r(1, 0, aff(-4, 2, 0), aff(-2, 0, 2), aff(-2, 2, -2)),
                r(0, 1, k(2), Z, k(2)),
                r(1, 1, aff(-4, 2, 0), aff(-2, 2, -2), aff(-2, 0, 2)),
                r(2, 1, k(2), Z, k(2)),
                r(2, 0, k(1), k(1), Z),
                r(2, 2, k(2), k(1), Z),
            ])
            .dual("S(U(1,j)×U(1,q−j)) ↷ SU(2,q)/S(U(2)×U(q))",
                "(SU(1,j)/S(U(1)×U(j))) × (SU(1,q−j)/S(U(1)×U(q−j)))")
            .params(3, Some(2), 3)
            .golden(Some(["0.40878", "0.660012"]),
                &[["0", "0.31416"], ["0.560791", "0.560791"], ["0.428528", "π/4"]])
            .note("H multiplicity of α printed as 2q−2j−6 (negative at q=3, j=2); 2q−2j−2 used, matching the explicit field and the total")
            .note("2α+2β: V 1 + H 0 ≠ total 2 as printed")
            .note("explicit field: x-component term −2tan(x−y) has the wrong sign for β")
            .note("printed domain 0 < x < y < π/4 needs a β V-wall the data do not have"),
        Row::new("SU2xU2_SU4_SU2xU2_nonisotropy", "S(U(2)×U(2)) ↷ SU(4)/S(U(2)×U(2)) (non-isotropy)", B2,
            vec![c(1, 0, 2, 1, 1), c(0, 1, 1, 0, 1), c(1, 1, 2, 1, 1), c(2, 1, 1, 0, 1)])
            .golden(Some(["0.477658", "0.477658"]), &ARCTAN_EDGES)
            .note("printed edge value arctan(1/3) solves tan y = 1/3; the restricted field −cot y + 3tan y vanishes at tan²y = 1/3"),
        Row::new("SOj1xSOqj1_SOq2_SO2xSOq_q4_j2", "SO(j+1)×SO(q−j+1) ↷ SO(q+2)/SO(2)×SO(q)", B2,
            vec![
                r(1, 0, aff(-2, 1, 0), aff(-1, 0, 1), aff(-1, 1, -1)),
                c(0, 1, 1, 0, 1),
                r(1, 1, aff(-2, 1, 0), aff(-1, 1, -1), aff(-1, 0, 1)),
                c(2, 1, 1, 0, 1),
            ])
            .dual("SO(1,j)×SO(1,q−j) ↷ SO(2,q)/SO(2)×SO(q)", "(SO0(1,j)/SO(j)) × (SO0(1,q−j)/SO(q−j))")
            .params(4, Some(2), 3)
            .golden(Some(["0.669504", "0.430285"]), &ARCTAN_EDGES)
            .note("printed equilibria carry no parameters; preset q=4, j=2 chosen (its data coincide with the non-isotropy S(U(2)×U(2)) row, whose printed edge triple is identical)"),
        Row::new("SO4xSO4_SO8_U4", "SO(4)×SO(4) ↷ SO(8)/U(4)", B2,
            vec![c(1, 0, 4, 2, 2), c(0, 1, 1, 1, 0), c(1, 1, 4, 2, 2), c(2, 1, 1, 1, 0)])
            .dual("SO*(4)×SO*(4) ↷ SO*(8)/U(4)", "SU(2,2)/S(U(2)×U(2))")
            .golden(Some(["1.11297", "0.567154"]), &[["0", "0.85707"], ["π/4", "π/4"], ["1.00685", "π/2"]])
            .note("explicit field: cot(x+y) coefficient 2 in both components; the data give 1")
            .note("printed domain 0 < y < x, x + y < π differs from the simplex of the data")
            .note("printed equilibrium zeroes the y-component of the explicit field only"),
        Row::new("rho3_SO4xSO4_SO8_U4", "ρ3(SO(4)×SO(4)) ↷ SO(8)/U(4)", B2,
            vec![c(1, 0, 4, 2, 2), c(0, 1, 1, 0, 1), c(1, 1, 4, 2, 2), c(2, 1, 1, 0, 1)])
            .dual("SO(4,C) ↷ SO*(8)/U(4)", "SO(4,C)/SO(4)")
            .golden(Some(["0.553574", "0.553574"]), &[["0", "1.00685"], ["0.61548", "0"], ["π/4", "π/4"]]),
        Row::new("rho4_U4_SO8_U4", "ρ4(U(4)) ↷ SO(8)/U(4)", B2,
            vec![c(1, 0, 4, 1, 3), c(0, 1, 1, 0, 1), c(1, 1, 4, 1, 3), c(2, 1, 1, 0, 1)])
            .dual("U(2,2) ↷ SO*(8)/U(4)", "(SO*(4)/U(2)) × (SO*(4)/U(2))")
            .golden(Some(["0.390322", "0.542954"]), &[["0", "0.42053"], ["0.42053", "0"], ["π/4", "π/4"]])
            .note("printed equilibrium is not on the diagonal although the data are symmetric under x ↔ y, forcing the unique zero onto x = y"),
        Row::new("SO4xSO6_SO10_U5", "SO(4)×SO(6) ↷ SO(10)/U(5)", BC2,
            vec![
                c(1, 0, 4, 2, 2), c(0, 1, 4, 2, 2), c(1, 1, 4, 2, 2),
                c(2, 1, 4, 2, 2), c(2, 0, 1, 1, 0), c(2, 2, 1, 1, 0),
            ])
            .dual("SO*(4)×SO*(6) ↷ SO*(10)/U(5)", "SU(2,3)/S(U(2)×U(3))")
            .golden(Some(["0.443039", "0.785398"]), &[["0", "π/4"], ["0", "0"], ["π/4", "π/4"]])
            .note("explicit field: every coefficient is half of what the data give and the y-component cot(x−y) sign is reversed"),
        Row::new("SO5xSO5_SO10_U5", "SO(5)×SO(5) ↷ SO(10)/U(5)", BC2,
            vec![
                c(1, 0, 4, 2, 2), c(0, 1, 4, 2, 2), c(1, 1, 4, 2, 2),
                c(2, 1, 4, 2, 2), c(2, 0, 1, 0, 1), c(2, 2, 1, 0, 1),
            ])
            .dual("SO(5,C) ↷ SO*(10)/U(5)", "SO(5,C)/SO(5)")
            .golden(Some(["0.28557", "0.615128"]), &[["0", "0.5916"], ["0.44304", "0.44304"], ["0.5916", "π/4"]])
            .note("explicit field: every coefficient is half of what the data give and the y-component cot(x−y) sign is reversed"),
        Row::new("rho5_U5_SO10_U5", "ρ5(U(5)) ↷ SO(10)/U(5)", BC2,
            vec![
                c(1, 0, 4, 4, 0), c(0, 1, 4, 0, 4), c(1, 1, 4, 0, 4),
                c(2, 1, 4, 0, 4), c(2, 0, 1, 1, 0), c(2, 2, 1, 1, 0),
            ])
            .dual("U(2,3) ↷ SO*(10)/U(5)", "(SO*(4)/U(2)) × (SO*(6)/U(3))")
            .golden(Some(["0.622334", "0.234738"]), &[["0", "0.36137"], ["0.64052", "0"], ["0.54453", "1.02627"]]),
        Row::new("SO2sqxSO3sq_SO5xSO5_SO5", "SO(2)²×SO(3)² ↷ (SO(5)×SO(5))/SO(5)", B2,
            vec![c(1, 0, 2, 1, 1), c(0, 1, 2, 1, 1), c(1, 1, 2, 1, 1), c(2, 1, 2, 1, 1)])
            .dual("SO(2,C)×SO(3,C) ↷ SO(5,C)/SO(5)", "SO0(2,3)/SO(2)×SO(3)")
            .golden(Some(["0.30774", "0.785398"]), &[["0", "π/4"], ["0", "0"], ["0", "π/2"]])
            .note("explicit field: y-component −2cot(x+y) has coefficient 2; the x-component and the data give 1"),
        Row::new("rho6_SO5_SO5xSO5_SO5", "ρ6(SO(5)) ↷ (SO(5)×SO(5))/SO(5)", B2,
            vec![c(1, 0, 2, 2, 0), c(0, 1, 2, 0, 2), c(1, 1, 2, 0, 2), c(2, 1, 2, 0, 2)])
            .dual("SO0(2,3) ↷ SO(5,C)/SO(5)", "(SO(2,C)/SO(2)) × (SO(3,C)/SO(3))")
            .note("absent from the multiplicity table; multiplicities read off the explicit field"),
        Row::new("rho7_U2_Sp2_U2", "ρ7(U(2)) ↷ Sp(2)/U(2)", B2,
            vec![c(1, 0, 1, 1, 0), c(0, 1, 1, 0, 1), c(1, 1, 1, 1, 0), c(2, 1, 1, 0, 1)])
            .dual("U(1,1) ↷ Sp(2,R)/U(2)", "(Sp(1,R)/U(1)) × (Sp(1,R)/U(1))")
            .note("absent from the multiplicity table; multiplicities read off the explicit field"),
        Row::new("SUq2_Spq2_Sp2xSpq_q3", "SU(q+2) ↷ Sp(q+2)/Sp(2)×Sp(q)", BC2,
            vec![
                r(1, 0, aff(-8, 4, 0), aff(-4, 2, 0), aff(-4, 2, 0)),
                c(0, 1, 4, 2, 2),
                r(1, 1, aff(-8, 4, 0), aff(-4, 2, 0), aff(-4, 2, 0)),
                c(2, 1, 4, 2, 2),
                c(2, 0, 3, 1, 2),
                c(2, 2, 3, 1, 2),
            ])
            .dual("SU(2,q) ↷ Sp(2,q)/Sp(2)×Sp(q)", "SU(2,q)/S(U(2)×U(q))")
            .params(3, None, 3)
            .note("absent from the multiplicity table; multiplicities read off the explicit field"),
        Row::new("SU4_Sp4_Sp2xSp2", "SU(4) ↷ Sp(4)/Sp(2)×Sp(2)", B2,
            vec![c(1, 0, 4, 2, 2), c(0, 1, 3, 1, 2), c(1, 1, 3, 2, 1), c(2, 1, 4, 1, 3)])
            .golden(Some(["0.307799", "0.664173"]), &[["0", "0.68472"], ["0", "0"], ["0", "π/2"]])
            .note("absent from the multiplicity table; multiplicities read off the explicit field"),
        Row::new("U4_Sp4_Sp2xSp2", "U(4) ↷ Sp(4)/Sp(2)×Sp(2)", B2,
            vec![c(1, 0, 4, 2, 2), c(0, 1, 3, 2, 1), c(1, 1, 3, 2, 1), c(2, 1, 4, 2, 2)])
            .dual("U*(4) ↷ Sp(2,2)/Sp(2)×Sp(2)", "Sp(2,C)/Sp(2)")
            .golden(Some(["0.293247", "0.840516"]), &[["0", "0.88608"], ["0", "0"], ["0", "π/2"]])
            .note("absent from the multiplicity table; multiplicities read off the explicit field"),
        Row::new("Spj1xSpqj1_Spq2_Sp2xSpq_q3_j2", "Sp(j+1)×Sp(q−j+1) ↷ Sp(q+2)/Sp(2)×Sp(q)", BC2,
            vec![
                r(1, 0, aff(-8, 4, 0), aff(-4, 0, 4), aff(-4, 4, -4)),
                c(0, 1, 4, 0, 4),
                r(1, 1, aff(-8, 4, 0), aff(-4, 4, -4), aff(-4, 0, 4)),
                c(2, 1, 4, 0, 4),
                c(2, 0, 3, 3, 0),
                c(2, 2, 3, 3, 0),
            ])
            .dual("Sp(1,j)×Sp(1,q−j) ↷ Sp(2,q)/Sp(2)×Sp(q)",
                "(Sp(1,j)/Sp(1)×Sp(j)) × (Sp(1,q−j)/Sp(1)×Sp(q−j))")
            .params(3, Some(2), 3)
            .golden(Some(["0.589609", "0.52777"]), &[["0", "0.42053"], ["0.67335", "0"], ["0", "π/2"]])
            .note("absent from the multiplicity table; multiplicities read off the explicit field")
            .note("printed equilibrium zeroes the x-component of the explicit field only"),
        Row::new("Sp2xSp2_Sp4_Sp2xSp2", "Sp(2)×Sp(2) ↷ Sp(4)/Sp(2)×Sp(2)", B2,
            vec![c(1, 0, 4, 3, 1), c(0, 1, 3, 0, 3), c(1, 1, 3, 3, 0), c(2, 1, 4, 0, 4)])
            .golden(Some(["0.462616", "0.8711"]), &[["0", "0.57964"], ["0.54947", "0"], ["0.930274", "0.63355"]])
            .note("absent from the multiplicity table; multiplicities read off the explicit field")
            .note("printed x2 = 0.8711; the explicit field vanishes at (0.462616, 0.487110)"),
        Row::new("SU2sqSO2sq_Sp2xSp2_Sp2", "SU(2)²·SO(2)² ↷ (Sp(2)×Sp(2))/Sp(2)", B2,
            vec![c(1, 0, 2, 1, 1), c(0, 1, 2, 1, 1), c(1, 1, 2, 1, 1), c(2, 1, 2, 1, 1)])
            .dual("SL(2,C)·SO(2,C) ↷ Sp(2,C)/Sp(2)", "Sp(2,R)/U(2)")
            .golden(Some(["0.30774", "0.785398"]), &[["0", "π/4"], ["0", "0"], ["0", "π/2"]])
            .note("absent from the multiplicity table; multiplicities read off the explicit field"),
        Row::new("rho8_Sp2_Sp2xSp2_Sp2", "ρ8(Sp(2)) ↷ (Sp(2)×Sp(2))/Sp(2)", B2,
            vec![c(1, 0, 2, 2, 0), c(0, 1, 2, 0, 2), c(1, 1, 2, 2, 0), c(2, 1, 2, 0, 2)])
            .dual("Sp(2,R) ↷ Sp(2,C)/Sp(2)", "(SL(2,C)/SU(2)) × (SO(2,C)/SO(2))")
            .golden(Some(["π/6", "π/6"]), &[])
            .note("absent from the multiplicity table; multiplicities read off the explicit field"),
        Row::new("rho9_Sp2_Sp2xSp2_Sp2", "ρ9(Sp(2)) ↷ (Sp(2)×Sp(2))/Sp(2)", B2,
            vec![c(1, 0, 2, 2, 0), c(0, 1, 2, 0, 2), c(1, 1, 2, 2, 0), c(2, 1, 2, 0, 2)])
            .dual("Sp(1,1) ↷ Sp(2,C)/Sp(2)", "(Sp(1,C)/Sp(1)) × (Sp(1,C)/Sp(1))")
            .note("absent from the multiplicity table; multiplicities read off the explicit field (printed identical to ρ8)"),
        Row::new("Sp4_E6_Spin10U1", "Sp(4) ↷ E6/Spin(10)·U(1)", B2,
            vec![c(1, 0, 8, 4, 4), c(0, 1, 6, 3, 3), c(1, 1, 9, 3, 6), c(2, 1, 5, 4, 1)])
            .dual("Sp(2,2) ↷ E6^-14/Spin(10)·U(1)", "Sp(2,2)/Sp(2)×Sp(2)")
            .note("absent from the multiplicity table; multiplicities read off the explicit field, which has no 2α or 2α+2β terms"),
        Row::new("SU6SU2_E6_Spin10U1", "SU(6)·SU(2) ↷ E6/Spin(10)·U(1)", BC2,
            vec![
                c(1, 0, 8, 4, 4), c(0, 1, 6, 2, 4), c(1, 1, 9, 4, 5),
                c(2, 1, 5, 2, 1), c(2, 0, 1, 1, 0), c(2, 2, 1, 1, 0),
            ])
            .dual("SU(2,4)·SU(2) ↷ E6^-14/Spin(10)·U(1)", "SU(2,4)/S(U(2)×U(4))")
            .note("2α+β: V 2 + H 1 ≠ total 5 as printed; the explicit field coefficient 3tan(x+y) suggests H 3"),
        Row::new("rho10_SU6SU2_E6_Spin10U1", "ρ10(SU(6)·SU(2)) ↷ E6/Spin(10)·U(1)", BC2,
            vec![
                c(1, 0, 8, 4, 4), c(0, 1, 6, 4, 2), c(1, 1, 9, 4, 5),
                c(2, 1, 5, 4, 1), c(2, 0, 1, 1, 0), c(2, 2, 1, 1, 0),
            ])
            .dual("SU(1,5)·SL(2,R) ↷ E6^-14/Spin(10)·U(1)", "SO*(10)/U(5)"),
        Row::new("rho11_Spin10U1_E6_Spin10U1", "ρ11(Spin(10)·U(1)) ↷ E6/Spin(10)·U(1)", BC2,
            vec![
                c(1, 0, 8, 8, 0), c(0, 1, 6, 0, 6), c(1, 1, 9, 0, 9),
                c(2, 1, 5, 0, 5), c(2, 0, 1, 1, 0), c(2, 2, 1, 1, 0),
            ])
            .dual("SO*(10)·U(1) ↷ E6^-14/Spin(10)·U(1)", "(SU(1,5)/S(U(1)×U(5))) × (SL(2,R)/SO(2))"),
        Row::new("rho12_Spin10U1_E6_Spin10U1", "ρ12(Spin(10)·U(1)) ↷ E6/Spin(10)·U(1)", BC2,
            vec![
                c(1, 0, 8, 6, 2), c(0, 1, 6, 1, 5), c(1, 1, 9, 6, 3),
                c(2, 1, 5, 1, 4), c(2, 0, 1, 0, 1), c(2, 2, 1, 0, 1),
            ])
            .dual("SO0(2,8)·U(1) ↷ E6^-14/Spin(10)·U(1)", "SO0(2,8)/SO(2)×SO(8)")
            .note("explicit field: x-component has −2cot 2x and tan x, tan(x±y) coefficients 5, 4, 2 where the data give tan 2x and 2, 5, 4"),
        Row::new("Sp4_E6_F4", "Sp(4) ↷ E6/F4", A2,
            vec![c(1, 0, 8, 4, 4), c(0, 1, 8, 4, 4), c(1, 1, 8, 4, 4)])
            .dual("Sp(1,3) ↷ E6^-26/F4", "SU*(6)/Sp(3)"),
        Row::new("rho13_F4_E6_F4", "ρ13(F4) ↷ E6/F4", A2,
            vec![c(1, 0, 8, 8, 0), c(0, 1, 8, 0, 8), c(1, 1, 8, 0, 8)])
            .dual("F4^-20 ↷ E6^-26/F4", "(SO0(1,9)/SO(9)) × U(1)")
            .note("explicit field: x-component term 8tan(3x−√3y) is not a root of A2; the data predict 8tan(x+√3y)"),
        Row::new("rho14_SO4_G2_SO4", "ρ14(SO(4)) ↷ G2/SO(4)", G2, g2_rows(1))
            .dual("SL(2,R)×SL(2,R) ↷ G2^2/SO(4)", "SO(4)/SO(2)×SO(2)")
            .note(G2_SIGNS),
        Row::new("rho15_SO4_G2_SO4", "ρ15(SO(4)) ↷ G2/SO(4)", G2, g2_rows(1))
            .dual("ρ15*(SO(4)) ↷ G2^2/SO(4)", "(SL(2,R)/SO(2)) × (SL(2,R)/SO(2))")
            .note(G2_SIGNS),
        Row::new("rho16_G2_G2xG2_G2", "ρ16(G2) ↷ (G2×G2)/G2", G2, g2_rows(2))
            .dual("G2^2 ↷ G2^C/G2", "(SL(2,C)/SU(2)) × (SL(2,C)/SU(2))")
            .note(G2_SIGNS),
        Row::new("SU2p4_G2xG2_G2", "SU(2)⁴ ↷ (G2×G2)/G2", G2,
            [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)].iter().map(|&(p, q)| c(p, q, 2, 1, 1)).collect())
            .dual("SL(2,C)×SL(2,C) ↷ G2^C/G2", "G2^2/SO(4)")
            .note("explicit field: y-component term −√3cot(x−√3y) has the wrong sign for α+β"),
    ];
    rows.into_iter().map(Row::build).collect()
}

//! R-matrices: quasitriangularity and triangularity verification (plain and
//! Koszul-signed), Drinfeld elements, the involutive-grouplike R-matrix
//! construction, minimal parts, R-matrix rank, and the four-dimensional
//! one-parameter triangular family.

use crate::error::ExactError;
use crate::hopf::HopfData;
use crate::linalg::{unit_vector, vec_eq, Subspace};
use crate::scalar::CycScalar;
use crate::superalg::SuperHopfData;
use crate::tensor::{PairAlgebra, PairElement, TripleAlgebra};

/// A Hopf algebra with a verified triangular structure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriangularHopf {
    pub hopf: HopfData,
    pub r: PairElement,
}

/// One failed R-matrix axiom.
#[derive(Clone, Debug)]
pub enum RFailure {
    NotEven,
    CounitLeft,
    CounitRight,
    HexagonLeft,
    HexagonRight,
    Intertwine(usize),
    Unitarity,
}

impl std::fmt::Display for RFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RFailure::NotEven => write!(f, "R is not even"),
            RFailure::CounitLeft => write!(f, "(eps (x) Id)R != 1"),
            RFailure::CounitRight => write!(f, "(Id (x) eps)R != 1"),
            RFailure::HexagonLeft => write!(f, "(Delta (x) Id)R != R_13 R_23"),
            RFailure::HexagonRight => write!(f, "(Id (x) Delta)R != R_13 R_12"),
            RFailure::Intertwine(i) => {
                write!(f, "R Delta(e_{i}) != Delta^op(e_{i}) R")
            }
            RFailure::Unitarity => write!(f, "R_21 R != 1 (x) 1"),
        }
    }
}

fn check_r_with_parity(
    h: &HopfData,
    r: &PairElement,
    parity: &[usize],
    require_unitarity: bool,
) -> Vec<RFailure> {
    let mut failures = Vec::new();
    let d = h.dim();
    let pa = PairAlgebra::with_parity(&h.alg, parity);
    let ta = TripleAlgebra::with_parity(&h.alg, parity);
    // evenness: nonzero coefficients only on parity-matched pairs
    for i in 0..d {
        for j in 0..d {
            if !r.get(i, j).is_zero() && (parity[i] + parity[j]) % 2 == 1 {
                failures.push(RFailure::NotEven);
            }
        }
    }
    if failures.len() > 1 {
        failures.truncate(1);
    }
    if !vec_eq(&pa.counit_left(&h.counit, r), &h.alg.unit) {
        failures.push(RFailure::CounitLeft);
    }
    if !vec_eq(&pa.counit_right(&h.counit, r), &h.alg.unit) {
        failures.push(RFailure::CounitRight);
    }
    let r13 = ta.embed13(r);
    if ta.comult_left(&h.comult, r) != ta.mult(&r13, &ta.embed23(r)) {
        failures.push(RFailure::HexagonLeft);
    }
    if ta.comult_right(&h.comult, r) != ta.mult(&r13, &ta.embed12(r)) {
        failures.push(RFailure::HexagonRight);
    }
    for i in 0..d {
        let da = h.comult_of(&unit_vector(d, i));
        let da_op = pa.flip(&da);
        if pa.mult(r, &da) != pa.mult(&da_op, r) {
            failures.push(RFailure::Intertwine(i));
        }
    }
    if require_unitarity {
        let r21 = pa.flip(r);
        if pa.mult(&r21, r) != pa.one() {
            failures.push(RFailure::Unitarity);
        }
    }
    failures
}

/// Hexagon, counit, and intertwining axioms for `(H, R)`.
pub fn check_quasitriangular(h: &HopfData, r: &PairElement) -> Vec<RFailure> {
    check_r_with_parity(h, r, &vec![0; h.dim()], false)
}

/// Quasitriangularity plus unitarity `R_21 R = 1 (x) 1`.
pub fn check_triangular(h: &HopfData, r: &PairElement) -> Vec<RFailure> {
    check_r_with_parity(h, r, &vec![0; h.dim()], true)
}

/// The super analogue: Koszul-signed products and flips, `R` required even.
pub fn check_quasitriangular_super(a: &SuperHopfData, r: &PairElement) -> Vec<RFailure> {
    check_r_with_parity(&a.hopf, r, &a.parity, false)
}

pub fn check_triangular_super(a: &SuperHopfData, r: &PairElement) -> Vec<RFailure> {
    check_r_with_parity(&a.hopf, r, &a.parity, true)
}

/// The R-matrix `(1/2)(1 (x) 1 + 1 (x) u + u (x) 1 - u (x) u)` attached to
/// an involutive grouplike `u`.
pub fn r_u(h: &HopfData, u: &[CycScalar]) -> Result<PairElement, ExactError> {
    if !h.is_grouplike(u) {
        return Err(ExactError::NotInvolutiveGrouplike {
            reason: "element is not grouplike".into(),
        });
    }
    if !vec_eq(&h.alg.product(u, u), &h.alg.unit) {
        return Err(ExactError::NotInvolutiveGrouplike {
            reason: "element does not square to 1".into(),
        });
    }
    let one = &h.alg.unit;
    let half = CycScalar::from_frac(1, 2);
    let r = PairElement::outer(one, one)
        .add(&PairElement::outer(one, u))
        .add(&PairElement::outer(u, one))
        .sub(&PairElement::outer(u, u))
        .scale(&half);
    Ok(r)
}

/// Drinfeld element `u = sum S(R^(2)) R^(1)` of a quasitriangular structure.
pub fn drinfeld_element(h: &HopfData, r: &PairElement) -> Vec<CycScalar> {
    drinfeld_element_with_parity(h, r, &vec![0; h.dim()])
}

/// Super Drinfeld element: the flip inside `m o beta o (Id (x) S)` carries
/// the Koszul sign.
pub fn drinfeld_element_super(a: &SuperHopfData, r: &PairElement) -> Vec<CycScalar> {
    drinfeld_element_with_parity(&a.hopf, r, &a.parity)
}

fn drinfeld_element_with_parity(
    h: &HopfData,
    r: &PairElement,
    parity: &[usize],
) -> Vec<CycScalar> {
    let d = h.dim();
    let mut out = vec![CycScalar::zero(); d];
    for i in 0..d {
        for j in 0..d {
            let c = r.get(i, j);
            if c.is_zero() {
                continue;
            }
            // S applied to the right tensorand keeps its parity
            let sj = h.antipode.apply(&unit_vector(d, j));
            let prod = h.alg.product(&sj, &unit_vector(d, i));
            let sign = if parity[i] * parity[j] % 2 == 1 {
                CycScalar::from_int(-1)
            } else {
                CycScalar::one()
            };
            for (t, p) in prod.into_iter().enumerate() {
                if !p.is_zero() {
                    out[t] = &out[t] + &(&(c * &sign) * &p);
                }
            }
        }
    }
    out
}

/// Minimal part of `(H, R)`: the sub-Hopf algebra generated by the row and
/// column spans of the coefficient matrix, with its dimension (the rank of
/// the R-matrix).
pub fn minimal_part(h: &HopfData, r: &PairElement) -> (Subspace, usize) {
    let mut gens = r.row_vectors();
    gens.extend(r.col_vectors());
    gens.retain(|v| !crate::linalg::vec_is_zero(v));
    let span = crate::hopf::sub_hopf_generated(h, &gens);
    let rank = span.dim();
    (span, rank)
}

/// Does `R` equal the involutive-grouplike R-matrix of its own Drinfeld
/// element? This is the executable meaning of "rank at most 2".
pub fn is_rank_le_2(h: &HopfData, r: &PairElement) -> bool {
    let u = drinfeld_element(h, r);
    match r_u(h, &u) {
        Ok(ru) => &ru == r,
        Err(_) => false,
    }
}

/// The four-dimensional triangular family: relations `g^2 = 1`, `x^2 = 0`,
/// `gx = -xg`, coproduct `Delta(x) = x (x) 1 + g (x) x`, and
/// `R = R_g - (lambda/2)(x (x) x - x (x) gx + gx (x) x + gx (x) gx)`.
/// Basis order: 1, x, g, gx.
pub fn sweedler(lambda: &CycScalar) -> TriangularHopf {
    let z2 = crate::superalg::GroupTable::cyclic(2);
    let chi = vec![vec![CycScalar::one(), CycScalar::from_int(-1)]];
    let hopf = crate::superalg::yd_biproduct(&z2, &[1], &chi).expect("valid datum");
    let g = unit_vector(4, 2);
    let rg = r_u(&hopf, &g).expect("g is an involutive grouplike");
    let half_lambda = &CycScalar::from_frac(1, 2) * lambda;
    let mut extra = PairElement::zero(4);
    extra.set(1, 1, half_lambda.clone()); // x (x) x
    extra.set(1, 3, -&half_lambda); // -x (x) gx
    extra.set(3, 1, half_lambda.clone()); // gx (x) x
    extra.set(3, 3, half_lambda); // gx (x) gx
    let r = rg.sub(&extra);
    TriangularHopf { hopf, r }
}

//! Drinfeld twists: verification of the cocycle and counit identities,
//! twisted Hopf (super)algebras, twisted R-matrices, exponential twists on
//! exterior algebras, and the four-dimensional family's explicit twist.

use crate::error::ExactError;
use crate::hopf::HopfData;
use crate::linalg::{unit_vector, vec_eq, Matrix, Tensor3};
use crate::scalar::{CycScalar, Rational};
use crate::superalg::SuperHopfData;
use crate::tensor::{PairAlgebra, PairElement, TripleAlgebra};

fn check_twist_with_parity(
    h: &HopfData,
    j: &PairElement,
    parity: &[usize],
) -> Result<(), ExactError> {
    let d = h.dim();
    for a in 0..d {
        for b in 0..d {
            if !j.get(a, b).is_zero() && (parity[a] + parity[b]) % 2 == 1 {
                return Err(ExactError::NotATwist {
                    reason: "twist element is not even".into(),
                });
            }
        }
    }
    let pa = PairAlgebra::with_parity(&h.alg, parity);
    pa.inverse(j).map_err(|_| ExactError::NotATwist {
        reason: "twist element is not invertible".into(),
    })?;
    if !vec_eq(&pa.counit_left(&h.counit, j), &h.alg.unit)
        || !vec_eq(&pa.counit_right(&h.counit, j), &h.alg.unit)
    {
        return Err(ExactError::NotATwist {
            reason: "counit normalization fails".into(),
        });
    }
    let ta = TripleAlgebra::with_parity(&h.alg, parity);
    let lhs = ta.mult(&ta.comult_left(&h.comult, j), &ta.embed12(j));
    let rhs = ta.mult(&ta.comult_right(&h.comult, j), &ta.embed23(j));
    if lhs != rhs {
        return Err(ExactError::NotATwist {
            reason: "cocycle identity fails".into(),
        });
    }
    Ok(())
}

/// Verify the twist identities
/// `(Delta (x) Id)(J)(J (x) 1) = (Id (x) Delta)(J)(1 (x) J)` and
/// `(eps (x) Id)J = (Id (x) eps)J = 1`.
pub fn check_twist(h: &HopfData, j: &PairElement) -> Result<(), ExactError> {
    check_twist_with_parity(h, j, &vec![0; h.dim()])
}

/// Super version: Koszul-signed products, `J` required even.
pub fn check_twist_super(a: &SuperHopfData, j: &PairElement) -> Result<(), ExactError> {
    check_twist_with_parity(&a.hopf, j, &a.parity)
}

fn twist_hopf_with_parity(
    h: &HopfData,
    j: &PairElement,
    parity: &[usize],
) -> Result<HopfData, ExactError> {
    check_twist_with_parity(h, j, parity)?;
    let d = h.dim();
    let pa = PairAlgebra::with_parity(&h.alg, parity);
    let j_inv = pa.inverse(j)?;
    let mut comult = Tensor3::new((d, d, d));
    for i in 0..d {
        let da = h.comult_of(&unit_vector(d, i));
        let twisted = pa.mult(&pa.mult(&j_inv, &da), j);
        for a in 0..d {
            for b in 0..d {
                let c = twisted.get(a, b);
                if !c.is_zero() {
                    comult.set(i, a, b, c.clone());
                }
            }
        }
    }
    // Q = m(S (x) Id)(J); S^J(a) = Q^{-1} S(a) Q
    let mut q = vec![CycScalar::zero(); d];
    for a in 0..d {
        for b in 0..d {
            let c = j.get(a, b);
            if c.is_zero() {
                continue;
            }
            let sa = h.antipode.apply(&unit_vector(d, a));
            let prod = h.alg.product(&sa, &unit_vector(d, b));
            for (t, p) in prod.into_iter().enumerate() {
                if !p.is_zero() {
                    q[t] = &q[t] + &(c * &p);
                }
            }
        }
    }
    let q_inv = invert_in_algebra(&h.alg, &q).ok_or(ExactError::NotInvertible)?;
    let antipode = Matrix::from_fn(d, d, |i, c| {
        let s = h.antipode.apply(&unit_vector(d, c));
        let v = h.alg.product(&h.alg.product(&q_inv, &s), &q);
        v[i].clone()
    });
    Ok(HopfData {
        alg: h.alg.clone(),
        comult,
        counit: h.counit.clone(),
        antipode,
    })
}

/// Inverse of an algebra element by exact linear solve; checked two-sided.
pub fn invert_in_algebra(
    alg: &crate::algebra::AlgebraData,
    x: &[CycScalar],
) -> Option<Vec<CycScalar>> {
    let l = alg.left_mult(x);
    let inv = l.solve(&alg.unit)?;
    if vec_eq(&alg.product(x, &inv), &alg.unit) && vec_eq(&alg.product(&inv, x), &alg.unit) {
        Some(inv)
    } else {
        None
    }
}

/// Twisted Hopf algebra: same algebra, coproduct conjugated by `J`, antipode
/// conjugated by `Q = m(S (x) Id)(J)`.
pub fn twist_hopf(h: &HopfData, j: &PairElement) -> Result<HopfData, ExactError> {
    twist_hopf_with_parity(h, j, &vec![0; h.dim()])
}

pub fn twist_super_hopf(
    a: &SuperHopfData,
    j: &PairElement,
) -> Result<SuperHopfData, ExactError> {
    let hopf = twist_hopf_with_parity(&a.hopf, j, &a.parity)?;
    Ok(SuperHopfData {
        hopf,
        parity: a.parity.clone(),
    })
}

fn twist_r_with_parity(
    h: &HopfData,
    r: &PairElement,
    j: &PairElement,
    parity: &[usize],
) -> Result<PairElement, ExactError> {
    check_twist_with_parity(h, j, parity)?;
    let pa = PairAlgebra::with_parity(&h.alg, parity);
    let j21 = pa.flip(j);
    let j21_inv = pa.inverse(&j21)?;
    Ok(pa.mult(&pa.mult(&j21_inv, r), j))
}

/// Twisted R-matrix `J_21^{-1} R J`.
pub fn twist_r(
    h: &HopfData,
    r: &PairElement,
    j: &PairElement,
) -> Result<PairElement, ExactError> {
    twist_r_with_parity(h, r, j, &vec![0; h.dim()])
}

pub fn twist_r_super(
    a: &SuperHopfData,
    r: &PairElement,
    j: &PairElement,
) -> Result<PairElement, ExactError> {
    twist_r_with_parity(&a.hopf, r, j, &a.parity)
}

/// The element `sum r_ij x_i (x) x_j` of the tensor square of an exterior
/// algebra, from a coefficient matrix on the generators.
pub fn pairing_element(ext: &SuperHopfData, rmat: &Matrix) -> PairElement {
    let d = ext.dim();
    let n = rmat.rows();
    let mut out = PairElement::zero(d);
    for i in 0..n {
        for j in 0..n {
            let c = rmat.get(i, j);
            if !c.is_zero() {
                out.set(1 << i, 1 << j, c.clone());
            }
        }
    }
    out
}

/// Exponential twist `e^{r/2}` on an exterior algebra, for a symmetric
/// coefficient matrix `r` on the odd generators. The series is finite: any
/// power beyond `dim V` vanishes.
pub fn exp_twist(ext: &SuperHopfData, rmat: &Matrix) -> Result<PairElement, ExactError> {
    let n = rmat.rows();
    if rmat.cols() != n {
        return Err(ExactError::precondition("coefficient matrix must be square"));
    }
    if ext.dim() != (1usize << n) {
        return Err(ExactError::precondition(
            "matrix size does not match the number of generators",
        ));
    }
    if rmat != &rmat.transpose() {
        return Err(ExactError::precondition("coefficient matrix must be symmetric"));
    }
    let pa = ext.pair_algebra();
    let half_r = pairing_element(ext, rmat).scale(&CycScalar::from_frac(1, 2));
    let mut acc = pa.one();
    let mut term = pa.one();
    let mut factorial = Rational::from_integer(1.into());
    for k in 1..=(n + 1) {
        term = pa.mult(&term, &half_r);
        if term.is_zero() {
            break;
        }
        factorial *= Rational::from_integer((k as i64).into());
        let inv_fact = CycScalar::from_rational(Rational::from_integer(1.into()) / &factorial);
        acc = acc.add(&term.scale(&inv_fact));
    }
    Ok(acc)
}

/// The explicit twist `1 (x) 1 - (lambda/2) gx (x) x` of the
/// four-dimensional family (basis order 1, x, g, gx).
pub fn sweedler_j(lambda: &CycScalar) -> PairElement {
    let mut j = PairElement::zero(4);
    j.set(0, 0, CycScalar::one());
    j.set(3, 1, -&(&CycScalar::from_frac(1, 2) * lambda));
    j
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangular::sweedler;

    fn int(v: i64) -> CycScalar {
        CycScalar::from_int(v)
    }

    #[test]
    fn identity_twist_is_valid_and_inert() {
        let t = sweedler(&int(0));
        let one = PairElement::outer(&t.hopf.alg.unit, &t.hopf.alg.unit);
        assert!(check_twist(&t.hopf, &one).is_ok());
        assert_eq!(twist_hopf(&t.hopf, &one).unwrap(), t.hopf);
        assert_eq!(twist_r(&t.hopf, &t.r, &one).unwrap(), t.r);
    }

    #[test]
    fn sweedler_j_is_a_twist() {
        let t = sweedler(&int(0));
        for lam in [int(0), int(1), int(-2), CycScalar::from_frac(3, 5)] {
            assert!(check_twist(&t.hopf, &sweedler_j(&lam)).is_ok());
        }
    }

    #[test]
    fn r_lambda_is_twist_of_r_zero() {
        for lam in [int(1), int(-2), CycScalar::from_frac(3, 5)] {
            let t0 = sweedler(&int(0));
            let tl = sweedler(&lam);
            let r = twist_r(&t0.hopf, &t0.r, &sweedler_j(&lam)).unwrap();
            assert_eq!(r, tl.r);
        }
    }

    #[test]
    fn twisted_hopf_passes_checks() {
        let t = sweedler(&int(0));
        let h2 = twist_hopf(&t.hopf, &sweedler_j(&int(1))).unwrap();
        assert!(crate::hopf::check_hopf(&h2).is_empty());
        // algebra tensors unchanged
        assert_eq!(h2.alg, t.hopf.alg);
    }

    #[test]
    fn twist_round_trip() {
        let t = sweedler(&int(0));
        let j = sweedler_j(&int(1));
        let pa = PairAlgebra::plain(&t.hopf.alg);
        let j_inv = pa.inverse(&j).unwrap();
        let h2 = twist_hopf(&t.hopf, &j).unwrap();
        // J^{-1} is a twist for the twisted algebra; applying it restores H
        let h3 = twist_hopf(&h2, &j_inv).unwrap();
        assert_eq!(h3, t.hopf);
        let r2 = twist_r(&t.hopf, &t.r, &j).unwrap();
        let r3 = twist_r(&h2, &r2, &j_inv).unwrap();
        assert_eq!(r3, t.r);
    }

    #[test]
    fn counit_violation_is_rejected() {
        let e1 = crate::superalg::exterior_hopf(1);
        let mut j = PairElement::outer(&e1.hopf.alg.unit, &e1.hopf.alg.unit);
        j.set(1, 0, int(1)); // 1(x)1 + x(x)1
        assert!(matches!(
            check_twist_super(&e1, &j),
            Err(ExactError::NotATwist { .. })
        ));
    }

    #[test]
    fn exp_twist_dim1() {
        let e1 = crate::superalg::exterior_hopf(1);
        let mut rmat = Matrix::zero(1, 1);
        rmat.set(0, 0, int(2));
        // e^{r/2} with r = 2 x(x)x truncates to 1(x)1 + x(x)x
        let j = exp_twist(&e1, &rmat).unwrap();
        let mut expect = PairElement::outer(&e1.hopf.alg.unit, &e1.hopf.alg.unit);
        expect.set(1, 1, int(1));
        assert_eq!(j, expect);
        assert!(check_twist_super(&e1, &j).is_ok());
    }

    #[test]
    fn exp_twist_inverse_is_exp_of_negative() {
        let e2 = crate::superalg::exterior_hopf(2);
        let mut rmat = Matrix::zero(2, 2);
        rmat.set(0, 0, int(1));
        rmat.set(0, 1, int(2));
        rmat.set(1, 0, int(2));
        rmat.set(1, 1, int(-3));
        let j = exp_twist(&e2, &rmat).unwrap();
        let j_neg = exp_twist(&e2, &rmat.neg()).unwrap();
        let pa = e2.pair_algebra();
        assert_eq!(pa.mult(&j, &j_neg), pa.one());
        assert!(check_twist_super(&e2, &j).is_ok());
    }

    #[test]
    fn exp_twist_rejects_asymmetric() {
        let e2 = crate::superalg::exterior_hopf(2);
        let mut rmat = Matrix::zero(2, 2);
        rmat.set(0, 1, int(1));
        assert!(exp_twist(&e2, &rmat).is_err());
    }

    #[test]
    fn exterior_twist_moves_r_but_not_the_coproduct() {
        // J = 1 + x(x)x/2 commutes with every Delta(a), so the coproduct is
        // unchanged; the transported triangular structure is not
        let e1 = crate::superalg::exterior_hopf(1);
        let mut rmat = Matrix::zero(1, 1);
        rmat.set(0, 0, int(1));
        let j = exp_twist(&e1, &rmat).unwrap();
        let twisted = twist_super_hopf(&e1, &j).unwrap();
        assert!(crate::superalg::check_super_hopf(&twisted).is_empty());
        assert!(crate::superalg::cocommutative_check(&twisted));
        assert_eq!(twisted.hopf.comult, e1.hopf.comult);
        let pa = e1.pair_algebra();
        let trivial = pa.one();
        let moved = twist_r_super(&e1, &trivial, &j).unwrap();
        assert_ne!(moved, trivial);
        // R^J = J_21^{-1} J = 1 + x(x)x since J_21 = J^{-1} here
        let mut expect = pa.one();
        expect.set(1, 1, int(1));
        assert_eq!(moved, expect);
        assert!(crate::triangular::check_triangular_super(&twisted, &moved).is_empty());
    }

    #[test]
    fn exp_twist_minimality() {
        // nondegenerate r on dim 2: the transported triangular structure on
        // the twisted exterior algebra has full rank
        let e2 = crate::superalg::exterior_hopf(2);
        let mut nondeg = Matrix::zero(2, 2);
        nondeg.set(0, 1, int(1));
        nondeg.set(1, 0, int(1));
        let j = exp_twist(&e2, &nondeg).unwrap();
        let pa = e2.pair_algebra();
        let rr = pa.mult(&pa.inverse(&pa.flip(&j)).unwrap(), &j);
        let twisted = twist_super_hopf(&e2, &j).unwrap();
        assert!(crate::triangular::check_triangular_super(&twisted, &rr).is_empty());
        let (_, rank) = crate::triangular::minimal_part(&twisted.hopf, &rr);
        assert_eq!(rank, 4);
        // degenerate r: rank collapses
        let mut deg = Matrix::zero(2, 2);
        deg.set(0, 0, int(1));
        let j = exp_twist(&e2, &deg).unwrap();
        let rr = pa.mult(&pa.inverse(&pa.flip(&j)).unwrap(), &j);
        let twisted = twist_super_hopf(&e2, &j).unwrap();
        let (_, rank) = crate::triangular::minimal_part(&twisted.hopf, &rr);
        assert!(rank < 4);
    }
}

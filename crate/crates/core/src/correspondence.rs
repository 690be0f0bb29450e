//! The dictionary between ordinary Hopf algebras carrying an involutive
//! grouplike and Hopf superalgebras: bosonization in both directions and
//! transport of R-matrices and twists across it.

use crate::error::ExactError;
use crate::hopf::HopfData;
use crate::linalg::{unit_vector, vec_eq, Matrix, Subspace, Tensor3};
use crate::scalar::CycScalar;
use crate::superalg::SuperHopfData;
use crate::tensor::{PairAlgebra, PairElement};

/// Result of passing to the super side: the Hopf superalgebra, the
/// distinguished grouplike in the (possibly new) basis, and the
/// change-of-basis matrix (columns: new basis vectors in old coordinates;
/// the identity when the input basis was already homogeneous).
#[derive(Clone, Debug)]
pub struct Bosonization {
    pub super_hopf: SuperHopfData,
    pub g: Vec<CycScalar>,
    pub basis_change: Matrix,
}

/// Conjugation by an involutive grouplike as a matrix: `x -> u x u`.
fn ad_matrix(h: &HopfData, u: &[CycScalar]) -> Matrix {
    h.alg.left_mult(u).mul(&h.alg.right_mult(u))
}

fn require_involutive_grouplike(h: &HopfData, u: &[CycScalar]) -> Result<(), ExactError> {
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
    Ok(())
}

/// Parity of each basis vector under `Ad(u)`, requiring the basis to be an
/// eigenbasis.
pub fn parity_from_ad(h: &HopfData, u: &[CycScalar]) -> Result<Vec<usize>, ExactError> {
    require_involutive_grouplike(h, u)?;
    let ad = ad_matrix(h, u);
    let d = h.dim();
    let mut parity = Vec::with_capacity(d);
    for i in 0..d {
        let e = unit_vector(d, i);
        let img = ad.apply(&e);
        if vec_eq(&img, &e) {
            parity.push(0);
        } else if vec_eq(&img, &crate::linalg::vec_neg(&e)) {
            parity.push(1);
        } else {
            return Err(ExactError::precondition(format!(
                "basis vector e_{i} is not homogeneous under Ad(u)"
            )));
        }
    }
    Ok(parity)
}

/// Rewrite all structure tensors in the basis whose vectors are the columns
/// of `c`.
pub fn change_basis(h: &HopfData, c: &Matrix) -> Result<HopfData, ExactError> {
    let d = h.dim();
    let c_inv = c.inverse().ok_or(ExactError::NotInvertible)?;
    let mut mult = Tensor3::new((d, d, d));
    for i in 0..d {
        let vi = c.col(i);
        for j in 0..d {
            let prod = h.alg.product(&vi, &c.col(j));
            let coords = c_inv.apply(&prod);
            for (k, v) in coords.into_iter().enumerate() {
                if !v.is_zero() {
                    mult.set(i, j, k, v);
                }
            }
        }
    }
    let unit = c_inv.apply(&h.alg.unit);
    let mut comult = Tensor3::new((d, d, d));
    for i in 0..d {
        let dv = h.comult_of(&c.col(i));
        let moved = c_inv.mul(&dv.coeffs).mul(&c_inv.transpose());
        for j in 0..d {
            for k in 0..d {
                let v = moved.get(j, k);
                if !v.is_zero() {
                    comult.set(i, j, k, v.clone());
                }
            }
        }
    }
    let counit: Vec<CycScalar> = (0..d).map(|i| h.counit_of(&c.col(i))).collect();
    let antipode = c_inv.mul(&h.antipode).mul(c);
    Ok(HopfData {
        alg: crate::algebra::AlgebraData::new(d, unit, mult),
        comult,
        counit,
        antipode,
    })
}

/// `u^p x` for `p` in `{0, 1}`.
fn u_power_times(h: &HopfData, u: &[CycScalar], p: usize, x: &[CycScalar]) -> Vec<CycScalar> {
    if p % 2 == 0 {
        x.to_vec()
    } else {
        h.alg.product(u, x)
    }
}

/// Split a pair element by the parity of its second tensorand.
fn split_second(r: &PairElement, parity: &[usize]) -> (PairElement, PairElement) {
    let d = r.dim;
    let mut even = PairElement::zero(d);
    let mut odd = PairElement::zero(d);
    for i in 0..d {
        for j in 0..d {
            let c = r.get(i, j);
            if c.is_zero() {
                continue;
            }
            if parity[j] == 0 {
                even.set(i, j, c.clone());
            } else {
                odd.set(i, j, c.clone());
            }
        }
    }
    (even, odd)
}

/// Split a pair element by the parity of its first tensorand.
fn split_first(r: &PairElement, parity: &[usize]) -> (PairElement, PairElement) {
    let d = r.dim;
    let mut even = PairElement::zero(d);
    let mut odd = PairElement::zero(d);
    for i in 0..d {
        for j in 0..d {
            let c = r.get(i, j);
            if c.is_zero() {
                continue;
            }
            if parity[i] == 0 {
                even.set(i, j, c.clone());
            } else {
                odd.set(i, j, c.clone());
            }
        }
    }
    (even, odd)
}

/// Shared coproduct/antipode rewrite used in both directions: replace
/// `Delta` by `Delta_0 - (-1)^{p(h)} (u (x) 1) Delta_1` (split by
/// second-tensorand parity) and `S` by `u^{p(h)} S(h)`.
fn toggle_structure(
    h: &HopfData,
    u: &[CycScalar],
    parity: &[usize],
) -> (Tensor3, Matrix) {
    let d = h.dim();
    let pa = PairAlgebra::plain(&h.alg);
    let u_left = PairElement::outer(u, &h.alg.unit);
    let mut comult = Tensor3::new((d, d, d));
    for i in 0..d {
        let dv = h.comult_of(&unit_vector(d, i));
        let (d0, d1) = split_second(&dv, parity);
        let shifted = pa.mult(&u_left, &d1);
        let toggled = if parity[i] % 2 == 0 {
            d0.sub(&shifted)
        } else {
            d0.add(&shifted)
        };
        for j in 0..d {
            for k in 0..d {
                let c = toggled.get(j, k);
                if !c.is_zero() {
                    comult.set(i, j, k, c.clone());
                }
            }
        }
    }
    let antipode = Matrix::from_fn(d, d, |row, col| {
        let s = h.antipode.apply(&unit_vector(d, col));
        let v = u_power_times(h, u, parity[col], &s);
        v[row].clone()
    });
    (comult, antipode)
}

/// Pass from `(H, u)` to the corresponding Hopf superalgebra. The basis is
/// refined to an `Ad(u)` eigenbasis when necessary; the change of basis is
/// returned.
pub fn to_super(h: &HopfData, u: &[CycScalar]) -> Result<Bosonization, ExactError> {
    require_involutive_grouplike(h, u)?;
    let d = h.dim();
    let (h, u, basis_change) = match parity_from_ad(h, u) {
        Ok(_) => (h.clone(), u.to_vec(), Matrix::identity(d)),
        Err(_) => {
            // refine: eigenspaces of Ad(u) for +1 and -1
            let ad = ad_matrix(h, u);
            let even = Subspace::span(
                d,
                (0..d)
                    .map(|i| {
                        let e = unit_vector(d, i);
                        crate::linalg::vec_add(&e, &ad.apply(&e))
                    })
                    .collect(),
            );
            let odd = Subspace::span(
                d,
                (0..d)
                    .map(|i| {
                        let e = unit_vector(d, i);
                        crate::linalg::vec_sub(&e, &ad.apply(&e))
                    })
                    .collect(),
            );
            let mut cols: Vec<Vec<CycScalar>> = even.basis().to_vec();
            cols.extend(odd.basis().iter().cloned());
            if cols.len() != d {
                return Err(ExactError::precondition(
                    "Ad(u) eigenspaces do not span",
                ));
            }
            let c = Matrix::from_rows(cols).transpose();
            let moved = change_basis(h, &c)?;
            let u_new = c.inverse().expect("basis").apply(u);
            (moved, u_new, c)
        }
    };
    let parity = parity_from_ad(&h, &u)?;
    let (comult, antipode) = toggle_structure(&h, &u, &parity);
    let super_hopf = SuperHopfData {
        hopf: HopfData {
            alg: h.alg.clone(),
            comult,
            counit: h.counit.clone(),
            antipode,
        },
        parity,
    };
    Ok(Bosonization {
        super_hopf,
        g: u,
        basis_change,
    })
}

/// Pass from a Hopf superalgebra with a parity-implementing involutive
/// grouplike back to the ordinary side; inverse of `to_super`.
pub fn to_ordinary(
    a: &SuperHopfData,
    g: &[CycScalar],
) -> Result<(HopfData, Vec<CycScalar>), ExactError> {
    if !a.hopf.is_grouplike(g) {
        return Err(ExactError::NotInvolutiveGrouplike {
            reason: "element is not grouplike".into(),
        });
    }
    if !vec_eq(&a.hopf.alg.product(g, g), &a.hopf.alg.unit) {
        return Err(ExactError::NotInvolutiveGrouplike {
            reason: "element does not square to 1".into(),
        });
    }
    // g must implement the parity by conjugation
    let d = a.dim();
    for i in 0..d {
        let e = unit_vector(d, i);
        let conj = a.hopf.alg.product(&a.hopf.alg.product(g, &e), g);
        let expect = if a.parity[i] % 2 == 0 {
            e.clone()
        } else {
            crate::linalg::vec_neg(&e)
        };
        if !vec_eq(&conj, &expect) {
            return Err(ExactError::precondition(format!(
                "conjugation by g does not implement the parity at e_{i}"
            )));
        }
    }
    let (comult, antipode) = toggle_structure(&a.hopf, g, &a.parity);
    Ok((
        HopfData {
            alg: a.hopf.alg.clone(),
            comult,
            counit: a.hopf.counit.clone(),
            antipode,
        },
        g.to_vec(),
    ))
}

/// Transport a triangular structure with Drinfeld element `u` to the super
/// side: `(R_0 + (1 (x) u) R_1) R_u` with `R = R_0 + R_1` split by the
/// `Ad(u (x) 1)` eigen-decomposition.
pub fn transport_r_to_super(
    h: &HopfData,
    r: &PairElement,
    u: &[CycScalar],
) -> Result<PairElement, ExactError> {
    require_involutive_grouplike(h, u)?;
    let actual_u = crate::triangular::drinfeld_element(h, r);
    if !vec_eq(&actual_u, u) {
        return Err(ExactError::precondition(
            "u is not the Drinfeld element of (H, R)",
        ));
    }
    let pa = PairAlgebra::plain(&h.alg);
    let u_left = PairElement::outer(u, &h.alg.unit);
    let u_right = PairElement::outer(&h.alg.unit, u);
    let conj = pa.mult(&pa.mult(&u_left, r), &u_left);
    let r0 = r.add(&conj).scale(&CycScalar::from_frac(1, 2));
    let r1 = r.sub(&r0);
    let ru = crate::triangular::r_u(h, u)?;
    Ok(pa.mult(&r0.add(&pa.mult(&u_right, &r1)), &ru))
}

/// Transport a super triangular structure with super Drinfeld element 1
/// back to the ordinary side: `(RR_0 + (1 (x) g) RR_1) R_g`.
pub fn transport_r_to_ordinary(
    a: &SuperHopfData,
    rr: &PairElement,
    g: &[CycScalar],
) -> Result<PairElement, ExactError> {
    let su = crate::triangular::drinfeld_element_super(a, rr);
    if !vec_eq(&su, &a.hopf.alg.unit) {
        return Err(ExactError::precondition(
            "super Drinfeld element is not 1",
        ));
    }
    let (ordinary, _) = to_ordinary(a, g)?;
    let pa = PairAlgebra::plain(&a.hopf.alg);
    let g_left = PairElement::outer(g, &a.hopf.alg.unit);
    let g_right = PairElement::outer(&a.hopf.alg.unit, g);
    let conj = pa.mult(&pa.mult(&g_left, rr), &g_left);
    let rr0 = rr.add(&conj).scale(&CycScalar::from_frac(1, 2));
    let rr1 = rr.sub(&rr0);
    let rg = crate::triangular::r_u(&ordinary, g)?;
    Ok(pa.mult(&rr0.add(&pa.mult(&g_right, &rr1)), &rg))
}

/// Transport a twist across the dictionary. The same formula
/// `J_0 - (u (x) 1) J_1` (split by component parity) is used in both
/// directions and is an involution.
pub fn transport_twist(
    h: &HopfData,
    u: &[CycScalar],
    j: &PairElement,
    parity: &[usize],
) -> Result<PairElement, ExactError> {
    require_involutive_grouplike(h, u)?;
    // evenness: nonzero coefficients only on matched parities
    for a in 0..h.dim() {
        for b in 0..h.dim() {
            if !j.get(a, b).is_zero() && (parity[a] + parity[b]) % 2 == 1 {
                return Err(ExactError::NotATwist {
                    reason: "twist element is not even".into(),
                });
            }
        }
    }
    let pa = PairAlgebra::plain(&h.alg);
    let (j0, j1) = split_first(j, parity);
    let u_left = PairElement::outer(u, &h.alg.unit);
    Ok(j0.sub(&pa.mult(&u_left, &j1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::GroupTable;
    use crate::triangular::sweedler;

    fn int(v: i64) -> CycScalar {
        CycScalar::from_int(v)
    }

    #[test]
    fn z2_to_super_is_inert() {
        let h = crate::superalg::group_algebra(&GroupTable::cyclic(2)).unwrap();
        let u = unit_vector(2, 1);
        let b = to_super(&h, &u).unwrap();
        assert_eq!(b.super_hopf.parity, vec![0, 0]);
        assert_eq!(b.super_hopf.hopf, h);
        assert_eq!(b.basis_change, Matrix::identity(2));
        // u = 1 on any H is also inert
        let s = sweedler(&int(0)).hopf;
        let b = to_super(&s, &s.alg.unit.clone()).unwrap();
        assert_eq!(b.super_hopf.parity, vec![0; 4]);
        assert_eq!(b.super_hopf.hopf, s);
    }

    #[test]
    fn sweedler_to_super_is_supergroup() {
        let s = sweedler(&int(0)).hopf;
        let g = unit_vector(4, 2);
        let b = to_super(&s, &g).unwrap();
        assert_eq!(b.super_hopf.parity, vec![0, 1, 0, 1]);
        assert!(crate::superalg::check_super_hopf(&b.super_hopf).is_empty());
        // Delta(x) becomes primitive: x (x) 1 + 1 (x) x
        let dx = b.super_hopf.hopf.comult_of(&unit_vector(4, 1));
        let one = &b.super_hopf.hopf.alg.unit;
        let x = unit_vector(4, 1);
        let expect = PairElement::outer(&x, one).add(&PairElement::outer(one, &x));
        assert_eq!(dx, expect);
        assert!(crate::superalg::cocommutative_check(&b.super_hopf));
    }

    #[test]
    fn round_trip_both_ways() {
        let s = sweedler(&int(0)).hopf;
        let g = unit_vector(4, 2);
        let b = to_super(&s, &g).unwrap();
        let (back, u) = to_ordinary(&b.super_hopf, &b.g).unwrap();
        assert_eq!(back, s);
        assert_eq!(u, g);
        // other direction: start from the supergroup algebra
        let (gt, n, action) = crate::superalg::sign_action_z2();
        let a = crate::superalg::supergroup_algebra(&gt, n, &action).unwrap();
        let gvec = unit_vector(4, 2);
        let (ord, u) = to_ordinary(&a, &gvec).unwrap();
        assert!(crate::hopf::check_hopf(&ord).is_empty());
        let b2 = to_super(&ord, &u).unwrap();
        assert_eq!(b2.super_hopf, a);
    }

    #[test]
    fn inhomogeneous_basis_is_refined() {
        // conjugate the standard basis so Ad(g) is no longer diagonal
        let s = sweedler(&int(0)).hopf;
        let mut c = Matrix::identity(4);
        c.set(0, 1, int(1)); // new e_1 = 1 + x mixes the parities
        let moved = change_basis(&s, &c).unwrap();
        assert!(crate::hopf::check_hopf(&moved).is_empty());
        let g = c.inverse().unwrap().apply(&unit_vector(4, 2));
        let b = to_super(&moved, &g).unwrap();
        assert_ne!(b.basis_change, Matrix::identity(4));
        assert!(crate::superalg::check_super_hopf(&b.super_hopf).is_empty());
        let (back, _) = to_ordinary(&b.super_hopf, &b.g).unwrap();
        // round trip returns the refined-basis presentation
        let refined = change_basis(&moved, &b.basis_change).unwrap();
        assert_eq!(back, refined);
    }

    #[test]
    fn transport_r_of_z2_is_trivial() {
        let h = crate::superalg::group_algebra(&GroupTable::cyclic(2)).unwrap();
        let u = unit_vector(2, 1);
        let r = crate::triangular::r_u(&h, &u).unwrap();
        let rr = transport_r_to_super(&h, &r, &u).unwrap();
        assert_eq!(rr, PairElement::outer(&h.alg.unit, &h.alg.unit));
    }

    #[test]
    fn transport_r_of_sweedler_zero_is_trivial() {
        let t = sweedler(&int(0));
        let g = unit_vector(4, 2);
        let rr = transport_r_to_super(&t.hopf, &t.r, &g).unwrap();
        let one = PairElement::outer(&t.hopf.alg.unit, &t.hopf.alg.unit);
        assert_eq!(rr, one);
    }

    #[test]
    fn transport_r_round_trip_on_family() {
        for lam in [int(0), int(1), int(-2), CycScalar::from_frac(3, 5)] {
            let t = sweedler(&lam);
            let g = unit_vector(4, 2);
            let rr = transport_r_to_super(&t.hopf, &t.r, &g).unwrap();
            let b = to_super(&t.hopf, &g).unwrap();
            // super-triangular with super Drinfeld element exactly 1
            assert!(crate::triangular::check_triangular_super(&b.super_hopf, &rr).is_empty());
            assert_eq!(
                crate::triangular::drinfeld_element_super(&b.super_hopf, &rr),
                b.super_hopf.hopf.alg.unit
            );
            let back = transport_r_to_ordinary(&b.super_hopf, &rr, &g).unwrap();
            assert_eq!(back, t.r);
        }
    }

    #[test]
    fn transport_twist_matches_explicit_family() {
        let t = sweedler(&int(0));
        let g = unit_vector(4, 2);
        let parity = parity_from_ad(&t.hopf, &g).unwrap();
        for lam in [int(0), int(1), int(-2)] {
            let j = crate::twist::sweedler_j(&lam);
            let jj = transport_twist(&t.hopf, &g, &j, &parity).unwrap();
            // expected: 1 (x) 1 + (lambda/2) x (x) x
            let mut expect = PairElement::outer(&t.hopf.alg.unit, &t.hopf.alg.unit);
            expect.set(1, 1, &CycScalar::from_frac(1, 2) * &lam);
            assert_eq!(jj, expect);
            // the same formula goes back
            assert_eq!(transport_twist(&t.hopf, &g, &jj, &parity).unwrap(), j);
        }
    }

    #[test]
    fn transported_twists_are_twists_on_both_sides() {
        let t = sweedler(&int(0));
        let g = unit_vector(4, 2);
        let parity = parity_from_ad(&t.hopf, &g).unwrap();
        let b = to_super(&t.hopf, &g).unwrap();
        for lam in [int(1), int(-2)] {
            let j = crate::twist::sweedler_j(&lam);
            assert!(crate::twist::check_twist(&t.hopf, &j).is_ok());
            let jj = transport_twist(&t.hopf, &g, &j, &parity).unwrap();
            assert!(crate::twist::check_twist_super(&b.super_hopf, &jj).is_ok());
        }
    }

    #[test]
    fn radford_quotient_cross_check() {
        // H corresponding to (A, g) is overline(A) modulo the Hopf ideal
        // generated by g u - 1
        let (gt, n, action) = crate::superalg::sign_action_z2();
        let a = crate::superalg::supergroup_algebra(&gt, n, &action).unwrap();
        let g = unit_vector(4, 2);
        let (h, _) = to_ordinary(&a, &g).unwrap();

        let (big, u) = crate::superalg::overline(&a).unwrap();
        // embed g of A into the even copy inside overline(A)
        let mut g_in_big = vec![CycScalar::zero(); 8];
        for (i, c) in g.iter().enumerate() {
            g_in_big[i] = c.clone();
        }
        let gu = big.alg.product(&g_in_big, &u);
        let gen = crate::linalg::vec_sub(&gu, &big.alg.unit);
        // ideal closure
        let mut ideal = Subspace::span(8, vec![gen]);
        loop {
            let basis = ideal.basis().to_vec();
            let mut grew = false;
            for v in &basis {
                for bidx in 0..8 {
                    let e = unit_vector(8, bidx);
                    if ideal.insert(&big.alg.product(&e, v)) {
                        grew = true;
                    }
                    if ideal.insert(&big.alg.product(v, &e)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        assert_eq!(ideal.dim(), 4);
        assert!(crate::hopf::is_hopf_ideal(&big, &ideal).is_ok());
        let quot = crate::hopf::quotient_hopf(&big, &ideal).unwrap();
        assert_eq!(quot.dim(), 4);
        // the composite A -> overline(A) -> quotient is the isomorphism
        let (_, projection) = crate::algebra::quotient_algebra(&big.alg, &ideal).unwrap();
        let map = Matrix::from_fn(4, 4, |row, col| {
            let mut embedded = vec![CycScalar::zero(); 8];
            embedded[col] = CycScalar::one();
            projection.apply(&embedded)[row].clone()
        });
        assert!(crate::hopf::is_hopf_iso(&h, &quot, &map));
    }

    #[test]
    fn rank_two_transport_is_cocommutative() {
        // R of rank <= 2 lands on a cocommutative super side
        let t = sweedler(&int(0));
        let g = unit_vector(4, 2);
        assert!(crate::triangular::is_rank_le_2(&t.hopf, &t.r));
        let b = to_super(&t.hopf, &g).unwrap();
        assert!(crate::superalg::cocommutative_check(&b.super_hopf));
    }
}

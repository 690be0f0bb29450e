//! Executable semisimplicity-of-tensor-products criteria: representation
//! utilities, semisimplicity of a module via the radical of its image
//! algebra, and the three equivalent structural conditions (coradical of
//! the dual is a Hopf subalgebra, the radical is a Hopf ideal, the squared
//! antipode is the identity on the semisimple quotient).

use crate::algebra::AlgebraData;
use crate::error::ExactError;
use crate::hopf::{dual_hopf, HopfData};
use crate::linalg::{unit_vector, Matrix, Subspace, Tensor3};
use crate::scalar::CycScalar;

/// A representation of the underlying algebra: one module-sized matrix per
/// basis element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    pub hopf_dim: usize,
    pub module_dim: usize,
    pub matrices: Vec<Matrix>,
}

impl Representation {
    /// Image of an arbitrary element.
    pub fn apply(&self, x: &[CycScalar]) -> Matrix {
        let mut out = Matrix::zero(self.module_dim, self.module_dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.matrices[i].scale(c));
            }
        }
        out
    }
}

/// Is `rho` an algebra map with `rho(1) = Id`?
pub fn check_representation(alg: &AlgebraData, rho: &Representation) -> Result<(), ExactError> {
    if rho.hopf_dim != alg.dim || rho.matrices.len() != alg.dim {
        return Err(ExactError::DimensionMismatch {
            context: "representation size".into(),
        });
    }
    for m in &rho.matrices {
        if m.rows() != rho.module_dim || m.cols() != rho.module_dim {
            return Err(ExactError::DimensionMismatch {
                context: "representation matrix shape".into(),
            });
        }
    }
    if rho.apply(&alg.unit) != Matrix::identity(rho.module_dim) {
        return Err(ExactError::NotAHomomorphism {
            reason: "unit does not act as the identity".into(),
        });
    }
    for i in 0..alg.dim {
        for j in 0..alg.dim {
            let lhs = rho.matrices[i].mul(&rho.matrices[j]);
            let rhs = rho.apply(&alg.basis_product(i, j));
            if lhs != rhs {
                return Err(ExactError::NotAHomomorphism {
                    reason: format!("rho(e_{i})rho(e_{j}) != rho(e_{i} e_{j})"),
                });
            }
        }
    }
    Ok(())
}

/// The one-dimensional trivial representation by the counit.
pub fn trivial_rep(h: &HopfData) -> Representation {
    Representation {
        hopf_dim: h.dim(),
        module_dim: 1,
        matrices: h
            .counit
            .iter()
            .map(|c| {
                let mut m = Matrix::zero(1, 1);
                m.set(0, 0, c.clone());
                m
            })
            .collect(),
    }
}

/// The left regular representation.
pub fn regular_rep(h: &HopfData) -> Representation {
    Representation {
        hopf_dim: h.dim(),
        module_dim: h.dim(),
        matrices: (0..h.dim())
            .map(|i| h.alg.left_mult(&unit_vector(h.dim(), i)))
            .collect(),
    }
}

/// Tensor product of representations through the comultiplication.
pub fn tensor_rep(h: &HopfData, rho1: &Representation, rho2: &Representation) -> Representation {
    let d = h.dim();
    let m = rho1.module_dim * rho2.module_dim;
    let mut matrices = Vec::with_capacity(d);
    for i in 0..d {
        let mut acc = Matrix::zero(m, m);
        for (&(a, j, k), c) in h.comult.iter() {
            if a == i {
                acc = acc.add(&rho1.matrices[j].kron(&rho2.matrices[k]).scale(c));
            }
        }
        matrices.push(acc);
    }
    Representation {
        hopf_dim: d,
        module_dim: m,
        matrices,
    }
}

/// Is the module semisimple? Decided by computing the image algebra inside
/// the matrix algebra and testing that its radical vanishes.
pub fn is_semisimple_rep(_h: &HopfData, rho: &Representation) -> bool {
    let m = rho.module_dim;
    if m == 0 {
        return true;
    }
    // span of the image, closed under products, as vectorized matrices
    let flat = |mat: &Matrix| -> Vec<CycScalar> {
        let mut v = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                v.push(mat.get(i, j).clone());
            }
        }
        v
    };
    let unflat = |v: &[CycScalar]| -> Matrix {
        Matrix::from_fn(m, m, |i, j| v[i * m + j].clone())
    };
    let mut span = Subspace::span(m * m, {
        let mut vs = vec![flat(&Matrix::identity(m))];
        vs.extend(rho.matrices.iter().map(&flat));
        vs
    });
    loop {
        let basis = span.basis().to_vec();
        let mut grew = false;
        for x in &basis {
            for y in &basis {
                if span.insert(&flat(&unflat(x).mul(&unflat(y)))) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    // structure constants of the image algebra on its echelon basis
    let basis = span.basis().to_vec();
    let bdim = basis.len();
    let basis_mat = Matrix::from_rows(basis.clone()).transpose();
    let mut mult = Tensor3::new((bdim, bdim, bdim));
    for i in 0..bdim {
        for j in 0..bdim {
            let prod = flat(&unflat(&basis[i]).mul(&unflat(&basis[j])));
            let coords = basis_mat.solve(&prod).expect("closed under products");
            for (k, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    mult.set(i, j, k, c);
                }
            }
        }
    }
    let unit_coords = basis_mat
        .solve(&flat(&Matrix::identity(m)))
        .expect("identity in image algebra");
    let image = AlgebraData::new(bdim, unit_coords, mult);
    crate::algebra::radical(&image).dim() == 0
}

/// The upper-triangular two-dimensional representation
/// `a -> [[p(a), r(a)], [0, q(a)]]` built from two characters and a
/// skew-primitive functional (`r(ab) = p(a)r(b) + r(a)q(b)`).
pub fn rep_2dim(
    h: &HopfData,
    p: &[CycScalar],
    q: &[CycScalar],
    r: &[CycScalar],
) -> Result<Representation, ExactError> {
    let d = h.dim();
    let ev = |phi: &[CycScalar], x: &[CycScalar]| -> CycScalar {
        phi.iter()
            .zip(x.iter())
            .fold(CycScalar::zero(), |acc, (a, b)| &acc + &(a * b))
    };
    // characters: multiplicative, unit -> 1
    for (name, phi) in [("p", p), ("q", q)] {
        if !ev(phi, &h.alg.unit).is_one() {
            return Err(ExactError::precondition(format!(
                "{name} does not send 1 to 1"
            )));
        }
        for i in 0..d {
            for j in 0..d {
                let prod = h.alg.basis_product(i, j);
                if ev(phi, &prod) != &phi[i] * &phi[j] {
                    return Err(ExactError::precondition(format!(
                        "{name} is not a character"
                    )));
                }
            }
        }
    }
    // skew-primitive condition on the functional
    for i in 0..d {
        for j in 0..d {
            let prod = h.alg.basis_product(i, j);
            let lhs = ev(r, &prod);
            let rhs = &(&p[i] * &r[j]) + &(&r[i] * &q[j]);
            if lhs != rhs {
                return Err(ExactError::precondition(
                    "functional is not skew-primitive for (p, q)",
                ));
            }
        }
    }
    let matrices = (0..d)
        .map(|i| {
            let mut m = Matrix::zero(2, 2);
            m.set(0, 0, p[i].clone());
            m.set(0, 1, r[i].clone());
            m.set(1, 1, q[i].clone());
            m
        })
        .collect();
    let rho = Representation {
        hopf_dim: d,
        module_dim: 2,
        matrices,
    };
    check_representation(&h.alg, &rho)?;
    Ok(rho)
}

/// Condition on the dual: the coradical of `H*` is a Hopf subalgebra
/// (closed under multiplication and antipode).
pub fn chevalley_condition3(h: &HopfData) -> bool {
    let a = dual_hopf(h);
    let c = crate::hopf::coradical(&a);
    let generated = crate::algebra::subalgebra_generated(&a.alg, &c.basis().to_vec());
    if generated != c {
        return false;
    }
    c.basis().iter().all(|v| c.contains(&a.antipode.apply(v)))
}

/// Condition on `H`: the radical is a Hopf ideal.
pub fn chevalley_condition4(h: &HopfData) -> bool {
    let rad = crate::algebra::radical(&h.alg);
    crate::hopf::is_hopf_ideal(h, &rad).is_ok()
}

/// Condition on the quotient: the squared antipode induces the identity on
/// `H` modulo its radical.
pub fn chevalley_condition5(h: &HopfData) -> bool {
    let rad = crate::algebra::radical(&h.alg);
    let Ok((_, projection)) = crate::algebra::quotient_algebra(&h.alg, &rad) else {
        return false;
    };
    let s2 = h.antipode.mul(&h.antipode);
    let coords = rad.complement_coords();
    for (row, &c) in coords.iter().enumerate() {
        let img = projection.apply(&s2.apply(&unit_vector(h.dim(), c)));
        let expect = unit_vector(coords.len(), row);
        if !crate::linalg::vec_eq(&img, &expect) {
            return false;
        }
    }
    true
}

/// Joint verdict of the three conditions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ChevalleyReport {
    pub cond3: bool,
    pub cond4: bool,
    pub cond5: bool,
}

impl ChevalleyReport {
    pub fn agree(&self) -> bool {
        self.cond3 == self.cond4 && self.cond4 == self.cond5
    }

    /// The common verdict; `None` when the conditions disagree.
    pub fn verdict(&self) -> Option<bool> {
        if self.agree() {
            Some(self.cond4)
        } else {
            None
        }
    }
}

pub fn chevalley_report(h: &HopfData) -> ChevalleyReport {
    ChevalleyReport {
        cond3: chevalley_condition3(h),
        cond4: chevalley_condition4(h),
        cond5: chevalley_condition5(h),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::GroupTable;
    use crate::triangular::sweedler;

    fn int(v: i64) -> CycScalar {
        CycScalar::from_int(v)
    }

    fn z2() -> HopfData {
        crate::superalg::group_algebra(&GroupTable::cyclic(2)).unwrap()
    }

    #[test]
    fn representation_checks() {
        let h = z2();
        assert!(check_representation(&h.alg, &trivial_rep(&h)).is_ok());
        assert!(check_representation(&h.alg, &regular_rep(&h)).is_ok());
        let s = sweedler(&int(0)).hopf;
        assert!(check_representation(&s.alg, &regular_rep(&s)).is_ok());
        // corrupting a matrix breaks the homomorphism property
        let mut bad = regular_rep(&h);
        bad.matrices[1] = Matrix::identity(2).scale(&int(2));
        assert!(check_representation(&h.alg, &bad).is_err());
    }

    #[test]
    fn tensor_with_trivial_preserves_dimension_and_action() {
        let h = z2();
        let reg = regular_rep(&h);
        let t = tensor_rep(&h, &trivial_rep(&h), &reg);
        assert!(check_representation(&h.alg, &t).is_ok());
        assert_eq!(t.module_dim, 2);
        assert_eq!(t.matrices, reg.matrices);
    }

    #[test]
    fn sign_tensor_sign_is_trivial() {
        let h = z2();
        // sign character of C[Z_2]
        let sign = Representation {
            hopf_dim: 2,
            module_dim: 1,
            matrices: vec![
                Matrix::identity(1),
                Matrix::identity(1).scale(&int(-1)),
            ],
        };
        assert!(check_representation(&h.alg, &sign).is_ok());
        let t = tensor_rep(&h, &sign, &sign);
        assert_eq!(t.matrices, trivial_rep(&h).matrices);
    }

    #[test]
    fn semisimplicity_verdicts() {
        let h = z2();
        assert!(is_semisimple_rep(&h, &regular_rep(&h)));
        let s = sweedler(&int(0)).hopf;
        assert!(!is_semisimple_rep(&s, &regular_rep(&s)));
        assert!(is_semisimple_rep(&s, &trivial_rep(&s)));
    }

    #[test]
    fn rep_2dim_on_sweedler() {
        let s = sweedler(&int(0)).hopf;
        // basis 1, x, g, gx: p = counit, q(g) = -1, r reads off the strictly
        // upper corner of the standard 2-dim module (x and gx both hit it)
        let p = s.counit.clone();
        let q = vec![int(1), int(0), int(-1), int(0)];
        let r = vec![int(0), int(1), int(0), int(1)];
        let rho = rep_2dim(&s, &p, &q, &r).unwrap();
        assert!(check_representation(&s.alg, &rho).is_ok());
        // r = 0 diagonal case is semisimple
        let zero = vec![int(0); 4];
        let diag = rep_2dim(&s, &p, &q, &zero).unwrap();
        assert!(is_semisimple_rep(&s, &diag));
        // a functional violating the skew condition is rejected
        let badr = vec![int(1), int(0), int(0), int(0)];
        assert!(rep_2dim(&s, &p, &q, &badr).is_err());
    }

    #[test]
    fn matrix_coefficients_of_tensor_products_multiply() {
        let s = sweedler(&int(0)).hopf;
        let p = s.counit.clone();
        let q = vec![int(1), int(0), int(-1), int(0)];
        let r = vec![int(0), int(1), int(0), int(1)];
        let rho = rep_2dim(&s, &p, &q, &r).unwrap();
        let t = tensor_rep(&s, &rho, &rho);
        assert!(check_representation(&s.alg, &t).is_ok());
        assert_eq!(t.module_dim, 4);
        // the (0,0) coefficient of the tensor square at g equals p(g)^2
        assert_eq!(t.matrices[2].get(0, 0), &int(1));
    }

    #[test]
    fn conditions_agree_on_group_algebras() {
        for g in [GroupTable::cyclic(1), GroupTable::cyclic(2), GroupTable::cyclic(4)] {
            let h = crate::superalg::group_algebra(&g).unwrap();
            let rep = chevalley_report(&h);
            assert_eq!(rep.verdict(), Some(true));
        }
    }

    #[test]
    fn conditions_agree_on_sweedler_family() {
        for lam in [int(0), int(1), int(-2)] {
            let rep = chevalley_report(&sweedler(&lam).hopf);
            assert!(rep.cond3 && rep.cond4 && rep.cond5);
        }
    }

    #[test]
    fn conditions_agree_on_biproducts_and_duals() {
        let g = GroupTable::cyclic(2);
        let chi = vec![vec![int(1), int(-1)], vec![int(1), int(-1)]];
        let h = crate::superalg::yd_biproduct(&g, &[1, 1], &chi).unwrap();
        assert_eq!(chevalley_report(&h).verdict(), Some(true));
        assert_eq!(chevalley_report(&dual_hopf(&h)).verdict(), Some(true));
    }

    #[test]
    fn verdict_is_twist_invariant_on_sweedler() {
        let t = sweedler(&int(0));
        let before = chevalley_report(&t.hopf);
        let twisted = crate::twist::twist_hopf(&t.hopf, &crate::twist::sweedler_j(&int(1))).unwrap();
        assert_eq!(before, chevalley_report(&twisted));
    }

    #[test]
    fn tensor_of_simples_semisimple_when_condition4_holds() {
        let s = sweedler(&int(0)).hopf;
        assert!(chevalley_condition4(&s));
        // the two simple modules: trivial and sign (both 1-dim)
        let triv = trivial_rep(&s);
        let sign = Representation {
            hopf_dim: 4,
            module_dim: 1,
            matrices: vec![
                Matrix::identity(1),
                Matrix::zero(1, 1),
                Matrix::identity(1).scale(&int(-1)),
                Matrix::zero(1, 1),
            ],
        };
        assert!(check_representation(&s.alg, &sign).is_ok());
        for a in [&triv, &sign] {
            for b in [&triv, &sign] {
                assert!(is_semisimple_rep(&s, &tensor_rep(&s, a, b)));
            }
        }
    }
}

//! Hopf algebra structure over the exact scalars: axiom verification,
//! duals by transposition, coradical, grouplike and skew-primitive
//! elements, Hopf ideals, quotients, generated sub-Hopf algebras, and the
//! generation-by-grouplikes-and-skew-primitives predicate.

use crate::algebra::{self, AlgebraData};
use crate::error::ExactError;
use crate::linalg::{unit_vector, vec_eq, vec_is_zero, Matrix, Subspace, Tensor3};
use crate::scalar::CycScalar;
use crate::tensor::{PairAlgebra, PairElement, TripleAlgebra};

/// A Hopf algebra: algebra plus comultiplication
/// `Delta(e_i) = sum_{j,k} comult[(i,j,k)] e_j (x) e_k`, counit row, and
/// antipode matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HopfData {
    pub alg: AlgebraData,
    pub comult: Tensor3,
    pub counit: Vec<CycScalar>,
    pub antipode: Matrix,
}

impl HopfData {
    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    /// `Delta(x)` for an arbitrary element.
    pub fn comult_of(&self, x: &[CycScalar]) -> PairElement {
        let d = self.dim();
        let mut out = PairElement::zero(d);
        for (&(i, j, k), c) in self.comult.iter() {
            if !x[i].is_zero() {
                let v = &*out.get(j, k) + &(&x[i] * c);
                out.set(j, k, v);
            }
        }
        out
    }

    /// `eps(x)` for an arbitrary element.
    pub fn counit_of(&self, x: &[CycScalar]) -> CycScalar {
        x.iter()
            .zip(self.counit.iter())
            .fold(CycScalar::zero(), |acc, (a, e)| &acc + &(a * e))
    }

    /// Is `g` grouplike: `Delta(g) = g (x) g` and `eps(g) = 1`?
    pub fn is_grouplike(&self, g: &[CycScalar]) -> bool {
        self.comult_of(g) == PairElement::outer(g, g) && self.counit_of(g).is_one()
    }
}

/// One failed Hopf axiom.
#[derive(Clone, Debug)]
pub enum HopfFailure {
    Algebra(algebra::AlgebraFailure),
    Coassociativity(usize),
    CounitLeft(usize),
    CounitRight(usize),
    ComultNotAlgebraMap(usize, usize),
    ComultUnit,
    CounitNotAlgebraMap(usize, usize),
    CounitUnit,
    AntipodeLeft(usize),
    AntipodeRight(usize),
}

impl std::fmt::Display for HopfFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HopfFailure::Algebra(a) => write!(f, "{a}"),
            HopfFailure::Coassociativity(i) => write!(f, "coassociativity fails at e_{i}"),
            HopfFailure::CounitLeft(i) => write!(f, "(eps (x) Id)Delta != Id at e_{i}"),
            HopfFailure::CounitRight(i) => write!(f, "(Id (x) eps)Delta != Id at e_{i}"),
            HopfFailure::ComultNotAlgebraMap(i, j) => {
                write!(f, "Delta(e_{i} e_{j}) != Delta(e_{i})Delta(e_{j})")
            }
            HopfFailure::ComultUnit => write!(f, "Delta(1) != 1 (x) 1"),
            HopfFailure::CounitNotAlgebraMap(i, j) => {
                write!(f, "eps(e_{i} e_{j}) != eps(e_{i})eps(e_{j})")
            }
            HopfFailure::CounitUnit => write!(f, "eps(1) != 1"),
            HopfFailure::AntipodeLeft(i) => {
                write!(f, "m(S (x) Id)Delta != unit*eps at e_{i}")
            }
            HopfFailure::AntipodeRight(i) => {
                write!(f, "m(Id (x) S)Delta != unit*eps at e_{i}")
            }
        }
    }
}

/// Convolution product `m((f (x) g)(Delta(e_i)))` for matrices `f`, `g`.
fn convolution(h: &HopfData, f: &Matrix, g: &Matrix, i: usize) -> Vec<CycScalar> {
    let d = h.dim();
    let mut out = vec![CycScalar::zero(); d];
    for (&(a, j, k), c) in h.comult.iter() {
        if a != i {
            continue;
        }
        let fj = f.apply(&unit_vector(d, j));
        let gk = g.apply(&unit_vector(d, k));
        let prod = h.alg.product(&fj, &gk);
        for (t, p) in prod.into_iter().enumerate() {
            if !p.is_zero() {
                out[t] = &out[t] + &(c * &p);
            }
        }
    }
    out
}

/// Itemized Hopf-axiom verification; empty list means valid.
pub fn check_hopf(h: &HopfData) -> Vec<HopfFailure> {
    check_hopf_with_parity(h, &vec![0; h.dim()])
}

/// Shared axiom verification; with a nonzero parity vector the tensor
/// square is multiplied with Koszul signs and the counit laws stay plain.
pub(crate) fn check_hopf_with_parity(h: &HopfData, parity: &[usize]) -> Vec<HopfFailure> {
    let mut failures: Vec<HopfFailure> = check_algebra(&h.alg)
        .into_iter()
        .map(HopfFailure::Algebra)
        .collect();
    let d = h.dim();
    let pa = PairAlgebra::with_parity(&h.alg, parity);
    let ta = TripleAlgebra::with_parity(&h.alg, parity);
    for i in 0..d {
        let e = unit_vector(d, i);
        let de = h.comult_of(&e);
        if ta.comult_left(&h.comult, &de) != ta.comult_right(&h.comult, &de) {
            failures.push(HopfFailure::Coassociativity(i));
        }
        if !vec_eq(&pa.counit_left(&h.counit, &de), &e) {
            failures.push(HopfFailure::CounitLeft(i));
        }
        if !vec_eq(&pa.counit_right(&h.counit, &de), &e) {
            failures.push(HopfFailure::CounitRight(i));
        }
    }
    // comultiplication and counit are algebra maps
    if h.comult_of(&h.alg.unit) != pa.one() {
        failures.push(HopfFailure::ComultUnit);
    }
    if !h.counit_of(&h.alg.unit).is_one() {
        failures.push(HopfFailure::CounitUnit);
    }
    for i in 0..d {
        let ei = unit_vector(d, i);
        let dei = h.comult_of(&ei);
        for j in 0..d {
            let ej = unit_vector(d, j);
            let prod = h.alg.basis_product(i, j);
            if h.comult_of(&prod) != pa.mult(&dei, &h.comult_of(&ej)) {
                failures.push(HopfFailure::ComultNotAlgebraMap(i, j));
            }
            if h.counit_of(&prod) != &h.counit[i] * &h.counit[j] {
                failures.push(HopfFailure::CounitNotAlgebraMap(i, j));
            }
        }
    }
    // antipode axiom
    let id = Matrix::identity(d);
    for i in 0..d {
        let target = crate::linalg::vec_scale(&h.alg.unit, &h.counit[i]);
        if !vec_eq(&convolution(h, &h.antipode, &id, i), &target) {
            failures.push(HopfFailure::AntipodeLeft(i));
        }
        if !vec_eq(&convolution(h, &id, &h.antipode, i), &target) {
            failures.push(HopfFailure::AntipodeRight(i));
        }
    }
    failures
}

use crate::algebra::check_algebra;

/// Dual Hopf algebra on the dual basis: all structure tensors transposed.
pub fn dual_hopf(h: &HopfData) -> HopfData {
    let d = h.dim();
    let mut mult = Tensor3::new((d, d, d));
    for (&(i, j, k), c) in h.comult.iter() {
        mult.set(j, k, i, c.clone());
    }
    let mut comult = Tensor3::new((d, d, d));
    for (&(i, j, k), c) in h.alg.mult.iter() {
        comult.set(k, i, j, c.clone());
    }
    HopfData {
        alg: AlgebraData::new(d, h.counit.clone(), mult),
        comult,
        counit: h.alg.unit.clone(),
        antipode: h.antipode.transpose(),
    }
}

/// Coradical of `H`: the annihilator of the radical of the dual algebra.
pub fn coradical(h: &HopfData) -> Subspace {
    let dual_rad = crate::algebra::radical(&dual_hopf(h).alg);
    if dual_rad.dim() == 0 {
        return Subspace::full(h.dim());
    }
    let m = Matrix::from_rows(dual_rad.basis().to_vec());
    Subspace::span(h.dim(), m.kernel())
}

/// All grouplike elements, found as characters of the dual algebra. The
/// completeness flag is inherited from the character search.
pub fn grouplikes(h: &HopfData) -> (Vec<Vec<CycScalar>>, bool) {
    let dual = dual_hopf(h);
    let (chars, complete) = crate::algebra::characters(&dual.alg);
    let gls: Vec<Vec<CycScalar>> = chars
        .into_iter()
        .filter(|g| h.is_grouplike(g))
        .collect();
    (gls, complete)
}

/// Solution space of `Delta(x) = x (x) g + h (x) x` for verified grouplikes
/// `g`, `h`.
pub fn skew_primitives(
    h: &HopfData,
    g: &[CycScalar],
    hh: &[CycScalar],
) -> Result<Subspace, ExactError> {
    for (name, v) in [("g", g), ("h", hh)] {
        if !h.is_grouplike(v) {
            return Err(ExactError::NotGrouplike {
                reason: format!("argument {name} is not grouplike"),
            });
        }
    }
    let d = h.dim();
    // rows indexed by (j,k), columns by i
    let mut m = Matrix::zero(d * d, d);
    for (&(i, j, k), c) in h.comult.iter() {
        let v = &*m.get(j * d + k, i) + c;
        m.set(j * d + k, i, v);
    }
    for j in 0..d {
        for k in 0..d {
            // subtract x_j g_k and h_j x_k
            let v = &*m.get(j * d + k, j) - &g[k];
            m.set(j * d + k, j, v);
            let v = &*m.get(j * d + k, k) - &hh[j];
            m.set(j * d + k, k, v);
        }
    }
    Ok(Subspace::span(d, m.kernel()))
}

/// Is `i` a Hopf ideal: two-sided ideal, `eps(I) = 0`, `S(I)` inside `I`,
/// and `Delta(I)` inside `I (x) H + H (x) I` (tested by projecting into the
/// quotient tensor square)?
pub fn is_hopf_ideal(h: &HopfData, ideal: &Subspace) -> Result<(), ExactError> {
    if let Err(index) = crate::algebra::is_ideal(&h.alg, ideal) {
        return Err(ExactError::NotAHopfIdeal {
            reason: format!("not a two-sided ideal at basis index {index}"),
        });
    }
    for (idx, v) in ideal.basis().iter().enumerate() {
        if !h.counit_of(v).is_zero() {
            return Err(ExactError::NotAHopfIdeal {
                reason: format!("counit does not vanish on basis index {idx}"),
            });
        }
        if !ideal.contains(&h.antipode.apply(v)) {
            return Err(ExactError::NotAHopfIdeal {
                reason: format!("antipode leaves the ideal at basis index {idx}"),
            });
        }
    }
    // Delta(I) must die in (H/I) (x) (H/I)
    let (_, projection) = crate::algebra::quotient_algebra(&h.alg, ideal)
        .expect("ideal already verified");
    for (idx, v) in ideal.basis().iter().enumerate() {
        let dv = h.comult_of(v);
        let projected = projection.mul(&dv.coeffs).mul(&projection.transpose());
        if !projected.is_zero() {
            return Err(ExactError::NotAHopfIdeal {
                reason: format!("Delta escapes I(x)H + H(x)I at basis index {idx}"),
            });
        }
    }
    Ok(())
}

/// Quotient Hopf algebra by a verified Hopf ideal, on the complement basis.
pub fn quotient_hopf(h: &HopfData, ideal: &Subspace) -> Result<HopfData, ExactError> {
    is_hopf_ideal(h, ideal)?;
    let (qalg, projection) = crate::algebra::quotient_algebra(&h.alg, ideal)?;
    let coords = ideal.complement_coords();
    let qd = qalg.dim;
    let mut comult = Tensor3::new((qd, qd, qd));
    for (qi, &ci) in coords.iter().enumerate() {
        let dv = h.comult_of(&unit_vector(h.dim(), ci));
        let projected = projection.mul(&dv.coeffs).mul(&projection.transpose());
        for j in 0..qd {
            for k in 0..qd {
                let c = projected.get(j, k);
                if !c.is_zero() {
                    comult.set(qi, j, k, c.clone());
                }
            }
        }
    }
    let counit: Vec<CycScalar> = coords
        .iter()
        .map(|&c| h.counit[c].clone())
        .collect();
    let antipode = Matrix::from_fn(qd, qd, |i, j| {
        let s = h.antipode.apply(&unit_vector(h.dim(), coords[j]));
        let p = projection.apply(&s);
        p[i].clone()
    });
    Ok(HopfData {
        alg: qalg,
        comult,
        counit,
        antipode,
    })
}

/// Smallest subspace containing the generators and 1 that is closed under
/// multiplication, the antipode, and comultiplication components.
pub fn sub_hopf_generated(h: &HopfData, gens: &[Vec<CycScalar>]) -> Subspace {
    let d = h.dim();
    let mut span = Subspace::span(d, {
        let mut vs = vec![h.alg.unit.clone()];
        vs.extend(gens.iter().cloned());
        vs
    });
    loop {
        let basis = span.basis().to_vec();
        let mut grew = false;
        for v in &basis {
            if span.insert(&h.antipode.apply(v)) {
                grew = true;
            }
            // tensor components of Delta(v)
            let dv = h.comult_of(v);
            for row in dv.row_vectors() {
                if !vec_is_zero(&row) && span.insert(&row) {
                    grew = true;
                }
            }
            for col in dv.col_vectors() {
                if !vec_is_zero(&col) && span.insert(&col) {
                    grew = true;
                }
            }
            for w in &basis {
                if span.insert(&h.alg.product(v, w)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return span;
        }
    }
}

/// Is the invertible matrix `m` (columns: images of `src` basis vectors) an
/// isomorphism of Hopf algebras `src -> dst`?
pub fn is_hopf_iso(src: &HopfData, dst: &HopfData, m: &Matrix) -> bool {
    let d = src.dim();
    if dst.dim() != d || m.inverse().is_none() {
        return false;
    }
    if !vec_eq(&m.apply(&src.alg.unit), &dst.alg.unit) {
        return false;
    }
    let pa = crate::tensor::PairAlgebra::plain(&dst.alg);
    for i in 0..d {
        let ei = unit_vector(d, i);
        let img = m.apply(&ei);
        for j in 0..d {
            let lhs = m.apply(&src.alg.basis_product(i, j));
            let rhs = dst.alg.product(&img, &m.apply(&unit_vector(d, j)));
            if !vec_eq(&lhs, &rhs) {
                return false;
            }
        }
        if pa.apply_pair_map(m, m, &src.comult_of(&ei)) != dst.comult_of(&img) {
            return false;
        }
        if src.counit_of(&ei) != dst.counit_of(&img) {
            return false;
        }
        if !vec_eq(&m.apply(&src.antipode.apply(&ei)), &dst.antipode.apply(&img)) {
            return false;
        }
    }
    true
}

/// Is `H` generated as an algebra by its grouplikes and all skew-primitives
/// between them? `Err(Indeterminate)` when the grouplike enumeration is
/// incomplete.
pub fn generated_by_grouplikes_and_skewprims(h: &HopfData) -> Result<bool, ExactError> {
    let (gls, complete) = grouplikes(h);
    if !complete {
        return Err(ExactError::Indeterminate {
            reason: "grouplike enumeration incomplete".into(),
        });
    }
    let mut gens: Vec<Vec<CycScalar>> = gls.clone();
    for g in &gls {
        for hh in &gls {
            let sp = skew_primitives(h, g, hh)?;
            gens.extend(sp.basis().iter().cloned());
        }
    }
    Ok(crate::algebra::subalgebra_generated(&h.alg, &gens).dim() == h.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::GroupTable;

    fn int(v: i64) -> CycScalar {
        CycScalar::from_int(v)
    }

    fn z2() -> HopfData {
        crate::superalg::group_algebra(&GroupTable::cyclic(2)).unwrap()
    }

    fn sweedler() -> HopfData {
        crate::triangular::sweedler(&CycScalar::zero()).hopf
    }

    #[test]
    fn group_algebra_passes() {
        assert!(check_hopf(&z2()).is_empty());
    }

    #[test]
    fn sweedler_passes() {
        assert!(check_hopf(&sweedler()).is_empty());
    }

    #[test]
    fn broken_antipode_is_reported() {
        let mut h = sweedler();
        h.antipode = Matrix::identity(4);
        assert!(check_hopf(&h)
            .iter()
            .any(|f| matches!(f, HopfFailure::AntipodeLeft(_) | HopfFailure::AntipodeRight(_))));
    }

    #[test]
    fn dual_of_dual_is_identity() {
        for h in [z2(), sweedler()] {
            assert_eq!(dual_hopf(&dual_hopf(&h)), h);
        }
    }

    #[test]
    fn dual_is_hopf() {
        for h in [z2(), sweedler()] {
            assert!(check_hopf(&dual_hopf(&h)).is_empty());
        }
    }

    #[test]
    fn dual_of_sweedler_has_coradical_dim_2() {
        let d = dual_hopf(&sweedler());
        assert_eq!(coradical(&d).dim(), 2);
    }

    #[test]
    fn coradical_of_group_algebra_is_everything() {
        assert_eq!(coradical(&z2()).dim(), 2);
    }

    #[test]
    fn coradical_of_sweedler() {
        // basis order 1, x, g, gx
        let c = coradical(&sweedler());
        assert_eq!(c.dim(), 2);
        assert!(c.contains(&unit_vector(4, 0)));
        assert!(c.contains(&unit_vector(4, 2)));
    }

    #[test]
    fn grouplikes_of_z2_and_sweedler() {
        let (g, complete) = grouplikes(&z2());
        assert!(complete);
        assert_eq!(g.len(), 2);
        let (g, complete) = grouplikes(&sweedler());
        assert!(complete);
        assert_eq!(g.len(), 2);
        assert!(g.contains(&unit_vector(4, 0)));
        assert!(g.contains(&unit_vector(4, 2)));
    }

    #[test]
    fn grouplikes_of_z4_over_q_zeta4() {
        let h = crate::superalg::group_algebra(&GroupTable::cyclic(4)).unwrap();
        let (g, complete) = grouplikes(&h);
        assert!(complete);
        assert_eq!(g.len(), 4);
        // group closure
        for a in &g {
            for b in &g {
                let p = h.alg.product(a, b);
                assert!(g.contains(&p));
            }
        }
    }

    #[test]
    fn skew_primitives_of_sweedler() {
        let h = sweedler();
        let one = unit_vector(4, 0);
        let g = unit_vector(4, 2);
        let sp = skew_primitives(&h, &one, &g).unwrap();
        assert_eq!(sp.dim(), 2);
        assert!(sp.contains(&unit_vector(4, 1)));
        let one_minus_g = crate::linalg::vec_sub(&one, &g);
        assert!(sp.contains(&one_minus_g));
        // non-grouplike rejected
        assert!(skew_primitives(&h, &unit_vector(4, 1), &g).is_err());
    }

    #[test]
    fn trivial_skew_primitives_of_z2() {
        let h = z2();
        let one = unit_vector(2, 0);
        let u = unit_vector(2, 1);
        let sp = skew_primitives(&h, &one, &u).unwrap();
        assert_eq!(sp.dim(), 1);
        assert!(sp.contains(&crate::linalg::vec_sub(&one, &u)));
    }

    #[test]
    fn hopf_ideal_checks() {
        let h = sweedler();
        assert!(is_hopf_ideal(&h, &Subspace::zero(4)).is_ok());
        let rad = crate::algebra::radical(&h.alg);
        assert!(is_hopf_ideal(&h, &rad).is_ok());
        // span{1} fails: counit does not vanish
        let s1 = Subspace::span(2, vec![unit_vector(2, 0)]);
        assert!(is_hopf_ideal(&z2(), &s1).is_err());
        // span{1-u} in C[Z_2] is a Hopf ideal
        let z = z2();
        let su = Subspace::span(
            2,
            vec![crate::linalg::vec_sub(&unit_vector(2, 0), &unit_vector(2, 1))],
        );
        assert!(is_hopf_ideal(&z, &su).is_ok());
    }

    #[test]
    fn quotient_of_sweedler_by_radical_is_z2() {
        let h = sweedler();
        let rad = crate::algebra::radical(&h.alg);
        let q = quotient_hopf(&h, &rad).unwrap();
        assert!(check_hopf(&q).is_empty());
        assert_eq!(q.dim(), 2);
        // complement coords of span{x, gx} are {0, 2} = {1, g}: the quotient
        // is the group algebra of Z_2 tensor-by-tensor
        assert_eq!(q, z2());
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let h = sweedler();
        assert_eq!(quotient_hopf(&h, &Subspace::zero(4)).unwrap(), h);
    }

    #[test]
    fn sub_hopf_generation() {
        let h = sweedler();
        assert_eq!(sub_hopf_generated(&h, &[]).dim(), 1);
        assert_eq!(sub_hopf_generated(&h, &[unit_vector(4, 2)]).dim(), 2);
        // Delta(x) drags g in, then everything
        assert_eq!(sub_hopf_generated(&h, &[unit_vector(4, 1)]).dim(), 4);
    }

    #[test]
    fn generation_predicate() {
        assert_eq!(generated_by_grouplikes_and_skewprims(&sweedler()).unwrap(), true);
        assert_eq!(generated_by_grouplikes_and_skewprims(&z2()).unwrap(), true);
    }

    #[test]
    fn antipode_inverts_grouplikes() {
        for h in [z2(), sweedler()] {
            let (gls, _) = grouplikes(&h);
            for g in &gls {
                let sg = h.antipode.apply(g);
                assert!(h.is_grouplike(&sg));
                assert!(vec_eq(&h.alg.product(g, &sg), &h.alg.unit));
            }
        }
    }

    #[test]
    fn coradical_contains_grouplike_span() {
        for h in [z2(), sweedler()] {
            let c = coradical(&h);
            let (gls, _) = grouplikes(&h);
            for g in &gls {
                assert!(c.contains(g));
            }
        }
    }

    #[test]
    fn counit_kills_one_minus_grouplike() {
        let h = sweedler();
        assert_eq!(h.counit_of(&unit_vector(4, 2)), int(1));
        assert_eq!(h.counit_of(&unit_vector(4, 1)), int(0));
    }
}

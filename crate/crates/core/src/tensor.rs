//! Elements and arithmetic of tensor squares and cubes of a
//! structure-constant algebra, with Koszul signs controlled by a parity
//! vector (all-even parities give the plain conventions).
//!
//! The pair ordering is fixed everywhere: `(i,j) -> i*dim + j` on squares
//! and `(i,j,k) -> (i*dim + j)*dim + k` on cubes.

use crate::algebra::AlgebraData;
use crate::error::ExactError;
use crate::linalg::Matrix;
use crate::scalar::CycScalar;

/// An element of `H (x) H` stored as its `dim x dim` coefficient matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairElement {
    pub dim: usize,
    pub coeffs: Matrix,
}

impl PairElement {
    pub fn zero(dim: usize) -> Self {
        PairElement {
            dim,
            coeffs: Matrix::zero(dim, dim),
        }
    }

    pub fn from_matrix(coeffs: Matrix) -> Self {
        assert_eq!(coeffs.rows(), coeffs.cols());
        PairElement {
            dim: coeffs.rows(),
            coeffs,
        }
    }

    /// Outer product `x (x) y`.
    pub fn outer(x: &[CycScalar], y: &[CycScalar]) -> Self {
        let dim = x.len();
        assert_eq!(dim, y.len());
        PairElement {
            dim,
            coeffs: Matrix::from_fn(dim, dim, |i, j| &x[i] * &y[j]),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &CycScalar {
        self.coeffs.get(i, j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycScalar) {
        self.coeffs.set(i, j, v);
    }

    pub fn add(&self, other: &Self) -> Self {
        PairElement::from_matrix(self.coeffs.add(&other.coeffs))
    }

    pub fn sub(&self, other: &Self) -> Self {
        PairElement::from_matrix(self.coeffs.sub(&other.coeffs))
    }

    pub fn neg(&self) -> Self {
        PairElement::from_matrix(self.coeffs.neg())
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        PairElement::from_matrix(self.coeffs.scale(s))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Flattened coordinates in the pair ordering.
    pub fn to_vec(&self) -> Vec<CycScalar> {
        let mut out = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.push(self.get(i, j).clone());
            }
        }
        out
    }

    pub fn from_vec(dim: usize, v: Vec<CycScalar>) -> Self {
        assert_eq!(v.len(), dim * dim);
        PairElement {
            dim,
            coeffs: Matrix::from_fn(dim, dim, |i, j| v[i * dim + j].clone()),
        }
    }

    /// Row span of the coefficient matrix: the left tensorands.
    pub fn row_vectors(&self) -> Vec<Vec<CycScalar>> {
        (0..self.dim).map(|i| self.coeffs.row(i)).collect()
    }

    /// Column span of the coefficient matrix: the right tensorands.
    pub fn col_vectors(&self) -> Vec<Vec<CycScalar>> {
        (0..self.dim).map(|j| self.coeffs.col(j)).collect()
    }
}

fn sign_of(p: usize) -> CycScalar {
    if p % 2 == 1 {
        CycScalar::from_int(-1)
    } else {
        CycScalar::one()
    }
}

/// The tensor-square algebra of `alg` with multiplication
/// `(a(x)b)(a'(x)b') = (-1)^{p(a')p(b)} aa' (x) bb'`.
pub struct PairAlgebra<'a> {
    pub alg: &'a AlgebraData,
    pub parity: Vec<usize>,
}

impl<'a> PairAlgebra<'a> {
    /// Plain (all-even) tensor-square algebra.
    pub fn plain(alg: &'a AlgebraData) -> Self {
        PairAlgebra {
            alg,
            parity: vec![0; alg.dim],
        }
    }

    pub fn with_parity(alg: &'a AlgebraData, parity: &[usize]) -> Self {
        assert_eq!(parity.len(), alg.dim);
        PairAlgebra {
            alg,
            parity: parity.to_vec(),
        }
    }

    pub fn one(&self) -> PairElement {
        PairElement::outer(&self.alg.unit, &self.alg.unit)
    }

    pub fn mult(&self, x: &PairElement, y: &PairElement) -> PairElement {
        let d = self.alg.dim;
        let mut out = PairElement::zero(d);
        for i in 0..d {
            for j in 0..d {
                let c1 = x.get(i, j);
                if c1.is_zero() {
                    continue;
                }
                for k in 0..d {
                    for l in 0..d {
                        let c2 = y.get(k, l);
                        if c2.is_zero() {
                            continue;
                        }
                        // sign from moving e_k (left of y) past e_j (right of x)
                        let mut c = c1 * c2;
                        if self.parity[k] * self.parity[j] % 2 == 1 {
                            c = -&c;
                        }
                        let left = self.alg.basis_product(i, k);
                        let right = self.alg.basis_product(j, l);
                        for (a, la) in left.iter().enumerate() {
                            if la.is_zero() {
                                continue;
                            }
                            for (b, rb) in right.iter().enumerate() {
                                if rb.is_zero() {
                                    continue;
                                }
                                let v = &*out.get(a, b) + &(&(&c * la) * rb);
                                out.set(a, b, v);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x` on the pair ordering.
    pub fn left_mult_operator(&self, x: &PairElement) -> Matrix {
        let d = self.alg.dim;
        let mut m = Matrix::zero(d * d, d * d);
        for k in 0..d {
            for l in 0..d {
                let mut basis = PairElement::zero(d);
                basis.set(k, l, CycScalar::one());
                let prod = self.mult(x, &basis);
                for a in 0..d {
                    for b in 0..d {
                        let v = prod.get(a, b);
                        if !v.is_zero() {
                            m.set(a * d + b, k * d + l, v.clone());
                        }
                    }
                }
            }
        }
        m
    }

    /// Two-sided inverse, by exact linear solve.
    pub fn inverse(&self, x: &PairElement) -> Result<PairElement, ExactError> {
        let d = self.alg.dim;
        let op = self.left_mult_operator(x);
        let one = self.one().to_vec();
        let sol = op.solve(&one).ok_or(ExactError::NotInvertible)?;
        let inv = PairElement::from_vec(d, sol);
        if self.mult(x, &inv) != self.one() || self.mult(&inv, x) != self.one() {
            return Err(ExactError::NotInvertible);
        }
        Ok(inv)
    }

    /// Power with nonnegative exponent.
    pub fn power(&self, x: &PairElement, e: usize) -> PairElement {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mult(&acc, x);
        }
        acc
    }

    /// The (Koszul-)flip `x_{21}`: `a(x)b -> (-1)^{p(a)p(b)} b(x)a`.
    pub fn flip(&self, x: &PairElement) -> PairElement {
        let d = self.dim();
        let mut out = PairElement::zero(d);
        for i in 0..d {
            for j in 0..d {
                let c = x.get(i, j);
                if !c.is_zero() {
                    out.set(j, i, &sign_of(self.parity[i] * self.parity[j]) * c);
                }
            }
        }
        out
    }

    /// The flip as a `d^2 x d^2` matrix; squares to the identity.
    pub fn flip_matrix(&self) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zero(d * d, d * d);
        for i in 0..d {
            for j in 0..d {
                m.set(j * d + i, i * d + j, sign_of(self.parity[i] * self.parity[j]));
            }
        }
        m
    }

    /// `Delta(a)` as a pair element, from a comultiplication tensor.
    pub fn comult_of(&self, comult: &crate::linalg::Tensor3, a: &[CycScalar]) -> PairElement {
        let d = self.dim();
        let mut out = PairElement::zero(d);
        for (&(i, j, k), c) in comult.iter() {
            if !a[i].is_zero() {
                let v = &*out.get(j, k) + &(&a[i] * c);
                out.set(j, k, v);
            }
        }
        out
    }

    /// `(eps (x) Id)` applied to a pair element.
    pub fn counit_left(&self, counit: &[CycScalar], x: &PairElement) -> Vec<CycScalar> {
        let d = self.dim();
        let mut out = vec![CycScalar::zero(); d];
        for i in 0..d {
            if counit[i].is_zero() {
                continue;
            }
            for j in 0..d {
                let c = x.get(i, j);
                if !c.is_zero() {
                    out[j] = &out[j] + &(&counit[i] * c);
                }
            }
        }
        out
    }

    /// `(Id (x) eps)` applied to a pair element.
    pub fn counit_right(&self, counit: &[CycScalar], x: &PairElement) -> Vec<CycScalar> {
        let d = self.dim();
        let mut out = vec![CycScalar::zero(); d];
        for j in 0..d {
            if counit[j].is_zero() {
                continue;
            }
            for i in 0..d {
                let c = x.get(i, j);
                if !c.is_zero() {
                    out[i] = &out[i] + &(&counit[j] * c);
                }
            }
        }
        out
    }

    /// Apply `f (x) g` entrywise (no signs: both maps are even in use).
    pub fn apply_pair_map(&self, f: &Matrix, g: &Matrix, x: &PairElement) -> PairElement {
        PairElement::from_matrix(f.mul(&x.coeffs).mul(&g.transpose()))
    }

    pub fn dim(&self) -> usize {
        self.alg.dim
    }
}

/// An element of `H (x) H (x) H` in the cube ordering.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TripleElement {
    pub dim: usize,
    pub coeffs: Vec<CycScalar>,
}

impl TripleElement {
    pub fn zero(dim: usize) -> Self {
        TripleElement {
            dim,
            coeffs: vec![CycScalar::zero(); dim * dim * dim],
        }
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &CycScalar {
        &self.coeffs[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: CycScalar) {
        let idx = self.idx(i, j, k);
        self.coeffs[idx] = v;
    }

    pub fn sub(&self, other: &Self) -> Self {
        TripleElement {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(other.coeffs.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Tensor-cube algebra with Koszul signs.
pub struct TripleAlgebra<'a> {
    pub alg: &'a AlgebraData,
    pub parity: Vec<usize>,
}

impl<'a> TripleAlgebra<'a> {
    pub fn plain(alg: &'a AlgebraData) -> Self {
        TripleAlgebra {
            alg,
            parity: vec![0; alg.dim],
        }
    }

    pub fn with_parity(alg: &'a AlgebraData, parity: &[usize]) -> Self {
        assert_eq!(parity.len(), alg.dim);
        TripleAlgebra {
            alg,
            parity: parity.to_vec(),
        }
    }

    fn dim(&self) -> usize {
        self.alg.dim
    }

    pub fn mult(&self, x: &TripleElement, y: &TripleElement) -> TripleElement {
        let d = self.dim();
        let mut out = TripleElement::zero(d);
        for i1 in 0..d {
            for j1 in 0..d {
                for k1 in 0..d {
                    let c1 = x.get(i1, j1, k1);
                    if c1.is_zero() {
                        continue;
                    }
                    for i2 in 0..d {
                        for j2 in 0..d {
                            for k2 in 0..d {
                                let c2 = y.get(i2, j2, k2);
                                if c2.is_zero() {
                                    continue;
                                }
                                // (a(x)b(x)c)(a'(x)b'(x)c'):
                                // a' crosses b,c; b' crosses c
                                let exp = self.parity[i2] * (self.parity[j1] + self.parity[k1])
                                    + self.parity[j2] * self.parity[k1];
                                let mut c = c1 * c2;
                                if exp % 2 == 1 {
                                    c = -&c;
                                }
                                let p1 = self.alg.basis_product(i1, i2);
                                let p2 = self.alg.basis_product(j1, j2);
                                let p3 = self.alg.basis_product(k1, k2);
                                for (a, ca) in p1.iter().enumerate() {
                                    if ca.is_zero() {
                                        continue;
                                    }
                                    for (b, cb) in p2.iter().enumerate() {
                                        if cb.is_zero() {
                                            continue;
                                        }
                                        for (e, ce) in p3.iter().enumerate() {
                                            if ce.is_zero() {
                                                continue;
                                            }
                                            let v = &*out.get(a, b, e)
                                                + &(&(&(&c * ca) * cb) * ce);
                                            out.set(a, b, e, v);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `x (x) 1` in positions 1,2.
    pub fn embed12(&self, x: &PairElement) -> TripleElement {
        let d = self.dim();
        let mut out = TripleElement::zero(d);
        for i in 0..d {
            for j in 0..d {
                let c = x.get(i, j);
                if c.is_zero() {
                    continue;
                }
                for (m, um) in self.alg.unit.iter().enumerate() {
                    if !um.is_zero() {
                        let v = &*out.get(i, j, m) + &(c * um);
                        out.set(i, j, m, v);
                    }
                }
            }
        }
        out
    }

    /// Unit in the middle slot.
    pub fn embed13(&self, x: &PairElement) -> TripleElement {
        let d = self.dim();
        let mut out = TripleElement::zero(d);
        for i in 0..d {
            for j in 0..d {
                let c = x.get(i, j);
                if c.is_zero() {
                    continue;
                }
                for (m, um) in self.alg.unit.iter().enumerate() {
                    if !um.is_zero() {
                        let v = &*out.get(i, m, j) + &(c * um);
                        out.set(i, m, j, v);
                    }
                }
            }
        }
        out
    }

    /// Unit in the first slot.
    pub fn embed23(&self, x: &PairElement) -> TripleElement {
        let d = self.dim();
        let mut out = TripleElement::zero(d);
        for i in 0..d {
            for j in 0..d {
                let c = x.get(i, j);
                if c.is_zero() {
                    continue;
                }
                for (m, um) in self.alg.unit.iter().enumerate() {
                    if !um.is_zero() {
                        let v = &*out.get(m, i, j) + &(c * um);
                        out.set(m, i, j, v);
                    }
                }
            }
        }
        out
    }

    /// `(Delta (x) Id)` applied to a pair element.
    pub fn comult_left(&self, comult: &crate::linalg::Tensor3, x: &PairElement) -> TripleElement {
        let d = self.dim();
        let mut out = TripleElement::zero(d);
        for i in 0..d {
            for k in 0..d {
                let c = x.get(i, k);
                if c.is_zero() {
                    continue;
                }
                for (&(a, j1, j2), dc) in comult.iter() {
                    if a == i {
                        let v = &*out.get(j1, j2, k) + &(c * dc);
                        out.set(j1, j2, k, v);
                    }
                }
            }
        }
        out
    }

    /// `(Id (x) Delta)` applied to a pair element.
    pub fn comult_right(&self, comult: &crate::linalg::Tensor3, x: &PairElement) -> TripleElement {
        let d = self.dim();
        let mut out = TripleElement::zero(d);
        for i in 0..d {
            for k in 0..d {
                let c = x.get(i, k);
                if c.is_zero() {
                    continue;
                }
                for (&(a, j1, j2), dc) in comult.iter() {
                    if a == k {
                        let v = &*out.get(i, j1, j2) + &(c * dc);
                        out.set(i, j1, j2, v);
                    }
                }
            }
        }
        out
    }
}

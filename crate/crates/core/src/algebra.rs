//! Finite-dimensional associative unital algebras given by structure
//! constants: axiom checks, Jacobson radical via the trace form of the left
//! regular representation, quotients by two-sided ideals, generated
//! subalgebras, and one-dimensional characters.

use crate::error::ExactError;
use crate::linalg::{unit_vector, vec_is_zero, Matrix, Subspace, Tensor3};
use crate::scalar::CycScalar;

/// An algebra `e_i e_j = sum_k mult[(i,j,k)] e_k` with a distinguished unit
/// vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraData {
    pub dim: usize,
    pub unit: Vec<CycScalar>,
    pub mult: Tensor3,
}

/// One failed identity from `check_algebra`.
#[derive(Clone, Debug)]
pub enum AlgebraFailure {
    /// `(e_i e_j) e_k != e_i (e_j e_k)`
    Associativity(usize, usize, usize),
    /// `unit * e_i != e_i` or `e_i * unit != e_i`
    Unit(usize),
}

impl std::fmt::Display for AlgebraFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraFailure::Associativity(i, j, k) => {
                write!(f, "associativity fails at (e_{i}, e_{j}, e_{k})")
            }
            AlgebraFailure::Unit(i) => write!(f, "unit law fails at e_{i}"),
        }
    }
}

impl AlgebraData {
    pub fn new(dim: usize, unit: Vec<CycScalar>, mult: Tensor3) -> Self {
        assert_eq!(unit.len(), dim);
        assert_eq!(mult.dims(), (dim, dim, dim));
        AlgebraData { dim, unit, mult }
    }

    /// Product of basis elements as a coefficient vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<CycScalar> {
        let mut out = vec![CycScalar::zero(); self.dim];
        for (&(a, b, k), c) in self.mult.iter() {
            if a == i && b == j {
                out[k] = c.clone();
            }
        }
        out
    }

    /// Product of arbitrary elements.
    pub fn product(&self, x: &[CycScalar], y: &[CycScalar]) -> Vec<CycScalar> {
        let mut out = vec![CycScalar::zero(); self.dim];
        for (&(i, j, k), c) in self.mult.iter() {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            out[k] = &out[k] + &(&(&x[i] * &y[j]) * c);
        }
        out
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_mult(&self, x: &[CycScalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for (&(i, j, k), c) in self.mult.iter() {
            if !x[i].is_zero() {
                let v = &*m.get(k, j) + &(&x[i] * c);
                m.set(k, j, v);
            }
        }
        m
    }

    /// Matrix of right multiplication by `x`.
    pub fn right_mult(&self, x: &[CycScalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for (&(i, j, k), c) in self.mult.iter() {
            if !x[j].is_zero() {
                let v = &*m.get(k, i) + &(&x[j] * c);
                m.set(k, i, v);
            }
        }
        m
    }

    /// Power of an element.
    pub fn power(&self, x: &[CycScalar], e: usize) -> Vec<CycScalar> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.product(&acc, x);
        }
        acc
    }
}

/// List every failed associativity or unit identity; empty means valid.
pub fn check_algebra(a: &AlgebraData) -> Vec<AlgebraFailure> {
    let mut failures = Vec::new();
    for i in 0..a.dim {
        let e = unit_vector(a.dim, i);
        let lu = a.product(&a.unit, &e);
        let ru = a.product(&e, &a.unit);
        if lu != e || ru != e {
            failures.push(AlgebraFailure::Unit(i));
        }
    }
    for i in 0..a.dim {
        let ei = unit_vector(a.dim, i);
        for j in 0..a.dim {
            let ej = unit_vector(a.dim, j);
            let ij = a.product(&ei, &ej);
            for k in 0..a.dim {
                let ek = unit_vector(a.dim, k);
                let lhs = a.product(&ij, &ek);
                let rhs = a.product(&ei, &a.product(&ej, &ek));
                if lhs != rhs {
                    failures.push(AlgebraFailure::Associativity(i, j, k));
                }
            }
        }
    }
    failures
}

/// Jacobson radical in characteristic zero: the kernel of the trace form
/// `T(x,y) = tr(L_x L_y)` of the left regular representation.
pub fn radical(a: &AlgebraData) -> Subspace {
    let left_mults: Vec<Matrix> = (0..a.dim)
        .map(|i| a.left_mult(&unit_vector(a.dim, i)))
        .collect();
    let gram = Matrix::from_fn(a.dim, a.dim, |i, j| left_mults[i].mul(&left_mults[j]).trace());
    Subspace::span(a.dim, gram.kernel())
}

/// Is `i` a two-sided ideal of `a`? Returns the index of a violating basis
/// vector on failure.
pub fn is_ideal(a: &AlgebraData, i: &Subspace) -> Result<(), usize> {
    for (idx, v) in i.basis().iter().enumerate() {
        for b in 0..a.dim {
            let e = unit_vector(a.dim, b);
            if !i.contains(&a.product(&e, v)) || !i.contains(&a.product(v, &e)) {
                return Err(idx);
            }
        }
    }
    Ok(())
}

/// Quotient algebra `a / ideal` on the complement-coordinate basis, together
/// with the projection matrix (an algebra map).
pub fn quotient_algebra(
    a: &AlgebraData,
    ideal: &Subspace,
) -> Result<(AlgebraData, Matrix), ExactError> {
    if let Err(index) = is_ideal(a, ideal) {
        return Err(ExactError::NotAnIdeal { index });
    }
    let coords = ideal.complement_coords();
    let qdim = coords.len();
    // projection: reduce modulo the ideal, read complement coordinates
    let project = |v: &[CycScalar]| -> Vec<CycScalar> {
        let r = ideal.reduce(v);
        coords.iter().map(|&c| r[c].clone()).collect()
    };
    let mut mult = Tensor3::new((qdim, qdim, qdim));
    for (qi, &ci) in coords.iter().enumerate() {
        for (qj, &cj) in coords.iter().enumerate() {
            let prod = project(&a.basis_product(ci, cj));
            for (qk, c) in prod.into_iter().enumerate() {
                if !c.is_zero() {
                    mult.set(qi, qj, qk, c);
                }
            }
        }
    }
    let unit = project(&a.unit);
    let projection = Matrix::from_fn(qdim, a.dim, |qi, j| {
        let col = project(&unit_vector(a.dim, j));
        col[qi].clone()
    });
    Ok((AlgebraData::new(qdim, unit, mult), projection))
}

/// Smallest unital subalgebra containing the generators, by span closure
/// under multiplication.
pub fn subalgebra_generated(a: &AlgebraData, gens: &[Vec<CycScalar>]) -> Subspace {
    let mut span = Subspace::span(a.dim, {
        let mut vs = vec![a.unit.clone()];
        vs.extend(gens.iter().cloned());
        vs
    });
    loop {
        let basis = span.basis().to_vec();
        let mut grew = false;
        for x in &basis {
            for y in &basis {
                if span.insert(&a.product(x, y)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return span;
        }
    }
}

/// Characters (one-dimensional representations) of `a`, with a completeness
/// flag. The flag is false when a factor of degree >= 2 resisted the
/// limited splitting (linear-over-the-field and root-of-unity roots only).
pub fn characters(a: &AlgebraData) -> (Vec<Vec<CycScalar>>, bool) {
    // characters kill the radical and all commutators
    let rad = radical(a);
    let mut ideal_gens: Vec<Vec<CycScalar>> = rad.basis().to_vec();
    for i in 0..a.dim {
        for j in 0..a.dim {
            let ei = unit_vector(a.dim, i);
            let ej = unit_vector(a.dim, j);
            let comm = crate::linalg::vec_sub(&a.product(&ei, &ej), &a.product(&ej, &ei));
            if !vec_is_zero(&comm) {
                ideal_gens.push(comm);
            }
        }
    }
    // close to a two-sided ideal
    let mut ideal = Subspace::span(a.dim, ideal_gens);
    loop {
        let basis = ideal.basis().to_vec();
        let mut grew = false;
        for v in &basis {
            for b in 0..a.dim {
                let e = unit_vector(a.dim, b);
                if ideal.insert(&a.product(&e, v)) {
                    grew = true;
                }
                if ideal.insert(&a.product(v, &e)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    if ideal.dim() == a.dim {
        // zero algebra quotient: no characters (cannot happen for unital
        // algebras unless dim 0)
        return (Vec::new(), true);
    }
    let (quot, projection) = quotient_algebra(a, &ideal).expect("closed ideal");

    // split the commutative semisimple quotient into one-dimensional blocks
    let mut complete = true;
    let mut blocks: Vec<Subspace> = vec![Subspace::full(quot.dim)];
    for g in 0..quot.dim {
        let m = quot.left_mult(&unit_vector(quot.dim, g));
        let mut next = Vec::new();
        for block in blocks {
            if block.dim() <= 1 {
                next.push(block);
                continue;
            }
            next.extend(split_block(&quot, &m, &block, &mut complete));
        }
        blocks = next;
    }

    let mut chars = Vec::new();
    for block in &blocks {
        if block.dim() != 1 {
            complete = false;
            continue;
        }
        // the block is a common eigenvector of all multiplication operators;
        // the eigenvalues are the character values on the quotient
        let v = &block.basis()[0];
        let mut chi_q = Vec::with_capacity(quot.dim);
        let mut ok = true;
        for g in 0..quot.dim {
            let m = quot.left_mult(&unit_vector(quot.dim, g));
            let mv = m.apply(v);
            match eigenvalue_of(v, &mv) {
                Some(lambda) => chi_q.push(lambda),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            complete = false;
            continue;
        }
        // pull back through the projection: chi(e_j) = chi_q(projection e_j)
        let chi: Vec<CycScalar> = (0..a.dim)
            .map(|j| {
                let col = projection.col(j);
                let mut acc = CycScalar::zero();
                for (g, c) in col.iter().enumerate() {
                    if !c.is_zero() {
                        acc = &acc + &(c * &chi_q[g]);
                    }
                }
                acc
            })
            .collect();
        chars.push(chi);
    }
    // verify each character is an algebra map (guards the splitting logic)
    chars.retain(|chi| {
        let unit_val: CycScalar = a
            .unit
            .iter()
            .enumerate()
            .fold(CycScalar::zero(), |acc, (i, c)| &acc + &(c * &chi[i]));
        if !unit_val.is_one() {
            return false;
        }
        for i in 0..a.dim {
            for j in 0..a.dim {
                let prod = a.basis_product(i, j);
                let lhs: CycScalar = prod
                    .iter()
                    .enumerate()
                    .fold(CycScalar::zero(), |acc, (k, c)| &acc + &(c * &chi[k]));
                if lhs != &chi[i] * &chi[j] {
                    return false;
                }
            }
        }
        true
    });
    chars.sort_by_key(character_sort_key);
    chars.dedup();
    (chars, complete)
}

/// Deterministic ordering of character vectors by printable form.
fn character_sort_key(chi: &Vec<CycScalar>) -> String {
    chi.iter().map(|c| format!("{c};")).collect()
}

/// `mv = lambda * v` for some scalar lambda?
fn eigenvalue_of(v: &[CycScalar], mv: &[CycScalar]) -> Option<CycScalar> {
    let pivot = v.iter().position(|x| !x.is_zero())?;
    let lambda = &mv[pivot] * &v[pivot].inv().ok()?;
    let scaled = crate::linalg::vec_scale(v, &lambda);
    if crate::linalg::vec_eq(&scaled, mv) {
        Some(lambda)
    } else {
        None
    }
}

/// Split an invariant block along eigenvalues of `m`, searching roots of the
/// restricted minimal polynomial among rationals and roots of unity.
fn split_block(
    quot: &AlgebraData,
    m: &Matrix,
    block: &Subspace,
    complete: &mut bool,
) -> Vec<Subspace> {
    let basis = block.basis().to_vec();
    let k = basis.len();
    // restrict m to the block: m * b_i expressed in block coordinates
    let basis_mat = Matrix::from_rows(basis.clone()).transpose(); // ambient x k
    let mut restricted = Matrix::zero(k, k);
    for (i, b) in basis.iter().enumerate() {
        let mb = m.apply(b);
        // solve basis_mat * x = mb
        let Some(x) = basis_mat.solve(&mb) else {
            // not invariant; should not happen, treat as unsplittable
            *complete = false;
            return vec![block.clone()];
        };
        for (j, c) in x.into_iter().enumerate() {
            restricted.set(j, i, c);
        }
    }
    let roots = matrix_eigenvalues_limited(&restricted, quot_field_order(quot), complete);
    if roots.is_empty() {
        *complete = false;
        return vec![block.clone()];
    }
    let mut out = Vec::new();
    let mut covered = 0;
    for lambda in &roots {
        // kernel of (restricted - lambda I) in block coordinates
        let shifted = restricted.sub(&Matrix::identity(k).scale(lambda));
        let ker = shifted.kernel();
        if ker.is_empty() {
            continue;
        }
        covered += ker.len();
        // map back to ambient coordinates
        let vecs: Vec<Vec<CycScalar>> = ker
            .iter()
            .map(|x| {
                let mut v = vec![CycScalar::zero(); block.ambient()];
                for (i, c) in x.iter().enumerate() {
                    if !c.is_zero() {
                        v = crate::linalg::vec_add(&v, &crate::linalg::vec_scale(&basis[i], c));
                    }
                }
                v
            })
            .collect();
        out.push(Subspace::span(block.ambient(), vecs));
    }
    if covered < k {
        // eigenvectors do not exhaust the block (unsplit factor remains)
        *complete = false;
        if out.is_empty() {
            return vec![block.clone()];
        }
    }
    out
}

/// The cyclotomic order the algebra's scalars live in (max over tensors).
fn quot_field_order(a: &AlgebraData) -> u64 {
    let mut n = 1u64;
    for c in &a.unit {
        n = num_integer::lcm(n, c.order());
    }
    for (_, c) in a.mult.iter() {
        n = num_integer::lcm(n, c.order());
    }
    n
}

/// Eigenvalues of an exact matrix found by the limited root search: rational
/// roots of the characteristic polynomial (via its rational restriction) and
/// roots of unity `q * zeta^j` candidates with `q = +-1`.
fn matrix_eigenvalues_limited(m: &Matrix, order: u64, complete: &mut bool) -> Vec<CycScalar> {
    let k = m.rows();
    // candidate eigenvalues: rational roots of det(xI - M) when the
    // characteristic polynomial is rational, plus root-of-unity multiples.
    let mut candidates: Vec<CycScalar> = Vec::new();
    let n = num_integer::lcm(order, 1);
    for j in 0..n {
        candidates.push(CycScalar::zeta_pow(n, j));
        candidates.push(-&CycScalar::zeta_pow(n, j));
    }
    // rational candidates from the characteristic polynomial when it has
    // rational coefficients
    if let Some(charpoly) = crate::catdim::charpoly_rational(m) {
        for r in crate::catdim::rational_roots(&charpoly) {
            candidates.push(CycScalar::from_rational(r));
        }
    }
    let mut found = Vec::new();
    let mut total = 0usize;
    for lambda in candidates {
        if found.contains(&lambda) {
            continue;
        }
        let shifted = m.sub(&Matrix::identity(k).scale(&lambda));
        let kdim = shifted.kernel().len();
        if kdim > 0 {
            total += kdim;
            found.push(lambda);
        }
        if total == k {
            break;
        }
    }
    if total < k {
        *complete = false;
    }
    found
}

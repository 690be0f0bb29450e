//! Hopf superalgebras: parity bookkeeping, super-axiom verification, and
//! the standard constructors (group algebras, exterior algebras, supergroup
//! algebras, Yetter-Drinfeld biproducts) together with the decomposition of
//! cocommutative super Hopf algebras back into supergroup data.

use crate::algebra::AlgebraData;
use crate::error::ExactError;
use crate::hopf::{check_hopf_with_parity, HopfData, HopfFailure};
use crate::linalg::{unit_vector, Matrix, Subspace, Tensor3};
use crate::scalar::CycScalar;
use crate::tensor::{PairAlgebra, PairElement};

/// A finite group by its Cayley table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupTable {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub identity: usize,
}

impl GroupTable {
    /// Build from a Cayley table, validating the group axioms.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, ExactError> {
        let order = table.len();
        let bad = |reason: &str| ExactError::InvalidGroupTable {
            reason: reason.into(),
        };
        if order == 0 {
            return Err(bad("empty table"));
        }
        for row in &table {
            if row.len() != order || row.iter().any(|&v| v >= order) {
                return Err(bad("table entries out of range"));
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|i| table[e][i] == i && table[i][e] == i))
            .ok_or_else(|| bad("no identity element"))?;
        let mut inverse = vec![usize::MAX; order];
        for i in 0..order {
            let inv = (0..order)
                .find(|&j| table[i][j] == identity && table[j][i] == identity)
                .ok_or_else(|| bad("missing inverse"))?;
            inverse[i] = inv;
        }
        for i in 0..order {
            for j in 0..order {
                for k in 0..order {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(bad("table is not associative"));
                    }
                }
            }
        }
        Ok(GroupTable {
            order,
            table,
            inverse,
            identity,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        GroupTable::new(table).expect("cyclic table is a group")
    }

    /// Direct product; index `(a, b) -> a * other.order + b`.
    pub fn product(&self, other: &GroupTable) -> Self {
        let n = self.order * other.order;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let (a1, b1) = (x / other.order, x % other.order);
                        let (a2, b2) = (y / other.order, y % other.order);
                        self.table[a1][a2] * other.order + other.table[b1][b2]
                    })
                    .collect()
            })
            .collect();
        GroupTable::new(table).expect("product table is a group")
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (0..self.order).all(|j| self.table[i][j] == self.table[j][i]))
    }
}

/// A Hopf superalgebra: ordinary-shaped structure tensors plus a parity
/// vector over the homogeneous basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperHopfData {
    pub hopf: HopfData,
    pub parity: Vec<usize>,
}

impl SuperHopfData {
    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    /// Purely even wrapper around an ordinary Hopf algebra.
    pub fn even(hopf: HopfData) -> Self {
        let parity = vec![0; hopf.dim()];
        SuperHopfData { hopf, parity }
    }

    pub fn is_even_element(&self, x: &[CycScalar]) -> bool {
        x.iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || self.parity[i] == 0)
    }

    pub fn is_odd_element(&self, x: &[CycScalar]) -> bool {
        x.iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || self.parity[i] == 1)
    }

    pub fn pair_algebra(&self) -> PairAlgebra<'_> {
        PairAlgebra::with_parity(&self.hopf.alg, &self.parity)
    }
}

/// One failed super-Hopf axiom.
#[derive(Clone, Debug)]
pub enum SuperFailure {
    Hopf(HopfFailure),
    UnitNotEven,
    MultNotHomogeneous(usize, usize),
    ComultNotEven(usize),
    CounitNotEven(usize),
    AntipodeNotEven(usize),
}

impl std::fmt::Display for SuperFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SuperFailure::Hopf(h) => write!(f, "{h}"),
            SuperFailure::UnitNotEven => write!(f, "unit is not even"),
            SuperFailure::MultNotHomogeneous(i, j) => {
                write!(f, "e_{i} e_{j} is not parity-homogeneous")
            }
            SuperFailure::ComultNotEven(i) => write!(f, "Delta(e_{i}) is not even"),
            SuperFailure::CounitNotEven(i) => write!(f, "eps(e_{i}) != 0 for odd e_{i}"),
            SuperFailure::AntipodeNotEven(i) => {
                write!(f, "S(e_{i}) does not preserve parity")
            }
        }
    }
}

/// The multiplication of `H (x) H` with Koszul signs, as an algebra on the
/// pair-ordered basis. Errors when a structure constant mixes parities.
pub fn super_tensor_square_mult(a: &SuperHopfData) -> Result<AlgebraData, ExactError> {
    check_mult_homogeneous(a)?;
    let d = a.dim();
    let pa = a.pair_algebra();
    let mut mult = Tensor3::new((d * d, d * d, d * d));
    for i1 in 0..d {
        for j1 in 0..d {
            let mut x = PairElement::zero(d);
            x.set(i1, j1, CycScalar::one());
            for i2 in 0..d {
                for j2 in 0..d {
                    let mut y = PairElement::zero(d);
                    y.set(i2, j2, CycScalar::one());
                    let prod = pa.mult(&x, &y);
                    for a1 in 0..d {
                        for b1 in 0..d {
                            let c = prod.get(a1, b1);
                            if !c.is_zero() {
                                mult.set(i1 * d + j1, i2 * d + j2, a1 * d + b1, c.clone());
                            }
                        }
                    }
                }
            }
        }
    }
    let unit = pa.one().to_vec();
    Ok(AlgebraData::new(d * d, unit, mult))
}

fn check_mult_homogeneous(a: &SuperHopfData) -> Result<(), ExactError> {
    for (&(i, j, k), c) in a.hopf.alg.mult.iter() {
        if !c.is_zero() && (a.parity[i] + a.parity[j]) % 2 != a.parity[k] % 2 {
            return Err(ExactError::precondition(format!(
                "structure constant e_{i} e_{j} -> e_{k} is not parity-homogeneous"
            )));
        }
    }
    Ok(())
}

/// The signed flip `beta(v (x) w) = (-1)^{p(v)p(w)} w (x) v` as a matrix on
/// the pair ordering.
pub fn koszul_flip(a: &SuperHopfData) -> Matrix {
    a.pair_algebra().flip_matrix()
}

/// Itemized super-Hopf verification: parity evenness of every structure
/// map, then the Hopf axioms with Koszul-signed tensor-square products.
pub fn check_super_hopf(a: &SuperHopfData) -> Vec<SuperFailure> {
    let mut failures = Vec::new();
    let d = a.dim();
    if !a.is_even_element(&a.hopf.alg.unit) {
        failures.push(SuperFailure::UnitNotEven);
    }
    // multiplication homogeneity
    let mut seen = std::collections::BTreeSet::new();
    for (&(i, j, k), c) in a.hopf.alg.mult.iter() {
        if !c.is_zero()
            && (a.parity[i] + a.parity[j]) % 2 != a.parity[k] % 2
            && seen.insert((i, j))
        {
            failures.push(SuperFailure::MultNotHomogeneous(i, j));
        }
    }
    // comultiplication evenness: components of Delta(e_i) have total parity
    // p(i)
    for (&(i, j, k), c) in a.hopf.comult.iter() {
        if !c.is_zero() && (a.parity[j] + a.parity[k]) % 2 != a.parity[i] % 2 {
            failures.push(SuperFailure::ComultNotEven(i));
        }
    }
    for i in 0..d {
        if a.parity[i] == 1 && !a.hopf.counit[i].is_zero() {
            failures.push(SuperFailure::CounitNotEven(i));
        }
        let s = a.hopf.antipode.apply(&unit_vector(d, i));
        let ok = if a.parity[i] == 0 {
            a.is_even_element(&s)
        } else {
            a.is_odd_element(&s)
        };
        if !ok {
            failures.push(SuperFailure::AntipodeNotEven(i));
        }
    }
    failures.extend(
        check_hopf_with_parity(&a.hopf, &a.parity)
            .into_iter()
            .map(SuperFailure::Hopf),
    );
    failures
}

/// Is the comultiplication invariant under the signed flip?
pub fn cocommutative_check(a: &SuperHopfData) -> bool {
    let pa = a.pair_algebra();
    (0..a.dim()).all(|i| {
        let dv = a.hopf.comult_of(&unit_vector(a.dim(), i));
        pa.flip(&dv) == dv
    })
}

/// Group algebra: basis = group elements, every element grouplike.
pub fn group_algebra(g: &GroupTable) -> Result<HopfData, ExactError> {
    // the table was validated at construction; re-derive to be safe with
    // hand-built values
    let g = GroupTable::new(g.table.clone())?;
    let d = g.order;
    let mut mult = Tensor3::new((d, d, d));
    let mut comult = Tensor3::new((d, d, d));
    let mut antipode = Matrix::zero(d, d);
    for i in 0..d {
        for j in 0..d {
            mult.set(i, j, g.mul(i, j), CycScalar::one());
        }
        comult.set(i, i, i, CycScalar::one());
        antipode.set(g.inv(i), i, CycScalar::one());
    }
    Ok(HopfData {
        alg: AlgebraData::new(d, unit_vector(d, g.identity), mult),
        comult,
        counit: vec![CycScalar::one(); d],
        antipode,
    })
}

// ---- exterior algebra on bitmask monomials ----

/// Sign of concatenating `x_S x_T` into the sorted monomial `x_{S u T}`:
/// `(-1)^{#{(s,t) in S x T : s > t}}`.
fn merge_sign(s: usize, t: usize) -> i64 {
    let mut inversions = 0;
    let mut sbits = s;
    while sbits != 0 {
        let i = sbits.trailing_zeros() as usize;
        sbits &= sbits - 1;
        // elements of t smaller than i
        inversions += (t & ((1usize << i) - 1)).count_ones();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn popcount(mask: usize) -> usize {
    mask.count_ones() as usize
}

/// Exterior Hopf superalgebra on `n` odd primitive generators; basis is the
/// `2^n` monomials indexed by bitmask.
pub fn exterior_hopf(n: usize) -> SuperHopfData {
    let d = 1usize << n;
    let mut mult = Tensor3::new((d, d, d));
    for s in 0..d {
        for t in 0..d {
            if s & t == 0 {
                mult.set(s, t, s | t, CycScalar::from_int(merge_sign(s, t)));
            }
        }
    }
    let alg = AlgebraData::new(d, unit_vector(d, 0), mult);
    let parity: Vec<usize> = (0..d).map(popcount).map(|c| c % 2).collect();
    // Delta(x_S) = product over i in S (ascending) of x_i (x) 1 + 1 (x) x_i
    let pa = PairAlgebra::with_parity(&alg, &parity);
    let mut comult = Tensor3::new((d, d, d));
    for s in 0..d {
        let mut acc = pa.one();
        for i in 0..n {
            if s & (1 << i) != 0 {
                let xi = unit_vector(d, 1 << i);
                let one = unit_vector(d, 0);
                let prim = PairElement::outer(&xi, &one).add(&PairElement::outer(&one, &xi));
                acc = pa.mult(&acc, &prim);
            }
        }
        for j in 0..d {
            for k in 0..d {
                let c = acc.get(j, k);
                if !c.is_zero() {
                    comult.set(s, j, k, c.clone());
                }
            }
        }
    }
    let mut counit = vec![CycScalar::zero(); d];
    counit[0] = CycScalar::one();
    let mut antipode = Matrix::zero(d, d);
    for s in 0..d {
        antipode.set(s, s, CycScalar::from_int(if popcount(s) % 2 == 0 { 1 } else { -1 }));
    }
    SuperHopfData {
        hopf: HopfData {
            alg,
            comult,
            counit,
            antipode,
        },
        parity,
    }
}

/// Extend a linear map on generators multiplicatively to a map on exterior
/// monomials inside an algebra whose low bits index the generators: returns
/// the image of `x_S` as a coefficient vector in the ambient algebra.
fn act_on_monomial(ext: &AlgebraData, n: usize, action: &Matrix, s: usize) -> Vec<CycScalar> {
    let mut acc = ext.unit.clone();
    for i in 0..n {
        if s & (1 << i) != 0 {
            // image of x_i is sum_m action[m][i] x_m
            let mut img = vec![CycScalar::zero(); ext.dim];
            for m in 0..n {
                let c = action.get(m, i);
                if !c.is_zero() {
                    img[1 << m] = c.clone();
                }
            }
            acc = ext.product(&acc, &img);
        }
    }
    acc
}

/// Smash product `C[G] x ΛV` with `G` acting linearly on the odd space `V`.
/// `action[g]` is the matrix of `g` on `V`; basis index `g * 2^n + mask`.
pub fn supergroup_algebra(
    g: &GroupTable,
    n: usize,
    action: &[Matrix],
) -> Result<SuperHopfData, ExactError> {
    let g = GroupTable::new(g.table.clone())?;
    if action.len() != g.order {
        return Err(ExactError::NotAHomomorphism {
            reason: "one action matrix per group element required".into(),
        });
    }
    for (idx, m) in action.iter().enumerate() {
        if m.rows() != n || m.cols() != n {
            return Err(ExactError::NotAHomomorphism {
                reason: format!("action matrix {idx} is not {n} x {n}"),
            });
        }
        if m.inverse().is_none() {
            return Err(ExactError::NotAHomomorphism {
                reason: format!("action matrix {idx} is singular"),
            });
        }
    }
    if action[g.identity] != Matrix::identity(n) {
        return Err(ExactError::NotAHomomorphism {
            reason: "identity does not act trivially".into(),
        });
    }
    for a in 0..g.order {
        for b in 0..g.order {
            if action[a].mul(&action[b]) != action[g.mul(a, b)] {
                return Err(ExactError::NotAHomomorphism {
                    reason: format!("action({a})action({b}) != action({a}{b})"),
                });
            }
        }
    }
    let ext = exterior_hopf(n);
    let md = 1usize << n;
    let d = g.order * md;
    let idx = |gamma: usize, mask: usize| gamma * md + mask;

    let mut mult = Tensor3::new((d, d, d));
    for gamma in 0..g.order {
        for s in 0..md {
            for delta in 0..g.order {
                for t in 0..md {
                    // (gamma x_S)(delta x_T) = gamma delta
                    //   (action(delta^{-1}) x_S) x_T
                    let moved = act_on_monomial(&ext.hopf.alg, n, &action[g.inv(delta)], s);
                    let prod = ext
                        .hopf
                        .alg
                        .product(&moved, &unit_vector(md, t));
                    for (m, c) in prod.iter().enumerate() {
                        if !c.is_zero() {
                            mult.add_to(
                                idx(gamma, s),
                                idx(delta, t),
                                idx(g.mul(gamma, delta), m),
                                c,
                            );
                        }
                    }
                }
            }
        }
    }
    let alg = AlgebraData::new(d, unit_vector(d, idx(g.identity, 0)), mult);

    let mut comult = Tensor3::new((d, d, d));
    for gamma in 0..g.order {
        for s in 0..md {
            let ds = ext.hopf.comult_of(&unit_vector(md, s));
            for a in 0..md {
                for b in 0..md {
                    let c = ds.get(a, b);
                    if !c.is_zero() {
                        comult.set(idx(gamma, s), idx(gamma, a), idx(gamma, b), c.clone());
                    }
                }
            }
        }
    }
    let mut counit = vec![CycScalar::zero(); d];
    for gamma in 0..g.order {
        counit[idx(gamma, 0)] = CycScalar::one();
    }
    // S(gamma x_S) = (-1)^{|S|} gamma^{-1} (action(gamma) x_S)
    let mut antipode = Matrix::zero(d, d);
    for gamma in 0..g.order {
        for s in 0..md {
            let moved = act_on_monomial(&ext.hopf.alg, n, &action[gamma], s);
            let sign = CycScalar::from_int(if popcount(s) % 2 == 0 { 1 } else { -1 });
            for (m, c) in moved.iter().enumerate() {
                if !c.is_zero() {
                    antipode.set(idx(g.inv(gamma), m), idx(gamma, s), &sign * c);
                }
            }
        }
    }
    let parity: Vec<usize> = (0..d).map(|i| popcount(i % md) % 2).collect();
    Ok(SuperHopfData {
        hopf: HopfData {
            alg,
            comult,
            counit,
            antipode,
        },
        parity,
    })
}

/// Pointed Hopf algebra on `C[Gamma]` and skew-primitive generators `x_i`
/// with `Delta(x_i) = x_i (x) 1 + g_i (x) x_i`, `gamma x_i gamma^{-1} =
/// chi_i(gamma) x_i`, and exterior relations among the `x_i`. Requires
/// `chi_i(g_j) = -1` for all `i, j`.
pub fn yd_biproduct(
    gamma: &GroupTable,
    g_idx: &[usize],
    chi: &[Vec<CycScalar>],
) -> Result<HopfData, ExactError> {
    let gr = GroupTable::new(gamma.table.clone())?;
    if !gr.is_abelian() {
        return Err(ExactError::precondition("group must be abelian"));
    }
    let n = g_idx.len();
    if chi.len() != n {
        return Err(ExactError::precondition("one character per generator"));
    }
    for (i, c) in chi.iter().enumerate() {
        if c.len() != gr.order {
            return Err(ExactError::precondition(format!(
                "character {i} has wrong length"
            )));
        }
        if !c[gr.identity].is_one() {
            return Err(ExactError::precondition(format!(
                "character {i} does not send identity to 1"
            )));
        }
        for a in 0..gr.order {
            for b in 0..gr.order {
                if c[gr.mul(a, b)] != &c[a] * &c[b] {
                    return Err(ExactError::precondition(format!(
                        "character {i} is not multiplicative"
                    )));
                }
            }
        }
    }
    for (i, c) in chi.iter().enumerate() {
        for (j, &gj) in g_idx.iter().enumerate() {
            if gj >= gr.order {
                return Err(ExactError::precondition("grouplike index out of range"));
            }
            if c[gj] != CycScalar::from_int(-1) {
                return Err(ExactError::YdConditionFailed { i, j });
            }
        }
    }
    let ext = exterior_hopf(n);
    let md = 1usize << n;
    let d = gr.order * md;
    let idx = |g: usize, mask: usize| g * md + mask;

    // (gamma x_S)(delta x_T) = gamma delta * prod_{i in S} chi_i(delta)^{-1}
    //   * x_S x_T
    let mut mult = Tensor3::new((d, d, d));
    for a in 0..gr.order {
        for s in 0..md {
            for b in 0..gr.order {
                for t in 0..md {
                    let mut factor = CycScalar::one();
                    let mut ok = true;
                    for i in 0..n {
                        if s & (1 << i) != 0 {
                            match chi[i][b].inv() {
                                Ok(v) => factor = &factor * &v,
                                Err(_) => {
                                    ok = false;
                                    break;
                                }
                            }
                        }
                    }
                    if !ok {
                        return Err(ExactError::precondition(
                            "character value is not invertible",
                        ));
                    }
                    let prod = ext
                        .hopf
                        .alg
                        .product(&unit_vector(md, s), &unit_vector(md, t));
                    for (m, c) in prod.iter().enumerate() {
                        if !c.is_zero() {
                            mult.add_to(idx(a, s), idx(b, t), idx(gr.mul(a, b), m), &(&factor * c));
                        }
                    }
                }
            }
        }
    }
    let alg = AlgebraData::new(d, unit_vector(d, idx(gr.identity, 0)), mult);

    // Delta by multiplying generator coproducts in the plain tensor square
    let pa = PairAlgebra::plain(&alg);
    let mut comult = Tensor3::new((d, d, d));
    for a in 0..gr.order {
        for s in 0..md {
            // Delta(gamma) = gamma (x) gamma
            let ga = unit_vector(d, idx(a, 0));
            let mut acc = PairElement::outer(&ga, &ga);
            for i in 0..n {
                if s & (1 << i) != 0 {
                    let xi = unit_vector(d, idx(gr.identity, 1 << i));
                    let gi = unit_vector(d, idx(g_idx[i], 0));
                    let one = alg.unit.clone();
                    let dxi =
                        PairElement::outer(&xi, &one).add(&PairElement::outer(&gi, &xi));
                    acc = pa.mult(&acc, &dxi);
                }
            }
            for j in 0..d {
                for k in 0..d {
                    let c = acc.get(j, k);
                    if !c.is_zero() {
                        comult.set(idx(a, s), j, k, c.clone());
                    }
                }
            }
        }
    }
    let mut counit = vec![CycScalar::zero(); d];
    for a in 0..gr.order {
        counit[idx(a, 0)] = CycScalar::one();
    }
    // antipode as an anti-homomorphism: S(x_i) = -g_i^{-1} x_i,
    // S(gamma) = gamma^{-1}; monomial gamma x_{i1}...x_{ik} maps to
    // S(x_{ik})...S(x_{i1}) gamma^{-1}
    let mut antipode = Matrix::zero(d, d);
    for a in 0..gr.order {
        for s in 0..md {
            let mut acc = alg.unit.clone();
            for i in (0..n).rev() {
                if s & (1 << i) != 0 {
                    let gi_inv_xi = {
                        let mut v = vec![CycScalar::zero(); d];
                        v[idx(gr.inv(g_idx[i]), 1 << i)] = CycScalar::from_int(-1);
                        v
                    };
                    acc = alg.product(&acc, &gi_inv_xi);
                }
            }
            let acc = alg.product(&acc, &unit_vector(d, idx(gr.inv(a), 0)));
            for (m, c) in acc.iter().enumerate() {
                if !c.is_zero() {
                    antipode.set(m, idx(a, s), c.clone());
                }
            }
        }
    }
    Ok(HopfData {
        alg,
        comult,
        counit,
        antipode,
    })
}

/// Adjoin a parity grouplike to a super Hopf algebra and pass to the
/// corresponding ordinary Hopf algebra; returns it with the grouplike.
pub fn overline(a: &SuperHopfData) -> Result<(HopfData, Vec<CycScalar>), ExactError> {
    let d = a.dim();
    let n2 = 2 * d;
    let idx = |eps: usize, i: usize| eps * d + i;
    // multiplication: (g^a x)(g^b y) = (-1)^{b p(x)} g^{a+b} x y
    let mut mult = Tensor3::new((n2, n2, n2));
    for ea in 0..2usize {
        for i in 0..d {
            for eb in 0..2usize {
                for j in 0..d {
                    let sign = if eb * a.parity[i] % 2 == 1 { -1 } else { 1 };
                    let prod = a.hopf.alg.basis_product(i, j);
                    for (k, c) in prod.iter().enumerate() {
                        if !c.is_zero() {
                            mult.add_to(
                                idx(ea, i),
                                idx(eb, j),
                                idx((ea + eb) % 2, k),
                                &(&CycScalar::from_int(sign) * c),
                            );
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec![CycScalar::zero(); n2];
    for (i, c) in a.hopf.alg.unit.iter().enumerate() {
        unit[idx(0, i)] = c.clone();
    }
    let alg = AlgebraData::new(n2, unit, mult);

    // Delta(g^e x) = sum (g^e x_(1)) (x) (g^e x_(2))
    let mut comult = Tensor3::new((n2, n2, n2));
    for e in 0..2usize {
        for (&(i, j, k), c) in a.hopf.comult.iter() {
            comult.set(idx(e, i), idx(e, j), idx(e, k), c.clone());
        }
    }
    let mut counit = vec![CycScalar::zero(); n2];
    for (i, c) in a.hopf.counit.iter().enumerate() {
        counit[idx(0, i)] = c.clone();
        counit[idx(1, i)] = c.clone();
    }
    // S(g^e x) = S(x) g^{-e} = g^e (g^{-e} S(x) g^e) = (-1)^{e p(x)} g^e S(x)
    let mut antipode = Matrix::zero(n2, n2);
    for e in 0..2usize {
        for i in 0..d {
            let s = a.hopf.antipode.apply(&unit_vector(d, i));
            let sign = if e * a.parity[i] % 2 == 1 { -1 } else { 1 };
            for (m, c) in s.iter().enumerate() {
                if !c.is_zero() {
                    antipode.set(idx(e, m), idx(e, i), &CycScalar::from_int(sign) * c);
                }
            }
        }
    }
    let mut parity = Vec::with_capacity(n2);
    for e in 0..2usize {
        let _ = e;
        parity.extend(a.parity.iter().cloned());
    }
    let smash = SuperHopfData {
        hopf: HopfData {
            alg,
            comult,
            counit,
            antipode,
        },
        parity,
    };
    let mut g = vec![CycScalar::zero(); n2];
    for (i, c) in a.hopf.alg.unit.iter().enumerate() {
        g[idx(1, i)] = c.clone();
    }
    let (ordinary, u) = crate::correspondence::to_ordinary(&smash, &g)?;
    Ok((ordinary, u))
}

/// Recovered supergroup data: group of grouplikes, odd primitive space,
/// conjugation action, and the explicit isomorphism from the model.
#[derive(Clone, Debug)]
pub struct SupergroupDecomposition {
    pub group: GroupTable,
    pub odd_dim: usize,
    pub action: Vec<Matrix>,
    /// Columns: images of the model basis `g * 2^n + mask` in `A`.
    pub iso: Matrix,
}

/// Decompose a cocommutative super Hopf algebra as a supergroup algebra.
pub fn decompose_cocommutative(
    a: &SuperHopfData,
) -> Result<SupergroupDecomposition, ExactError> {
    if !cocommutative_check(a) {
        return Err(ExactError::precondition("input is not cocommutative"));
    }
    let d = a.dim();
    let (gls, complete) = crate::hopf::grouplikes(&a.hopf);
    if !complete {
        return Err(ExactError::Indeterminate {
            reason: "grouplike enumeration incomplete".into(),
        });
    }
    for g in &gls {
        if !a.is_even_element(g) {
            return Err(ExactError::precondition("odd grouplike found"));
        }
    }
    // group table from products of grouplikes
    let order = gls.len();
    let mut table = vec![vec![usize::MAX; order]; order];
    for i in 0..order {
        for j in 0..order {
            let p = a.hopf.alg.product(&gls[i], &gls[j]);
            let Some(k) = gls.iter().position(|g| crate::linalg::vec_eq(g, &p)) else {
                return Err(ExactError::precondition(
                    "grouplikes are not closed under multiplication",
                ));
            };
            table[i][j] = k;
        }
    }
    let group = GroupTable::new(table)?;

    // odd primitives: Delta x = x (x) 1 + 1 (x) x with x supported on odd
    // coordinates
    let odd_coords: Vec<usize> = (0..d).filter(|&i| a.parity[i] == 1).collect();
    let mut sys = Matrix::zero(d * d, odd_coords.len());
    for (col, &i) in odd_coords.iter().enumerate() {
        let e = unit_vector(d, i);
        let target = PairElement::outer(&e, &a.hopf.alg.unit)
            .add(&PairElement::outer(&a.hopf.alg.unit, &e));
        let diff = a.hopf.comult_of(&e).sub(&target);
        for j in 0..d {
            for k in 0..d {
                let c = diff.get(j, k);
                if !c.is_zero() {
                    sys.set(j * d + k, col, c.clone());
                }
            }
        }
    }
    let vbasis: Vec<Vec<CycScalar>> = sys
        .kernel()
        .into_iter()
        .map(|sol| {
            let mut v = vec![CycScalar::zero(); d];
            for (col, &i) in odd_coords.iter().enumerate() {
                v[i] = sol[col].clone();
            }
            v
        })
        .collect();
    let n = vbasis.len();

    // conjugation action of each grouplike on V
    let vspan = Subspace::span(d, vbasis.clone());
    let vmat = Matrix::from_rows(vbasis.clone()).transpose();
    let mut action = Vec::with_capacity(order);
    for gi in 0..order {
        let ginv = &gls[group.inv(gi)];
        let mut m = Matrix::zero(n, n);
        for (j, v) in vbasis.iter().enumerate() {
            let conj = a
                .hopf
                .alg
                .product(&a.hopf.alg.product(&gls[gi], v), ginv);
            if !vspan.contains(&conj) {
                return Err(ExactError::precondition(
                    "conjugation does not preserve the odd primitives",
                ));
            }
            let coords = vmat.solve(&conj).expect("contained in span");
            for (i, c) in coords.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        action.push(m);
    }

    // rebuild the model and the multiplication map
    let model = supergroup_algebra(&group, n, &action)?;
    let md = 1usize << n;
    if model.dim() != d {
        return Err(ExactError::precondition(format!(
            "dimension mismatch: supergroup model has dim {}, input has {d}",
            model.dim()
        )));
    }
    let mut iso = Matrix::zero(d, d);
    for gi in 0..order {
        for s in 0..md {
            let mut acc = gls[gi].clone();
            for i in 0..n {
                if s & (1 << i) != 0 {
                    acc = a.hopf.alg.product(&acc, &vbasis[i]);
                }
            }
            for (m, c) in acc.iter().enumerate() {
                if !c.is_zero() {
                    iso.set(m, gi * md + s, c.clone());
                }
            }
        }
    }
    if iso.inverse().is_none() {
        return Err(ExactError::precondition(
            "multiplication map from the supergroup model is not bijective",
        ));
    }
    // the map must be a super Hopf map: check algebra map, comult, counit,
    // antipode, parity
    verify_iso(&model, a, &iso)?;
    Ok(SupergroupDecomposition {
        group,
        odd_dim: n,
        action,
        iso,
    })
}

fn verify_iso(
    model: &SuperHopfData,
    target: &SuperHopfData,
    iso: &Matrix,
) -> Result<(), ExactError> {
    let d = model.dim();
    let fail = |reason: &str| {
        Err(ExactError::precondition(format!(
            "supergroup model map is not a super Hopf isomorphism: {reason}"
        )))
    };
    for i in 0..d {
        let img = iso.apply(&unit_vector(d, i));
        let ok = if model.parity[i] == 0 {
            target.is_even_element(&img)
        } else {
            target.is_odd_element(&img)
        };
        if !ok {
            return fail("parity not preserved");
        }
    }
    for i in 0..d {
        for j in 0..d {
            let lhs = iso.apply(&model.hopf.alg.basis_product(i, j));
            let rhs = target.hopf.alg.product(
                &iso.apply(&unit_vector(d, i)),
                &iso.apply(&unit_vector(d, j)),
            );
            if !crate::linalg::vec_eq(&lhs, &rhs) {
                return fail("multiplication not preserved");
            }
        }
    }
    if !crate::linalg::vec_eq(&iso.apply(&model.hopf.alg.unit), &target.hopf.alg.unit) {
        return fail("unit not preserved");
    }
    let pa = target.pair_algebra();
    for i in 0..d {
        let e = unit_vector(d, i);
        let lhs = pa.apply_pair_map(iso, iso, &model.hopf.comult_of(&e));
        let rhs = target.hopf.comult_of(&iso.apply(&e));
        if lhs != rhs {
            return fail("comultiplication not preserved");
        }
        if model.hopf.counit_of(&e) != target.hopf.counit_of(&iso.apply(&e)) {
            return fail("counit not preserved");
        }
        let lhs = iso.apply(&model.hopf.antipode.apply(&e));
        let rhs = target.hopf.antipode.apply(&iso.apply(&e));
        if !crate::linalg::vec_eq(&lhs, &rhs) {
            return fail("antipode not preserved");
        }
    }
    Ok(())
}

/// The sign action of `Z_2` on a 1-dimensional odd space; the smallest
/// nontrivial supergroup datum.
pub fn sign_action_z2() -> (GroupTable, usize, Vec<Matrix>) {
    let g = GroupTable::cyclic(2);
    let action = vec![
        Matrix::identity(1),
        Matrix::identity(1).scale(&CycScalar::from_int(-1)),
    ];
    (g, 1, action)
}

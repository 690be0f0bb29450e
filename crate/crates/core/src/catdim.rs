//! Dimension arithmetic on fusion rings and integer polynomials: integer
//! eigenvalue candidates, the factorial-ratio integrality scan, exact
//! Frobenius-Perron dimensions via Sturm isolation, and categorical
//! dimensions as traces of the Drinfeld element.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ExactError;
use crate::linalg::Matrix;
use crate::scalar::{CycScalar, Rational};

/// Integer polynomial, coefficients low degree first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    pub coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect()
    }

    /// Parse strings like `x^2-2`, `x^3 - 4x^2 + x - 5`, `2*x + 1`.
    pub fn parse(s: &str) -> Result<IntPoly, ExactError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ExactError::Parse {
                field: "poly".into(),
                reason: "empty polynomial".into(),
            });
        }
        let err = |reason: &str| ExactError::Parse {
            field: "poly".into(),
            reason: reason.into(),
        };
        let mut terms: Vec<(BigInt, usize)> = Vec::new();
        let bytes = compact.as_bytes();
        let mut pos = 0;
        let mut sign = 1i64;
        if bytes[0] == b'+' || bytes[0] == b'-' {
            sign = if bytes[0] == b'-' { -1 } else { 1 };
            pos = 1;
        }
        while pos < bytes.len() {
            // coefficient digits
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let mut coeff = if start == pos {
                BigInt::one()
            } else {
                compact[start..pos]
                    .parse::<BigInt>()
                    .map_err(|_| err("bad coefficient"))?
            };
            coeff *= BigInt::from(sign);
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
            }
            let mut exp = 0usize;
            if pos < bytes.len() && (bytes[pos] == b'x' || bytes[pos] == b'X') {
                pos += 1;
                exp = 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let estart = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if estart == pos {
                        return Err(err("missing exponent"));
                    }
                    exp = compact[estart..pos]
                        .parse::<usize>()
                        .map_err(|_| err("bad exponent"))?;
                }
            } else if start == pos {
                return Err(err("expected coefficient or x"));
            }
            terms.push((coeff, exp));
            if pos == bytes.len() {
                break;
            }
            match bytes[pos] {
                b'+' => sign = 1,
                b'-' => sign = -1,
                _ => return Err(err("expected + or - between terms")),
            }
            pos += 1;
            if pos == bytes.len() {
                return Err(err("trailing sign"));
            }
        }
        let deg = terms.iter().map(|&(_, e)| e).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (c, e) in terms {
            coeffs[e] += c;
        }
        Ok(IntPoly::new(coeffs))
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{e}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Result of the factorial-ratio scan.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ScanResult {
    /// Smallest `k` where a ratio is non-integral.
    FailsAt(u64),
    /// Every `k` up to `kmax` gave integers.
    AllPass,
}

/// Scan `b_k = Q(0)Q(1)...Q(k-1)/(k!)^n` and the mirrored
/// `c_k = Q(0)Q(-1)...Q(1-k)/(k!)^n` for `k = 1..=kmax`; report the smallest
/// `k` where either leaves the integers.
pub fn integrality_scan(q: &IntPoly, kmax: u64) -> Result<ScanResult, ExactError> {
    if !q.is_monic() || q.degree() == 0 {
        return Err(ExactError::precondition(
            "scan requires a monic polynomial of degree >= 1",
        ));
    }
    let n = q.degree() as u32;
    let mut b = Rational::one();
    let mut c = Rational::one();
    for k in 1..=kmax {
        let kn = Rational::from_integer(BigInt::from(k)).pow(n as i32);
        b *= Rational::from_integer(q.eval(&BigInt::from(k - 1))) / &kn;
        c *= Rational::from_integer(q.eval(&BigInt::from(1i64 - k as i64))) / &kn;
        if !b.is_integer() || !c.is_integer() {
            return Ok(ScanResult::FailsAt(k));
        }
    }
    Ok(ScanResult::AllPass)
}

/// Divisors of `|n|` (positive), by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    loop {
        if &d * &d > n {
            break;
        }
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
        // bail out on absurdly large constants; candidates found so far
        // still give a sound (possibly incomplete) search
        if d.to_u64() == Some(2_000_000) {
            break;
        }
    }
    large.reverse();
    small.extend(large);
    small
}

/// Integer root with smallest absolute value, positive before negative.
pub fn has_integer_root(q: &IntPoly) -> Option<BigInt> {
    let a0 = &q.coeffs[0];
    if a0.is_zero() {
        return Some(BigInt::zero());
    }
    let mut best: Option<BigInt> = None;
    for d in divisors(a0) {
        for cand in [d.clone(), -&d] {
            if q.eval(&cand).is_zero() {
                let better = match &best {
                    None => true,
                    Some(b) => {
                        cand.abs() < b.abs() || (cand.abs() == b.abs() && cand.is_positive())
                    }
                };
                if better {
                    best = Some(cand);
                }
            }
        }
    }
    best
}

/// All rational roots of a rational polynomial, via the rational root
/// theorem after clearing denominators.
pub fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    // strip trailing zeros and factor out x^m
    let mut coeffs: Vec<Rational> = p.to_vec();
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    while coeffs.first().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.remove(0);
        if !roots.contains(&Rational::zero()) {
            roots.push(Rational::zero());
        }
    }
    if coeffs.len() <= 1 {
        return roots;
    }
    // clear denominators
    let mut lcm = BigInt::one();
    for c in &coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &Rational::from_integer(lcm.clone())).to_integer()).collect();
    let a0 = &ints[0];
    let an = ints.last().unwrap();
    let eval = |x: &Rational| -> Rational {
        let mut acc = Rational::zero();
        for c in ints.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    };
    for p in divisors(a0) {
        for q in divisors(an) {
            for cand in [
                Rational::new(p.clone(), q.clone()),
                Rational::new(-&p, q.clone()),
            ] {
                if !roots.contains(&cand) && eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots
}

/// Characteristic polynomial (monic, low degree first) of a matrix with
/// rational entries; `None` when an entry is not rational.
pub fn charpoly_rational(m: &Matrix) -> Option<Vec<Rational>> {
    let k = m.rows();
    assert_eq!(k, m.cols());
    let mut entries = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            entries.push(m.get(i, j).as_rational()?);
        }
    }
    let mut coeffs = vec![Rational::zero(); k + 1];
    coeffs[k] = Rational::one();
    let mat_mul = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); k * k];
        for i in 0..k {
            for l in 0..k {
                if a[i * k + l].is_zero() {
                    continue;
                }
                for j in 0..k {
                    out[i * k + j] = &out[i * k + j] + &(&a[i * k + l] * &b[l * k + j]);
                }
            }
        }
        out
    };
    let trace =
        |a: &[Rational]| -> Rational { (0..k).fold(Rational::zero(), |acc, i| acc + &a[i * k + i]) };
    let mut mk = entries.clone();
    for step in 1..=k {
        let c = -(trace(&mk) / Rational::from_integer(step.into()));
        coeffs[k - step] = c.clone();
        if step < k {
            let mut adjusted = mk.clone();
            for i in 0..k {
                adjusted[i * k + i] = &adjusted[i * k + i] + &c;
            }
            mk = mat_mul(&entries, &adjusted);
        }
    }
    Some(coeffs)
}

/// Fusion ring on `rank` basis objects with nonnegative structure
/// constants `(N_i)_{jk}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FusionRingData {
    pub rank: usize,
    pub unit: usize,
    pub matrices: Vec<Vec<Vec<i64>>>,
}

impl FusionRingData {
    pub fn matrix(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.rank, self.rank, |j, k| {
            CycScalar::from_int(self.matrices[i][j][k])
        })
    }
}

/// Validate the fusion ring: unit object acts as identity, entries
/// nonnegative, and `N_i N_j = sum_k (N_i)_{jk} N_k`.
pub fn check_fusion_ring(f: &FusionRingData) -> Result<(), ExactError> {
    if f.unit >= f.rank || f.matrices.len() != f.rank {
        return Err(ExactError::precondition("fusion ring shape"));
    }
    for m in &f.matrices {
        if m.len() != f.rank || m.iter().any(|r| r.len() != f.rank) {
            return Err(ExactError::precondition("fusion matrix shape"));
        }
        if m.iter().flatten().any(|&v| v < 0) {
            return Err(ExactError::precondition("negative fusion multiplicity"));
        }
    }
    let unit = f.matrix(f.unit);
    if unit != Matrix::identity(f.rank) {
        return Err(ExactError::precondition("unit object matrix is not the identity"));
    }
    for i in 0..f.rank {
        for j in 0..f.rank {
            let lhs = f.matrix(i).mul(&f.matrix(j));
            let mut rhs = Matrix::zero(f.rank, f.rank);
            for k in 0..f.rank {
                rhs = rhs.add(&f.matrix(k).scale(&CycScalar::from_int(f.matrices[i][j][k])));
            }
            if lhs != rhs {
                return Err(ExactError::precondition(format!(
                    "fusion associativity fails at (N_{i}, N_{j})"
                )));
            }
        }
    }
    Ok(())
}

/// Integer eigenvalues of `N_i`, the candidates for an integer-valued
/// dimension function on object `i`.
pub fn dim_candidates(f: &FusionRingData, i: usize) -> Vec<BigInt> {
    let cp = charpoly_rational(&f.matrix(i)).expect("integer matrix");
    let mut out: Vec<BigInt> = rational_roots(&cp)
        .into_iter()
        .filter(|r| r.is_integer())
        .map(|r| r.to_integer())
        .collect();
    out.sort();
    out
}

// ---- exact real-root machinery (Sturm sequences over Q) ----

fn poly_deg(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_eval_rat(p: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn poly_derivative(p: &[Rational]) -> Vec<Rational> {
    if p.len() <= 1 {
        return vec![Rational::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * &Rational::from_integer(BigInt::from(i)))
        .collect()
}

/// Remainder of polynomial division.
fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let db = poly_deg(b).expect("division by zero polynomial");
    let mut r = a.to_vec();
    loop {
        let Some(dr) = poly_deg(&r) else {
            return vec![Rational::zero()];
        };
        if dr < db {
            return r;
        }
        let factor = &r[dr] / &b[db];
        for i in 0..=db {
            r[dr - db + i] = &r[dr - db + i] - &(&factor * &b[i]);
        }
        r[dr] = Rational::zero();
    }
}

fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while poly_deg(&y).is_some() {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    // make monic
    if let Some(d) = poly_deg(&x) {
        let lead = x[d].clone();
        for c in &mut x {
            *c = &*c / &lead;
        }
    }
    x
}

/// Exact division `a / b` assuming it is exact up to the remainder being 0.
fn poly_div(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let db = poly_deg(b).expect("division by zero polynomial");
    let da = match poly_deg(a) {
        Some(d) => d,
        None => return vec![Rational::zero()],
    };
    if da < db {
        return vec![Rational::zero()];
    }
    let mut r = a.to_vec();
    let mut q = vec![Rational::zero(); da - db + 1];
    for dr in (db..=da).rev() {
        if r[dr].is_zero() {
            continue;
        }
        let factor = &r[dr] / &b[db];
        q[dr - db] = factor.clone();
        for i in 0..=db {
            r[dr - db + i] = &r[dr - db + i] - &(&factor * &b[i]);
        }
    }
    q
}

fn sturm_sequence(p: &[Rational]) -> Vec<Vec<Rational>> {
    let mut seq = vec![p.to_vec(), poly_derivative(p)];
    loop {
        let n = seq.len();
        if poly_deg(&seq[n - 1]).is_none() {
            seq.pop();
            return seq;
        }
        if poly_deg(&seq[n - 1]) == Some(0) {
            return seq;
        }
        let r = poly_rem(&seq[n - 2], &seq[n - 1]);
        let neg: Vec<Rational> = r.iter().map(|c| -c).collect();
        seq.push(neg);
    }
}

fn sign_changes(seq: &[Vec<Rational>], x: &Rational) -> usize {
    let mut last = 0i32;
    let mut changes = 0;
    for p in seq {
        let v = poly_eval_rat(p, x);
        let s = if v.is_zero() {
            0
        } else if v > Rational::zero() {
            1
        } else {
            -1
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Number of distinct real roots of `p` in `(a, b]`.
pub fn count_roots_in(p: &[Rational], a: &Rational, b: &Rational) -> usize {
    let seq = sturm_sequence(p);
    sign_changes(&seq, a) - sign_changes(&seq, b)
}

/// Exact descriptor of a Frobenius-Perron dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FpDim {
    Integer(BigInt),
    /// Irrational Perron root: squarefree annihilating polynomial with all
    /// rational linear factors removed, plus an isolating interval.
    Algebraic {
        minpoly: IntPoly,
        lower: Rational,
        upper: Rational,
    },
}

impl std::fmt::Display for FpDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FpDim::Integer(n) => write!(f, "{n}"),
            FpDim::Algebraic {
                minpoly,
                lower,
                upper,
            } => write!(f, "root of {minpoly} in ({lower}, {upper}]"),
        }
    }
}

/// Width of the isolating interval for irrational Perron roots.
pub fn isolation_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(1u64 << 20))
}

/// Frobenius-Perron dimension of object `i`: the largest real eigenvalue of
/// `N_i`, isolated exactly.
pub fn fpdim(f: &FusionRingData, i: usize) -> FpDim {
    let cp = charpoly_rational(&f.matrix(i)).expect("integer matrix");
    // squarefree part
    let gcd = poly_gcd(&cp, &poly_derivative(&cp));
    let sf = if poly_deg(&gcd) == Some(0) || poly_deg(&gcd).is_none() {
        cp.clone()
    } else {
        poly_div(&cp, &gcd)
    };
    // root bound for a monic-up-to-sign polynomial
    let d = poly_deg(&sf).expect("nonconstant");
    let lead = sf[d].clone();
    let mut bound = Rational::one();
    for c in sf.iter().take(d) {
        let m = (c / &lead).abs();
        if m > bound {
            bound = m;
        }
    }
    bound += Rational::one();

    // integer eigenvalues, if any
    let int_roots: Vec<BigInt> = rational_roots(&sf)
        .into_iter()
        .filter(|r| r.is_integer())
        .map(|r| r.to_integer())
        .collect();
    let max_int = int_roots.iter().max().cloned();
    if let Some(m) = &max_int {
        let above = count_roots_in(&sf, &Rational::from_integer(m.clone()), &bound);
        if above == 0 {
            return FpDim::Integer(m.clone());
        }
    }
    // isolate the largest real root by bisection on the count above the
    // midpoint
    let mut lo = max_int
        .map(|m| Rational::from_integer(m))
        .unwrap_or_else(|| -bound.clone());
    let mut hi = bound;
    let width = isolation_width();
    while &hi - &lo > width || count_roots_in(&sf, &lo, &hi) != 1 {
        let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
        if count_roots_in(&sf, &mid, &hi) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // strip rational linear factors; the Perron root is irrational here
    let mut residual = sf.clone();
    for r in rational_roots(&sf) {
        // divide by (x - r)
        let linear = vec![-r.clone(), Rational::one()];
        loop {
            let rem = poly_rem(&residual, &linear);
            if poly_deg(&rem).is_none() {
                residual = poly_div(&residual, &linear);
            } else {
                break;
            }
        }
    }
    // scale to integer coefficients
    let mut lcm = BigInt::one();
    for c in &residual {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = residual
        .iter()
        .map(|c| (c * &Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    // normalize sign to positive leading coefficient
    if ints.last().map(|c| c.is_negative()).unwrap_or(false) {
        for c in &mut ints {
            *c = -&*c;
        }
    }
    FpDim::Algebraic {
        minpoly: IntPoly::new(ints),
        lower: lo,
        upper: hi,
    }
}

/// Categorical dimension of a representation of a triangular Hopf algebra:
/// the trace of the Drinfeld element acting on the module.
pub fn catdim_of_rep(
    h: &crate::hopf::HopfData,
    r: &crate::tensor::PairElement,
    rho: &crate::chevalley::Representation,
) -> CycScalar {
    let u = crate::triangular::drinfeld_element(h, r);
    rho.apply(&u).trace()
}

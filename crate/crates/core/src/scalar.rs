//! Exact scalars: arbitrary-precision rationals and elements of the
//! cyclotomic fields `Q(zeta_n)`.
//!
//! A [`CycScalar`] stores coordinates in the power basis
//! `1, zeta, ..., zeta^{phi(n)-1}` of `Q(zeta_n)`, reduced modulo the n-th
//! cyclotomic polynomial. Scalars of different orders interoperate by
//! promotion into the lcm order; `coerce_to_order` exposes the promotion
//! explicitly and the `checked_*` operations insist on equal orders.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::ExactError;

pub type Rational = num_rational::BigRational;
pub type Int = BigInt;

/// Euler totient.
pub fn euler_phi(n: u64) -> usize {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn divisors(n: u64) -> Vec<u64> {
    let mut ds = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            ds.push(d);
            if d != n / d {
                ds.push(n / d);
            }
        }
        d += 1;
    }
    ds.sort_unstable();
    ds
}

// --- integer polynomial helpers (dense, index = degree) ---

fn int_poly_trim(p: &mut Vec<Int>) {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

/// Exact division of integer polynomials; the divisor must be monic and
/// divide evenly (which it does inside the cyclotomic recursion).
fn int_poly_div_exact(num: &[Int], den: &[Int]) -> Vec<Int> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<Int> = num.to_vec();
    let dn = den.len() - 1;
    if rem.len() <= dn {
        return vec![Int::zero()];
    }
    let mut quot = vec![Int::zero(); rem.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn].clone();
        if !c.is_zero() {
            quot[i] = c.clone();
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
        }
    }
    for c in &rem {
        assert!(c.is_zero(), "non-exact division in cyclotomic recursion");
    }
    int_poly_trim(&mut quot);
    quot
}

/// Coefficients of the n-th cyclotomic polynomial, low degree first.
///
/// Computed as `(x^n - 1) / prod_{d | n, d < n} Phi_d`, memoized.
pub fn cyclotomic_poly(n: u64) -> Vec<Int> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<Int>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        vec![-Int::one(), Int::one()]
    } else {
        // x^n - 1
        let mut num = vec![Int::zero(); n as usize + 1];
        num[0] = -Int::one();
        num[n as usize] = Int::one();
        let mut acc = num;
        for d in divisors(n) {
            if d < n {
                let phi_d = cyclotomic_poly(d);
                acc = int_poly_div_exact(&acc, &phi_d);
            }
        }
        acc
    };
    cache.lock().unwrap().insert(n, result.clone());
    result
}

// --- rational polynomial helpers used for reduction and inversion ---

fn rat_trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn rat_rem(mut a: Vec<Rational>, m: &[Rational]) -> Vec<Rational> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.last().unwrap().clone() / m[dm].clone();
        let shift = a.len() - 1 - dm;
        if !lead.is_zero() {
            for (j, c) in m.iter().enumerate() {
                a[shift + j] = &a[shift + j] - &lead * c;
            }
        }
        a.pop();
        rat_trim(&mut a);
        if a.iter().all(|c| c.is_zero()) {
            return vec![Rational::zero()];
        }
    }
    a
}

/// Extended Euclid in Q[x]: returns `s` with `s*a + t*m = gcd` (gcd monic).
/// Used for inversion modulo the cyclotomic polynomial.
fn rat_inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let mut r0: Vec<Rational> = m.to_vec();
    let mut r1: Vec<Rational> = a.to_vec();
    rat_trim(&mut r1);
    let mut s0 = vec![Rational::zero()];
    let mut s1 = vec![Rational::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        // divide r0 by r1
        let mut q = vec![Rational::zero(); r0.len().saturating_sub(r1.len()) + 1];
        let mut rem = r0.clone();
        let d1 = r1.len() - 1;
        while rem.len() > d1 || (rem.len() == r1.len() && !rem.iter().all(|c| c.is_zero())) {
            if rem.len() < r1.len() {
                break;
            }
            let lead = rem.last().unwrap().clone() / r1[d1].clone();
            let shift = rem.len() - r1.len();
            q[shift] = &q[shift] + &lead;
            for (j, c) in r1.iter().enumerate() {
                rem[shift + j] = &rem[shift + j] - &lead * c;
            }
            rat_trim(&mut rem);
            if rem.iter().all(|c| c.is_zero()) {
                rem = vec![Rational::zero()];
                break;
            }
        }
        // s_next = s0 - q*s1
        let mut qs = vec![Rational::zero(); q.len() + s1.len() - 1];
        for (i, qi) in q.iter().enumerate() {
            for (j, sj) in s1.iter().enumerate() {
                qs[i + j] = &qs[i + j] + qi * sj;
            }
        }
        let len = s0.len().max(qs.len());
        let mut s_next = vec![Rational::zero(); len];
        for (i, c) in s0.iter().enumerate() {
            s_next[i] = s_next[i].clone() + c;
        }
        for (i, c) in qs.iter().enumerate() {
            s_next[i] = &s_next[i] - c;
        }
        rat_trim(&mut s_next);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s_next;
    }
    // r0 is the gcd; invertible iff it is a nonzero constant
    if r0.len() == 1 && !r0[0].is_zero() {
        let inv = r0[0].recip();
        Some(s0.iter().map(|c| c * &inv).collect())
    } else {
        None
    }
}

/// An element of the cyclotomic field `Q(zeta_n)`.
#[derive(Clone)]
pub struct CycScalar {
    order: u64,
    /// length phi(order); coordinates in the power basis of zeta_order
    coeffs: Vec<Rational>,
}

impl CycScalar {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn zero() -> Self {
        CycScalar {
            order: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        CycScalar {
            order: 1,
            coeffs: vec![Rational::one()],
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        CycScalar {
            order: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(i: i64) -> Self {
        Self::from_rational(Rational::from_integer(Int::from(i)))
    }

    /// `p/q` as a scalar.
    pub fn from_frac(p: i64, q: i64) -> Self {
        Self::from_rational(Rational::new(Int::from(p), Int::from(q)))
    }

    /// The primitive n-th root of unity `zeta_n`.
    pub fn zeta(n: u64) -> Self {
        assert!(n >= 1);
        let mut poly = vec![Rational::zero(), Rational::one()];
        rat_trim(&mut poly);
        Self::from_poly(n, poly)
    }

    /// `zeta_n^k`.
    pub fn zeta_pow(n: u64, k: u64) -> Self {
        let mut poly = vec![Rational::zero(); (k % n) as usize + 1];
        *poly.last_mut().unwrap() = Rational::one();
        Self::from_poly(n, poly)
    }

    /// Build from a polynomial in zeta_n (low degree first), reducing
    /// modulo the cyclotomic polynomial.
    pub fn from_poly(order: u64, poly: Vec<Rational>) -> Self {
        let phi = euler_phi(order);
        let modulus: Vec<Rational> = cyclotomic_poly(order)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let mut reduced = rat_rem(poly, &modulus);
        reduced.resize(phi, Rational::zero());
        CycScalar {
            order,
            coeffs: reduced,
        }
    }

    /// Construct directly from power-basis coordinates (must have length
    /// phi(order)).
    pub fn from_coeffs(order: u64, coeffs: Vec<Rational>) -> Result<Self, ExactError> {
        if coeffs.len() != euler_phi(order) {
            return Err(ExactError::DimensionMismatch {
                context: format!(
                    "expected {} coordinates for Q(zeta_{}), got {}",
                    euler_phi(order),
                    order,
                    coeffs.len()
                ),
            });
        }
        Ok(CycScalar { order, coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Returns the rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        // rewrite in the smallest order containing the element: rational iff
        // all power-basis coordinates beyond the constant vanish after
        // reduction, except at orders 1 and 2 where the basis is just {1}.
        if self.order <= 2 {
            let c = self.coeffs[0].clone();
            return Some(c);
        }
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Explicit promotion of the scalar into `Q(zeta_m)`; requires
    /// `order | m`.
    pub fn coerce_to_order(&self, m: u64) -> Result<Self, ExactError> {
        if m == self.order {
            return Ok(self.clone());
        }
        if m % self.order != 0 {
            return Err(ExactError::OrderMismatch {
                left: self.order,
                right: m,
            });
        }
        let step = (m / self.order) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Ok(Self::from_poly(m, poly))
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let m = self.order.lcm(&other.order);
        (
            self.coerce_to_order(m).unwrap(),
            other.coerce_to_order(m).unwrap(),
        )
    }

    /// Addition requiring equal declared orders.
    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.order != other.order {
            return Err(ExactError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(self + other)
    }

    /// Multiplication requiring equal declared orders.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.order != other.order {
            return Err(ExactError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(self * other)
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero { order: self.order });
        }
        let modulus: Vec<Rational> = cyclotomic_poly(self.order)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let inv = rat_inverse_mod(&self.coeffs, &modulus).ok_or(ExactError::DivisionByZero {
            order: self.order,
        })?;
        Ok(Self::from_poly(self.order, inv))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = CycScalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Scale by a rational.
    pub fn scale(&self, r: &Rational) -> Self {
        CycScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.unify(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycScalar {}

impl std::ops::Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, other: &CycScalar) -> CycScalar {
        let (mut a, b) = self.unify(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x = &*x + y;
        }
        a
    }
}

impl std::ops::Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, other: &CycScalar) -> CycScalar {
        let (mut a, b) = self.unify(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x = &*x - y;
        }
        a
    }
}

impl std::ops::Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, other: &CycScalar) -> CycScalar {
        let (a, b) = self.unify(other);
        let mut poly = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] = &poly[i + j] + &(x * y);
                }
            }
        }
        CycScalar::from_poly(a.order, poly)
    }
}

/// Canonical display: reduced rationals, `z` for the root of unity.
impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "z^{}", i)?;
            } else {
                write!(f, "{}*z^{}", c, i)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc(n={}, {})", self.order, self)
    }
}

/// Parse `"p/q"` or `"p"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let err = |reason: &str| ExactError::Parse {
        field: "rational".into(),
        reason: format!("{reason}: {s:?}"),
    };
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: Int = num
            .trim()
            .parse()
            .map_err(|_| err("bad numerator"))?;
        let d: Int = den
            .trim()
            .parse()
            .map_err(|_| err("bad denominator"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(Rational::new(n, d))
    } else {
        let n: Int = s.parse().map_err(|_| err("bad integer"))?;
        Ok(Rational::from_integer(n))
    }
}

/// Canonical rendering `p/q` (or `p` for integers) with reduced fraction.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

//! Exact scalar fields: the rationals and the finite fields `GF(p^k)`.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::group::prime_power;

pub trait Field: Clone + Debug {
    type Elem: Clone + PartialEq + Eq + Hash + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn characteristic(&self) -> u64;
    /// Number of elements, for finite fields.
    fn size(&self) -> Option<u64>;
    /// The `i`-th element of a finite field (`0` and `1` come first).
    fn element(&self, i: u64) -> Self::Elem;
    fn to_scalar(&self, a: &Self::Elem) -> ExactScalar;
    /// Inverse of [`to_scalar`](Self::to_scalar); `None` for scalars of
    /// another field.
    fn from_scalar(&self, x: &ExactScalar) -> Option<Self::Elem>;
    fn name(&self) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// The field is `Q` itself, so cyclotomic polynomials are irreducible.
    fn is_rational(&self) -> bool {
        false
    }

    /// Candidate eigenvalues of matrices representing semigroup elements:
    /// zero and the roots of unity that live in the field.
    fn eigenvalue_candidates(&self) -> Vec<Self::Elem> {
        match self.size() {
            Some(q) => (0..q).map(|i| self.element(i)).collect(),
            None => vec![self.zero(), self.one(), self.from_int(-1)],
        }
    }
}

/// A field element in printable form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactScalar {
    Rational(BigRational),
    /// Element of `GF(q)` encoded by the base-`p` digits of its polynomial.
    Residue(u64),
    /// Element of `Q(z)` for a primitive `order`-th root of unity `z`.
    Cyclotomic { order: u64, coeffs: Vec<BigRational> },
}

impl Serialize for ExactScalar {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            ExactScalar::Rational(r) => ser.serialize_str(&r.to_string()),
            ExactScalar::Residue(v) => ser.serialize_u64(*v),
            ExactScalar::Cyclotomic { coeffs, .. } => ser.serialize_str(&cyclotomic_string(coeffs)),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "division by zero");
        a.recip()
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn size(&self) -> Option<u64> {
        None
    }
    fn element(&self, i: u64) -> BigRational {
        // 0, 1, -1, 2, -2, ...
        let k = i.div_ceil(2) as i64;
        self.from_int(if i % 2 == 1 { k } else { -k })
    }
    fn to_scalar(&self, a: &BigRational) -> ExactScalar {
        ExactScalar::Rational(a.clone())
    }
    fn from_scalar(&self, x: &ExactScalar) -> Option<BigRational> {
        match x {
            ExactScalar::Rational(r) => Some(r.clone()),
            _ => None,
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn name(&self) -> String {
        "Q".into()
    }
    fn is_rational(&self) -> bool {
        true
    }
}

/// `GF(p^k)` with elements `0..q` read as polynomials in base `p`, and a
/// primitive modulus found by search.
#[derive(Clone, Debug)]
pub struct GaloisField {
    p: u64,
    k: u32,
    q: u64,
    /// `exp[i] = x^i`, for `i` in `0..q-1`.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl GaloisField {
    pub fn new(q: u64) -> Option<Self> {
        let (p, k) = prime_power(q)?;
        if q > 1 << 16 {
            return None;
        }
        let modulus = (0..q)
            .map(|low| (low, poly_with_leading(low, p, k)))
            .find(|(_, m)| is_primitive(m, p, q))
            .map(|(_, m)| m)?;
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![0u64; k as usize];
        cur[0] = 1;
        for i in 0..q - 1 {
            let code = encode(&cur, p);
            exp.push(code as u32);
            log[code as usize] = i as u32;
            cur = times_x(&cur, &modulus, p);
        }
        Some(GaloisField { p, k, q, exp, log })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }
}

/// Monic polynomial of degree `k` whose lower coefficients are the digits of `low`.
fn poly_with_leading(low: u64, p: u64, k: u32) -> Vec<u64> {
    let mut c = decode(low, p, k);
    c.push(1);
    c
}

fn decode(mut v: u64, p: u64, k: u32) -> Vec<u64> {
    (0..k)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn encode(digits: &[u64], p: u64) -> u64 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Multiplies a residue (degree < k) by `x` modulo the monic `modulus`.
fn times_x(cur: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let k = cur.len();
    let top = cur[k - 1];
    let mut next = vec![0u64; k];
    for i in (1..k).rev() {
        next[i] = cur[i - 1];
    }
    for (i, n) in next.iter_mut().enumerate() {
        *n = (*n + p * p - top * modulus[i] % p) % p;
    }
    next
}

/// `x` has multiplicative order exactly `q - 1` modulo `modulus`.
fn is_primitive(modulus: &[u64], p: u64, q: u64) -> bool {
    let k = modulus.len() - 1;
    if modulus[0] == 0 {
        return false;
    }
    let mut cur = vec![0u64; k];
    cur[0] = 1;
    let one = cur.clone();
    for i in 1..q {
        cur = times_x(&cur, modulus, p);
        if cur == one {
            return i == q - 1;
        }
        if cur.iter().all(|&c| c == 0) {
            return false;
        }
    }
    false
}

impl Field for GaloisField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        if self.k == 1 {
            return ((*a as u64 + *b as u64) % self.p) as u32;
        }
        let (mut a, mut b) = (*a as u64, *b as u64);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if self.k == 1 {
            return ((self.p - *a as u64) % self.p) as u32;
        }
        let mut a = *a as u64;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.k {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let l = (self.log[*a as usize] as u64 + self.log[*b as usize] as u64) % n;
        self.exp[l as usize]
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "division by zero");
        let n = self.q - 1;
        let l = (n - self.log[*a as usize] as u64) % n;
        self.exp[l as usize]
    }
    fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn size(&self) -> Option<u64> {
        Some(self.q)
    }
    fn element(&self, i: u64) -> u32 {
        i as u32
    }
    fn to_scalar(&self, a: &u32) -> ExactScalar {
        ExactScalar::Residue(*a as u64)
    }
    fn from_scalar(&self, x: &ExactScalar) -> Option<u32> {
        match x {
            ExactScalar::Residue(v) if *v < self.q => Some(*v as u32),
            _ => None,
        }
    }
    fn name(&self) -> String {
        format!("F{}", self.q)
    }
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n >= 1);
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        num = exact_monic_div(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn exact_monic_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_divrem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let b = trim(b.clone());
    let mut r = trim(a.clone());
    let db = b.len() - 1;
    let lead = b[db].recip();
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(db).max(1)];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = &r[r.len() - 1] * &lead;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &c * bj;
        }
        q[shift] = c;
        r = trim(r);
    }
    (q, r)
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + x * y;
        }
    }
    out
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

/// The cyclotomic field `Q(z)` with `z` a primitive `e`-th root of unity.
/// Elements are coefficient vectors in `1, z, ..., z^(d-1)`, `d = phi(e)`.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    e: u64,
    modulus: Poly,
}

impl CyclotomicField {
    pub fn new(e: u64) -> Self {
        let modulus = cyclotomic_polynomial(e)
            .into_iter()
            .map(|c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        CyclotomicField { e, modulus }
    }

    pub fn order(&self) -> u64 {
        self.e
    }

    fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, p: &Poly) -> Vec<BigRational> {
        let mut r = poly_divrem(p, &self.modulus).1;
        r.resize(self.degree(), BigRational::zero());
        r
    }

    /// The chosen primitive root `z`.
    pub fn generator(&self) -> Vec<BigRational> {
        self.reduce(&vec![BigRational::zero(), BigRational::one()])
    }
}

impl Field for CyclotomicField {
    type Elem = Vec<BigRational>;

    fn zero(&self) -> Self::Elem {
        vec![BigRational::zero(); self.degree()]
    }
    fn one(&self) -> Self::Elem {
        self.from_int(1)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| -x).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.reduce(&poly_mul(a, b))
    }
    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        let a = trim(a.clone());
        assert!(!a.is_empty(), "division by zero");
        let (mut r0, mut r1) = (self.modulus.clone(), a);
        let (mut t0, mut t1): (Poly, Poly) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let t = poly_sub(&t0, &poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t);
        }
        // r0 is a nonzero constant because the modulus is irreducible.
        let c = r0[0].recip();
        let scaled: Poly = t0.iter().map(|x| x * &c).collect();
        self.reduce(&scaled)
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        let mut v = self.zero();
        v[0] = BigRational::from_integer(BigInt::from(n));
        v
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn size(&self) -> Option<u64> {
        None
    }
    fn element(&self, i: u64) -> Self::Elem {
        let mut v = self.zero();
        v[0] = Rationals.element(i);
        v
    }
    fn to_scalar(&self, a: &Self::Elem) -> ExactScalar {
        ExactScalar::Cyclotomic {
            order: self.e,
            coeffs: a.clone(),
        }
    }
    fn from_scalar(&self, x: &ExactScalar) -> Option<Self::Elem> {
        match x {
            ExactScalar::Cyclotomic { order, coeffs } if *order == self.e && coeffs.len() == self.zero().len() => {
                Some(coeffs.clone())
            }
            _ => None,
        }
    }
    fn name(&self) -> String {
        format!("Q(z{})", self.e)
    }
    fn eigenvalue_candidates(&self) -> Vec<Self::Elem> {
        let z = self.generator();
        let mut out = vec![self.zero()];
        let mut p = self.one();
        for _ in 0..2 * self.e {
            for c in [p.clone(), self.neg(&p)] {
                if !out.contains(&c) {
                    out.push(c);
                }
            }
            p = self.mul(&p, &z);
        }
        out
    }
}

/// Renders `c_0 + c_1 z + ...` with `z` the chosen root of unity.
fn cyclotomic_string(coeffs: &[BigRational]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if !out.is_empty() || neg {
            out.push(if neg { '-' } else { '+' });
        }
        let power = match i {
            0 => String::new(),
            1 => "z".into(),
            _ => format!("z^{i}"),
        };
        if i == 0 {
            out += &mag.to_string();
        } else if mag.is_one() {
            out += &power;
        } else {
            out += &format!("{mag}*{power}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Printable sign-aware rendering used in reports.
pub fn rational_string(r: &BigRational) -> String {
    if r.is_negative() {
        format!("-{}", -r)
    } else {
        r.to_string()
    }
}

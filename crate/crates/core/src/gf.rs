//! Arithmetic in GF(p^e).
//!
//! Elements are stored by their canonical integer encoding: the polynomial
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` is the integer `sum c_i p^i`. Zero is
//! `0`, the unit is `1`, and enumeration order is the integer order.
//!
//! Fields with `q <= 256` precompute full addition and multiplication tables
//! on construction; larger fields fall back to polynomial arithmetic.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 16;
/// Largest field order for which arithmetic tables are built.
pub const TABLE_LIMIT: u32 = 256;
const MAX_ORDER: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree {0} is outside 1..={MAX_DEGREE}")]
    DegreeTooLarge(u32),
    #[error("field order {p}^{e} does not fit the supported range")]
    FieldTooLarge { p: u32, e: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {value} does not belong to GF({q})")]
    FieldMismatch { value: u64, q: u32 },
}

/// An element of some GF(q), identified by its integer encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// Integer encoding (base-p digits are the polynomial coefficients).
    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub(crate) fn from_index_unchecked(v: u32) -> Self {
        FieldElem(v)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

/// A finite field GF(p^e) with its canonical modulus.
///
/// Cloning is cheap; clones share the arithmetic tables.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.0.p)
            .field("e", &self.0.e)
            .field("modulus", &self.0.modulus)
            .finish()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, e)` with `q = p^e`, `p` prime.
pub fn prime_power(q: u64) -> Result<(u32, u32), GfError> {
    if q < 2 {
        return Err(GfError::NotPrimePower(q));
    }
    let mut p = 2u64;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let mut rest = q;
    let mut e = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    if rest != 1 || p > u32::MAX as u64 {
        return Err(GfError::NotPrimePower(q));
    }
    Ok((p as u32, e))
}

// Dense polynomials over GF(p), constant term first, no trailing zeros.

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let top = r.len() - 1;
        let factor = (r[top] as u64 * lead_inv as u64 % p as u64) as u32;
        let shift = top - db;
        for (i, &bi) in b.iter().enumerate() {
            let sub = (factor as u64 * bi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(a: u32, mut n: u32, p: u32) -> u32 {
    let (mut base, mut acc, m) = (a as u64 % p as u64, 1u64, p as u64);
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        n >>= 1;
    }
    acc as u32
}

fn digits(mut value: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for slot in out.iter_mut() {
        *slot = (value % p as u64) as u32;
        value /= p as u64;
    }
    out
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for t in 1..=deg / 2 {
        let count = (p as u64).pow(t as u32);
        for low in 0..count {
            let mut g = digits(low, p, t);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree `e` over GF(p), ordered by integer
/// encoding (highest non-leading coefficient most significant).
fn canonical_modulus(p: u32, e: u32) -> Vec<u32> {
    let count = (p as u64).pow(e);
    for low in 0..count {
        let mut f = digits(low, p, e as usize);
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Builds the canonical GF(p^e).
pub fn make_field(p: u32, e: u32) -> Result<FieldSpec, GfError> {
    FieldSpec::new(p, e)
}

impl FieldSpec {
    pub fn new(p: u32, e: u32) -> Result<Self, GfError> {
        if !is_prime(p as u64) {
            return Err(GfError::NotPrime(p));
        }
        if e == 0 || e > MAX_DEGREE {
            return Err(GfError::DegreeTooLarge(e));
        }
        let q = (p as u64).checked_pow(e).filter(|&q| q <= MAX_ORDER).ok_or(GfError::FieldTooLarge { p, e })? as u32;
        let modulus = canonical_modulus(p, e);
        let mut inner = Inner { p, e, q, modulus, tables: None };
        if q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(FieldSpec(Arc::new(inner)))
    }

    /// Field of order `q`, which must be a prime power.
    pub fn of_order(q: u64) -> Result<Self, GfError> {
        let (p, e) = prime_power(q)?;
        Self::new(p, e)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn e(&self) -> u32 {
        self.0.e
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients, constant term first (length `e + 1`, monic).
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    /// The element with integer encoding `value`.
    pub fn elem(&self, value: u64) -> Result<FieldElem, GfError> {
        if value < self.0.q as u64 {
            Ok(FieldElem(value as u32))
        } else {
            Err(GfError::FieldMismatch { value, q: self.0.q })
        }
    }

    /// The image of an integer under `Z -> GF(p) -> GF(q)`.
    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem(n.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElem, GfError> {
        let p = self.0.p;
        if coeffs.len() > self.0.e as usize || coeffs.iter().any(|&c| c >= p) {
            let value = coeffs.iter().rev().fold(0u64, |acc, &c| acc.saturating_mul(p as u64).saturating_add(c as u64));
            return Err(GfError::FieldMismatch { value, q: self.0.q });
        }
        let value = coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        Ok(FieldElem(value))
    }

    /// Coefficient vector of length `e`, constant term first.
    pub fn coeffs(&self, a: FieldElem) -> Vec<u32> {
        digits(a.0 as u64, self.0.p, self.0.e as usize)
    }

    #[inline]
    pub fn contains(&self, a: FieldElem) -> bool {
        a.0 < self.0.q
    }

    /// All elements in canonical order, zero first.
    pub fn elements(&self) -> Vec<FieldElem> {
        (0..self.0.q).map(FieldElem).collect()
    }

    /// Nonzero elements in canonical order.
    pub fn nonzero_elements(&self) -> Vec<FieldElem> {
        (1..self.0.q).map(FieldElem).collect()
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        debug_assert!(self.contains(a) && self.contains(b));
        if let Some(t) = &self.0.tables {
            return FieldElem(t.add[(a.0 * self.0.q + b.0) as usize]);
        }
        if self.0.p == 2 {
            return FieldElem(a.0 ^ b.0);
        }
        if self.0.e == 1 {
            return FieldElem(((a.0 as u64 + b.0 as u64) % self.0.p as u64) as u32);
        }
        let p = self.0.p;
        let sum: Vec<u32> = self.coeffs(a).into_iter().zip(self.coeffs(b)).map(|(x, y)| (x + y) % p).collect();
        self.pack(&sum)
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        debug_assert!(self.contains(a));
        if let Some(t) = &self.0.tables {
            return FieldElem(t.neg[a.0 as usize]);
        }
        if self.0.p == 2 {
            return a;
        }
        let p = self.0.p;
        let neg: Vec<u32> = self.coeffs(a).into_iter().map(|c| (p - c) % p).collect();
        self.pack(&neg)
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        debug_assert!(self.contains(a) && self.contains(b));
        if let Some(t) = &self.0.tables {
            return FieldElem(t.mul[(a.0 * self.0.q + b.0) as usize]);
        }
        mul_poly(&self.0, a, b)
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem, GfError> {
        if a.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        if let Some(t) = &self.0.tables {
            return Ok(FieldElem(t.inv[a.0 as usize]));
        }
        Ok(self.pow(a, self.0.q as u64 - 2))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^n` with `0^0 = 1`.
    pub fn pow(&self, a: FieldElem, mut n: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    fn pack(&self, coeffs: &[u32]) -> FieldElem {
        let p = self.0.p;
        FieldElem(coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c))
    }

    /// Flat `q x q` addition table, if precomputed.
    pub fn add_table(&self) -> Option<&[u32]> {
        self.0.tables.as_ref().map(|t| t.add.as_slice())
    }

    /// Flat `q x q` multiplication table, if precomputed.
    pub fn mul_table(&self) -> Option<&[u32]> {
        self.0.tables.as_ref().map(|t| t.mul.as_slice())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

fn mul_poly(inner: &Inner, a: FieldElem, b: FieldElem) -> FieldElem {
    let (p, e) = (inner.p, inner.e as usize);
    if e == 1 {
        return FieldElem((a.0 as u64 * b.0 as u64 % p as u64) as u32);
    }
    let x = digits(a.0 as u64, p, e);
    let y = digits(b.0 as u64, p, e);
    let mut prod = vec![0u64; 2 * e - 1];
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for (j, &yj) in y.iter().enumerate() {
            prod[i + j] = (prod[i + j] + xi as u64 * yj as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    let r = poly_rem(&prod, &inner.modulus, p);
    FieldElem(r.iter().rev().fold(0u32, |acc, &c| acc * p + c))
}

fn build_tables(inner: &Inner) -> Tables {
    let (p, e, q) = (inner.p, inner.e as usize, inner.q as usize);
    let mut add = vec![0u32; q * q];
    let mut mul = vec![0u32; q * q];
    let mut neg = vec![0u32; q];
    let mut inv = vec![0u32; q];
    let pack = |c: &[u32]| c.iter().rev().fold(0u32, |acc, &x| acc * p + x);
    for a in 0..q {
        let ca = digits(a as u64, p, e);
        let na: Vec<u32> = ca.iter().map(|&c| (p - c) % p).collect();
        neg[a] = pack(&na);
        for b in 0..q {
            let cb = digits(b as u64, p, e);
            let s: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
            add[a * q + b] = pack(&s);
            mul[a * q + b] = mul_poly(inner, FieldElem(a as u32), FieldElem(b as u32)).0;
        }
    }
    for a in 1..q {
        inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).expect("nonzero elements are invertible") as u32;
    }
    Tables { add, mul, neg, inv }
}

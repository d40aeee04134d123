//! Exact arithmetic in GF(p^m).
//!
//! Elements are integers in `[0, q)`: the polynomial `a_0 + a_1 x + ... + a_{m-1} x^{m-1}`
//! is stored as `a_0 + a_1 p + ... + a_{m-1} p^{m-1}`. Multiplication and inversion go
//! through log/antilog tables built once at construction.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub type Elem = u32;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Fields up to this order carry a full addition table.
const ADD_TABLE_LIMIT: u32 = 256;

#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<Elem>,
    log: Vec<u32>,
    neg: Vec<Elem>,
    add: Option<Vec<Elem>>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power `q` into `(p, m)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p as u32, m))
}

fn check_order(p: u64, m: u32) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    let too_large = Error::FieldTooLarge {
        p,
        m,
        limit: MAX_FIELD_ORDER,
    };
    let q = p.checked_pow(m).ok_or(too_large.clone())?;
    if q > MAX_FIELD_ORDER {
        return Err(too_large);
    }
    Ok(q as u32)
}

/// Powers of x modulo `modulus`, or `None` when x does not have order q - 1.
fn power_table(p: u32, m: u32, q: u32, modulus: &[u32]) -> Option<Vec<Elem>> {
    if modulus[0] == 0 {
        return None;
    }
    let top_unit = p.pow(m - 1);
    let mut table = Vec::with_capacity(q as usize - 1);
    let mut e: u32 = 1;
    for i in 0..q - 1 {
        if i > 0 && e == 1 {
            return None;
        }
        table.push(e);
        // multiply by x and reduce x^m = -(a_0 + ... + a_{m-1} x^{m-1})
        let top = e / top_unit;
        let mut shifted = (e % top_unit) * p;
        if top != 0 {
            let mut out = 0;
            let mut unit = 1;
            for a in &modulus[..m as usize] {
                let digit = shifted % p;
                shifted /= p;
                let sub = (top * a) % p;
                out += ((digit + p - sub) % p) * unit;
                unit *= p;
            }
            shifted = out;
        }
        e = shifted;
    }
    (e == 1).then_some(table)
}

impl FieldSpec {
    /// Builds GF(p^m) over the lexicographically smallest primitive polynomial of
    /// degree m (coefficients `(a_{m-1}, ..., a_0)` compared as a base-p integer).
    /// For m = 1 the generator is the smallest primitive root mod p.
    pub fn new(p: u32, m: u32) -> Result<Arc<Self>> {
        let q = check_order(p as u64, m)?;
        if m == 1 {
            let alpha = (1..p.max(2))
                .find(|&g| power_table(p, 1, q, &[(p - g) % p, 1]).is_some())
                .unwrap_or(1);
            return Self::with_modulus(p, vec![(p - alpha) % p, 1]);
        }
        for c in 0..q {
            let mut modulus: Vec<u32> = (0..m).map(|i| (c / p.pow(i)) % p).collect();
            modulus.push(1);
            if let Some(exp) = power_table(p, m, q, &modulus) {
                return Ok(Arc::new(Self::from_tables(p, m, q, modulus, exp)));
            }
        }
        unreachable!("a primitive polynomial exists for every degree")
    }

    /// GF(q) for a prime power q.
    pub fn of_order(q: u64) -> Result<Arc<Self>> {
        let (p, m) = prime_power(q)
            .ok_or_else(|| Error::InvalidParameters(format!("{q} is not a prime power")))?;
        Self::new(p, m)
    }

    /// Builds the field over an explicit little-endian monic modulus, which must be
    /// primitive.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Arc<Self>> {
        if modulus.len() < 2 {
            return Err(Error::BadModulus(modulus));
        }
        let m = modulus.len() as u32 - 1;
        let q = check_order(p as u64, m)?;
        if modulus[m as usize] != 1 || modulus.iter().any(|&a| a >= p) {
            return Err(Error::BadModulus(modulus));
        }
        let exp = power_table(p, m, q, &modulus).ok_or_else(|| Error::BadModulus(modulus.clone()))?;
        Ok(Arc::new(Self::from_tables(p, m, q, modulus, exp)))
    }

    fn from_tables(p: u32, m: u32, q: u32, modulus: Vec<u32>, mut exp: Vec<Elem>) -> Self {
        let mut log = vec![0u32; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        exp.extend_from_within(..);
        let mut field = FieldSpec {
            p,
            m,
            q,
            modulus,
            exp,
            log,
            neg: Vec::new(),
            add: None,
        };
        field.neg = (0..q).map(|a| field.digitwise(a, 0, |x, _| (p - x) % p)).collect();
        if q <= ADD_TABLE_LIMIT && p != 2 {
            let mut table = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = field.digitwise(a, b, |x, y| (x + y) % p);
                }
            }
            field.add = Some(table);
        }
        field
    }

    fn digitwise(&self, mut a: u32, mut b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
        let mut out = 0;
        let mut unit = 1;
        for _ in 0..self.m {
            out += op(a % self.p, b % self.p) * unit;
            a /= self.p;
            b /= self.p;
            unit *= self.p;
        }
        out
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Little-endian monic modulus coefficients (length m + 1).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element (residue class of x; smallest primitive root when m = 1).
    pub fn alpha(&self) -> Elem {
        self.exp[1 % (self.q as usize - 1).max(1)]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.q
    }

    pub fn contains(&self, a: Elem) -> bool {
        a < self.q
    }

    pub fn check(&self, a: Elem) -> Result<Elem> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::BadElement { elem: a, q: self.q })
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            a ^ b
        } else if let Some(table) = &self.add {
            table[(a * self.q + b) as usize]
        } else {
            let p = self.p;
            self.digitwise(a, b, |x, y| (x + y) % p)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::InverseOfZero);
        }
        let l = self.log[a as usize];
        Ok(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` with the convention `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * (e % (self.q as u64 - 1));
        self.exp[(l % (self.q as u64 - 1)) as usize]
    }

    /// `alpha^i`.
    pub fn exp(&self, i: u64) -> Elem {
        self.exp[(i % (self.q as u64 - 1)) as usize]
    }

    /// Discrete logarithm to base alpha; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// Absolute trace `a + a^p + ... + a^{p^{m-1}}`, an element of the prime subfield.
    pub fn trace(&self, a: Elem) -> Elem {
        let mut acc = 0;
        let mut power = a;
        for _ in 0..self.m {
            acc = self.add(acc, power);
            power = self.pow(power, self.p as u64);
        }
        acc
    }

    /// Little-endian base-p coefficients of `a`.
    pub fn digits(&self, mut a: Elem) -> Vec<u32> {
        (0..self.m)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Elem {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }
}

//! Vectors of GF(q)^len packed into integers (coordinate i is the base-q digit i).

use std::sync::Arc;

use crate::field::{Elem, FieldSpec};

#[derive(Clone, Debug)]
pub struct Packed {
    field: Arc<FieldSpec>,
    len: usize,
    size: u64,
}

impl Packed {
    pub fn new(field: Arc<FieldSpec>, len: usize) -> Self {
        let size = (field.q() as u64).pow(len as u32);
        Packed { field, len, size }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of vectors, q^len.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn encode(&self, v: &[Elem]) -> u64 {
        let q = self.field.q() as u64;
        v.iter().rev().fold(0, |acc, &e| acc * q + e as u64)
    }

    pub fn decode(&self, mut x: u64) -> Vec<Elem> {
        let q = self.field.q() as u64;
        (0..self.len)
            .map(|_| {
                let d = (x % q) as Elem;
                x /= q;
                d
            })
            .collect()
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.field.p() == 2 {
            return a ^ b;
        }
        let q = self.field.q() as u64;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut unit = 1;
        for _ in 0..self.len {
            out += self.field.add((a % q) as Elem, (b % q) as Elem) as u64 * unit;
            a /= q;
            b /= q;
            unit *= q;
        }
        out
    }

    pub fn scale(&self, c: Elem, a: u64) -> u64 {
        let q = self.field.q() as u64;
        let mut a = a;
        let mut out = 0;
        let mut unit = 1;
        for _ in 0..self.len {
            out += self.field.mul(c, (a % q) as Elem) as u64 * unit;
            a /= q;
            unit *= q;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.scale(self.field.neg(1), a)
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self, mut a: u64) -> usize {
        let q = self.field.q() as u64;
        let mut w = 0;
        for _ in 0..self.len {
            if !a.is_multiple_of(q) {
                w += 1;
            }
            a /= q;
        }
        w
    }
}

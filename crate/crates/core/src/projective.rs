//! Points of PG(k-1, q) as normalized vectors of GF(q)^k.

use std::collections::HashMap;
use std::sync::Arc;

use crate::field::{Elem, FieldSpec};

/// Scales `v` so that its first nonzero coordinate is 1; `None` for the zero vector.
pub fn normalize(field: &FieldSpec, v: &[Elem]) -> Option<Vec<Elem>> {
    let lead = *v.iter().find(|&&e| e != 0)?;
    let inv = field.inv(lead).expect("nonzero");
    Some(v.iter().map(|&e| field.mul(inv, e)).collect())
}

/// All points of PG(k-1, q), listed in lexicographic order of their normalized
/// coordinate vectors.
#[derive(Clone, Debug)]
pub struct ProjectiveSpace {
    field: Arc<FieldSpec>,
    dim: usize,
    points: Vec<Vec<Elem>>,
    index: HashMap<Vec<Elem>, usize>,
}

impl ProjectiveSpace {
    pub fn new(field: Arc<FieldSpec>, dim: usize) -> Self {
        let q = field.q() as u64;
        let total = q.pow(dim as u32);
        let mut points = Vec::with_capacity(((total - 1) / (q - 1)) as usize);
        for x in 1..total {
            // coordinate 0 is the most significant digit, so x ascending is lexicographic
            let v: Vec<Elem> = (0..dim)
                .map(|i| ((x / q.pow((dim - 1 - i) as u32)) % q) as Elem)
                .collect();
            if v.iter().find(|&&e| e != 0) == Some(&1) {
                points.push(v);
            }
        }
        let index = points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        ProjectiveSpace {
            field,
            dim,
            points,
            index,
        }
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Elem>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[Elem] {
        &self.points[i]
    }

    /// Index of the point spanned by `v`; `None` for the zero vector.
    pub fn index_of(&self, v: &[Elem]) -> Option<usize> {
        let n = normalize(&self.field, v)?;
        self.index.get(&n).copied()
    }

    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| self.field.add(acc, self.field.mul(x, y)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_counts() {
        for (q, k, count) in [(2, 3, 7), (3, 3, 13), (4, 3, 21), (2, 4, 15), (5, 2, 6)] {
            let f = FieldSpec::of_order(q).unwrap();
            assert_eq!(ProjectiveSpace::new(f, k).len(), count);
        }
    }

    #[test]
    fn index_is_scale_invariant() {
        let f = FieldSpec::new(2, 2).unwrap();
        let ps = ProjectiveSpace::new(f, 3);
        let i = ps.index_of(&[0, 1, 2]).unwrap();
        assert_eq!(ps.index_of(&[0, 2, 3]), Some(i));
        assert_eq!(ps.index_of(&[0, 3, 1]), Some(i));
        assert_eq!(ps.index_of(&[0, 0, 0]), None);
    }
}

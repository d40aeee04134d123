//! Dense matrices over a [`FieldSpec`] with exact row reduction.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};

#[derive(Clone, PartialEq, Eq)]
pub struct MatGF {
    field: Arc<FieldSpec>,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for MatGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatGF {}x{} over GF({})", self.rows, self.cols, self.field.q())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Result of [`MatGF::rref`].
#[derive(Debug, Clone)]
pub struct Echelon {
    pub matrix: MatGF,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl MatGF {
    pub fn zeros(field: Arc<FieldSpec>, rows: usize, cols: usize) -> Self {
        MatGF {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Arc<FieldSpec>, k: usize) -> Self {
        let mut m = Self::zeros(field, k, k);
        for i in 0..k {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: Arc<FieldSpec>, rows: &[Vec<Elem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Dimension("ragged rows".into()));
            }
            for &e in row {
                data.push(field.check(e)?);
            }
        }
        Ok(MatGF {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Arc<FieldSpec>, height: usize, columns: &[Vec<Elem>]) -> Result<Self> {
        let mut m = Self::zeros(field, height, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != height {
                return Err(Error::Dimension("column height".into()));
            }
            for (i, &e) in col.iter().enumerate() {
                m.set(i, j, m.field.check(e)?);
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> MatGF {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &MatGF) -> Result<MatGF> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0;
                for l in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(i, l), other.get(l, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// `v * self` for a row vector `v`.
    pub fn combine_rows(&self, coeffs: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (r, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(c, g));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    /// Reduced row-echelon form.
    pub fn rref(&self) -> Echelon {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pr) = (rank..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            m.swap_rows(pr, rank);
            let inv = f.inv(m.get(rank, c)).expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = f.mul(inv, m.get(rank, j));
                m.set(rank, j, v);
            }
            for r in 0..m.rows {
                let factor = m.get(r, c);
                if r == rank || factor == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(rank, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        Echelon { matrix: m, rank, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The nonzero rows of the reduced echelon form: a basis of the row space.
    pub fn row_basis(&self) -> MatGF {
        let e = self.rref();
        let mut m = e.matrix;
        m.data.truncate(e.rank * m.cols);
        m.rows = e.rank;
        m
    }

    /// Basis `B` of `{x : self * x^t = 0}`, one vector per row; `B` has
    /// `cols - rank` rows.
    pub fn null_space(&self) -> MatGF {
        let f = &self.field;
        let e = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        let mut basis = Self::zeros(f.clone(), free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            basis.set(i, fc, 1);
            for (r, &pc) in e.pivots.iter().enumerate() {
                basis.set(i, pc, f.neg(e.matrix.get(r, fc)));
            }
        }
        basis
    }

    /// True when both matrices span the same row space.
    pub fn same_row_space(&self, other: &MatGF) -> bool {
        self.cols == other.cols && self.row_basis().data == other.row_basis().data
    }

    /// Stacks the rows of `other` under `self`.
    pub fn stack(&self, other: &MatGF) -> Result<MatGF> {
        if self.cols != other.cols {
            return Err(Error::Dimension("stack width".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatGF {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Places the columns of `other` to the right of `self`.
    pub fn concat(&self, other: &MatGF) -> Result<MatGF> {
        if self.rows != other.rows {
            return Err(Error::Dimension("concat height".into()));
        }
        let mut out = Self::zeros(self.field.clone(), self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank_and_empty_kernel() {
        let f = FieldSpec::new(3, 1).unwrap();
        let id = MatGF::identity(f, 4);
        assert_eq!(id.rank(), 4);
        assert_eq!(id.null_space().rows(), 0);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let f = FieldSpec::new(2, 1).unwrap();
        let z = MatGF::zeros(f, 2, 4);
        assert_eq!(z.rank(), 0);
        let ns = z.null_space();
        assert_eq!(ns.rows(), 4);
        assert_eq!(ns.rank(), 4);
    }

    #[test]
    fn gf4_kernel_annihilates_rows() {
        let f = FieldSpec::new(2, 2).unwrap();
        let g = MatGF::from_rows(f, &[vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(g.rank(), 2);
        let ns = g.null_space();
        assert_eq!(ns.rows(), 2);
        assert!(g.mul(&ns.transpose()).unwrap().is_zero());
    }

    #[test]
    fn rref_preserves_row_space() {
        let f = FieldSpec::new(5, 1).unwrap();
        let g = MatGF::from_rows(f, &[vec![1, 2, 3, 4], vec![2, 4, 1, 3], vec![0, 1, 1, 1]]).unwrap();
        let e = g.rref();
        assert!(e.matrix.same_row_space(&g));
        assert_eq!(e.rank, 2);
    }
}

//! Dense matrices over GF(q): row reduction, rank, nullspace.

use thiserror::Error;

use crate::gf::{FieldElem, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("entry does not belong to the matrix field")]
    FieldMismatch,
}

/// Row-major matrix over a finite field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatGF {
    field: FieldSpec,
    nrows: usize,
    ncols: usize,
    data: Vec<FieldElem>,
}

/// Output of [`MatGF::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: MatGF,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl MatGF {
    pub fn new(field: FieldSpec, nrows: usize, ncols: usize, data: Vec<FieldElem>) -> Result<Self, LinalgError> {
        if data.len() != nrows * ncols {
            return Err(LinalgError::LengthMismatch { expected: nrows * ncols, got: data.len() });
        }
        if data.iter().any(|&a| !field.contains(a)) {
            return Err(LinalgError::FieldMismatch);
        }
        Ok(MatGF { field, nrows, ncols, data })
    }

    pub fn zeros(field: FieldSpec, nrows: usize, ncols: usize) -> Self {
        MatGF { field, nrows, ncols, data: vec![FieldElem::ZERO; nrows * ncols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElem::ONE);
        }
        m
    }

    /// Builds a matrix from rows of equal length `ncols`.
    pub fn from_rows(field: FieldSpec, ncols: usize, rows: &[Vec<FieldElem>]) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(LinalgError::LengthMismatch { expected: ncols, got: row.len() });
            }
            data.extend_from_slice(row);
        }
        Self::new(field, rows.len(), ncols, data)
    }

    /// Convenience constructor from integer encodings; panics on bad input.
    pub fn from_ints(field: &FieldSpec, rows: &[&[u32]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<FieldElem>> =
            rows.iter().map(|r| r.iter().map(|&v| field.elem(v as u64).expect("entry in field")).collect()).collect();
        Self::from_rows(field.clone(), ncols, &rows).expect("rectangular input")
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.data[i * self.ncols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[FieldElem]> {
        (0..self.nrows).map(move |i| self.row(i))
    }

    pub fn data(&self) -> &[FieldElem] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<FieldElem> {
        (0..self.nrows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> MatGF {
        let mut t = MatGF::zeros(self.field.clone(), self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Submatrix keeping the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> MatGF {
        let mut data = Vec::with_capacity(self.nrows * cols.len());
        for i in 0..self.nrows {
            data.extend(cols.iter().map(|&j| self.get(i, j)));
        }
        MatGF { field: self.field.clone(), nrows: self.nrows, ncols: cols.len(), data }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &MatGF) -> Result<MatGF, LinalgError> {
        if other.ncols != self.ncols {
            return Err(LinalgError::LengthMismatch { expected: self.ncols, got: other.ncols });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatGF { field: self.field.clone(), nrows: self.nrows + other.nrows, ncols: self.ncols, data })
    }

    pub fn push_row(&mut self, row: &[FieldElem]) -> Result<(), LinalgError> {
        if row.len() != self.ncols {
            return Err(LinalgError::LengthMismatch { expected: self.ncols, got: row.len() });
        }
        self.data.extend_from_slice(row);
        self.nrows += 1;
        Ok(())
    }

    /// `x * self` for a row vector `x` of length `nrows`.
    pub fn left_mul_vec(&self, x: &[FieldElem]) -> Vec<FieldElem> {
        let f = &self.field;
        let mut out = vec![FieldElem::ZERO; self.ncols];
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row(i)) {
                *o = f.add(*o, f.mul(xi, a));
            }
        }
        out
    }

    /// Reduced row echelon form by Gauss-Jordan elimination, pivoting on the
    /// first nonzero entry of each column.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.ncols {
            if r == m.nrows {
                break;
            }
            let Some(pr) = (r..m.nrows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.ncols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.nrows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                let neg = f.neg(factor);
                for j in c..m.ncols {
                    let v = f.add(m.get(i, j), f.mul(neg, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.ncols {
            self.data.swap(a * self.ncols + j, b * self.ncols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The nonzero rows of the reduced row echelon form.
    pub fn row_basis(&self) -> MatGF {
        let rref = self.rref();
        let mut m = rref.matrix;
        m.data.truncate(rref.rank * m.ncols);
        m.nrows = rref.rank;
        m
    }

    /// Basis (as rows) of `{v : self * v^T = 0}`, one row per free column.
    pub fn nullspace(&self) -> MatGF {
        let f = &self.field;
        let Rref { matrix: r, rank, pivots } = self.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = MatGF::zeros(f.clone(), 0, self.ncols);
        for free in (0..self.ncols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![FieldElem::ZERO; self.ncols];
            v[free] = FieldElem::ONE;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            basis.push_row(&v).expect("row length");
        }
        debug_assert_eq!(rank + basis.nrows, self.ncols);
        basis
    }

    /// True iff `v` lies in the row space.
    pub fn rowspace_contains(&self, v: &[FieldElem]) -> Result<bool, LinalgError> {
        if v.len() != self.ncols {
            return Err(LinalgError::LengthMismatch { expected: self.ncols, got: v.len() });
        }
        let mut aug = self.clone();
        aug.push_row(v)?;
        Ok(aug.rank() == self.rank())
    }

    /// Multiplies column `j` by `scale[j]`.
    pub fn scale_columns(&self, scale: &[FieldElem]) -> Result<MatGF, LinalgError> {
        if scale.len() != self.ncols {
            return Err(LinalgError::LengthMismatch { expected: self.ncols, got: scale.len() });
        }
        let f = &self.field;
        let mut out = self.clone();
        for i in 0..self.nrows {
            for (j, &s) in scale.iter().enumerate() {
                let v = f.mul(self.get(i, j), s);
                out.set(i, j, v);
            }
        }
        Ok(out)
    }
}

/// Standard bilinear form `sum a_i b_i`.
pub fn dot(field: &FieldSpec, a: &[FieldElem], b: &[FieldElem]) -> FieldElem {
    a.iter().zip(b).fold(FieldElem::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn identity_is_reduced() {
        let f = make_field(5, 1).unwrap();
        let id = MatGF::identity(f, 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(id.nullspace().nrows(), 0);
    }

    #[test]
    fn zero_matrix() {
        let f = make_field(2, 1).unwrap();
        let z = MatGF::zeros(f, 1, 3);
        let r = z.rref();
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
        assert_eq!(z.nullspace().nrows(), 3);
        assert!(z.rowspace_contains(&[FieldElem::ZERO; 3]).unwrap());
    }

    #[test]
    fn repeated_rows() {
        let f = make_field(2, 1).unwrap();
        let m = MatGF::from_ints(&f, &[&[1, 1], &[1, 1]]);
        let r = m.rref();
        assert_eq!(r.matrix, MatGF::from_ints(&f, &[&[1, 1], &[0, 0]]));
        assert_eq!(r.rank, 1);
        let ns = MatGF::from_ints(&f, &[&[1, 1]]).nullspace();
        assert_eq!(ns, MatGF::from_ints(&f, &[&[1, 1]]));
    }

    #[test]
    fn membership() {
        let f = make_field(3, 1).unwrap();
        let m = MatGF::from_ints(&f, &[&[1, 2, 0, 1], &[2, 1, 0, 2], &[0, 1, 1, 0]]);
        assert_eq!(m.rank(), 2);
        for row in m.rows() {
            assert!(m.rowspace_contains(row).unwrap());
        }
        // The rref has pivots in columns 0 and 1; e_3 has no component there.
        assert_eq!(m.rref().pivots, vec![0, 1]);
        let e3: Vec<FieldElem> = [0, 0, 0, 1].iter().map(|&v| f.elem(v).unwrap()).collect();
        assert!(!m.rowspace_contains(&e3).unwrap());
        assert_eq!(m.rowspace_contains(&e3[..3]), Err(LinalgError::LengthMismatch { expected: 4, got: 3 }));
    }

    #[test]
    fn constructor_checks() {
        let f = make_field(3, 1).unwrap();
        assert!(MatGF::new(f.clone(), 2, 2, vec![FieldElem::ZERO; 3]).is_err());
        let bad = make_field(5, 1).unwrap().from_int(4);
        assert_eq!(MatGF::new(f, 1, 1, vec![bad]), Err(LinalgError::FieldMismatch));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_matrix() -> impl Strategy<Value = MatGF> {
            (0usize..4, 1usize..6, 1usize..8).prop_flat_map(|(fi, nr, nc)| {
                let (p, e): (u32, u32) = [(2, 1), (3, 1), (2, 2), (5, 1)][fi];
                let q = p.pow(e);
                proptest::collection::vec(0..q, nr * nc).prop_map(move |vals| {
                    let f = make_field(p, e).unwrap();
                    let data = vals.into_iter().map(|v| f.elem(v as u64).unwrap()).collect();
                    MatGF::new(f, nr, nc, data).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn rref_is_idempotent(m in arb_matrix()) {
                let r = m.rref();
                prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
                prop_assert!(r.pivots.windows(2).all(|w| w[0] < w[1]));
                prop_assert!(r.rank <= m.nrows().min(m.ncols()));
            }

            #[test]
            fn rank_nullity_and_orthogonality(m in arb_matrix()) {
                let ns = m.nullspace();
                prop_assert_eq!(m.rank() + ns.nrows(), m.ncols());
                prop_assert_eq!(ns.rank(), ns.nrows());
                for v in ns.rows() {
                    for r in m.rows() {
                        prop_assert!(dot(m.field(), r, v).is_zero());
                    }
                }
            }
        }
    }
}

//! Dense exact matrices and canonical subspaces.
//!
//! Everything here is pure and exact: Gaussian elimination with first-nonzero
//! pivoting, unique reduced row-echelon forms, kernels, Kronecker products.
//! Tensor index convention, used everywhere a map on V (x) W is materialized:
//! the basis vector v_i (x) w_j has index i * dim(W) + j (row-major, left
//! factor major).

use crate::error::AlgError;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, field, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row);
        }
        Mat { rows: r, cols: c, field, entries }
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Mat {
        let mut m = Mat::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Column vector from coordinates.
    pub fn col_vec(field: FieldSpec, v: &[Scalar]) -> Mat {
        Mat::from_fn(field, v.len(), 1, |i, _| v[i].clone())
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self.at(i, j).add(rhs.at(i, j)))
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self.at(i, j).sub(rhs.at(i, j)))
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self.at(i, j).mul(c))
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = Mat::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() && !self.at(i, j).is_zero() {
                        acc = acc.add(&self.at(i, j).mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product under the row-major tensor convention.
    pub fn kron(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.field, rhs.field);
        Mat::from_fn(self.field, self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            let (i1, i2) = (i / rhs.rows, i % rhs.rows);
            let (j1, j2) = (j / rhs.cols, j % rhs.cols);
            self.at(i1, j1).mul(rhs.at(i2, j2))
        })
    }

    /// Stacks `self` on top of `other` (same column count).
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, field: self.field, entries }
    }

    /// Unique reduced row-echelon form, with rank and pivot columns.
    pub fn rref(&self) -> (Mat, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // first nonzero pivot in column c at or below row r
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let a = m.at(r, j).clone();
                    let b = m.at(p, j).clone();
                    m.set(r, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = m.at(r, c).inv();
            for j in 0..m.cols {
                let v = m.at(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in 0..m.cols {
                        let v = m.at(i, j).sub(&f.mul(m.at(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of the right kernel {x : Mx = 0}, as a canonical Subspace.
    pub fn kernel(&self) -> Subspace {
        let (r, rank, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis_rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (prow, &pcol) in pivots.iter().enumerate().take(rank) {
                v[pcol] = r.at(prow, f).neg();
            }
            basis_rows.push(v);
        }
        Subspace::from_vectors(self.field, self.cols, basis_rows)
    }

    /// Some solution of Mx = b, or None if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut aug = Mat::zero(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, rank, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate().take(rank) {
            x[pcol] = r.at(prow, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, None when singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, rank, pivots) = aug.rref();
        if rank < n || pivots[..n.min(pivots.len())] != (0..n).collect::<Vec<_>>()[..] {
            return None;
        }
        Some(Mat::from_fn(self.field, n, n, |i, j| r.at(i, n + j).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Row-major flattening (the v_i (x) w_j convention for maps).
    pub fn vec(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    pub fn from_vec(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Mat {
        assert_eq!(entries.len(), rows * cols);
        Mat { rows, cols, field, entries }
    }
}

/// A linear subspace in canonical form: basis rows in RREF.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Mat,
}

impl Subspace {
    /// Canonicalizes an arbitrary spanning set.
    pub fn from_vectors(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Subspace {
        if vectors.is_empty() {
            return Subspace { ambient_dim, basis: Mat::zero(field, 0, ambient_dim) };
        }
        let m = Mat::from_rows(field, vectors);
        assert_eq!(m.cols, ambient_dim);
        let (r, rank, _) = m.rref();
        let basis = Mat::from_fn(field, rank, ambient_dim, |i, j| r.at(i, j).clone());
        Subspace { ambient_dim, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn equal(&self, other: &Subspace) -> Result<bool, AlgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(AlgError::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(self.basis == other.basis)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        // reduce v against the RREF rows; membership iff residue is zero
        let mut v = v.to_vec();
        let (_, _, pivots) = self.basis.rref(); // already RREF; pivots recomputed cheaply
        for (row, &pc) in pivots.iter().enumerate() {
            if !v[pc].is_zero() {
                let f = v[pc].clone();
                for j in 0..v.len() {
                    v[j] = v[j].sub(&f.mul(self.basis.at(row, j)));
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the RREF basis, None if v is outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (_, _, pivots) = self.basis.rref();
        let coords: Vec<Scalar> = pivots.iter().map(|&pc| v[pc].clone()).collect();
        // verify: v must equal coords * basis
        let field = self.basis.field;
        let mut rebuilt = vec![field.zero(); self.ambient_dim];
        for (r, c) in coords.iter().enumerate() {
            for j in 0..self.ambient_dim {
                rebuilt[j] = rebuilt[j].add(&c.mul(self.basis.at(r, j)));
            }
        }
        if rebuilt.iter().zip(v).all(|(a, b)| a == b) {
            Some(coords)
        } else {
            None
        }
    }
}

pub fn subspace_equal(u: &Subspace, v: &Subspace) -> Result<bool, AlgError> {
    u.equal(v)
}

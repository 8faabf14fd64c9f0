use serde::{Serialize, Serializer};

use super::scalar::Scalar;
use crate::error::{invalid, Error, Result};

/// Row-major dense matrix over an exact field.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize, zero: &T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![zero.zero_like(); rows * cols],
        }
    }

    pub fn identity(dim: usize, one: &T) -> Self {
        let mut m = Self::zeros(dim, dim, one);
        for i in 0..dim {
            m.data[i * dim + i] = one.one_like();
        }
        m
    }

    pub fn scalar(dim: usize, c: &T) -> Self {
        let mut m = Self::zeros(dim, dim, c);
        for i in 0..dim {
            m.data[i * dim + i] = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// True when self = c·I.
    pub fn is_scalar(&self, c: &T) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j { x == c } else { x.is_zero() }
                })
            })
    }

    fn zero_elem(&self) -> T {
        self.data.first().expect("nonempty matrix").zero_like()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        if self.data.is_empty() || other.data.is_empty() {
            return Matrix { rows: self.rows, cols: other.cols, data: vec![] };
        }
        let zero = self.zero_elem();
        let mut out = Self::zeros(self.rows, other.cols, &zero);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(t, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|a| if a.is_zero() { a.clone() } else { a.mul(c) })
                .collect(),
        }
    }

    /// self − c·I.
    pub fn sub_scalar(&self, c: &T) -> Self {
        let mut out = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let idx = i * self.cols + i;
            out.data[idx] = out.data[idx].sub(c);
        }
        out
    }

    /// Kronecker product; the left factor indexes the slow coordinate.
    pub fn kron(&self, other: &Self) -> Self {
        let zero = self.zero_elem();
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols, &zero);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = v[0].zero_like();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc.add(&a.mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows, &self.zero_elem());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Row-reduces a copy and returns its rank.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce(None)
    }

    /// Gauss-Jordan elimination in place; `aug` receives the same row operations.
    fn row_reduce(&mut self, mut aug: Option<&mut Matrix<T>>) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(piv) = (rank..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(piv, rank);
            if let Some(a) = aug.as_deref_mut() {
                a.swap_rows(piv, rank);
            }
            let inv = self.get(rank, col).inv().expect("pivot is nonzero");
            self.scale_row(rank, &inv);
            if let Some(a) = aug.as_deref_mut() {
                a.scale_row(rank, &inv);
            }
            for r in 0..self.rows {
                if r == rank {
                    continue;
                }
                let f = self.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                self.axpy_row(r, rank, &f);
                if let Some(a) = aug.as_deref_mut() {
                    a.axpy_row(r, rank, &f);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, c: &T) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            if !self.data[idx].is_zero() {
                self.data[idx] = self.data[idx].mul(c);
            }
        }
    }

    /// row[dst] −= f · row[src]
    fn axpy_row(&mut self, dst: usize, src: usize, f: &T) {
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if !s.is_zero() {
                let t = f.mul(s);
                let idx = dst * self.cols + j;
                self.data[idx] = self.data[idx].sub(&t);
            }
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(invalid("inverse of a non-square matrix"));
        }
        if self.rows == 0 {
            return Ok(self.clone());
        }
        let mut a = self.clone();
        let mut inv = Self::identity(self.rows, &self.zero_elem());
        if a.row_reduce(Some(&mut inv)) < self.rows {
            return Err(Error::Singular);
        }
        Ok(inv)
    }
}

impl<T: Serialize> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[T]> = (0..self.rows)
            .map(|i| &self.data[i * self.cols..(i + 1) * self.cols])
            .collect();
        rows.serialize(s)
    }
}

use std::collections::{BTreeMap, HashMap};

use super::dense::Matrix;
use super::scalar::Scalar;

/// Row-compressed sparse matrix; each row holds (column, nonzero value) sorted by column.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, T)>>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![vec![]; rows] }
    }

    pub fn identity(dim: usize, one: &T) -> Self {
        SparseMatrix {
            rows: dim,
            cols: dim,
            data: (0..dim).map(|i| vec![(i, one.one_like())]).collect(),
        }
    }

    /// Builds from unsorted triplets, summing duplicates.
    pub fn from_triplets(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); rows];
        for (i, j, v) in entries {
            assert!(i < rows && j < cols, "entry out of range");
            let slot = acc[i].entry(j);
            match slot {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(v);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = e.get().add(&v);
                    *e.get_mut() = s;
                }
            }
        }
        SparseMatrix {
            rows,
            cols,
            data: acc
                .into_iter()
                .map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    pub fn from_dense(m: &Matrix<T>) -> Self {
        SparseMatrix {
            rows: m.rows(),
            cols: m.cols(),
            data: (0..m.rows())
                .map(|i| {
                    m.row(i)
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(j, v)| (j, v.clone()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_dense(&self, zero: &T) -> Matrix<T> {
        let mut m = Matrix::zeros(self.rows, self.cols, zero);
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                m.set(i, *j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.data[i]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&T> {
        self.data[i]
            .binary_search_by_key(&j, |(c, _)| *c)
            .ok()
            .map(|p| &self.data[i][p].1)
    }

    /// Nonzero entries as (row, column, value).
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, T> = BTreeMap::new();
                for (t, a) in row {
                    for (j, b) in &other.data[*t] {
                        let prod = a.mul(b);
                        match acc.get_mut(j) {
                            Some(s) => *s = s.add(&prod),
                            None => {
                                acc.insert(*j, prod);
                            }
                        }
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: other.cols, data }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
                    let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
                    if ca < cb {
                        out.push(a[i].clone());
                        i += 1;
                    } else if cb < ca {
                        let v = if negate { b[j].1.neg() } else { b[j].1.clone() };
                        out.push((cb, v));
                        j += 1;
                    } else {
                        let v = if negate { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                        if !v.is_zero() {
                            out.push((ca, v));
                        }
                        i += 1;
                        j += 1;
                    }
                }
                out
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| r.iter().map(|(j, v)| (*j, v.mul(c))).collect())
                .collect(),
        }
    }

    /// Kronecker product; the left factor indexes the slow coordinate.
    pub fn kron(&self, other: &Self) -> Self {
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for ra in &self.data {
            for rb in &other.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        row.push((ja * other.cols + jb, a.mul(b)));
                    }
                }
                data.push(row);
            }
        }
        SparseMatrix { rows: self.rows * other.rows, cols: self.cols * other.cols, data }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<U> {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| {
                    r.iter()
                        .filter_map(|(j, v)| {
                            let u = f(v);
                            (!u.is_zero()).then_some((*j, u))
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Row-major flattening as a sparse vector of length rows·cols.
    pub fn flatten(&self) -> Vec<(usize, T)> {
        self.entries().map(|(i, j, v)| (i * self.cols + j, v.clone())).collect()
    }
}

/// Incrementally built row echelon form of a set of sparse vectors.
///
/// Pivot rows are normalized to leading coefficient 1 and keyed by pivot column.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    pivots: HashMap<usize, Vec<(usize, T)>>,
}

impl<T: Scalar> Default for Echelon<T> {
    fn default() -> Self {
        Echelon { pivots: HashMap::new() }
    }
}

impl<T: Scalar> Echelon<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.pivots.keys().copied().collect();
        cols.sort_unstable();
        cols
    }

    /// Reduces `v` against the current pivots; returns the residual (empty if in the span).
    pub fn reduce(&self, v: &[(usize, T)]) -> Vec<(usize, T)> {
        let mut work: BTreeMap<usize, T> = v
            .iter()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (*j, x.clone()))
            .collect();
        let mut done: Vec<(usize, T)> = vec![];
        while let Some((col, val)) = work.pop_first() {
            match self.pivots.get(&col) {
                Some(prow) => {
                    // prow[0] is (col, 1)
                    for (j, p) in &prow[1..] {
                        let t = val.mul(p);
                        match work.get_mut(j) {
                            Some(s) => {
                                let d = s.sub(&t);
                                if d.is_zero() {
                                    work.remove(j);
                                } else {
                                    *s = d;
                                }
                            }
                            None => {
                                work.insert(*j, t.neg());
                            }
                        }
                    }
                }
                None => done.push((col, val)),
            }
        }
        done
    }

    /// Adds `v` to the row space; returns true if the rank grew.
    pub fn insert(&mut self, v: &[(usize, T)]) -> bool {
        let res = self.reduce(v);
        let Some((col, lead)) = res.first().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("leading entry is nonzero");
        let row: Vec<(usize, T)> = res
            .into_iter()
            .map(|(j, x)| (j, if j == col { x.one_like() } else { x.mul(&inv) }))
            .collect();
        self.pivots.insert(col, row);
        true
    }

    pub fn contains(&self, v: &[(usize, T)]) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of the matrix whose rows are the given sparse vectors.
pub fn sparse_rank<T: Scalar>(rows: &[Vec<(usize, T)>]) -> usize {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::QContext;

    #[test]
    fn sparse_agrees_with_dense() {
        let ctx = QContext::new(5).unwrap();
        let a = Matrix::from_fn(4, 4, |i, j| {
            if (i + j) % 3 == 0 { ctx.q_pow((i + 2 * j) as i64) } else { ctx.zero() }
        });
        let b = Matrix::from_fn(4, 4, |i, j| if i <= j { ctx.integer((i + j) as i64) } else { ctx.zero() });
        let sa = SparseMatrix::from_dense(&a);
        let sb = SparseMatrix::from_dense(&b);
        assert_eq!(sa.mul(&sb).to_dense(&ctx.zero()), a.mul(&b));
        assert_eq!(sa.kron(&sb).to_dense(&ctx.zero()), a.kron(&b));
        assert_eq!(sa.sub(&sb).to_dense(&ctx.zero()), a.sub(&b));
        let rows: Vec<_> = (0..4)
            .map(|i| {
                let r: Vec<_> = sa.row(i).to_vec();
                r
            })
            .collect();
        assert_eq!(sparse_rank(&rows), a.rank());
    }

    #[test]
    fn echelon_membership() {
        let ctx = QContext::new(3).unwrap();
        let mut e = Echelon::new();
        let v1 = vec![(0, ctx.one()), (3, ctx.q().clone())];
        let v2 = vec![(1, ctx.integer(2)), (3, ctx.one())];
        assert!(e.insert(&v1));
        assert!(e.insert(&v2));
        let combo = vec![(0, ctx.integer(3)), (1, ctx.integer(2)), (3, ctx.q().scale_int(3) + ctx.one())];
        assert!(e.contains(&combo));
        assert!(!e.insert(&combo));
        assert_eq!(e.rank(), 2);
    }
}

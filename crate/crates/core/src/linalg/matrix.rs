use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::elim::{self, IntRow};
use super::int::Int;
use super::scalar::Scalar;
use super::subspace::LinearSubspace;
use crate::error::{Error, Result};

/// Sorted `(column, value)` pairs with no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Row-major sparse matrix over the rationals. Absent entries are zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    nrows: usize,
    ncols: usize,
    data: Vec<SparseVec>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{}, nnz={})", self.nrows, self.ncols, self.nnz())
    }
}

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &[(usize, Scalar)], len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Sorts, merges duplicate indices and drops zeros.
pub fn normalize_sparse(mut v: Vec<(usize, Scalar)>) -> SparseVec {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

pub fn sparse_dot(a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> Scalar {
    let (mut i, mut j) = (0, 0);
    let mut acc = Scalar::zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &a[i].1 * &b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// Clears denominators and divides out the content, returning a primitive
/// integer row spanning the same line.
pub(crate) fn to_int_row(v: &[(usize, Scalar)]) -> IntRow {
    let mut l = BigInt::one();
    for (_, x) in v {
        l = l.lcm(x.denom());
    }
    let mut row: IntRow = v
        .iter()
        .map(|(c, x)| (*c, Int::from_big(x.numer() * (&l / x.denom()))))
        .collect();
    elim::make_primitive(&mut row);
    row
}

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix { nrows, ncols, data: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            nrows: n,
            ncols: n,
            data: (0..n).map(|i| vec![(i, Scalar::one())]).collect(),
        }
    }

    /// Builds from sparse rows; entries are sorted and duplicates summed.
    pub fn from_sparse_rows(ncols: usize, rows: Vec<Vec<(usize, Scalar)>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows);
        for r in rows {
            let r = normalize_sparse(r);
            if let Some((c, _)) = r.last() {
                if *c >= ncols {
                    return Err(Error::Dimension(format!("column {c} out of range {ncols}")));
                }
            }
            data.push(r);
        }
        Ok(Matrix { nrows, ncols, data })
    }

    pub fn from_dense(nrows: usize, ncols: usize, rows: &[Vec<Scalar>]) -> Result<Self> {
        if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension(format!("expected {nrows}x{ncols} dense data")));
        }
        Ok(Matrix { nrows, ncols, data: rows.iter().map(|r| sparse_from_dense(r)).collect() })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "ragged rows");
                r.iter()
                    .enumerate()
                    .filter(|(_, x)| **x != 0)
                    .map(|(i, x)| (i, super::scalar::q(*x)))
                    .collect()
            })
            .collect();
        Matrix { nrows: rows.len(), ncols, data }
    }

    /// Builds the matrix whose columns are the given sparse vectors.
    pub fn from_sparse_columns(nrows: usize, cols: &[SparseVec]) -> Result<Self> {
        let mut data: Vec<SparseVec> = vec![Vec::new(); nrows];
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col {
                if *i >= nrows {
                    return Err(Error::Dimension(format!("row {i} out of range {nrows}")));
                }
                if !x.is_zero() {
                    data[*i].push((j, x.clone()));
                }
            }
        }
        Ok(Matrix { nrows, ncols: cols.len(), data })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, Scalar)] {
        &self.data[i]
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.data.iter()
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(p) => self.data[i][p].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.data.iter().map(|r| dense_from_sparse(r, self.ncols)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.ncols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, x) in r {
                data[*j].push((i, x.clone()));
            }
        }
        Matrix { nrows: self.ncols, ncols: self.nrows, data }
    }

    pub fn column(&self, j: usize) -> SparseVec {
        self.data
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                r.binary_search_by_key(&j, |(c, _)| *c).ok().map(|p| (i, r[p].1.clone()))
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.ncols != other.nrows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let mut acc: Vec<Scalar> = vec![Scalar::zero(); other.ncols];
        let mut touched: Vec<usize> = Vec::new();
        let mut mark = vec![false; other.ncols];
        let mut data = Vec::with_capacity(self.nrows);
        for r in &self.data {
            for (k, a) in r {
                for (j, b) in &other.data[*k] {
                    if !mark[*j] {
                        mark[*j] = true;
                        touched.push(*j);
                    }
                    acc[*j] += a * b;
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for &j in &touched {
                mark[j] = false;
                let v = std::mem::replace(&mut acc[j], Scalar::zero());
                if !v.is_zero() {
                    out.push((j, v));
                }
            }
            touched.clear();
            data.push(out);
        }
        Ok(Matrix { nrows: self.nrows, ncols: other.ncols, data })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.ncols {
            return Err(Error::Dimension(format!("vector length {} vs {} columns", v.len(), self.ncols)));
        }
        Ok(self
            .data
            .iter()
            .map(|r| r.iter().fold(Scalar::zero(), |acc, (j, x)| acc + x * &v[*j]))
            .collect())
    }

    pub fn mul_sparse_vec(&self, v: &[(usize, Scalar)]) -> Result<SparseVec> {
        if let Some((j, _)) = v.last() {
            if *j >= self.ncols {
                return Err(Error::Dimension("sparse vector index out of range".into()));
            }
        }
        Ok(self
            .data
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                let d = sparse_dot(r, v);
                (!d.is_zero()).then_some((i, d))
            })
            .collect())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        if s.is_zero() {
            return Matrix::zeros(self.nrows, self.ncols);
        }
        Matrix {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self
                .data
                .iter()
                .map(|r| r.iter().map(|(j, x)| (*j, x * s)).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return Err(Error::Dimension("matrix sum shape mismatch".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| normalize_sparse(a.iter().chain(b.iter()).cloned().collect()))
            .collect();
        Ok(Matrix { nrows: self.nrows, ncols: self.ncols, data })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// `self - s * I` for square matrices.
    pub fn shift_diagonal(&self, s: &Scalar) -> Result<Matrix> {
        if self.nrows != self.ncols {
            return Err(Error::Dimension("diagonal shift of a non-square matrix".into()));
        }
        let data = self
            .data
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut v = r.clone();
                v.push((i, -s.clone()));
                normalize_sparse(v)
            })
            .collect();
        Ok(Matrix { nrows: self.nrows, ncols: self.ncols, data })
    }

    pub fn vstack(blocks: &[&Matrix]) -> Result<Matrix> {
        let ncols = blocks.first().map_or(0, |b| b.ncols);
        if blocks.iter().any(|b| b.ncols != ncols) {
            return Err(Error::Dimension("vstack column mismatch".into()));
        }
        let data: Vec<SparseVec> = blocks.iter().flat_map(|b| b.data.iter().cloned()).collect();
        Ok(Matrix { nrows: data.len(), ncols, data })
    }

    pub fn hstack(blocks: &[&Matrix]) -> Result<Matrix> {
        let nrows = blocks.first().map_or(0, |b| b.nrows);
        if blocks.iter().any(|b| b.nrows != nrows) {
            return Err(Error::Dimension("hstack row mismatch".into()));
        }
        let mut data: Vec<SparseVec> = vec![Vec::new(); nrows];
        let mut offset = 0;
        for b in blocks {
            for (i, r) in b.data.iter().enumerate() {
                data[i].extend(r.iter().map(|(j, x)| (j + offset, x.clone())));
            }
            offset += b.ncols;
        }
        Ok(Matrix { nrows, ncols: offset, data })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix {
            nrows: idx.len(),
            ncols: self.ncols,
            data: idx.iter().map(|&i| self.data[i].clone()).collect(),
        }
    }

    /// Restricts to the given columns, renumbered in the given order.
    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut pos = vec![usize::MAX; self.ncols];
        for (k, &j) in idx.iter().enumerate() {
            pos[j] = k;
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut v: SparseVec = r
                    .iter()
                    .filter(|(j, _)| pos[*j] != usize::MAX)
                    .map(|(j, x)| (pos[*j], x.clone()))
                    .collect();
                v.sort_by_key(|(j, _)| *j);
                v
            })
            .collect();
        Matrix { nrows: self.nrows, ncols: idx.len(), data }
    }

    pub(crate) fn int_rows(&self) -> Vec<IntRow> {
        self.data.iter().map(|r| to_int_row(r)).filter(|r| !r.is_empty()).collect()
    }

    /// Exact rank by sparse fraction-free elimination.
    pub fn rank(&self) -> usize {
        elim::rank(self.int_rows(), self.ncols)
    }

    /// `{x : M x = 0}` in canonical form.
    pub fn kernel(&self) -> LinearSubspace {
        LinearSubspace::kernel_of(self)
    }

    /// Row space in canonical form.
    pub fn row_space(&self) -> LinearSubspace {
        LinearSubspace::span_rows(self)
    }

    /// Column space in canonical form.
    pub fn column_space(&self) -> LinearSubspace {
        LinearSubspace::span_rows(&self.transpose())
    }

    pub fn max_abs_entry(&self) -> Scalar {
        self.data
            .iter()
            .flat_map(|r| r.iter().map(|(_, x)| x.abs()))
            .max()
            .unwrap_or_else(Scalar::zero)
    }

    /// Solves `M x = b`, returning one particular solution if it exists.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.nrows {
            return Err(Error::Dimension("right-hand side length".into()));
        }
        let aug = Matrix::hstack(&[self, &Matrix::from_sparse_columns(self.nrows, &[sparse_from_dense(b)])?])?;
        let ech = elim::reduce(aug.int_rows(), aug.ncols);
        let rref = ech.into_rational();
        let mut x = vec![Scalar::zero(); self.ncols];
        for (pc, row) in &rref {
            if *pc == self.ncols {
                return Ok(None);
            }
            // reduced row: x_pc + sum_free a_j x_j = rhs; take free variables = 0
            let rhs = row
                .binary_search_by_key(&self.ncols, |(c, _)| *c)
                .map(|p| row[p].1.clone())
                .unwrap_or_else(|_| Scalar::zero());
            x[*pc] = rhs;
        }
        Ok(Some(x))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|(_, x)| x.is_integer()))
    }

    pub fn entries_bits(&self) -> u64 {
        self.data
            .iter()
            .flat_map(|r| r.iter().map(|(_, x)| x.numer().bits() + x.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.nrows.min(self.ncols)).map(|i| self.get(i, i)).fold(Scalar::zero(), |a, b| a + b)
    }

    pub fn is_scalar_multiple_of_identity(&self) -> Option<Scalar> {
        if self.nrows != self.ncols {
            return None;
        }
        let d = if self.nrows == 0 { Scalar::zero() } else { self.get(0, 0) };
        for (i, r) in self.data.iter().enumerate() {
            let ok = match r.as_slice() {
                [] => d.is_zero(),
                [(j, x)] => *j == i && *x == d,
                _ => false,
            };
            if !ok {
                return None;
            }
        }
        Some(d)
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Scalar::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{frac, q};

    #[test]
    fn rank_of_small_examples() {
        assert_eq!(Matrix::identity(2).rank(), 2);
        assert_eq!(Matrix::zeros(3, 5).rank(), 0);
        let m = Matrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
    }

    #[test]
    fn multiply_and_transpose() {
        let a = Matrix::from_i64(&[vec![1, 2], vec![0, 1]]);
        let b = Matrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, Matrix::from_i64(&[vec![2, 1], vec![1, 0]]));
        assert_eq!(ab.transpose().transpose(), ab);
        assert!(a.mul(&Matrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn solve_finds_solution_or_reports_inconsistency() {
        let a = Matrix::from_i64(&[vec![1, 1], vec![1, -1]]);
        let x = a.solve(&[q(3), q(1)]).unwrap().unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        let s = Matrix::from_i64(&[vec![1, 1], vec![2, 2]]);
        assert!(s.solve(&[q(1), q(3)]).unwrap().is_none());
        let y = s.solve(&[q(1), q(2)]).unwrap().unwrap();
        assert_eq!(s.mul_vec(&y).unwrap(), vec![q(1), q(2)]);
    }

    #[test]
    fn rational_rows_are_scaled() {
        let m = Matrix::from_dense(1, 2, &[vec![frac(1, 2), frac(1, 3)]]).unwrap();
        let r = m.int_rows();
        assert_eq!(r[0], vec![(0, Int::Small(3)), (1, Int::Small(2))]);
    }

    #[test]
    fn shift_diagonal_subtracts_identity() {
        let m = Matrix::from_i64(&[vec![2, 1], vec![0, 2]]);
        let s = m.shift_diagonal(&q(2)).unwrap();
        assert_eq!(s, Matrix::from_i64(&[vec![0, 1], vec![0, 0]]));
        assert_eq!(Matrix::identity(3).scale(&q(5)).is_scalar_multiple_of_identity(), Some(q(5)));
    }
}

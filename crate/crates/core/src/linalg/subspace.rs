use num_traits::{One, Zero};

use super::dense;
use super::elim;
use super::matrix::{normalize_sparse, sparse_dot, Matrix, SparseVec};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A subspace of `Q^ambient` stored as the row space of its reduced row
/// echelon basis. The basis is canonical, so two equal subspaces have
/// identical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubspace {
    ambient: usize,
    pivots: Vec<usize>,
    basis: Matrix,
}

impl LinearSubspace {
    pub fn zero(ambient: usize) -> Self {
        LinearSubspace { ambient, pivots: Vec::new(), basis: Matrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        LinearSubspace { ambient, pivots: (0..ambient).collect(), basis: Matrix::identity(ambient) }
    }

    pub fn span_rows(m: &Matrix) -> Self {
        let ech = elim::reduce(m.int_rows(), m.ncols());
        let rows = ech.into_rational();
        let pivots = rows.iter().map(|(c, _)| *c).collect();
        let basis = Matrix::from_sparse_rows(m.ncols(), rows.into_iter().map(|(_, r)| r).collect())
            .expect("echelon rows fit the ambient space");
        LinearSubspace { ambient: m.ncols(), pivots, basis }
    }

    pub fn span(ambient: usize, vectors: &[SparseVec]) -> Result<Self> {
        Ok(Self::span_rows(&Matrix::from_sparse_rows(ambient, vectors.to_vec())?))
    }

    pub fn span_dense(ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let m = Matrix::from_dense(vectors.len(), ambient, vectors)?;
        Ok(Self::span_rows(&m))
    }

    /// `{x : M x = 0}`.
    pub fn kernel_of(m: &Matrix) -> Self {
        let n = m.ncols();
        let ech = elim::reduce(m.int_rows(), n);
        let rows = ech.into_rational();
        let mut is_pivot = vec![false; n];
        for (c, _) in &rows {
            is_pivot[*c] = true;
        }
        let free: Vec<usize> = (0..n).filter(|c| !is_pivot[*c]).collect();
        let mut pos = vec![usize::MAX; n];
        for (k, f) in free.iter().enumerate() {
            pos[*f] = k;
        }
        let mut vecs: Vec<SparseVec> = free.iter().map(|f| vec![(*f, Scalar::one())]).collect();
        for (pc, row) in &rows {
            for (c, x) in row {
                if *c != *pc {
                    vecs[pos[*c]].push((*pc, -x.clone()));
                }
            }
        }
        let vecs: Vec<SparseVec> = vecs.into_iter().map(normalize_sparse).collect();
        Self::span(n, &vecs).expect("kernel vectors fit the ambient space")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &SparseVec> {
        self.basis.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &LinearSubspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[(usize, Scalar)]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self
            .pivots
            .iter()
            .map(|p| {
                v.binary_search_by_key(p, |(c, _)| *c)
                    .map(|i| v[i].1.clone())
                    .unwrap_or_else(|_| Scalar::zero())
            })
            .collect();
        let mut acc: Vec<(usize, Scalar)> = v.to_vec();
        for (c, row) in coords.iter().zip(self.basis.rows()) {
            if c.is_zero() {
                continue;
            }
            acc.extend(row.iter().map(|(j, x)| (*j, -(x * c))));
        }
        normalize_sparse(acc).is_empty().then_some(coords)
    }

    pub fn contains_vector(&self, v: &[(usize, Scalar)]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains(&self, other: &LinearSubspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis.rows().all(|r| self.contains_vector(r)))
    }

    /// Equality by mutual containment: `rank [A; B] = dim A = dim B`.
    pub fn equals(&self, other: &LinearSubspace) -> Result<bool> {
        self.check_ambient(other)?;
        if self.dim() != other.dim() {
            return Ok(false);
        }
        let stacked = Matrix::vstack(&[&self.basis, &other.basis])?;
        Ok(stacked.rank() == self.dim())
    }

    pub fn sum(&self, other: &LinearSubspace) -> Result<LinearSubspace> {
        self.check_ambient(other)?;
        Ok(Self::span_rows(&Matrix::vstack(&[&self.basis, &other.basis])?))
    }

    pub fn intersection(&self, other: &LinearSubspace) -> Result<LinearSubspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        let m = Matrix::hstack(&[&self.basis.transpose(), &other.basis.transpose().neg()])?;
        let ker = m.kernel();
        let a = self.dim();
        let combos = ker.basis.select_columns(&(0..a).collect::<Vec<_>>());
        Ok(Self::span_rows(&combos.mul(&self.basis)?))
    }

    pub fn orthogonal_complement(&self) -> LinearSubspace {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        self.basis.kernel()
    }

    pub fn is_orthogonal_to(&self, other: &LinearSubspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self
            .basis
            .rows()
            .all(|a| other.basis.rows().all(|b| sparse_dot(a, b).is_zero())))
    }

    /// Orthogonal projection onto this subspace (standard inner product).
    pub fn project(&self, v: &[(usize, Scalar)]) -> Result<SparseVec> {
        if self.is_zero() {
            return Ok(Vec::new());
        }
        let gram = self.gram();
        let rhs: Vec<Scalar> = self.basis.rows().map(|r| sparse_dot(r, v)).collect();
        let c = dense::solve_square(&gram, &rhs)?;
        let mut acc = Vec::new();
        for (ci, row) in c.iter().zip(self.basis.rows()) {
            if !ci.is_zero() {
                acc.extend(row.iter().map(|(j, x)| (*j, x * ci)));
            }
        }
        Ok(normalize_sparse(acc))
    }

    pub fn gram(&self) -> Vec<Vec<Scalar>> {
        let rows: Vec<&SparseVec> = self.basis.rows().collect();
        rows.iter().map(|a| rows.iter().map(|b| sparse_dot(a, b)).collect()).collect()
    }

    /// Matrix of `op` restricted to this (invariant) subspace, in echelon
    /// coordinates: column `i` holds the coordinates of `op(b_i)`.
    pub fn restrict(&self, op: &Matrix) -> Result<Matrix> {
        if op.nrows() != self.ambient || op.ncols() != self.ambient {
            return Err(Error::Dimension("operator does not act on the ambient space".into()));
        }
        let mut cols = Vec::with_capacity(self.dim());
        for b in self.basis.rows() {
            let image = op.mul_sparse_vec(b)?;
            let coords = self
                .coordinates(&image)
                .ok_or_else(|| Error::Precondition("subspace is not invariant under the operator".into()))?;
            cols.push(super::matrix::sparse_from_dense(&coords));
        }
        Matrix::from_sparse_columns(self.dim(), &cols)
    }

    /// Image of the subspace spanned by coordinate vectors (rows of `coords`).
    pub fn embed(&self, coords: &Matrix) -> Result<LinearSubspace> {
        Ok(Self::span_rows(&coords.mul(&self.basis)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::q;

    fn e(i: usize) -> SparseVec {
        vec![(i, q(1))]
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(3).kernel().is_zero());
        let k = Matrix::from_i64(&[vec![1, -1]]).kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains_vector(&[(0, q(1)), (1, q(1))]));
    }

    #[test]
    fn complement_examples() {
        let s = LinearSubspace::span(2, &[e(0)]).unwrap();
        let c = s.orthogonal_complement();
        assert!(c.equals(&LinearSubspace::span(2, &[e(1)]).unwrap()).unwrap());
        assert!(LinearSubspace::full(4).orthogonal_complement().is_zero());
        assert_eq!(LinearSubspace::zero(3).orthogonal_complement().dim(), 3);
    }

    #[test]
    fn equality_examples() {
        let a = LinearSubspace::span(2, &[vec![(0, q(1)), (1, q(1))]]).unwrap();
        let b = LinearSubspace::span(2, &[vec![(0, q(2)), (1, q(2))]]).unwrap();
        assert!(a.equals(&b).unwrap());
        assert_eq!(a, b);
        let c = LinearSubspace::span(2, &[e(0)]).unwrap();
        let d = LinearSubspace::span(2, &[e(1)]).unwrap();
        assert!(!c.equals(&d).unwrap());
        assert!(c.equals(&LinearSubspace::zero(3)).is_err());
    }

    #[test]
    fn intersection_and_projection() {
        let a = LinearSubspace::span(3, &[e(0), e(1)]).unwrap();
        let b = LinearSubspace::span(3, &[e(1), e(2)]).unwrap();
        let i = a.intersection(&b).unwrap();
        assert!(i.equals(&LinearSubspace::span(3, &[e(1)]).unwrap()).unwrap());
        let line = LinearSubspace::span(2, &[vec![(0, q(1)), (1, q(1))]]).unwrap();
        let p = line.project(&[(0, q(2))]).unwrap();
        assert_eq!(p, vec![(0, q(1)), (1, q(1))]);
    }

    #[test]
    fn restriction_of_invariant_subspace() {
        // swap operator on Q^2 restricted to the diagonal line is the identity
        let swap = Matrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        let diag = LinearSubspace::span(2, &[vec![(0, q(1)), (1, q(1))]]).unwrap();
        assert_eq!(diag.restrict(&swap).unwrap(), Matrix::identity(1));
        let axis = LinearSubspace::span(2, &[e(0)]).unwrap();
        assert!(axis.restrict(&swap).is_err());
    }
}

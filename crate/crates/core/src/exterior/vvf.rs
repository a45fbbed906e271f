//! Vector-valued forms `Λ^k ⊗ V` and endomorphisms `End(V) = V* ⊗ V`.
//!
//! Coordinates of a vector-valued form are indexed by `(monomial, j)` with
//! the monomial index major: position `mono * N + j` holds the coefficient of
//! `e^I ⊗ v_j`. For degree one this is `i * N + j`, the same layout used for
//! endomorphism entries `A_i^j`, so the two coordinate systems coincide.

use num_traits::{One, Zero};

use super::basis::FormBasis;
use super::form::KForm;
use crate::error::{Error, Result};
use crate::linalg::matrix::SparseVec;
use crate::linalg::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorValuedForm {
    dim: usize,
    degree: usize,
    components: Vec<KForm>,
}

impl VectorValuedForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        VectorValuedForm { dim, degree, components: vec![KForm::zero(dim, degree); dim] }
    }

    /// Component `j` is the form paired with `v_j`.
    pub fn from_components(components: Vec<KForm>) -> Result<Self> {
        let dim = components.len();
        let degree = components.first().map_or(0, KForm::degree);
        if components.iter().any(|c| c.dim() != dim || c.degree() != degree) {
            return Err(Error::Dimension("components must share ambient dimension and degree".into()));
        }
        Ok(VectorValuedForm { dim, degree, components })
    }

    /// `ω ⊗ v_j`.
    pub fn tensor(form: &KForm, j: usize) -> Result<Self> {
        if j >= form.dim() {
            return Err(Error::Dimension(format!("basis vector {j} outside R^{}", form.dim())));
        }
        let mut out = VectorValuedForm::zero(form.dim(), form.degree());
        out.components[j] = form.clone();
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn component(&self, j: usize) -> &KForm {
        &self.components[j]
    }

    pub fn components(&self) -> &[KForm] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(KForm::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim || self.degree != other.degree {
            return Err(Error::Dimension("vector-valued forms of different type".into()));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(VectorValuedForm { dim: self.dim, degree: self.degree, components })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        VectorValuedForm {
            dim: self.dim,
            degree: self.degree,
            components: self.components.iter().map(|c| c.scale(s)).collect(),
        }
    }

    /// `α ∧ X`, acting on the form part.
    pub fn wedge_left(&self, alpha: &KForm) -> Result<Self> {
        let components = self.components.iter().map(|c| alpha.wedge(c)).collect::<Result<Vec<_>>>()?;
        Ok(VectorValuedForm { dim: self.dim, degree: self.degree + alpha.degree(), components })
    }

    pub fn coordinate_len(&self) -> usize {
        super::basis::binomial(self.dim, self.degree) * self.dim
    }

    pub fn coordinates(&self) -> Vec<Scalar> {
        let basis = FormBasis::new(self.dim, self.degree);
        crate::linalg::matrix::dense_from_sparse(&self.sparse_coordinates(&basis), basis.len() * self.dim)
    }

    pub fn sparse_coordinates(&self, basis: &FormBasis) -> SparseVec {
        let n = self.dim;
        let mut out: SparseVec = Vec::new();
        for (j, c) in self.components.iter().enumerate() {
            for (m, x) in c.terms() {
                out.push((basis.index_of(*m).expect("monomial in basis") * n + j, x.clone()));
            }
        }
        out.sort_by_key(|(i, _)| *i);
        out
    }

    pub fn from_sparse(dim: usize, basis: &FormBasis, coords: &[(usize, Scalar)]) -> Result<Self> {
        let mut out = VectorValuedForm::zero(dim, basis.degree());
        for (idx, x) in coords {
            let (mono, j) = (idx / dim, idx % dim);
            if mono >= basis.len() {
                return Err(Error::Dimension("coordinate index out of range".into()));
            }
            out.components[j].add_term(basis.monomial(mono), x.clone());
        }
        Ok(out)
    }

    pub fn from_coordinates(dim: usize, degree: usize, coords: &[Scalar]) -> Result<Self> {
        let basis = FormBasis::new(dim, degree);
        if coords.len() != basis.len() * dim {
            return Err(Error::Dimension("coordinate vector length".into()));
        }
        Self::from_sparse(dim, &basis, &crate::linalg::matrix::sparse_from_dense(coords))
    }

    pub fn inner(&self, other: &Self) -> Result<Scalar> {
        if self.dim != other.dim || self.degree != other.degree {
            return Err(Error::Dimension("vector-valued forms of different type".into()));
        }
        self.components
            .iter()
            .zip(&other.components)
            .try_fold(Scalar::zero(), |acc, (a, b)| Ok(acc + a.inner(b)?))
    }
}

/// `A ∈ End(R^N)` with `A(v_i) = Σ_j A_i^j v_j`; `entries[i][j] = A_i^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    dim: usize,
    entries: Vec<Vec<Scalar>>,
}

impl Endomorphism {
    pub fn zero(dim: usize) -> Self {
        Endomorphism { dim, entries: vec![vec![Scalar::zero(); dim]; dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut a = Self::zero(dim);
        for i in 0..dim {
            a.entries[i][i] = Scalar::one();
        }
        a
    }

    /// From `entries[i][j] = A_i^j`.
    pub fn from_entries(entries: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = entries.len();
        if entries.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension("endomorphism entries must be square".into()));
        }
        Ok(Endomorphism { dim, entries })
    }

    /// From a matrix acting on column vectors (`M e_c = Σ_r M[r][c] e_r`), so
    /// `A_i^j = M[j][i]`.
    pub fn from_column_matrix(m: &[Vec<Scalar>]) -> Result<Self> {
        let dim = m.len();
        if m.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension("matrix must be square".into()));
        }
        Ok(Endomorphism { dim, entries: (0..dim).map(|i| (0..dim).map(|j| m[j][i].clone()).collect()).collect() })
    }

    pub fn to_column_matrix(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim).map(|r| (0..self.dim).map(|c| self.entries[c][r].clone()).collect()).collect()
    }

    /// `u ⊗ w`: `v ↦ u(v) w`, entries `u_i w_j`.
    pub fn tensor(u: &[Scalar], w: &[Scalar]) -> Result<Self> {
        if u.len() != w.len() {
            return Err(Error::Dimension("covector and vector lengths differ".into()));
        }
        Ok(Endomorphism { dim: u.len(), entries: u.iter().map(|ui| w.iter().map(|wj| ui * wj).collect()).collect() })
    }

    /// `E_{ij}`: `v_i ↦ v_j`, every other basis vector to zero.
    pub fn elementary(dim: usize, i: usize, j: usize) -> Self {
        let mut a = Self::zero(dim);
        a.entries[i][j] = Scalar::one();
        a
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!("End(R^{}) vs End(R^{})", self.dim, other.dim)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Endomorphism {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Endomorphism {
            dim: self.dim,
            entries: self.entries.iter().map(|r| r.iter().map(|x| x * s).collect()).collect(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let b = &other.entries[i][k];
                if b.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let a = &self.entries[k][j];
                    if !a.is_zero() {
                        out.entries[i][j] += b * a;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.dim {
            return Err(Error::Dimension("vector length".into()));
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, a) in self.entries[i].iter().enumerate() {
                out[j] += vi * a;
            }
        }
        Ok(out)
    }

    /// Adjoint for the standard inner product.
    pub fn transpose(&self) -> Self {
        Endomorphism {
            dim: self.dim,
            entries: (0..self.dim).map(|i| (0..self.dim).map(|j| self.entries[j][i].clone()).collect()).collect(),
        }
    }

    pub fn is_skew(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.entries[i][j] == -self.entries[j][i].clone()))
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn trace(&self) -> Scalar {
        (0..self.dim).map(|i| self.entries[i][i].clone()).fold(Scalar::zero(), |a, b| a + b)
    }

    /// Coordinates `A_i^j` at position `i * N + j`.
    pub fn coordinates(&self) -> Vec<Scalar> {
        self.entries.iter().flat_map(|r| r.iter().cloned()).collect()
    }

    pub fn sparse_coordinates(&self) -> SparseVec {
        let n = self.dim;
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(i, r)| {
                r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(move |(j, x)| (i * n + j, x.clone()))
            })
            .collect()
    }

    pub fn from_coordinates(dim: usize, coords: &[Scalar]) -> Result<Self> {
        if coords.len() != dim * dim {
            return Err(Error::Dimension("endomorphism coordinate length".into()));
        }
        Ok(Endomorphism { dim, entries: coords.chunks(dim).map(|c| c.to_vec()).collect() })
    }

    pub fn from_sparse(dim: usize, coords: &[(usize, Scalar)]) -> Result<Self> {
        let mut a = Self::zero(dim);
        for (k, x) in coords {
            if *k >= dim * dim {
                return Err(Error::Dimension("endomorphism coordinate index".into()));
            }
            a.entries[k / dim][k % dim] = x.clone();
        }
        Ok(a)
    }

    /// `Σ A_i^j v^i ⊗ v_j` as a degree-one vector-valued form.
    pub fn to_vector_valued(&self) -> VectorValuedForm {
        let n = self.dim;
        let components = (0..n)
            .map(|j| KForm::covector(&(0..n).map(|i| self.entries[i][j].clone()).collect::<Vec<_>>()))
            .collect();
        VectorValuedForm { dim: n, degree: 1, components }
    }

    pub fn from_vector_valued(x: &VectorValuedForm) -> Result<Self> {
        if x.degree() != 1 {
            return Err(Error::InvalidArgument("only degree-one forms are endomorphisms".into()));
        }
        let n = x.dim();
        let mut a = Self::zero(n);
        for j in 0..n {
            for i in 0..n {
                a.entries[i][j] = x.component(j).coeff(super::basis::Monomial::single(i));
            }
        }
        Ok(a)
    }

    /// The covector `a^j = Σ_i A_i^j v^i`.
    pub fn column_form(&self, j: usize) -> KForm {
        KForm::covector(&(0..self.dim).map(|i| self.entries[i][j].clone()).collect::<Vec<_>>())
    }
}

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::basis::{FormBasis, Monomial, MAX_DIM};
use crate::error::{Error, Result};
use crate::linalg::matrix::{sparse_dot, SparseVec};
use crate::linalg::Scalar;

/// An element of `Λ^k (R^N)^*` in the monomial basis. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KForm {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

fn signed(x: &Scalar, sign: i8) -> Scalar {
    if sign < 0 {
        -x.clone()
    } else {
        x.clone()
    }
}

impl KForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        assert!(dim <= MAX_DIM);
        KForm { dim, degree, terms: BTreeMap::new() }
    }

    /// The constant 0-form `1`.
    pub fn one(dim: usize) -> Self {
        let mut f = KForm::zero(dim, 0);
        f.terms.insert(Monomial::ONE, Scalar::one());
        f
    }

    /// `e^{i1} ∧ ... ∧ e^{ik}` for 0-based strictly increasing indices.
    pub fn monomial(dim: usize, indices: &[usize]) -> Result<Self> {
        let m = Monomial::from_indices(indices)
            .filter(|_| indices.iter().all(|&i| i < dim))
            .ok_or_else(|| Error::InvalidArgument(format!("bad index tuple {indices:?} for dimension {dim}")))?;
        let mut f = KForm::zero(dim, indices.len());
        f.terms.insert(m, Scalar::one());
        Ok(f)
    }

    pub fn volume(dim: usize) -> Self {
        KForm::monomial(dim, &(0..dim).collect::<Vec<_>>()).expect("increasing indices")
    }

    /// The 1-form `Σ c_i e^i`.
    pub fn covector(coeffs: &[Scalar]) -> Self {
        let mut f = KForm::zero(coeffs.len(), 1);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                f.terms.insert(Monomial::single(i), c.clone());
            }
        }
        f
    }

    pub fn from_terms(dim: usize, degree: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Result<Self> {
        let mut f = KForm::zero(dim, degree);
        for (m, c) in terms {
            if m.degree() != degree || m.indices().any(|i| i >= dim) {
                return Err(Error::InvalidArgument(format!("monomial {:#b} does not fit Λ^{degree} of R^{dim}", m.0)));
            }
            f.add_term(m, c);
        }
        Ok(f)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_else(Scalar::zero)
    }

    fn same_space(&self, other: &KForm) -> Result<()> {
        if self.dim != other.dim || self.degree != other.degree {
            return Err(Error::Dimension(format!(
                "Λ^{} on R^{} vs Λ^{} on R^{}",
                self.degree, self.dim, other.degree, other.dim
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &KForm) -> Result<KForm> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &KForm) -> Result<KForm> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> KForm {
        if s.is_zero() {
            return KForm::zero(self.dim, self.degree);
        }
        KForm {
            dim: self.dim,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    pub fn wedge(&self, other: &KForm) -> Result<KForm> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!("wedge of forms on R^{} and R^{}", self.dim, other.dim)));
        }
        let mut out = KForm::zero(self.dim, self.degree + other.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some(s) = ma.wedge_sign(*mb) {
                    out.add_term(Monomial(ma.0 | mb.0), signed(&(ca * cb), s));
                }
            }
        }
        Ok(out)
    }

    /// `α^{∧k}`; `α^0 = 1`.
    pub fn power(&self, k: usize) -> Result<KForm> {
        let mut out = KForm::one(self.dim);
        for _ in 0..k {
            out = out.wedge(self)?;
        }
        Ok(out)
    }

    /// `ι_{v_i} α`, contraction with the `i`-th basis vector in the first slot.
    pub fn interior_basis(&self, i: usize) -> Result<KForm> {
        if self.degree == 0 {
            return Err(Error::InvalidArgument("interior product of a 0-form".into()));
        }
        if i >= self.dim {
            return Err(Error::Dimension(format!("basis vector {i} outside R^{}", self.dim)));
        }
        let mut out = KForm::zero(self.dim, self.degree - 1);
        for (m, c) in &self.terms {
            if let Some((s, rest)) = m.interior_sign(i) {
                out.add_term(rest, signed(c, s));
            }
        }
        Ok(out)
    }

    /// `ι_v α = α(v, ·, ..., ·)`.
    pub fn interior(&self, v: &[Scalar]) -> Result<KForm> {
        if v.len() != self.dim {
            return Err(Error::Dimension(format!("vector of length {} on R^{}", v.len(), self.dim)));
        }
        if self.degree == 0 {
            return Err(Error::InvalidArgument("interior product of a 0-form".into()));
        }
        let mut out = KForm::zero(self.dim, self.degree - 1);
        for (m, c) in &self.terms {
            for i in m.indices() {
                if v[i].is_zero() {
                    continue;
                }
                let (s, rest) = m.interior_sign(i).expect("index present");
                out.add_term(rest, signed(&(c * &v[i]), s));
            }
        }
        Ok(out)
    }

    /// Hodge star for the standard metric and orientation `e^1 ∧ ... ∧ e^N`:
    /// `*e^I = s e^{I^c}` with `e^I ∧ s e^{I^c} = vol`.
    pub fn hodge(&self) -> KForm {
        let mut out = KForm::zero(self.dim, self.dim - self.degree);
        for (m, c) in &self.terms {
            let comp = m.complement(self.dim);
            let s = m.wedge_sign(comp).expect("disjoint supports");
            out.add_term(comp, signed(c, s));
        }
        out
    }

    /// The induced inner product: increasing monomials are orthonormal.
    pub fn inner(&self, other: &KForm) -> Result<Scalar> {
        self.same_space(other)?;
        let (small, large) = if self.nnz() <= other.nnz() { (self, other) } else { (other, self) };
        Ok(small
            .terms
            .iter()
            .filter_map(|(m, c)| large.terms.get(m).map(|d| c * d))
            .fold(Scalar::zero(), |a, b| a + b))
    }

    pub fn norm2(&self) -> Scalar {
        self.terms.values().map(|c| c * c).fold(Scalar::zero(), |a, b| a + b)
    }

    pub fn basis(&self) -> FormBasis {
        FormBasis::new(self.dim, self.degree)
    }

    pub fn coordinates(&self) -> Vec<Scalar> {
        self.coordinates_in(&self.basis())
    }

    pub fn coordinates_in(&self, basis: &FormBasis) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); basis.len()];
        for (m, c) in &self.terms {
            out[basis.index_of(*m).expect("monomial in basis")] = c.clone();
        }
        out
    }

    pub fn sparse_coordinates(&self, basis: &FormBasis) -> SparseVec {
        let mut v: SparseVec = self
            .terms
            .iter()
            .map(|(m, c)| (basis.index_of(*m).expect("monomial in basis"), c.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn from_coordinates(basis: &FormBasis, coords: &[Scalar]) -> Result<KForm> {
        if coords.len() != basis.len() {
            return Err(Error::Dimension(format!("{} coordinates for a basis of {}", coords.len(), basis.len())));
        }
        let mut f = KForm::zero(basis.dim(), basis.degree());
        for (i, c) in coords.iter().enumerate() {
            f.add_term(basis.monomial(i), c.clone());
        }
        Ok(f)
    }

    pub fn from_sparse(basis: &FormBasis, coords: &[(usize, Scalar)]) -> Result<KForm> {
        let mut f = KForm::zero(basis.dim(), basis.degree());
        for (i, c) in coords {
            if *i >= basis.len() {
                return Err(Error::Dimension("coordinate index out of range".into()));
            }
            f.add_term(basis.monomial(*i), c.clone());
        }
        Ok(f)
    }

    /// Coefficient of the volume monomial; only meaningful for top-degree forms.
    pub fn top_coefficient(&self) -> Scalar {
        self.coeff(Monomial::ONE.complement(self.dim))
    }

    pub fn inner_sparse(a: &SparseVec, b: &SparseVec) -> Scalar {
        sparse_dot(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::q;

    fn e(dim: usize, idx: &[usize]) -> KForm {
        KForm::monomial(dim, idx).unwrap()
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(e(4, &[0]).wedge(&e(4, &[1])).unwrap(), e(4, &[0, 1]));
        let omega = e(4, &[0, 1]).add(&e(4, &[2, 3])).unwrap();
        assert_eq!(omega.wedge(&omega).unwrap(), e(4, &[0, 1, 2, 3]).scale(&q(2)));
        let a = e(5, &[0]).add(&e(5, &[3]).scale(&q(3))).unwrap();
        assert!(a.wedge(&a).unwrap().is_zero());
        assert!(e(3, &[0]).wedge(&e(4, &[0])).is_err());
        assert!(e(3, &[0, 1]).wedge(&e(3, &[1, 2])).unwrap().is_zero());
    }

    #[test]
    fn interior_examples() {
        let e12 = e(3, &[0, 1]);
        assert_eq!(e12.interior_basis(0).unwrap(), e(3, &[1]));
        assert_eq!(e12.interior_basis(1).unwrap(), e(3, &[0]).scale(&q(-1)));
        assert!(KForm::one(3).interior_basis(0).is_err());
        let v = vec![q(1), q(2), q(0)];
        assert_eq!(e12.interior(&v).unwrap(), e(3, &[1]).sub(&e(3, &[0]).scale(&q(2))).unwrap());
    }

    #[test]
    fn hodge_examples() {
        assert_eq!(KForm::one(5).hodge(), KForm::volume(5));
        assert_eq!(e(4, &[0, 1]).hodge(), e(4, &[2, 3]));
        assert_eq!(e(4, &[0, 2]).hodge(), e(4, &[1, 3]).scale(&q(-1)));
    }

    #[test]
    fn inner_examples() {
        assert_eq!(e(4, &[0, 1]).inner(&e(4, &[0, 1])).unwrap(), q(1));
        assert_eq!(e(4, &[0, 1]).inner(&e(4, &[0, 2])).unwrap(), q(0));
        assert!(e(4, &[0, 1]).inner(&e(4, &[0])).is_err());
    }

    #[test]
    fn coordinates_examples() {
        assert_eq!(e(3, &[0, 1]).coordinates(), vec![q(1), q(0), q(0)]);
        assert_eq!(KForm::zero(3, 2).coordinates(), vec![q(0); 3]);
        let b = FormBasis::new(6, 3);
        let f = e(6, &[1, 3, 5]).add(&e(6, &[0, 1, 2]).scale(&q(-4))).unwrap();
        assert_eq!(KForm::from_coordinates(&b, &f.coordinates_in(&b)).unwrap(), f);
    }

    #[test]
    fn wedge_beyond_top_degree_is_zero() {
        let v = KForm::volume(3);
        let w = v.wedge(&e(3, &[1])).unwrap();
        assert!(w.is_zero());
        assert_eq!(w.degree(), 4);
    }
}

//! Structure forms, their isotropy algebras, and the pointwise spaces
//! `𝔤^k ⊆ Λ^k ⊗ V`, `P^k = (𝔤^k)^⊥` and `E^k = A^k(Λ^k ⊗ V)`.

use std::sync::OnceLock;

use num_traits::One;

use super::rho::{elementary_action, rho_star};
use crate::error::{Error, Result};
use crate::exterior::{binomial, Endomorphism, FormBasis, KForm};
use crate::linalg::{LinearSubspace, Matrix, Scalar, SparseVec};
use crate::report::CheckReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureForm {
    dim: usize,
    pieces: Vec<KForm>,
}

impl StructureForm {
    pub fn new(pieces: Vec<KForm>) -> Result<Self> {
        let dim = pieces.first().ok_or_else(|| Error::InvalidArgument("no pieces".into()))?.dim();
        if pieces.iter().any(|p| p.dim() != dim) {
            return Err(Error::Dimension("pieces live on different ambient spaces".into()));
        }
        if pieces.iter().all(KForm::is_zero) {
            return Err(Error::InvalidArgument("every piece is zero".into()));
        }
        Ok(StructureForm { dim, pieces })
    }

    pub fn single(piece: KForm) -> Result<Self> {
        Self::new(vec![piece])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pieces(&self) -> &[KForm] {
        &self.pieces
    }

    /// Bases and row offsets of the stacked output space `⊕ Λ^{degree(p_i)}`.
    fn stacked(&self, degree: impl Fn(usize) -> usize) -> (Vec<FormBasis>, Vec<usize>, usize) {
        let bases: Vec<FormBasis> = self.pieces.iter().map(|p| FormBasis::new(self.dim, degree(p.degree()))).collect();
        let mut offsets = Vec::with_capacity(bases.len());
        let mut total = 0;
        for b in &bases {
            offsets.push(total);
            total += b.len();
        }
        (bases, offsets, total)
    }

    /// Matrix of `A ↦ (ρ_*(A)φ_i)_i` on `End(V)` (coordinates `i * N + j`).
    pub fn derivation_matrix(&self) -> Matrix {
        let n = self.dim;
        let (bases, offsets, total) = self.stacked(|p| p);
        let mut cols = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut col: SparseVec = Vec::new();
                for ((p, b), off) in self.pieces.iter().zip(&bases).zip(&offsets) {
                    let img = elementary_action(p, i, j);
                    col.extend(img.sparse_coordinates(b).into_iter().map(|(r, x)| (r + off, x)));
                }
                cols.push(col);
            }
        }
        Matrix::from_sparse_columns(total, &cols).expect("column lengths")
    }

    /// The Lie algebra of the stabilizer: the kernel of `A ↦ ρ_*(A)Φ`.
    pub fn isotropy_algebra(&self) -> LinearSubspace {
        self.derivation_matrix().kernel()
    }

    pub fn annihilated_by(&self, a: &Endomorphism) -> Result<bool> {
        for p in &self.pieces {
            if !rho_star(a, p)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Matrix of `A^k(ω ⊗ v) = ω ∧ ι_v Φ` from `Λ^k ⊗ V` to `⊕ Λ^{p_i + k - 1}`.
    pub fn ak_matrix(&self, k: usize) -> Matrix {
        let n = self.dim;
        let domain = FormBasis::new(n, k);
        let (bases, offsets, total) = self.stacked(|p| (p + k).saturating_sub(1));
        let contractions: Vec<Vec<KForm>> = self
            .pieces
            .iter()
            .map(|p| {
                (0..n)
                    .map(|j| if p.degree() == 0 { KForm::zero(n, 0) } else { p.interior_basis(j).expect("degree checked") })
                    .collect()
            })
            .collect();
        let mut cols = Vec::with_capacity(domain.len() * n);
        for mono in domain.monomials() {
            let omega = KForm::from_terms(n, k, [(*mono, Scalar::one())]).expect("basis monomial");
            for j in 0..n {
                let mut col: SparseVec = Vec::new();
                for ((c, b), off) in contractions.iter().zip(&bases).zip(&offsets) {
                    if c[j].is_zero() {
                        continue;
                    }
                    let img = omega.wedge(&c[j]).expect("same ambient space");
                    col.extend(img.sparse_coordinates(b).into_iter().map(|(r, x)| (r + off, x)));
                }
                cols.push(col);
            }
        }
        Matrix::from_sparse_columns(total, &cols).expect("column lengths")
    }
}

/// `[A, B]` stays in the span for every pair of basis elements.
pub fn is_bracket_closed(g: &LinearSubspace) -> Result<bool> {
    let basis = endomorphism_basis(g)?;
    for (x, a) in basis.iter().enumerate() {
        for b in &basis[x + 1..] {
            if !g.contains_vector(&a.bracket(b)?.sparse_coordinates()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn endomorphism_dim(g: &LinearSubspace) -> Result<usize> {
    let n2 = g.ambient_dim();
    let n = (0..=n2).find(|n| n * n >= n2).unwrap_or(0);
    if n * n != n2 {
        return Err(Error::Dimension(format!("{n2} is not the dimension of an endomorphism space")));
    }
    Ok(n)
}

pub fn endomorphism_basis(g: &LinearSubspace) -> Result<Vec<Endomorphism>> {
    let n = endomorphism_dim(g)?;
    g.basis_vectors().map(|v| Endomorphism::from_sparse(n, v)).collect()
}

/// `so(N)` in `End(R^N)` coordinates.
pub fn so_algebra(n: usize) -> LinearSubspace {
    let vecs: Vec<SparseVec> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| vec![(i * n + j, Scalar::one()), (j * n + i, -Scalar::one())]))
        .collect();
    LinearSubspace::span(n * n, &vecs).expect("coordinates in range")
}

pub fn is_skew_algebra(g: &LinearSubspace) -> Result<bool> {
    Ok(endomorphism_basis(g)?.iter().all(Endomorphism::is_skew))
}

/// Spanning vectors of `𝔤^k`: `Σ_j (α ∧ a^j) ⊗ v_j` for monomials `α` of
/// degree `k - 1` and basis elements `a` of `𝔤`, in `Λ^k ⊗ V` coordinates.
pub fn gk_spanning(g: &[Endomorphism], n: usize, k: usize) -> Vec<SparseVec> {
    if k == 0 {
        return Vec::new();
    }
    let alphas = FormBasis::new(n, k - 1);
    let target = FormBasis::new(n, k);
    let mut out = Vec::with_capacity(alphas.len() * g.len());
    for mono in alphas.monomials() {
        let alpha = KForm::from_terms(n, k - 1, [(*mono, Scalar::one())]).expect("basis monomial");
        for a in g {
            let mut v: SparseVec = Vec::new();
            for j in 0..n {
                let col = a.column_form(j);
                if col.is_zero() {
                    continue;
                }
                let w = alpha.wedge(&col).expect("same ambient space");
                v.extend(w.sparse_coordinates(&target).into_iter().map(|(m, x)| (m * n + j, x)));
            }
            v.sort_by_key(|(i, _)| *i);
            if !v.is_empty() {
                out.push(v);
            }
        }
    }
    out
}

pub fn gk_subspace(g: &LinearSubspace, k: usize) -> Result<LinearSubspace> {
    let n = endomorphism_dim(g)?;
    let ambient = binomial(n, k) * n;
    LinearSubspace::span(ambient, &gk_spanning(&endomorphism_basis(g)?, n, k))
}

/// Matrix of `𝐚(u ⊗ A) = Σ A_i^j (u ∧ e^i) ⊗ v_j` on `V* ⊗ so(N)`, with the
/// domain basis `e^l ⊗ (E_ij - E_ji)`, `i < j`.
pub fn a_map_matrix(n: usize) -> Matrix {
    let so: Vec<Endomorphism> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| Endomorphism::elementary(n, i, j).sub(&Endomorphism::elementary(n, j, i)).expect("same size"))
        .collect();
    let cols = gk_spanning_all(&so, n);
    Matrix::from_sparse_columns(binomial(n, 2) * n, &cols).expect("column lengths")
}

/// Like `gk_spanning` for `k = 2`, but keeps zero images so that columns
/// stay aligned with the domain basis.
fn gk_spanning_all(g: &[Endomorphism], n: usize) -> Vec<SparseVec> {
    let target = FormBasis::new(n, 2);
    let mut out = Vec::with_capacity(n * g.len());
    for l in 0..n {
        let u = KForm::monomial(n, &[l]).expect("index in range");
        for a in g {
            let mut v: SparseVec = Vec::new();
            for j in 0..n {
                let w = u.wedge(&a.column_form(j)).expect("same ambient space");
                v.extend(w.sparse_coordinates(&target).into_iter().map(|(m, x)| (m * n + j, x)));
            }
            v.sort_by_key(|(i, _)| *i);
            out.push(v);
        }
    }
    out
}

pub fn a_map_check(n: usize, g: &LinearSubspace) -> Result<Vec<CheckReport>> {
    if !is_skew_algebra(g)? {
        return Err(Error::Precondition("the algebra is not contained in so(N)".into()));
    }
    let full = binomial(n, 2) * n;
    let rank_so = a_map_matrix(n).rank();
    let basis = endomorphism_basis(g)?;
    let cols = gk_spanning_all(&basis, n);
    let rank_g = Matrix::from_sparse_columns(full, &cols)?.rank();
    Ok(vec![
        CheckReport::compare("amap.rank_so", "a: V*⊗so(N) → Λ²⊗V is an isomorphism", full, rank_so),
        CheckReport::compare("amap.rank_g", "a is injective on V*⊗g", n * g.dim(), rank_g),
    ])
}

/// Cached spaces attached to a structure form and its isotropy algebra.
pub struct GStructure {
    form: StructureForm,
    algebra: LinearSubspace,
    basis: Vec<Endomorphism>,
    gk: Vec<OnceLock<LinearSubspace>>,
    pk: Vec<OnceLock<LinearSubspace>>,
    ak: Vec<OnceLock<Matrix>>,
    ak_rank: Vec<OnceLock<usize>>,
    ek: Vec<OnceLock<LinearSubspace>>,
}

fn cells<T>(n: usize) -> Vec<OnceLock<T>> {
    (0..n).map(|_| OnceLock::new()).collect()
}

impl GStructure {
    /// Uses the computed isotropy algebra of `form`.
    pub fn new(form: StructureForm) -> Result<Self> {
        let algebra = form.isotropy_algebra();
        Self::with_algebra(form, algebra)
    }

    pub fn with_algebra(form: StructureForm, algebra: LinearSubspace) -> Result<Self> {
        let n = form.dim();
        if algebra.ambient_dim() != n * n {
            return Err(Error::Dimension("algebra does not live in End(V)".into()));
        }
        let basis = endomorphism_basis(&algebra)?;
        Ok(GStructure {
            form,
            algebra,
            basis,
            gk: cells(n + 1),
            pk: cells(n + 1),
            ak: cells(n + 1),
            ak_rank: cells(n + 1),
            ek: cells(n + 1),
        })
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn form(&self) -> &StructureForm {
        &self.form
    }

    pub fn algebra(&self) -> &LinearSubspace {
        &self.algebra
    }

    pub fn algebra_basis(&self) -> &[Endomorphism] {
        &self.basis
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k > self.dim() {
            return Err(Error::InvalidArgument(format!("degree {k} exceeds {}", self.dim())));
        }
        Ok(())
    }

    /// `dim Λ^k ⊗ V`.
    pub fn tensor_dim(&self, k: usize) -> usize {
        binomial(self.dim(), k) * self.dim()
    }

    pub fn gk(&self, k: usize) -> Result<&LinearSubspace> {
        self.check_k(k)?;
        Ok(self.gk[k].get_or_init(|| {
            LinearSubspace::span(self.tensor_dim(k), &gk_spanning(&self.basis, self.dim(), k))
                .expect("spanning vectors fit")
        }))
    }

    pub fn pk(&self, k: usize) -> Result<&LinearSubspace> {
        let g = self.gk(k)?;
        Ok(self.pk[k].get_or_init(|| g.orthogonal_complement()))
    }

    pub fn ak(&self, k: usize) -> Result<&Matrix> {
        self.check_k(k)?;
        Ok(self.ak[k].get_or_init(|| self.form.ak_matrix(k)))
    }

    pub fn ak_rank(&self, k: usize) -> Result<usize> {
        let a = self.ak(k)?;
        Ok(*self.ak_rank[k].get_or_init(|| a.rank()))
    }

    /// `E^k` inside the stacked output space.
    pub fn ek(&self, k: usize) -> Result<&LinearSubspace> {
        let a = self.ak(k)?;
        Ok(self.ek[k].get_or_init(|| a.column_space()))
    }

    /// `𝔤^k ⊆ Ker A^k`, checked on a basis of `𝔤^k`.
    pub fn gk_in_kernel(&self, k: usize) -> Result<bool> {
        let a = self.ak(k)?;
        for v in self.gk(k)?.basis_vectors() {
            if !a.mul_sparse_vec(v)?.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Ā^k: P^k → E^k` is bijective. Since `𝔤^k ⊆ Ker A^k`, the restriction
    /// is onto `E^k`, and it is injective iff `rank A^k = dim P^k`.
    pub fn abar_iso_check(&self, k: usize) -> Result<CheckReport> {
        let p = self.tensor_dim(k) - self.gk(k)?.dim();
        let e = self.ak_rank(k)?;
        let in_kernel = self.gk_in_kernel(k)?;
        let computed = format!("dim P{k} = {p}, dim E{k} = {e}, g{k} in Ker A{k}: {in_kernel}");
        let claimed = format!("dim P{k} = {p}, dim E{k} = {p}, g{k} in Ker A{k}: true");
        Ok(CheckReport::compare(&format!("abar.k{k}"), "the restriction of A^k to P^k is an isomorphism onto E^k", claimed, computed))
    }

    /// Rank of `A^k` restricted to an explicit basis of `P^k`; an independent
    /// route to the injectivity half of `abar_iso_check`.
    pub fn restricted_rank(&self, k: usize) -> Result<usize> {
        let p = self.pk(k)?;
        let a = self.ak(k)?;
        let images: Vec<SparseVec> = p.basis_vectors().map(|v| a.mul_sparse_vec(v)).collect::<Result<_>>()?;
        Ok(Matrix::from_sparse_rows(a.nrows(), images)?.rank())
    }
}

/// `A^1(A) = -ρ_*(A)Φ`, piece by piece.
pub fn apply_a1(form: &StructureForm, a: &Endomorphism) -> Result<Vec<KForm>> {
    form.pieces().iter().map(|p| rho_star(a, p).map(|f| f.scale(&-Scalar::one()))).collect()
}

//! Symbol maps `Sb_k(u)(X) = pr_{P^{k+1}}(u ∧ X)` and exactness at `P^1`.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::engine::GStructure;
use crate::error::{Error, Result};
use crate::exterior::{FormBasis, KForm};
use crate::linalg::matrix::normalize_sparse;
use crate::linalg::{LinearSubspace, Matrix, Scalar, SparseVec};
use crate::report::CheckReport;

/// `u ∧ X` for `X ∈ Λ^k ⊗ V` given in coordinates.
pub fn wedge_covector(u: &[Scalar], k: usize, x: &[(usize, Scalar)]) -> SparseVec {
    let n = u.len();
    let src = FormBasis::new(n, k);
    let dst = FormBasis::new(n, k + 1);
    let uf = KForm::covector(u);
    let mut out = Vec::new();
    for (idx, c) in x {
        let (mono, j) = (idx / n, idx % n);
        let f = KForm::from_terms(n, k, [(src.monomial(mono), c.clone())]).expect("basis monomial");
        let w = uf.wedge(&f).expect("same ambient space");
        out.extend(w.sparse_coordinates(&dst).into_iter().map(|(m, y)| (m * n + j, y)));
    }
    normalize_sparse(out)
}

/// `Sb_k(u)` on `P^k`. The matrix holds `⟨p_j, u ∧ x_i⟩` for the echelon
/// bases `x_i` of `P^k` and `p_j` of `P^{k+1}`. It differs from the matrix of
/// the projection in `P^{k+1}` coordinates by the invertible Gram matrix of
/// `P^{k+1}`, so ranks and kernels agree.
#[derive(Clone, Debug)]
pub struct SymbolMap {
    pub u: Vec<Scalar>,
    pub k: usize,
    pub matrix: Matrix,
}

impl SymbolMap {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// The kernel as a subspace of `Λ^k ⊗ V`.
    pub fn kernel(&self, gs: &GStructure) -> Result<LinearSubspace> {
        let ker = self.matrix.kernel();
        gs.pk(self.k)?.embed(ker.basis())
    }
}

fn check_u(gs: &GStructure, u: &[Scalar]) -> Result<()> {
    if u.len() != gs.dim() {
        return Err(Error::Dimension(format!("covector of length {} on R^{}", u.len(), gs.dim())));
    }
    if u.iter().all(Zero::is_zero) {
        return Err(Error::InvalidArgument("the covector u must be nonzero".into()));
    }
    Ok(())
}

pub fn symbol_map(gs: &GStructure, u: &[Scalar], k: usize) -> Result<SymbolMap> {
    check_u(gs, u)?;
    let src = gs.pk(k)?;
    let dst = gs.pk(k + 1)?;
    let cols: Vec<SparseVec> = src
        .basis_vectors()
        .map(|x| dst.basis().mul_sparse_vec(&wedge_covector(u, k, x)))
        .collect::<Result<_>>()?;
    Ok(SymbolMap { u: u.to_vec(), k, matrix: Matrix::from_sparse_columns(dst.dim(), &cols)? })
}

/// `Im Sb_0(u) = span{ pr_{P^1}(u ⊗ v_j) }` inside `End(V)`.
pub fn image_sb0(gs: &GStructure, u: &[Scalar]) -> Result<LinearSubspace> {
    check_u(gs, u)?;
    let n = gs.dim();
    let g = gs.algebra();
    let vecs: Vec<SparseVec> = (0..n)
        .map(|j| {
            let x = wedge_covector(u, 0, &[(j, num_traits::One::one())]);
            let pg = g.project(&x)?;
            Ok(normalize_sparse(x.into_iter().chain(pg.into_iter().map(|(i, c)| (i, -c))).collect()))
        })
        .collect::<Result<_>>()?;
    LinearSubspace::span(n * n, &vecs)
}

/// `Ker Sb_1(u) = {X ∈ P^1 : u ∧ X ∈ 𝔤^2}` inside `End(V)`.
pub fn kernel_sb1(gs: &GStructure, u: &[Scalar]) -> Result<LinearSubspace> {
    symbol_map(gs, u, 1)?.kernel(gs)
}

pub fn exactness_at_1(gs: &GStructure, u: &[Scalar]) -> Result<CheckReport> {
    let n = gs.dim();
    let im = image_sb0(gs, u)?;
    let ker = kernel_sb1(gs, u)?;
    let equal = im.equals(&ker)?;
    let computed = format!("dim Im Sb0 = {}, dim Ker Sb1 = {}, equal: {equal}", im.dim(), ker.dim());
    let claimed = format!("dim Im Sb0 = {n}, dim Ker Sb1 = {n}, equal: true");
    Ok(CheckReport::compare("symbols.exact", "the symbol complex is exact at P^1", claimed, computed)
        .with_note(format!("u = ({})", u.iter().map(crate::linalg::scalar::render).collect::<Vec<_>>().join(", "))))
}

/// A nonzero covector with entries `p/q`, `|p| ≤ 16`, `1 ≤ q ≤ 16`.
pub fn random_covector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Scalar> {
    loop {
        let u: Vec<Scalar> = (0..n)
            .map(|_| Scalar::new(rng.gen_range(-16i64..=16).into(), rng.gen_range(1i64..=16).into()))
            .collect();
        if u.iter().any(|x| !x.is_zero()) {
            return u;
        }
    }
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

//! The splitting `E^1 = A^+ ⊕ RΦ ⊕ A^-`, the operator `J(α) = *(α ∧ Φ^{n-2})`
//! on `Λ^4`, and invariant forms of a Lie algebra.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exterior::{Endomorphism, FormBasis, KForm};
use crate::gstructure::engine::endomorphism_basis;
use crate::gstructure::rho::rho_matrix;
use crate::gstructure::{GStructure, StructureForm};
use crate::linalg::scalar::render;
use crate::linalg::{LinearSubspace, Matrix, Scalar, SparseVec};
use crate::quaternionic::{build_phi, explicit_structure_algebra, structure_constants, StructureConstants};
use crate::rep::tables::{DecompositionTable, Space};
use crate::report::CheckReport;

/// Components of `E^1` as subspaces of `Λ^4` coordinates.
#[derive(Clone, Debug)]
pub struct E1Splitting {
    pub n: usize,
    pub a_plus: LinearSubspace,
    pub r_phi: LinearSubspace,
    pub a_minus: LinearSubspace,
    pub e1: LinearSubspace,
}

fn images(a1: &Matrix, elems: impl Iterator<Item = Endomorphism>) -> Result<Vec<SparseVec>> {
    elems.map(|e| a1.mul_sparse_vec(&e.sparse_coordinates())).collect()
}

/// The qK structure on `R^{4n}` with its explicit `sp(n) ⊕ sp(1)`.
pub fn qk_structure(n: usize) -> Result<GStructure> {
    GStructure::with_algebra(StructureForm::single(build_phi(n)?)?, explicit_structure_algebra(n)?)
}

pub fn split_e1(gs: &GStructure) -> Result<E1Splitting> {
    let dim = gs.dim();
    if dim % 4 != 0 || dim < 8 {
        return Err(Error::InvalidArgument("the splitting needs R^{4n} with n ≥ 2".into()));
    }
    let a1 = gs.ak(1)?;
    let out_dim = a1.nrows();
    let e = |i, j| Endomorphism::elementary(dim, i, j);
    let pairs = || (0..dim).flat_map(|i| (i + 1..dim).map(move |j| (i, j)));
    let skew = images(a1, pairs().map(|(i, j)| e(i, j).sub(&e(j, i)).expect("same size")))?;
    let mut sym = images(a1, pairs().map(|(i, j)| e(i, j).add(&e(j, i)).expect("same size")))?;
    sym.extend(images(a1, (0..dim - 1).map(|i| e(i, i).sub(&e(i + 1, i + 1)).expect("same size")))?);
    let id = images(a1, std::iter::once(Endomorphism::identity(dim)))?;
    Ok(E1Splitting {
        n: dim / 4,
        a_plus: LinearSubspace::span(out_dim, &skew)?,
        r_phi: LinearSubspace::span(out_dim, &id)?,
        a_minus: LinearSubspace::span(out_dim, &sym)?,
        e1: gs.ek(1)?.clone(),
    })
}

impl E1Splitting {
    pub fn pairwise_orthogonal(&self) -> Result<bool> {
        Ok(self.a_plus.is_orthogonal_to(&self.r_phi)?
            && self.a_plus.is_orthogonal_to(&self.a_minus)?
            && self.r_phi.is_orthogonal_to(&self.a_minus)?)
    }

    pub fn sums_to_e1(&self) -> Result<bool> {
        let s = self.a_plus.sum(&self.r_phi)?.sum(&self.a_minus)?;
        Ok(s.equals(&self.e1)? && self.a_plus.dim() + self.r_phi.dim() + self.a_minus.dim() == self.e1.dim())
    }
}

/// `J(α) = *(α ∧ Φ^{n-2})` for a 4-form `α`.
pub fn j_operator(alpha: &KForm, phi: &KForm, n: usize) -> Result<KForm> {
    if alpha.degree() != 4 {
        return Err(Error::InvalidArgument(format!("J acts on 4-forms, got degree {}", alpha.degree())));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("J needs n ≥ 2".into()));
    }
    Ok(alpha.wedge(&phi.power(n - 2)?)?.hodge())
}

/// Matrix of `J` on `Λ^4`.
pub fn j_matrix(phi: &KForm, n: usize) -> Result<Matrix> {
    let basis = FormBasis::new(phi.dim(), 4);
    let power = phi.power(n.checked_sub(2).ok_or_else(|| Error::InvalidArgument("J needs n ≥ 2".into()))?)?;
    let cols: Vec<SparseVec> = basis
        .monomials()
        .iter()
        .map(|m| {
            let f = KForm::from_terms(phi.dim(), 4, [(*m, Scalar::one())])?;
            Ok(f.wedge(&power)?.hodge().sparse_coordinates(&basis))
        })
        .collect::<Result<_>>()?;
    Matrix::from_sparse_columns(basis.len(), &cols)
}

/// The scalar `λ` with `J v = λ v` on every basis vector, if it exists.
pub fn common_eigenvalue(j: &Matrix, s: &LinearSubspace) -> Result<Option<Scalar>> {
    let mut lambda: Option<Scalar> = None;
    for v in s.basis_vectors() {
        let jv = j.mul_sparse_vec(v)?;
        let (idx, x) = v.first().ok_or_else(|| Error::Precondition("zero basis vector".into()))?;
        let y = jv.iter().find(|(i, _)| i == idx).map(|(_, y)| y.clone()).unwrap_or_else(Scalar::zero);
        let l = y / x;
        let expected: SparseVec =
            v.iter().map(|(i, c)| (*i, c * &l)).filter(|(_, c)| !c.is_zero()).collect();
        if jv != expected || lambda.as_ref().is_some_and(|m| *m != l) {
            return Ok(None);
        }
        lambda = Some(l);
    }
    Ok(lambda)
}

fn ratio_string(l: Option<Scalar>, base: &Scalar) -> String {
    match l {
        Some(l) => render(&(l / base)),
        None => "not an eigenspace".into(),
    }
}

/// Ratios of the J eigenvalues on `(RΦ, A^+, A^-)` to `J(Φ)/Φ` should be
/// `1, 1/(n-1), -1/(n-1)`. The absolute scale is checked twice: against the
/// printed `|Φ|²/c_n`, and against `c_n/|Φ|²`, which `⟨Φ, *Φ^{n-1}⟩ = c_n` forces.
pub fn verify_j_eigenvalues(gs: &GStructure, split: &E1Splitting) -> Result<Vec<CheckReport>> {
    let n = split.n;
    let phi = &gs.form().pieces()[0];
    let StructureConstants { c_n, phi_norm2, .. } = structure_constants(n)?;
    let j = j_matrix(phi, n)?;
    let lambda_phi = common_eigenvalue(&j, &split.r_phi)?;
    let base = lambda_phi.clone().unwrap_or_else(Scalar::one);
    let inv = Scalar::new(1.into(), (n as i64 - 1).into());
    let mut out = Vec::new();
    for (id, claim, s, ratio) in [
        ("hodge.j_phi", "J(Φ) is a multiple λ_Φ of Φ", &split.r_phi, Scalar::one()),
        ("hodge.j_aplus", "J = λ_Φ/(n-1) on A^+", &split.a_plus, inv.clone()),
        ("hodge.j_aminus", "J = -λ_Φ/(n-1) on A^-", &split.a_minus, -inv.clone()),
    ] {
        out.push(CheckReport::compare(id, claim, render(&ratio), ratio_string(common_eigenvalue(&j, s)?, &base)));
    }
    let shown = |l: &Option<Scalar>| l.as_ref().map(render).unwrap_or_else(|| "not an eigenvector".into());
    let printed = &phi_norm2 / &c_n;
    let derived = &c_n / &phi_norm2;
    let mut scale = CheckReport::compare("hodge.j_scale", "λ_Φ = |Φ|²/c_n", render(&printed), shown(&lambda_phi));
    if !scale.passed() && lambda_phi.as_ref() == Some(&derived) {
        scale = scale.with_note(format!("⟨Φ, *Φ^{{n-1}}⟩ = c_n gives λ_Φ = c_n/|Φ|² = {}", render(&derived)));
    }
    out.push(scale);
    out.push(CheckReport::compare("hodge.j_scale_derived", "λ_Φ = c_n/|Φ|²", render(&derived), shown(&lambda_phi)));
    let star = phi.power(n - 1)?.hodge();
    out.push(CheckReport::compare(
        "hodge.star_phi",
        "*Φ^{n-1} = λ_Φ Φ",
        "true",
        if star == phi.scale(&base) { "true" } else { "false" },
    ));
    Ok(out)
}

/// `{α ∈ Λ^k : ρ_*(A)α = 0 for all A}`.
pub fn invariant_subspace(algebra: &LinearSubspace, k: usize) -> Result<LinearSubspace> {
    let basis = endomorphism_basis(algebra)?;
    let n = crate::gstructure::engine::endomorphism_dim(algebra)?;
    let fb = FormBasis::new(n, k);
    let blocks: Vec<Matrix> = basis.iter().map(|b| rho_matrix(b, &fb)).collect();
    if blocks.is_empty() {
        return Ok(LinearSubspace::full(fb.len()));
    }
    let refs: Vec<&Matrix> = blocks.iter().collect();
    Ok(Matrix::vstack(&refs)?.kernel())
}

/// Number of trivial `σ^0` terms of the printed table for `Λ^k` versus the
/// dimension of the invariant forms.
pub fn trivial_summand_crosscheck(n: usize, k: usize) -> Result<CheckReport> {
    let algebra = explicit_structure_algebra(n)?;
    let computed = invariant_subspace(&algebra, k)?.dim();
    let space = match k {
        3 => Some(Space::Lambda3),
        4 => Some(Space::Lambda4),
        5 => Some(Space::Lambda5),
        _ => None,
    };
    let id = format!("invariants.lambda{k}");
    let claim = format!("invariant forms in Λ^{k} match the trivial summands of its decomposition");
    Ok(match space {
        Some(sp) => {
            let trivial = DecompositionTable::printed(sp)
                .entries
                .iter()
                .filter(|t| t.lambda.is_none() && t.sigma == 0)
                .map(|t| t.mult as usize)
                .sum::<usize>();
            CheckReport::compare(&id, &claim, trivial, computed)
        }
        None => CheckReport::observed(&id, &claim, computed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_rejects_wrong_degree() {
        let phi = build_phi(2).unwrap();
        assert!(j_operator(&KForm::monomial(8, &[0, 1]).unwrap(), &phi, 2).is_err());
    }

    #[test]
    fn phi_is_invariant_at_n2() {
        let inv = invariant_subspace(&explicit_structure_algebra(2).unwrap(), 4).unwrap();
        let phi = build_phi(2).unwrap();
        assert!(inv.contains_vector(&phi.sparse_coordinates(&FormBasis::new(8, 4))));
    }
}

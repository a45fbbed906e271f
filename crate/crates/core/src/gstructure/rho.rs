//! The infinitesimal action `ρ_*(A)α = d/dt ((exp(-tA))^* α)` at `t = 0`.
//!
//! In the monomial basis: `ρ_*(A)α = -Σ_{i,m} A_i^m e^i ∧ ι_{v_m} α`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exterior::{Endomorphism, FormBasis, KForm, Monomial};
use crate::linalg::{Matrix, Scalar, SparseVec};

/// Nonzero entries of `A` grouped by output index: `cols[m] = [(i, A_i^m)]`.
fn columns(a: &Endomorphism) -> Vec<Vec<(usize, Scalar)>> {
    let n = a.dim();
    (0..n)
        .map(|m| (0..n).filter_map(|i| (!a.entry(i, m).is_zero()).then(|| (i, a.entry(i, m).clone()))).collect())
        .collect()
}

fn act_on_monomial(cols: &[Vec<(usize, Scalar)>], mono: Monomial, coeff: &Scalar, out: &mut KForm) {
    for m in mono.indices() {
        let (s1, rest) = mono.interior_sign(m).expect("index present");
        for (i, a) in &cols[m] {
            if let Some(s2) = Monomial::single(*i).wedge_sign(rest) {
                let c = coeff * a;
                out.add_term(Monomial(rest.0 | (1 << i)), if s1 * s2 > 0 { -c } else { c });
            }
        }
    }
}

pub fn rho_star(a: &Endomorphism, alpha: &KForm) -> Result<KForm> {
    if a.dim() != alpha.dim() {
        return Err(Error::Dimension(format!("End(R^{}) acting on forms over R^{}", a.dim(), alpha.dim())));
    }
    let cols = columns(a);
    let mut out = KForm::zero(alpha.dim(), alpha.degree());
    for (m, c) in alpha.terms() {
        act_on_monomial(&cols, *m, c, &mut out);
    }
    Ok(out)
}

/// Matrix of `ρ_*(A)` on `Λ^k` in the given basis (column `c` is the image of
/// the `c`-th monomial).
pub fn rho_matrix(a: &Endomorphism, basis: &FormBasis) -> Matrix {
    let cols = columns(a);
    let images: Vec<SparseVec> = basis
        .monomials()
        .iter()
        .map(|mono| {
            let mut out = KForm::zero(basis.dim(), basis.degree());
            act_on_monomial(&cols, *mono, &num_traits::One::one(), &mut out);
            out.sparse_coordinates(basis)
        })
        .collect();
    Matrix::from_sparse_columns(basis.len(), &images).expect("images live in the same basis")
}

/// `ρ_*(E)α` for the elementary endomorphism `E: v_i ↦ v_j`, i.e. `-e^i ∧ ι_{v_j} α`.
pub fn elementary_action(alpha: &KForm, i: usize, j: usize) -> KForm {
    let mut out = KForm::zero(alpha.dim(), alpha.degree());
    if alpha.degree() == 0 {
        return out;
    }
    let cols: Vec<Vec<(usize, Scalar)>> =
        (0..alpha.dim()).map(|m| if m == j { vec![(i, num_traits::One::one())] } else { Vec::new() }).collect();
    for (m, c) in alpha.terms() {
        act_on_monomial(&cols, *m, c, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::q;

    #[test]
    fn identity_scales_by_minus_degree() {
        let a = KForm::monomial(5, &[0, 2, 4]).unwrap().add(&KForm::monomial(5, &[1, 2, 3]).unwrap().scale(&q(3))).unwrap();
        assert_eq!(rho_star(&Endomorphism::identity(5), &a).unwrap(), a.scale(&q(-3)));
    }

    #[test]
    fn action_on_covectors() {
        // A = E: v_0 ↦ v_1, so ρ_*(A) e^1 = -e^0 and ρ_*(A) e^0 = 0
        let a = Endomorphism::elementary(3, 0, 1);
        let e1 = KForm::monomial(3, &[1]).unwrap();
        assert_eq!(rho_star(&a, &e1).unwrap(), KForm::monomial(3, &[0]).unwrap().scale(&q(-1)));
        assert!(rho_star(&a, &KForm::monomial(3, &[0]).unwrap()).unwrap().is_zero());
        assert_eq!(elementary_action(&e1, 0, 1), rho_star(&a, &e1).unwrap());
    }

    #[test]
    fn matrix_agrees_with_direct_action() {
        let a = Endomorphism::from_entries(
            (0..4).map(|i| (0..4).map(|j| q((i as i64 * 3 + j as i64 * 5) % 7 - 3)).collect()).collect(),
        )
        .unwrap();
        let basis = FormBasis::new(4, 2);
        let m = rho_matrix(&a, &basis);
        for (c, mono) in basis.monomials().iter().enumerate() {
            let f = KForm::from_terms(4, 2, [(*mono, q(1))]).unwrap();
            let img = rho_star(&a, &f).unwrap();
            assert_eq!(m.column(c), img.sparse_coordinates(&basis));
        }
    }
}

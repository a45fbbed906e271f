//! The flat quaternionic model on `V = R^{4n}`: the triple `I, J, K`, the
//! Kähler forms, the four-form `Φ = ω_I² + ω_J² + ω_K²`, and `sp(n) ⊕ sp(1)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exterior::{Endomorphism, KForm, Monomial};
use crate::linalg::{LinearSubspace, Matrix, Scalar, SparseVec};

#[derive(Clone, Debug)]
pub struct QuaternionicTriple {
    pub n: usize,
    pub i: Endomorphism,
    pub j: Endomorphism,
    pub k: Endomorphism,
}

/// Builds a column-convention matrix from `n×n` blocks: `blocks[r][c]` is
/// `0`, `1` or `-1` times the identity block.
fn block_matrix(n: usize, blocks: [[i8; 4]; 4]) -> Vec<Vec<Scalar>> {
    let mut m = vec![vec![Scalar::zero(); 4 * n]; 4 * n];
    for (br, row) in blocks.iter().enumerate() {
        for (bc, b) in row.iter().enumerate() {
            if *b != 0 {
                for t in 0..n {
                    m[br * n + t][bc * n + t] = Scalar::from_integer((*b as i64).into());
                }
            }
        }
    }
    m
}

pub fn build_triple(n: usize) -> Result<QuaternionicTriple> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let i = block_matrix(n, [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]);
    let j = block_matrix(n, [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]);
    let k = block_matrix(n, [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]);
    Ok(QuaternionicTriple {
        n,
        i: Endomorphism::from_column_matrix(&i)?,
        j: Endomorphism::from_column_matrix(&j)?,
        k: Endomorphism::from_column_matrix(&k)?,
    })
}

/// `ω(x, y) = ⟨A x, y⟩`, so `ω_{ij} = A_i^j` for `i < j`.
pub fn two_form_of(a: &Endomorphism) -> Result<KForm> {
    if !a.is_skew() {
        return Err(Error::Precondition("two_form_of needs a skew-symmetric endomorphism".into()));
    }
    let n = a.dim();
    let terms = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|(i, j)| !a.entry(*i, *j).is_zero())
        .map(|(i, j)| (Monomial((1 << i) | (1 << j)), a.entry(i, j).clone()));
    KForm::from_terms(n, 2, terms)
}

pub fn kahler_forms(t: &QuaternionicTriple) -> Result<[KForm; 3]> {
    Ok([two_form_of(&t.i)?, two_form_of(&t.j)?, two_form_of(&t.k)?])
}

pub fn build_phi(n: usize) -> Result<KForm> {
    let [wi, wj, wk] = kahler_forms(&build_triple(n)?)?;
    wi.wedge(&wi)?.add(&wj.wedge(&wj)?)?.add(&wk.wedge(&wk)?)
}

fn endomorphisms_of(s: &LinearSubspace, dim: usize) -> Vec<Endomorphism> {
    s.basis_vectors().map(|v| Endomorphism::from_sparse(dim, v).expect("End coordinates")).collect()
}

/// `sp(n) = {A ∈ so(4n) : AI = IA, AJ = JA}`, as a kernel in `End(R^{4n})`
/// coordinates `i * 4n + j`.
pub fn sp_n_algebra(n: usize) -> Result<LinearSubspace> {
    let t = build_triple(n)?;
    let dim = 4 * n;
    let nn = dim * dim;
    let mut cols: Vec<SparseVec> = Vec::with_capacity(nn);
    for i in 0..dim {
        for j in 0..dim {
            let e = Endomorphism::elementary(dim, i, j);
            let sym = e.add(&e.transpose())?;
            let mut col = sym.sparse_coordinates();
            col.extend(e.bracket(&t.i)?.sparse_coordinates().into_iter().map(|(r, x)| (r + nn, x)));
            col.extend(e.bracket(&t.j)?.sparse_coordinates().into_iter().map(|(r, x)| (r + 2 * nn, x)));
            cols.push(col);
        }
    }
    Ok(Matrix::from_sparse_columns(3 * nn, &cols)?.kernel())
}

/// `sp(1) = span{I, J, K}`.
pub fn sp_1_algebra(n: usize) -> Result<LinearSubspace> {
    let t = build_triple(n)?;
    LinearSubspace::span(16 * n * n, &[t.i.sparse_coordinates(), t.j.sparse_coordinates(), t.k.sparse_coordinates()])
}

pub fn explicit_structure_algebra(n: usize) -> Result<LinearSubspace> {
    sp_n_algebra(n)?.sum(&sp_1_algebra(n)?)
}

pub fn algebra_basis(s: &LinearSubspace) -> Vec<Endomorphism> {
    let n2 = s.ambient_dim();
    let dim = (n2 as f64).sqrt().round() as usize;
    assert_eq!(dim * dim, n2, "subspace does not live in an endomorphism space");
    endomorphisms_of(s, dim)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    pub n: usize,
    /// `Φ^n = c_n vol`.
    pub c_n: Scalar,
    /// `|Φ|²`.
    pub phi_norm2: Scalar,
}

pub fn structure_constants(n: usize) -> Result<StructureConstants> {
    let phi = build_phi(n)?;
    let c_n = phi.power(n)?.top_coefficient();
    Ok(StructureConstants { n, c_n, phi_norm2: phi.norm2() })
}

/// Unit covector `e^i` of length `dim`.
pub fn basis_covector(dim: usize, i: usize) -> Vec<Scalar> {
    (0..dim).map(|k| if k == i { Scalar::one() } else { Scalar::zero() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gstructure::rho::rho_star;
    use crate::linalg::scalar::q;

    #[test]
    fn triple_at_n1() {
        let t = build_triple(1).unwrap();
        let e = |i| basis_covector(4, i);
        assert_eq!(t.i.apply(&e(0)).unwrap(), e(1));
        assert_eq!(t.i.apply(&e(1)).unwrap(), e(0).iter().map(|x| -x).collect::<Vec<_>>());
        assert_eq!(t.i.apply(&e(2)).unwrap(), e(3));
        let minus_id = Endomorphism::identity(4).scale(&q(-1));
        assert_eq!(t.k.compose(&t.k).unwrap(), minus_id);
        assert!(build_triple(0).is_err());
    }

    #[test]
    fn kahler_forms_at_n1() {
        let [wi, wj, wk] = kahler_forms(&build_triple(1).unwrap()).unwrap();
        let e = |a, b| KForm::monomial(4, &[a, b]).unwrap();
        assert_eq!(wi, e(0, 1).add(&e(2, 3)).unwrap());
        assert_eq!(wj, e(0, 2).sub(&e(1, 3)).unwrap());
        assert_eq!(wk, e(0, 3).add(&e(1, 2)).unwrap());
        assert!(two_form_of(&Endomorphism::zero(4)).unwrap().is_zero());
        assert!(two_form_of(&Endomorphism::identity(4)).is_err());
    }

    #[test]
    fn phi_at_n1() {
        let phi = build_phi(1).unwrap();
        assert_eq!(phi, KForm::volume(4).scale(&q(6)));
        let c = structure_constants(1).unwrap();
        assert_eq!((c.c_n, c.phi_norm2), (q(6), q(36)));
    }

    #[test]
    fn sp1_preserves_phi() {
        let t = build_triple(2).unwrap();
        let phi = build_phi(2).unwrap();
        for a in [&t.i, &t.j, &t.k] {
            assert!(rho_star(a, &phi).unwrap().is_zero());
        }
    }

    #[test]
    fn algebra_dimension_at_n2() {
        assert_eq!(sp_n_algebra(2).unwrap().dim(), 10);
        assert_eq!(explicit_structure_algebra(2).unwrap().dim(), 13);
    }
}

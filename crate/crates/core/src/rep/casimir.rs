//! Casimir operators on `Λ^k` and the isotypic decomposition they induce.
//! Used as an independent check on the printed tables.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::weyl::{casimir_sp, casimir_sp1, weight_of, WeightVector};
use crate::error::{Error, Result};
use crate::exterior::{Endomorphism, FormBasis};
use crate::gstructure::engine::{endomorphism_basis, endomorphism_dim, is_bracket_closed};
use crate::gstructure::rho::rho_matrix;
use crate::linalg::dense::inverse;
use crate::linalg::{LinearSubspace, Matrix, Scalar};
use crate::quaternionic::{sp_1_algebra, sp_n_algebra};

/// `C = Σ_i ρ(B_i) ρ(B_i')` on `Λ^k`, where `B_i'` is the dual basis for
/// `⟨A, B⟩ = -tr(AB)`.
pub fn casimir_operator(algebra: &LinearSubspace, k: usize) -> Result<Matrix> {
    if !is_bracket_closed(algebra)? {
        return Err(Error::NotBracketClosed("Casimir operator needs a Lie algebra".into()));
    }
    let n = endomorphism_dim(algebra)?;
    let basis = endomorphism_basis(algebra)?;
    let gram: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| Ok(-a.compose(b)?.trace())).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let ginv = inverse(&gram).map_err(|_| Error::Precondition("trace form is degenerate on the algebra".into()))?;
    let fb = FormBasis::new(n, k);
    let rho: Vec<Matrix> = basis.iter().map(|b| rho_matrix(b, &fb)).collect();
    let mut c = Matrix::zeros(fb.len(), fb.len());
    for (i, ri) in rho.iter().enumerate() {
        let mut dual = Endomorphism::zero(n);
        for (j, b) in basis.iter().enumerate() {
            if !ginv[i][j].is_zero() {
                dual = dual.add(&b.scale(&ginv[i][j]))?;
            }
        }
        c = c.add(&ri.mul(&rho_matrix(&dual, &fb))?)?;
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IsotypicBlock {
    pub weight: WeightVector,
    pub sigma: u32,
    pub dim: usize,
}

impl fmt::Display for IsotypicBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}σ^{}: {}", self.weight, self.sigma, self.dim)
    }
}

/// An eigenspace that matches no candidate label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnidentifiedBlock {
    pub sigma: Option<u32>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotypicDecomposition {
    pub blocks: Vec<IsotypicBlock>,
    pub unidentified: Vec<UnidentifiedBlock>,
    pub total: usize,
}

impl IsotypicDecomposition {
    pub fn as_map(&self) -> BTreeMap<(WeightVector, u32), u64> {
        self.blocks.iter().map(|b| ((b.weight.clone(), b.sigma), b.dim as u64)).collect()
    }

    pub fn identified_dim(&self) -> usize {
        self.blocks.iter().map(|b| b.dim).sum()
    }
}

/// Renders an isotypic map in a fixed order, e.g. `(2,1,0)σ^1: 128, ...`.
pub fn format_isotypic(m: &BTreeMap<(WeightVector, u32), u64>) -> String {
    let parts: Vec<String> = m.iter().map(|((w, r), d)| format!("{w}σ^{r}: {d}")).collect();
    parts.join(", ")
}

/// Both Casimirs of `sp(n) ⊕ sp(1)` on `Λ^k`, with eigenvalue scales fixed on `Λ^1`.
pub struct CasimirOracle {
    pub n: usize,
    pub k: usize,
    pub c_sp: Matrix,
    pub c_sp1: Matrix,
    pub scale_sp: Scalar,
    pub scale_sp1: Scalar,
}

impl CasimirOracle {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let spn = sp_n_algebra(n)?;
        let sp1 = sp_1_algebra(n)?;
        let calib = |alg: &LinearSubspace, predicted: Scalar| -> Result<Scalar> {
            let c1 = casimir_operator(alg, 1)?;
            let s = c1
                .is_scalar_multiple_of_identity()
                .ok_or_else(|| Error::Precondition("Casimir is not scalar on Λ^1".into()))?;
            Ok(s / predicted)
        };
        let defining = weight_of(1, 0, n)?.expect("λ^1_0 exists for n ≥ 1");
        let scale_sp = calib(&spn, casimir_sp(&defining))?;
        let scale_sp1 = calib(&sp1, casimir_sp1(1))?;
        Ok(CasimirOracle {
            n,
            k,
            c_sp: casimir_operator(&spn, k)?,
            c_sp1: casimir_operator(&sp1, k)?,
            scale_sp,
            scale_sp1,
        })
    }

    /// Weights of every `λ^p_q` with `p ≤ k`, plus the trivial weight.
    pub fn candidate_weights(&self) -> Vec<WeightVector> {
        let mut out = vec![WeightVector::trivial(self.n)];
        for p in 1..=self.k as u32 {
            for q in 0..=p / 2 {
                if let Ok(Some(w)) = weight_of(p, q, self.n) {
                    if !out.contains(&w) {
                        out.push(w);
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Predicted eigenvalues must separate the candidates, or labels are ambiguous.
    pub fn labels_are_separated(&self) -> bool {
        let mut seen: Vec<Scalar> = self.candidate_weights().iter().map(casimir_sp).collect();
        let len = seen.len();
        seen.sort();
        seen.dedup();
        seen.len() == len
    }

    /// Decomposes `Λ^k`, or an invariant subspace of it.
    pub fn decompose(&self, within: Option<&LinearSubspace>) -> Result<IsotypicDecomposition> {
        let (c1, cn) = match within {
            Some(w) => (w.restrict(&self.c_sp1)?, w.restrict(&self.c_sp)?),
            None => (self.c_sp1.clone(), self.c_sp.clone()),
        };
        let d = c1.nrows();
        let weights = self.candidate_weights();
        let mut blocks = Vec::new();
        let mut unidentified = Vec::new();
        let mut covered = 0;
        for r in 0..=self.k as u32 {
            let eig = &self.scale_sp1 * casimir_sp1(r);
            let kr = c1.shift_diagonal(&eig)?.kernel();
            if kr.is_zero() {
                continue;
            }
            covered += kr.dim();
            let restricted = kr.restrict(&cn)?;
            let mut found = 0;
            for w in &weights {
                let eig = &self.scale_sp * casimir_sp(w);
                let dim = kr.dim() - restricted.shift_diagonal(&eig)?.rank();
                if dim > 0 {
                    found += dim;
                    blocks.push(IsotypicBlock { weight: w.clone(), sigma: r, dim });
                }
            }
            if found < kr.dim() {
                unidentified.push(UnidentifiedBlock { sigma: Some(r), dim: kr.dim() - found });
            }
        }
        if covered < d {
            unidentified.push(UnidentifiedBlock { sigma: None, dim: d - covered });
        }
        blocks.sort();
        Ok(IsotypicDecomposition { blocks, unidentified, total: d })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternionic::build_triple;

    #[test]
    fn sp1_casimir_is_scalar_on_covectors_in_dimension_four() {
        let c = casimir_operator(&sp_1_algebra(1).unwrap(), 1).unwrap();
        assert!(c.is_scalar_multiple_of_identity().is_some());
    }

    #[test]
    fn casimir_commutes_with_the_action() {
        let alg = sp_n_algebra(2).unwrap();
        let c = casimir_operator(&alg, 2).unwrap();
        let fb = FormBasis::new(8, 2);
        let t = build_triple(2).unwrap();
        for a in endomorphism_basis(&alg).unwrap().iter().take(3).chain([&t.i]) {
            let r = rho_matrix(a, &fb);
            assert_eq!(c.mul(&r).unwrap(), r.mul(&c).unwrap());
        }
    }

    #[test]
    fn rejects_non_algebras() {
        let s = LinearSubspace::span(
            16,
            &[
                Endomorphism::elementary(4, 0, 1).sparse_coordinates(),
                Endomorphism::elementary(4, 1, 2).sparse_coordinates(),
            ],
        )
        .unwrap();
        assert!(matches!(casimir_operator(&s, 1), Err(Error::NotBracketClosed(_))));
    }
}

//! Condition (C2) in several orthonormal bases, and the constructive
//! decomposition `a = b + u ⊗ w`.

use num_traits::{One, Zero};

use super::engine::{endomorphism_basis, endomorphism_dim, GStructure};
use super::symbol::wedge_covector;
use crate::error::{Error, Result};
use crate::exterior::Endomorphism;
use crate::linalg::{LinearSubspace, Matrix, Scalar, SparseVec};
use crate::report::CheckReport;

/// `{A : A_i^j = 0 whenever i ≠ 1 and j ≠ 1}` (index 0 here).
pub fn c2_slice(n: usize) -> LinearSubspace {
    let mut vecs: Vec<SparseVec> = (0..n).map(|j| vec![(j, Scalar::one())]).collect();
    vecs.extend((1..n).map(|i| vec![(i * n, Scalar::one())]));
    LinearSubspace::span(n * n, &vecs).expect("coordinates in range")
}

/// Orthogonal matrices with rational entries, built from Givens rotations
/// by Pythagorean triples. Variant 0 is the identity.
pub fn rotation(n: usize, variant: usize) -> Vec<Vec<Scalar>> {
    const TRIPLES: [(i64, i64, i64); 4] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)];
    let mut q: Vec<Vec<Scalar>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()).collect();
    if variant == 0 || n < 2 {
        return q;
    }
    for step in 0..n - 1 {
        let (a, b) = (step % n, (step * variant + 1) % n);
        let (a, b) = if a == b { (a, (b + 1) % n) } else { (a, b) };
        let (x, y, r) = TRIPLES[(step + variant) % TRIPLES.len()];
        let (c, s) = (Scalar::new(x.into(), r.into()), Scalar::new(y.into(), r.into()));
        // q <- q * G(a, b)
        for row in q.iter_mut() {
            let (qa, qb) = (row[a].clone(), row[b].clone());
            row[a] = &c * &qa + &s * &qb;
            row[b] = -(&s * &qa) + &c * &qb;
        }
    }
    q
}

fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(Scalar::zero(), |acc, k| acc + &a[i][k] * &b[k][j])).collect())
        .collect()
}

fn transpose(a: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].clone()).collect()).collect()
}

/// The algebra written in the orthonormal basis given by the columns of `q`:
/// each element `M` becomes `qᵀ M q`.
pub fn change_basis(g: &LinearSubspace, q: &[Vec<Scalar>]) -> Result<LinearSubspace> {
    let n = endomorphism_dim(g)?;
    if q.len() != n {
        return Err(Error::Dimension("basis change has the wrong size".into()));
    }
    let qt = transpose(q);
    let vecs: Vec<SparseVec> = endomorphism_basis(g)?
        .iter()
        .map(|a| Ok(Endomorphism::from_column_matrix(&mat_mul(&mat_mul(&qt, &a.to_column_matrix()), q))?.sparse_coordinates()))
        .collect::<Result<_>>()?;
    LinearSubspace::span(n * n, &vecs)
}

pub fn c2_intersection_dim(g: &LinearSubspace, variant: usize) -> Result<usize> {
    let n = endomorphism_dim(g)?;
    let rotated = change_basis(g, &rotation(n, variant))?;
    Ok(rotated.intersection(&c2_slice(n))?.dim())
}

/// One report per basis; `variants` lists the rotations (0 = standard basis).
pub fn condition_c2_check(g: &LinearSubspace, variants: &[usize]) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    let mut dims = Vec::new();
    for &v in variants {
        let d = c2_intersection_dim(g, v)?;
        dims.push(d);
        out.push(CheckReport::compare(
            &format!("c2.basis{v}"),
            "g meets {A : A_i^j = 0 for i, j ≠ 1} only in 0",
            0,
            d,
        ));
    }
    if dims.windows(2).any(|w| (w[0] == 0) != (w[1] == 0)) {
        for r in &mut out {
            r.note = Some("verdict differs between bases".into());
        }
    }
    Ok(out)
}

/// Writes `a = b + u ⊗ w` with `b ∈ 𝔤`, given `u ∧ a ∈ 𝔤²`.
pub fn rank_one_decompose(gs: &GStructure, a: &Endomorphism, u: &[Scalar]) -> Result<(Endomorphism, Vec<Scalar>)> {
    let n = gs.dim();
    if a.dim() != n || u.len() != n {
        return Err(Error::Dimension("a and u must live on V".into()));
    }
    if u.iter().all(Zero::is_zero) {
        return Err(Error::InvalidArgument("u must be nonzero".into()));
    }
    let ua = wedge_covector(u, 1, &a.sparse_coordinates());
    if !gs.gk(2)?.contains_vector(&ua) {
        return Err(Error::Precondition("u ∧ a is not in g^2".into()));
    }
    let basis: Vec<SparseVec> = gs.algebra().basis_vectors().cloned().collect();
    let d = basis.len();
    let mut cols = basis;
    for l in 0..n {
        cols.push(
            u.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i * n + l, x.clone())).collect(),
        );
    }
    let m = Matrix::from_sparse_columns(n * n, &cols)?;
    let z = m
        .solve(&a.coordinates())?
        .ok_or_else(|| Error::Precondition("no decomposition a = b + u ⊗ w exists".into()))?;
    let mut b = Endomorphism::zero(n);
    for (c, v) in z[..d].iter().zip(&cols[..d]) {
        if !c.is_zero() {
            b = b.add(&Endomorphism::from_sparse(n, v)?.scale(c))?;
        }
    }
    Ok((b, z[d..].to_vec()))
}

/// Verifies `a = b + u ⊗ w` and `b ∈ 𝔤`.
pub fn reconstructs(gs: &GStructure, a: &Endomorphism, u: &[Scalar], b: &Endomorphism, w: &[Scalar]) -> Result<bool> {
    let sum = b.add(&Endomorphism::tensor(u, w)?)?;
    Ok(sum == *a && gs.algebra().contains_vector(&b.sparse_coordinates()))
}

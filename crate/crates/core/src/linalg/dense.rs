//! Dense reference eliminations, kept as independent routes for cross-checking
//! the sparse engine, plus a small dense solver.

use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Rank by dense Bareiss elimination on the integer-scaled rows.
pub fn rank_bareiss(m: &Matrix) -> usize {
    let ncols = m.ncols();
    let mut a: Vec<Vec<BigInt>> = m
        .int_rows()
        .into_iter()
        .map(|r| {
            let mut d = vec![BigInt::zero(); ncols];
            for (c, x) in r {
                d[c] = x.to_big();
            }
            d
        })
        .collect();
    let nrows = a.len();
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Rank by textbook Gaussian elimination over Q.
pub fn rank_naive(m: &Matrix) -> usize {
    let mut a = m.to_dense();
    let (nrows, ncols) = (m.nrows(), m.ncols());
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let piv = a[r][c].clone();
        for i in r + 1..nrows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &piv;
            for j in c..ncols {
                let t = &f * &a[r][j];
                a[i][j] -= t;
            }
        }
        r += 1;
    }
    r
}

/// Solves the square non-singular system `A x = b` by Gauss-Jordan over Q.
pub fn solve_square(a: &[Vec<Scalar>], b: &[Scalar]) -> Result<Vec<Scalar>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("solve_square expects an n x n system".into()));
    }
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut row = r.clone();
            row.push(x.clone());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&i| !m[i][c].is_zero())
            .ok_or_else(|| Error::Precondition("singular system".into()))?;
        m.swap(c, p);
        let piv = m[c][c].clone();
        for j in c..=n {
            m[c][j] = &m[c][j] / &piv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    Ok(m.into_iter().map(|mut r| r.pop().expect("augmented column")).collect())
}

/// Inverse of a small square matrix over Q.
pub fn inverse(a: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let mut e = vec![Scalar::zero(); n];
        e[k] = super::scalar::one();
        cols.push(solve_square(a, &e)?);
    }
    Ok((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{frac, q};

    #[test]
    fn three_routes_agree_on_small_matrices() {
        let m = Matrix::from_i64(&[vec![2, 4, 1], vec![1, 2, 0], vec![3, 6, 1]]);
        assert_eq!(rank_bareiss(&m), 2);
        assert_eq!(rank_naive(&m), 2);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn inverse_of_two_by_two() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        let b = vec![vec![frac(1, 2), q(0)], vec![q(0), q(3)]];
        assert_eq!(inverse(&b).unwrap(), vec![vec![q(2), q(0)], vec![q(0), frac(1, 3)]]);
    }

    #[test]
    fn singular_system_is_rejected() {
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(solve_square(&a, &[q(1), q(1)]).is_err());
    }
}

//! Highest weights of `λ^p_q` and the Weyl dimension formula for `Sp(n)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::linalg::Scalar;

/// A dominant weight `μ_1 ≥ ... ≥ μ_n ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(mu: Vec<u32>) -> Result<Self> {
        if mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("weight {mu:?} is not dominant")));
        }
        Ok(WeightVector(mu))
    }

    pub fn trivial(n: usize) -> Self {
        WeightVector(vec![0; n])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|x| *x == 0)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The weight of `λ^p_q`: `2` in the first `q` slots, `1` up to slot `p - q`,
/// then `0`. `None` when `p - q > n` (the module vanishes).
pub fn weight_of(p: u32, q: u32, n: usize) -> Result<Option<WeightVector>> {
    if 2 * q > p {
        return Err(Error::InvalidArgument(format!("λ^{p}_{q} needs 2q ≤ p")));
    }
    if (p - q) as usize > n {
        return Ok(None);
    }
    let mu = (1..=n as u32).map(|l| if l <= q { 2 } else if l <= p - q { 1 } else { 0 }).collect();
    Ok(Some(WeightVector(mu)))
}

fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// `2^n n! Π_{i<j} (μ̃_i - μ̃_j)(μ̃_i + μ̃_j + 2n + 2) Π_k (μ̃_k + n + 1) / Π_k (2k)!`
/// with `μ̃_i = μ_i - i`.
pub fn weyl_dim(mu: &WeightVector) -> u64 {
    let n = mu.rank() as i64;
    let t: Vec<i64> = mu.0.iter().enumerate().map(|(i, m)| *m as i64 - (i as i64 + 1)).collect();
    let mut num = BigInt::from(2).pow(n as u32) * factorial(n as u64);
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            num *= (t[i] - t[j]) * (t[i] + t[j] + 2 * n + 2);
        }
        num *= t[i] + n + 1;
    }
    let den = (1..=n as u64).fold(BigInt::one(), |acc, k| acc * factorial(2 * k));
    assert!((&num % &den) == BigInt::from(0), "Weyl quotient is not integral");
    (num / den).to_u64().expect("dimension fits in u64")
}

/// The classical form `Π_{i<j} (l_i² - l_j²) Π l_i / (same at μ = 0)` with
/// `l_i = μ_i + n - i + 1`.
pub fn weyl_dim_classical(mu: &WeightVector) -> u64 {
    let n = mu.rank();
    let prod = |l: &[i64]| -> BigInt {
        let mut p = BigInt::one();
        for i in 0..l.len() {
            for j in i + 1..l.len() {
                p *= l[i] * l[i] - l[j] * l[j];
            }
            p *= l[i];
        }
        p
    };
    let l: Vec<i64> = mu.0.iter().enumerate().map(|(i, m)| *m as i64 + (n - i) as i64).collect();
    let rho: Vec<i64> = (0..n).map(|i| (n - i) as i64).collect();
    (prod(&l) / prod(&rho)).to_u64().expect("dimension fits in u64")
}

/// `dim λ^p_q` with the vanishing convention.
pub fn lambda_dim(p: u32, q: u32, n: usize) -> Result<u64> {
    Ok(weight_of(p, q, n)?.map_or(0, |w| weyl_dim(&w)))
}

pub fn sigma_dim(r: u32) -> u64 {
    r as u64 + 1
}

/// `⟨μ, μ + 2ρ⟩` for `sp(n)` in the basis where `ρ = (n, n-1, ..., 1)`.
pub fn casimir_sp(mu: &WeightVector) -> Scalar {
    let n = mu.rank() as i64;
    let s: i64 = mu.0.iter().enumerate().map(|(i, m)| *m as i64 * (*m as i64 + 2 * (n - i as i64))).sum();
    Scalar::from_integer(s.into())
}

/// `r(r + 2)`, the `sp(1)` value on `σ^r`.
pub fn casimir_sp1(r: u32) -> Scalar {
    Scalar::from_integer((r as i64 * (r as i64 + 2)).into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[u32]) -> WeightVector {
        WeightVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn weights_follow_the_rule() {
        assert_eq!(weight_of(2, 0, 3).unwrap(), Some(w(&[1, 1, 0])));
        assert_eq!(weight_of(4, 2, 3).unwrap(), Some(w(&[2, 2, 0])));
        assert_eq!(weight_of(4, 0, 3).unwrap(), None);
        assert!(weight_of(3, 2, 3).is_err());
    }

    #[test]
    fn known_dimensions() {
        assert_eq!(lambda_dim(1, 0, 3).unwrap(), 6);
        assert_eq!(lambda_dim(2, 0, 3).unwrap(), 14);
        assert_eq!(lambda_dim(3, 1, 3).unwrap(), 64);
        assert_eq!(lambda_dim(1, 0, 1).unwrap(), 2);
        assert!(WeightVector::new(vec![0, 1]).is_err());
    }
}

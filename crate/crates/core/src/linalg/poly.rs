//! Univariate polynomials in a formal variable `n` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::scalar::{q, Scalar};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: BTreeMap<u32, Scalar>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Polynomial::monomial(c, 0)
    }

    pub fn int(c: i64) -> Self {
        Polynomial::constant(q(c))
    }

    pub fn monomial(c: Scalar, degree: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(degree, c);
        }
        Polynomial { coeffs }
    }

    /// The variable `n`.
    pub fn n() -> Self {
        Polynomial::monomial(Scalar::one(), 1)
    }

    /// From integer coefficients, constant term first.
    pub fn from_ints(cs: &[i64]) -> Self {
        cs.iter()
            .enumerate()
            .fold(Polynomial::zero(), |acc, (d, c)| acc + Polynomial::monomial(q(*c), d as u32))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, d: u32) -> Scalar {
        self.coeffs.get(&d).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.coeffs
            .iter()
            .fold(Polynomial::zero(), |acc, (d, c)| acc + Polynomial::monomial(c * s, *d))
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().fold(Scalar::zero(), |acc, (d, c)| {
            let mut p = Scalar::one();
            for _ in 0..*d {
                p *= x;
            }
            acc + c * p
        })
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        for (d, c) in rhs.coeffs {
            let e = self.coeffs.entry(d).or_insert_with(Scalar::zero);
            *e += c;
            if e.is_zero() {
                self.coeffs.remove(&d);
            }
        }
        self
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Scalar::one())
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &rhs.coeffs {
                out = out + Polynomial::monomial(ca * cb, da + db);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Highest degree first, e.g. `2n^2 - 3n - 2`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (d, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            let show_coeff = *d == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() || *d == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match d {
                0 => {}
                1 => write!(f, "n")?,
                _ => write!(f, "n^{d}")?,
            }
        }
        Ok(())
    }
}

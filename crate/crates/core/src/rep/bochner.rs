//! Linear combinations of the three Weitzenböck-type identities relating the
//! operators `B_{a,b}` and the scalar curvature, with coefficients that are
//! polynomials in `n`. The operators themselves are never built; only the
//! coefficient algebra is checked.
//!
//! `κ` enters each identity as `c κ/(n+2)`; the symbol `Kappa` stands for
//! `κ/(n+2)` so every coefficient stays polynomial.

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::scalar::frac;
use crate::linalg::Polynomial;
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Kappa,
    B11,
    B13,
    B1m2,
    Bm11,
    Bm13,
    Bm1m2,
}

impl Symbol {
    pub const ALL: [Symbol; 7] =
        [Symbol::Kappa, Symbol::B11, Symbol::B13, Symbol::B1m2, Symbol::Bm11, Symbol::Bm13, Symbol::Bm1m2];
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symbol::Kappa => "κ/(n+2)",
            Symbol::B11 => "B(1,1)",
            Symbol::B13 => "B(1,3)",
            Symbol::B1m2 => "B(1,-2)",
            Symbol::Bm11 => "B(-1,1)",
            Symbol::Bm13 => "B(-1,3)",
            Symbol::Bm1m2 => "B(-1,-2)",
        })
    }
}

/// `Σ coeff(s) · s`, read as an expression equal to zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalBochnerExpression {
    terms: BTreeMap<Symbol, Polynomial>,
}

impl FormalBochnerExpression {
    pub fn from_terms(terms: impl IntoIterator<Item = (Symbol, Polynomial)>) -> Self {
        let mut e = FormalBochnerExpression::default();
        for (s, p) in terms {
            e.add_term(s, p);
        }
        e
    }

    fn add_term(&mut self, s: Symbol, p: Polynomial) {
        let sum = self.coeff(s) + p;
        if sum.is_zero() {
            self.terms.remove(&s);
        } else {
            self.terms.insert(s, sum);
        }
    }

    pub fn coeff(&self, s: Symbol) -> Polynomial {
        self.terms.get(&s).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, p) in &other.terms {
            out.add_term(*s, p.clone());
        }
        out
    }

    pub fn mul_poly(&self, c: &Polynomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(s, p)| (*s, p.clone() * c.clone())))
    }

    /// Sets the given symbols to zero.
    pub fn without(&self, symbols: &[Symbol]) -> Self {
        Self::from_terms(self.terms.iter().filter(|(s, _)| !symbols.contains(s)).map(|(s, p)| (*s, p.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for FormalBochnerExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, p)| format!("({p}) {s}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

fn n() -> Polynomial {
    Polynomial::n()
}

fn c(k: i64) -> Polynomial {
    Polynomial::int(k)
}

/// The three identities, each moved to the form `RHS - LHS = 0`.
pub fn identities() -> [FormalBochnerExpression; 3] {
    use Symbol::*;
    let first = FormalBochnerExpression::from_terms([
        (Kappa, c(-1)),
        (B11, c(-1)),
        (B13, c(2)),
        (B1m2, n() * c(2)),
        (Bm11, c(-1)),
        (Bm13, c(2)),
        (Bm1m2, n() * c(2)),
    ]);
    let second = FormalBochnerExpression::from_terms([
        (Kappa, c(-2)),
        (B11, c(-2)),
        (B13, c(-2)),
        (B1m2, c(-2)),
        (Bm11, c(4)),
        (Bm13, c(4)),
        (Bm1m2, c(4)),
    ]);
    let third = FormalBochnerExpression::from_terms([
        (Kappa, c(-8)),
        (B11, (n() + c(2)) * c(-2)),
        (B13, (n() - c(1)) * c(4)),
        (B1m2, n() * (n() - c(1)) * c(-4)),
        (Bm11, (n() + c(2)) * c(4)),
        (Bm13, (n() - c(1)) * c(-8)),
        (Bm1m2, n() * (n() - c(1)) * c(8)),
    ]);
    [first, second, third]
}

/// `2(n² - n - 2)·(first) - n(n + 3)·(second) + (2n + 1)/2·(third)`.
pub fn combination() -> FormalBochnerExpression {
    let [a, b, t] = identities();
    let ca = (n() * n() - n() - c(2)) * c(2);
    let cb = n() * (n() + c(3)) * c(-1);
    let ct = (n() * c(2) + c(1)) * Polynomial::constant(frac(1, 2));
    a.mul_poly(&ca).add(&b.mul_poly(&cb)).add(&t.mul_poly(&ct))
}

/// The claimed residual once `B(1,3) = B(-1,-2) = 0`.
pub fn claimed_residual() -> FormalBochnerExpression {
    use Symbol::*;
    FormalBochnerExpression::from_terms([
        (B11, (n() * c(2) + c(1)) * (n() - c(2)) * c(-1)),
        (Bm11, (n() - c(2)) * (n() + c(2)) * c(-2)),
        (Bm13, (n() * c(2) + c(1)) * (n() + c(1)) * c(-4)),
    ])
}

pub fn audit_bochner() -> Vec<CheckReport> {
    use Symbol::*;
    let combo = combination();
    let claimed = claimed_residual();
    let residual = combo.without(&[B13, Bm1m2]);
    let mut out = vec![
        CheckReport::compare("bochner.kappa", "the κ terms cancel in the combination", "0", combo.coeff(Kappa)),
        CheckReport::compare("bochner.b1m2", "the B(1,-2) terms cancel in the combination", "0", combo.coeff(B1m2)),
    ];
    for (id, s) in [("bochner.b11", B11), ("bochner.bm11", Bm11), ("bochner.bm13", Bm13)] {
        out.push(CheckReport::compare(
            id,
            &format!("coefficient of {s} after the combination"),
            claimed.coeff(s),
            combo.coeff(s),
        ));
    }
    out.push(CheckReport::compare(
        "bochner.residual",
        "with B(1,3) = B(-1,-2) = 0 the combination is the stated three-term expression",
        &claimed,
        &residual,
    ));
    for (id, s) in [("bochner.raw_b13", B13), ("bochner.raw_bm1m2", Bm1m2)] {
        out.push(CheckReport::observed(id, &format!("coefficient of {s} before it is set to zero"), combo.coeff(s)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combination_matches_claims() {
        for r in audit_bochner() {
            assert_ne!(r.verdict, crate::report::Verdict::Fail, "{r:?}");
        }
    }

    #[test]
    fn frozen_raw_coefficients() {
        let combo = combination();
        assert_eq!(combo.coeff(Symbol::B13), (n() - c(1)) * (n() + c(1)) * c(10));
        assert_eq!(combo.coeff(Symbol::Bm1m2), n() * (n() - c(2)) * (n() + c(1)) * c(12));
    }
}

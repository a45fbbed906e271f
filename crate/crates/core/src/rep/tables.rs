//! The printed decompositions of `Λ^3, Λ^4, Λ^5` and `E^0, E^1, E^2` (tensored
//! with `C`) as data, and their dimension sums.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::weyl::{lambda_dim, sigma_dim, weight_of, WeightVector};
use crate::error::{Error, Result};
use crate::exterior::binomial;
use crate::report::{CheckReport, TableEntry, TableExport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Space {
    Lambda3,
    Lambda4,
    Lambda5,
    E0,
    E1,
    E2,
}

impl Space {
    pub const ALL: [Space; 6] = [Space::Lambda3, Space::Lambda4, Space::Lambda5, Space::E0, Space::E1, Space::E2];

    /// Form degree of the ambient `Λ^k` (for `E^k`, the degree `k + 3` of its image).
    pub fn form_degree(self) -> usize {
        match self {
            Space::Lambda3 | Space::E0 => 3,
            Space::Lambda4 | Space::E1 => 4,
            Space::Lambda5 | Space::E2 => 5,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Lambda3 => "Lambda3",
            Space::Lambda4 => "Lambda4",
            Space::Lambda5 => "Lambda5",
            Space::E0 => "E0",
            Space::E1 => "E1",
            Space::E2 => "E2",
        })
    }
}

impl FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Space::ALL
            .into_iter()
            .find(|sp| sp.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown space {s}")))
    }
}

/// `λ^p_q σ^r` with multiplicity; `lambda = None` is the trivial `Sp(n)`-module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableTerm {
    pub lambda: Option<(u32, u32)>,
    pub sigma: u32,
    pub mult: u32,
}

const fn t(p: u32, q: u32, r: u32) -> TableTerm {
    TableTerm { lambda: Some((p, q)), sigma: r, mult: 1 }
}

const fn s(r: u32) -> TableTerm {
    TableTerm { lambda: None, sigma: r, mult: 1 }
}

const LAMBDA3: &[TableTerm] = &[t(3, 0, 3), t(1, 0, 3), t(3, 1, 1), t(1, 0, 1)];
const LAMBDA4: &[TableTerm] =
    &[t(4, 0, 4), t(2, 0, 4), s(4), t(4, 1, 2), t(2, 1, 2), t(2, 0, 2), t(4, 2, 0), t(2, 0, 0), s(0)];
/// The printed `Λ^5` terms other than the trailing `Λ^3 ⊗ C`.
const LAMBDA5_OWN: &[TableTerm] = &[t(5, 0, 5), t(3, 0, 5), t(1, 0, 5), t(5, 1, 3), t(3, 1, 3), t(5, 2, 1), t(3, 0, 1)];
const E0: &[TableTerm] = &[t(1, 0, 1)];
const E1: &[TableTerm] = &[t(2, 0, 2), t(2, 1, 2), t(2, 0, 0), s(0)];
/// The printed `E^2` terms other than the trailing `Λ^3 ⊗ C`.
const E2_OWN: &[TableTerm] = &[t(3, 1, 3), t(3, 0, 1)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTable {
    pub space: Space,
    pub entries: Vec<TableTerm>,
}

impl DecompositionTable {
    /// The table as printed, with any `Λ^3 ⊗ C` summand expanded.
    pub fn printed(space: Space) -> Self {
        let entries = match space {
            Space::Lambda3 => LAMBDA3.to_vec(),
            Space::Lambda4 => LAMBDA4.to_vec(),
            Space::Lambda5 => [LAMBDA5_OWN, LAMBDA3].concat(),
            Space::E0 => E0.to_vec(),
            Space::E1 => E1.to_vec(),
            Space::E2 => [E2_OWN, LAMBDA3].concat(),
        };
        DecompositionTable { space, entries }
    }

    pub fn term_dim(term: &TableTerm, n: usize) -> Result<u64> {
        let l = match term.lambda {
            Some((p, q)) => lambda_dim(p, q, n)?,
            None => 1,
        };
        Ok(l * sigma_dim(term.sigma) * term.mult as u64)
    }

    pub fn total_dim(&self, n: usize) -> Result<u64> {
        self.entries.iter().map(|e| Self::term_dim(e, n)).sum()
    }

    /// Terms that vanish at this `n` under the stable-range convention.
    pub fn vanishing_terms(&self, n: usize) -> Result<Vec<TableTerm>> {
        let mut out = Vec::new();
        for e in &self.entries {
            if let Some((p, q)) = e.lambda {
                if weight_of(p, q, n)?.is_none() {
                    out.push(*e);
                }
            }
        }
        Ok(out)
    }

    /// Isotypic dimensions keyed by `(weight, σ)`, vanishing terms dropped.
    pub fn isotypic(&self, n: usize) -> Result<BTreeMap<(WeightVector, u32), u64>> {
        let mut out = BTreeMap::new();
        for e in &self.entries {
            let w = match e.lambda {
                Some((p, q)) => match weight_of(p, q, n)? {
                    Some(w) => w,
                    None => continue,
                },
                None => WeightVector::trivial(n),
            };
            *out.entry((w, e.sigma)).or_insert(0) += Self::term_dim(e, n)?;
        }
        Ok(out)
    }

    pub fn export(&self, n: usize) -> Result<TableExport> {
        let mut entries = Vec::new();
        for e in &self.entries {
            let w = match e.lambda {
                Some((p, q)) => match weight_of(p, q, n)? {
                    Some(w) => w,
                    None => continue,
                },
                None => WeightVector::trivial(n),
            };
            entries.push(TableEntry {
                lambda: w.entries().to_vec(),
                sigma: e.sigma,
                dim: Self::term_dim(e, n)? / e.mult as u64,
                mult: e.mult,
            });
        }
        Ok(TableExport { space: self.space.to_string(), entries })
    }
}

pub fn format_term(term: &TableTerm) -> String {
    match term.lambda {
        Some((p, q)) => format!("λ^{p}_{q}σ^{}", term.sigma),
        None => format!("σ^{}", term.sigma),
    }
}

/// Compares the dimension sum of a printed table with `target`. For the
/// exterior powers the target is `C(4n, k)`; for `E^k` pass `rank A^k`.
pub fn table_dimension_check(space: Space, n: usize, target: u64) -> Result<CheckReport> {
    let table = DecompositionTable::printed(space);
    let total = table.total_dim(n)?;
    let id = format!("tables.{}", space.to_string().to_lowercase());
    let claim = format!("the printed decomposition of {space} ⊗ C has the right total dimension");
    let mut r = CheckReport::compare(&id, &claim, target, total);
    let vanishing = table.vanishing_terms(n)?;
    if !vanishing.is_empty() {
        let names: Vec<String> = vanishing.iter().map(format_term).collect();
        r = r.with_note(format!("vanishing at n = {n}: {}", names.join(", ")));
    }
    Ok(r)
}

/// `C(4n, k)` for the exterior powers.
pub fn exterior_target(space: Space, n: usize) -> Option<u64> {
    match space {
        Space::Lambda3 | Space::Lambda4 | Space::Lambda5 => Some(binomial(4 * n, space.form_degree()) as u64),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_at_n3() {
        assert_eq!(DecompositionTable::printed(Space::Lambda3).total_dim(3).unwrap(), 220);
        assert_eq!(DecompositionTable::printed(Space::Lambda4).total_dim(3).unwrap(), 495);
        assert_eq!(DecompositionTable::printed(Space::E1).total_dim(3).unwrap(), 120);
        assert_eq!(DecompositionTable::printed(Space::E2).total_dim(3).unwrap(), 504);
        assert_eq!(DecompositionTable::printed(Space::E0).total_dim(3).unwrap(), 12);
    }

    #[test]
    fn space_names_round_trip() {
        for s in Space::ALL {
            assert_eq!(s.to_string().parse::<Space>().unwrap(), s);
        }
    }
}

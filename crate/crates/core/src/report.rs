//! Check records and their canonical JSON / Markdown renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Observed,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Observed => "OBSERVED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    /// The claim being checked, in words.
    pub paper_ref: String,
    pub claimed: String,
    pub computed: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub const OBSERVATIONAL: &str = "observational";

impl CheckReport {
    /// PASS iff the two strings agree exactly.
    pub fn compare(id: &str, claim: &str, claimed: impl ToString, computed: impl ToString) -> Self {
        let (claimed, computed) = (claimed.to_string(), computed.to_string());
        let verdict = if claimed == computed { Verdict::Pass } else { Verdict::Fail };
        CheckReport {
            id: id.into(),
            paper_ref: claim.into(),
            claimed,
            computed,
            verdict,
            elapsed_ms: None,
            seed: None,
            note: None,
        }
    }

    /// A record with no claim attached.
    pub fn observed(id: &str, claim: &str, computed: impl ToString) -> Self {
        CheckReport {
            verdict: Verdict::Observed,
            ..CheckReport::compare(id, claim, OBSERVATIONAL, computed)
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Keeps the claimed and computed values but drops the verdict.
    pub fn into_observed(mut self) -> Self {
        self.verdict = Verdict::Observed;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub lambda: Vec<u32>,
    pub sigma: u32,
    pub dim: u64,
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableExport {
    pub space: String,
    pub entries: Vec<TableEntry>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<CheckReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tables: Vec<TableExport>,
}

impl Report {
    pub fn new(mut checks: Vec<CheckReport>, tables: Vec<TableExport>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        Report { checks, tables }
    }

    pub fn fail_count(&self) -> usize {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail).count()
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.checks.iter().filter(|c| c.verdict == v).count()
    }

    /// Keys sorted at every level, one line, trailing newline.
    pub fn to_json(&self) -> String {
        // serde_json's default map is ordered, so a round trip through
        // `Value` sorts every object's keys.
        let value = serde_json::to_value(self).expect("report is serializable");
        let mut s = serde_json::to_string(&value).expect("value is serializable");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut suites: BTreeMap<&str, Vec<&CheckReport>> = BTreeMap::new();
        for c in &self.checks {
            suites.entry(c.id.split('.').next().unwrap_or("")).or_default().push(c);
        }
        let mut out = String::from("# Verification report\n");
        for (suite, checks) in suites {
            let _ = write!(out, "\n## {suite}\n\n| id | claimed | computed | verdict |\n|---|---|---|---|\n");
            for c in checks {
                let _ = writeln!(out, "| {} | {} | {} | {} |", c.id, cell(&c.claimed), cell(&c.computed), c.verdict);
            }
        }
        let _ = write!(
            out,
            "\n## Summary\n\n- PASS: {}\n- FAIL: {}\n- OBSERVED: {}\n",
            self.count(Verdict::Pass),
            self.fail_count(),
            self.count(Verdict::Observed)
        );
        out
    }
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        assert_eq!(Report::default().to_json(), "{\"checks\":[]}\n");
    }

    #[test]
    fn verdicts_and_ordering() {
        let r = Report::new(
            vec![CheckReport::compare("b.x", "c", 2, 3), CheckReport::compare("a.y", "c", "504", 504)],
            vec![],
        );
        assert_eq!(r.checks[0].id, "a.y");
        assert!(r.checks[0].passed());
        assert_eq!(r.fail_count(), 1);
        assert!(r.to_json().starts_with("{\"checks\":[{\"claimed\":\"504\",\"computed\":\"504\",\"id\":\"a.y\""));
        assert!(r.to_markdown().contains("- FAIL: 1"));
    }
}

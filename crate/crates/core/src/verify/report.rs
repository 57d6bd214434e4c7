use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One executable check per statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum TheoremId {
    /// dim2 = 1 and dim2 = n - 1 characterizations.
    Extremes,
    /// diameter-2 equality, dim <= dim2, complement invariance, path/cycle formula.
    AdjacencyResults,
    /// Every resolving set meets every twin pair.
    Twins,
    /// Diameter upper bound and its constructive witness.
    DiameterBound,
    /// Extremal construction attaining the diameter bound.
    Extremal,
    /// dim2 = n - 2 characterization.
    NMinus2,
    /// Population bound and the order-`k + 2^k` family.
    Omega,
    /// Complete classification of dim2 = 2.
    Dim2Classification,
    /// Empirical search for graphs attaining the diameter bound.
    Explore,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::Extremes,
        TheoremId::AdjacencyResults,
        TheoremId::Twins,
        TheoremId::DiameterBound,
        TheoremId::Extremal,
        TheoremId::NMinus2,
        TheoremId::Omega,
        TheoremId::Dim2Classification,
        TheoremId::Explore,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Extremes => "extremes",
            TheoremId::AdjacencyResults => "adjacency-results",
            TheoremId::Twins => "twins",
            TheoremId::DiameterBound => "diameter-bound",
            TheoremId::Extremal => "extremal",
            TheoremId::NMinus2 => "nminus2",
            TheoremId::Omega => "omega",
            TheoremId::Dim2Classification => "dim2-classification",
            TheoremId::Explore => "explore",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown check {s:?}")))
    }
}

impl From<TheoremId> for String {
    fn from(id: TheoremId) -> String {
        id.as_str().to_owned()
    }
}

impl TryFrom<String> for TheoremId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub expected: String,
    pub actual: String,
}

impl Counterexample {
    pub fn new(graph6: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Counterexample {
            graph6: graph6.into(),
            expected: expected.into(),
            actual: actual.into(),
        }
    }
}

/// Outcome of one check. `elapsed` is kept out of the serialized form so
/// reports stay byte-identical between runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub scope: String,
    pub verdict: Verdict,
    /// Number of graphs (or constructions) examined.
    pub checked: usize,
    pub findings: Vec<String>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub(crate) fn new(
        theorem: TheoremId,
        scope: impl Into<String>,
        checked: usize,
        findings: Vec<String>,
        mut counterexamples: Vec<Counterexample>,
    ) -> Self {
        counterexamples.sort();
        counterexamples.dedup();
        VerificationReport {
            theorem,
            scope: scope.into(),
            verdict: if counterexamples.is_empty() { Verdict::Pass } else { Verdict::Fail },
            checked,
            findings,
            counterexamples,
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "[{verdict}] {}", self.theorem)?;
        writeln!(f, "  scope: {}", self.scope)?;
        writeln!(f, "  checked: {}", self.checked)?;
        for finding in &self.findings {
            writeln!(f, "  finding: {finding}")?;
        }
        for c in &self.counterexamples {
            writeln!(f, "  counterexample: {}  expected {}  actual {}", c.graph6, c.expected, c.actual)?;
        }
        Ok(())
    }
}

/// Plain-text report with one block per check.
pub fn render_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!("{} checks, {} failed\n", reports.len(), failed));
    out
}

pub fn render_json(reports: &[VerificationReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

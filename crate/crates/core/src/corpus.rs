//! Annotated singularity corpus in TOML.
//!
//! ```toml
//! [[entry]]
//! name = "A2"
//! vars = ["x", "y"]
//! f = "x^2 + y^3"
//! tags = ["ade"]
//!
//! [entry.expect]
//! isolated = true
//! qh = true
//! lct = "holds"          # holds | fails:K | not_applicable
//! theorem = "injective"  # injective | in_kernel | not_applicable
//! mu = 2
//! tau = 2
//! freeness = "free"      # free | inconclusive | not_checked
//! ```
//!
//! Every `expect` key is optional; absent keys are not compared.

use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{analyze, AnalysisJob, AnalysisOptions, SingularityReport};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub isolated: Option<bool>,
    pub qh: Option<bool>,
    pub lct: Option<String>,
    pub theorem: Option<String>,
    pub mu: Option<usize>,
    pub tau: Option<usize>,
    pub freeness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    pub vars: Vec<String>,
    pub f: String,
    #[serde(default)]
    pub tags: Vec<String>,
    #[serde(default)]
    pub expect: Expectation,
}

impl CorpusEntry {
    pub fn job(&self, options: &AnalysisOptions) -> Result<AnalysisJob> {
        let mut options = options.clone();
        options.tags = self.tags.clone();
        Ok(AnalysisJob::parse(&self.f, &self.vars, options)?.with_name(&self.name))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    #[serde(default)]
    pub entry: Vec<CorpusEntry>,
}

pub const BUNDLED: &str = include_str!("../corpus/singularities.toml");

impl Corpus {
    pub fn parse(text: &str) -> Result<Self> {
        let c: Corpus = toml::from_str(text).map_err(|e| Error::Corpus(e.to_string()))?;
        for e in &c.entry {
            crate::polyring::parse_poly(&e.f, &e.vars)
                .map_err(|err| Error::Corpus(format!("entry `{}`: {err}", e.name)))?;
        }
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Corpus::parse(&text)
    }

    pub fn bundled() -> Self {
        Corpus::parse(BUNDLED).expect("bundled corpus parses")
    }

    pub fn get(&self, name: &str) -> Option<&CorpusEntry> {
        self.entry.iter().find(|e| e.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub field: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug)]
pub struct CorpusRow {
    pub name: String,
    pub report: SingularityReport,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Clone, Debug, Default)]
pub struct CorpusSummary {
    pub rows: Vec<CorpusRow>,
}

impl CorpusSummary {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.mismatches.is_empty())
    }

    pub fn table(&self) -> String {
        let mut out = format!(
            "{:<14} {:>5} {:>5} {:>5} {:<14} {:<14} {:<12} {}\n",
            "name", "mu", "tau", "qh", "lct", "theorem", "freeness", "status"
        );
        let show = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        for row in &self.rows {
            let r = &row.report;
            let status = if row.mismatches.is_empty() { "ok" } else { "MISMATCH" };
            out.push_str(&format!(
                "{:<14} {:>5} {:>5} {:>5} {:<14} {:<14} {:<12} {}\n",
                row.name,
                show(r.mu()),
                show(r.tau()),
                r.quasihomogeneous.map_or("-".to_string(), |b| b.to_string()),
                r.lct_label(),
                r.theorem_check.label(),
                r.freeness.label(),
                status
            ));
            for m in &row.mismatches {
                out.push_str(&format!("    {}: expected {}, got {}\n", m.field, m.expected, m.actual));
            }
        }
        out
    }
}

pub fn compare(expect: &Expectation, r: &SingularityReport) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let mut check = |field: &str, expected: Option<String>, actual: String| {
        if let Some(expected) = expected {
            if expected != actual {
                out.push(Mismatch { field: field.into(), expected, actual });
            }
        }
    };
    let show = |v: Option<usize>| v.map_or("none".to_string(), |x| x.to_string());
    check("isolated", expect.isolated.map(|b| b.to_string()), r.gates.isolated.to_string());
    check("qh", expect.qh.map(|b| b.to_string()), r.quasihomogeneous.map_or("none".into(), |b| b.to_string()));
    check("lct", expect.lct.clone(), r.lct_label());
    check("theorem", expect.theorem.clone(), r.theorem_check.label().to_string());
    check("mu", expect.mu.map(|v| v.to_string()), show(r.mu()));
    check("tau", expect.tau.map(|v| v.to_string()), show(r.tau()));
    check("freeness", expect.freeness.clone(), r.freeness.label().to_string());
    out
}

/// Analyzes every entry, in parallel, keeping input order.
pub fn corpus_run(corpus: &Corpus, options: &AnalysisOptions) -> Result<CorpusSummary> {
    let rows = corpus
        .entry
        .par_iter()
        .map(|e| {
            let report = analyze(&e.job(options)?)?;
            crate::report::verify_report(&report)?;
            let mismatches = compare(&e.expect, &report);
            Ok(CorpusRow { name: e.name.clone(), report, mismatches })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CorpusSummary { rows })
}

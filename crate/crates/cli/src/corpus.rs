//! Fixture corpora: one JSON file per polynomial with the expected report
//! fields.

use std::path::{Path, PathBuf};

use atinf_core::analysis::analyze;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::{envelope, failure, load_poly, Output, Settings, Status};

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    pub poly: String,
    pub vars: Vec<String>,
    #[serde(default)]
    pub settings: FixtureSettings,
    #[serde(rename = "unsafe", default)]
    pub allow_unsafe: bool,
    /// Report fields and their exact expected values.
    pub expected: Map<String, Value>,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields, default)]
pub struct FixtureSettings {
    pub seed: u64,
    pub t_samples: Option<usize>,
    pub assume_concentrated: bool,
    pub line_at_infinity: bool,
    pub chi_fd: Option<i64>,
}

impl FixtureSettings {
    fn resolve(&self) -> Settings {
        Settings {
            seed: self.seed,
            t_samples: self.t_samples.unwrap_or(2),
            assume_concentrated: self.assume_concentrated,
            line_at_infinity: self.line_at_infinity,
            chi_fd: self.chi_fd,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub field: String,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct FixtureResult {
    pub file: String,
    pub name: Option<String>,
    pub status: Status,
    pub mismatches: Vec<Mismatch>,
    pub failed_verdicts: Vec<String>,
    pub error: Option<String>,
}

#[derive(Serialize, Debug)]
pub struct CorpusSummary {
    pub dir: String,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub warnings: Vec<String>,
    pub fixtures: Vec<FixtureResult>,
}

/// Report value of `field`, looked up in the Betti report, then the
/// singularity profile, then the top level.
fn lookup<'a>(report: &'a Value, field: &str) -> Option<&'a Value> {
    report["report"]
        .get(field)
        .or_else(|| report["profile"].get(field))
        .or_else(|| report.get(field))
}

fn run_fixture(path: &Path) -> FixtureResult {
    let file = path.file_name().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
    let mut result = FixtureResult {
        file,
        name: None,
        status: Status::InputError,
        mismatches: vec![],
        failed_verdicts: vec![],
        error: None,
    };
    let fixture: Fixture = match std::fs::read_to_string(path)
        .map_err(|e| e.to_string())
        .and_then(|t| serde_json::from_str(&t).map_err(|e| e.to_string()))
    {
        Ok(fx) => fx,
        Err(e) => {
            result.error = Some(e);
            return result;
        }
    };
    result.name = Some(fixture.name.clone());
    let f = match load_poly(&fixture.poly, &fixture.vars, fixture.allow_unsafe) {
        Ok(f) => f,
        Err(e) => {
            result.error = Some(e);
            return result;
        }
    };
    let analysis = match analyze(&f, &fixture.settings.resolve().options()) {
        Ok(a) => a,
        Err(e) => {
            result.status = crate::error_status(&e);
            result.error = Some(e.to_string());
            return result;
        }
    };
    let report = serde_json::to_value(&analysis).expect("report serializes");
    for (field, expected) in &fixture.expected {
        let actual = lookup(&report, field).cloned().unwrap_or(Value::Null);
        if actual != *expected {
            result.mismatches.push(Mismatch { field: field.clone(), expected: expected.clone(), actual });
        }
    }
    result.failed_verdicts = analysis
        .report
        .range_verdicts
        .iter()
        .filter(|v| !v.pass)
        .map(|v| format!("{}: {}", v.name, v.detail))
        .collect();
    result.status = if result.mismatches.is_empty() && result.failed_verdicts.is_empty() {
        Status::Pass
    } else {
        Status::VerdictFailed
    };
    result
}

pub fn fixture_paths(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    Ok(paths)
}

pub fn run_fixtures(dir: &Path) -> std::io::Result<CorpusSummary> {
    let paths = fixture_paths(dir)?;
    let fixtures: Vec<FixtureResult> = paths.par_iter().map(|p| run_fixture(p)).collect();
    let count = |s: Status| fixtures.iter().filter(|r| r.status == s).count();
    let mut warnings = vec![];
    if fixtures.is_empty() {
        warnings.push("corpus is empty".to_string());
    }
    Ok(CorpusSummary {
        dir: dir.display().to_string(),
        total: fixtures.len(),
        passed: count(Status::Pass),
        failed: count(Status::VerdictFailed),
        errors: fixtures.len() - count(Status::Pass) - count(Status::VerdictFailed),
        warnings,
        fixtures,
    })
}

fn table(summary: &CorpusSummary) -> String {
    let mut out = String::new();
    for w in &summary.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    for r in &summary.fixtures {
        let tag = match r.status {
            Status::Pass => "ok",
            Status::VerdictFailed => "FAIL",
            Status::Gated => "GATED",
            Status::InputError => "ERROR",
        };
        out.push_str(&format!("{tag:<6} {}\n", r.file));
        for m in &r.mismatches {
            out.push_str(&format!("       {}: expected {}, got {}\n", m.field, m.expected, m.actual));
        }
        for v in &r.failed_verdicts {
            out.push_str(&format!("       verdict {v}\n"));
        }
        if let Some(e) = &r.error {
            out.push_str(&format!("       {e}\n"));
        }
    }
    out.push_str(&format!(
        "{} fixtures: {} passed, {} failed, {} errors\n",
        summary.total, summary.passed, summary.failed, summary.errors
    ));
    out
}

pub fn run_corpus(dir: &Path) -> Output {
    let summary = match run_fixtures(dir) {
        Ok(s) => s,
        Err(e) => return failure("corpus", Status::InputError, format!("{}: {e}", dir.display())),
    };
    let status = summary.fixtures.iter().map(|r| r.status).max().unwrap_or(Status::Pass);
    let notes = table(&summary);
    let mut out = envelope("corpus", status, summary);
    out.stderr = Some(notes);
    out
}

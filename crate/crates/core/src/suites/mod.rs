//! Named verification suites and their machine-readable reports.

mod checks;
mod query;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

pub use query::{query, QueryResult, QUERY_KINDS};

/// Version of the report layout in `schema/report.schema.json`.
pub const SCHEMA_VERSION: u32 = 1;

/// Counterexamples kept per report; the full count is always recorded.
pub const MAX_COUNTEREXAMPLES: usize = 50;

pub const SUITES: &[&str] = &[
    "lemma22",
    "lemma71",
    "lemma82",
    "thm41",
    "lemma42",
    "cor74",
    "lemma72",
    "prop75",
    "table1",
    "cor55",
    "weyl-match",
    "chartab",
    "thm66a",
    "cor76",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub checked: u64,
    pub counterexample_count: usize,
    pub counterexamples: Vec<Value>,
    /// Scope remarks, e.g. inputs left out of a sweep.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// A set of reports as written to disk.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub pass: bool,
    pub reports: Vec<CheckReport>,
}

impl RunReport {
    pub fn new(reports: Vec<CheckReport>) -> Self {
        let pass = reports.iter().all(|r| r.passed());
        RunReport { schema_version: SCHEMA_VERSION, pass, reports }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// One row per check.
    pub fn to_csv(&self) -> Result<String> {
        let timed = self.reports.iter().any(|r| r.wall_time_ms.is_some());
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["check", "status", "checked", "counterexample_count", "params"];
        if timed {
            header.push("wall_time_ms");
        }
        w.write_record(&header).map_err(csv_err)?;
        for r in &self.reports {
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let mut row = vec![
                r.check.clone(),
                if r.passed() { "pass".into() } else { "fail".into() },
                r.checked.to_string(),
                r.counterexample_count.to_string(),
                params.join(","),
            ];
            if timed {
                row.push(r.wall_time_ms.map(|t| t.to_string()).unwrap_or_default());
            }
            w.write_record(&row).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Internal(e.to_string())
}

/// Settings shared by all suites.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Alternative curated table file.
    pub data: Option<PathBuf>,
    /// Record wall time in reports (breaks byte-identical output).
    pub timings: bool,
}

/// `key=value` overrides, comma separated.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    given: BTreeMap<String, String>,
}

impl Params {
    pub fn parse(text: &str) -> Result<Self> {
        let mut given = BTreeMap::new();
        for piece in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = piece
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("expected key=value, got '{piece}'")))?;
            let (k, v) = (k.trim(), v.trim());
            if k.is_empty() || v.is_empty() {
                return Err(Error::InvalidParameter(format!("expected key=value, got '{piece}'")));
            }
            if given.insert(k.to_string(), v.to_string()).is_some() {
                return Err(Error::InvalidParameter(format!("'{k}' given twice")));
            }
        }
        Ok(Params { given })
    }
}

/// Reads parameters with defaults and records the effective values.
pub(crate) struct ParamReader<'a> {
    given: &'a Params,
    used: BTreeMap<String, String>,
}

impl<'a> ParamReader<'a> {
    fn new(given: &'a Params) -> Self {
        ParamReader { given, used: BTreeMap::new() }
    }

    pub(crate) fn u64(&mut self, key: &str, default: u64) -> Result<u64> {
        let v = match self.given.given.get(key) {
            Some(s) => s
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("{key} must be a non-negative integer, got '{s}'")))?,
            None => default,
        };
        self.used.insert(key.to_string(), v.to_string());
        Ok(v)
    }

    pub(crate) fn u32(&mut self, key: &str, default: u32) -> Result<u32> {
        let v = self.u64(key, u64::from(default))?;
        u32::try_from(v).map_err(|_| Error::InvalidParameter(format!("{key} is too large")))
    }

    fn finish(self) -> Result<BTreeMap<String, String>> {
        if let Some(k) = self.given.given.keys().find(|k| !self.used.contains_key(*k)) {
            return Err(Error::InvalidParameter(format!("unknown parameter '{k}'")));
        }
        Ok(self.used)
    }
}

/// Accumulates checked counts and counterexamples.
#[derive(Default)]
pub(crate) struct Findings {
    checked: u64,
    count: usize,
    kept: Vec<Value>,
    notes: Vec<String>,
}

impl Findings {
    pub(crate) fn tick(&mut self, n: u64) {
        self.checked += n;
    }

    pub(crate) fn fail(&mut self, v: Value) {
        self.count += 1;
        if self.kept.len() < MAX_COUNTEREXAMPLES {
            self.kept.push(v);
        }
    }

    pub(crate) fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    /// Merges in order, so parallel pieces give the same report as a serial run.
    pub(crate) fn merge(&mut self, other: Findings) {
        self.checked += other.checked;
        self.count += other.count;
        self.notes.extend(other.notes);
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.kept.len());
        self.kept.extend(other.kept.into_iter().take(room));
    }

    pub(crate) fn collect(parts: Vec<Result<Findings>>) -> Result<Findings> {
        let mut out = Findings::default();
        for p in parts {
            out.merge(p?);
        }
        Ok(out)
    }
}

/// Runs one suite. `params` is the raw `k=v,...` text.
pub fn run_suite(name: &str, params: &str, opts: &SuiteOptions) -> Result<CheckReport> {
    let given = Params::parse(params)?;
    let mut reader = ParamReader::new(&given);
    let start = Instant::now();
    let findings = match name {
        "lemma22" => checks::lemma22(&mut reader)?,
        "lemma71" => checks::lemma71(&mut reader)?,
        "lemma82" => checks::lemma82(&mut reader)?,
        "thm41" => checks::thm41(&mut reader)?,
        "lemma42" => checks::lemma42(&mut reader)?,
        "cor74" => checks::cor74(&mut reader)?,
        "lemma72" => checks::lemma72(&mut reader)?,
        "prop75" => checks::prop75(&mut reader)?,
        "table1" => checks::table1(&mut reader, opts)?,
        "cor55" => checks::cor55(&mut reader)?,
        "weyl-match" => checks::weyl_match(&mut reader)?,
        "chartab" => checks::chartab(&mut reader)?,
        "thm66a" => checks::thm66a(&mut reader)?,
        "cor76" => checks::cor76(&mut reader)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    let elapsed = start.elapsed();
    let params = reader.finish()?;
    let status = if findings.count == 0 { Status::Pass } else { Status::Fail };
    Ok(CheckReport {
        check: name.to_string(),
        params,
        status,
        checked: findings.checked,
        counterexample_count: findings.count,
        counterexamples: findings.kept,
        notes: findings.notes,
        wall_time_ms: opts.timings.then_some(elapsed.as_millis() as u64),
    })
}

/// Runs several suites, each with its default parameters.
pub fn run_all(names: &[&str], opts: &SuiteOptions) -> Result<RunReport> {
    let reports = names.iter().map(|n| run_suite(n, "", opts)).collect::<Result<Vec<_>>>()?;
    Ok(RunReport::new(reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_parse() {
        let p = Params::parse("n_max=4, d_max=6").unwrap();
        let mut r = ParamReader::new(&p);
        assert_eq!(r.u64("n_max", 12).unwrap(), 4);
        assert_eq!(r.u64("d_max", 12).unwrap(), 6);
        assert_eq!(r.u64("other", 3).unwrap(), 3);
        assert_eq!(r.finish().unwrap().len(), 3);
        assert!(Params::parse("n_max").is_err());
        assert!(Params::parse("a=1,a=2").is_err());
        let p = Params::parse("bogus=1").unwrap();
        assert!(ParamReader::new(&p).finish().is_err());
    }

    #[test]
    fn findings_cap() {
        let mut total = Findings::default();
        for _ in 0..3 {
            let mut f = Findings::default();
            for i in 0..40 {
                f.fail(Value::from(i));
            }
            total.merge(f);
        }
        assert_eq!(total.count, 120);
        assert_eq!(total.kept.len(), MAX_COUNTEREXAMPLES);
    }

    #[test]
    fn unknown_suite() {
        assert_eq!(
            run_suite("unknown", "", &SuiteOptions::default()),
            Err(Error::UnknownSuite("unknown".into()))
        );
    }
}

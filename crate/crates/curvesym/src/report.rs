//! Canonical JSON reports and atomic file output. The JSON body is the
//! machine-checkable source of truth; anything volatile (timestamps)
//! lives in a separate metadata object so that report bodies compare
//! byte-identical across runs.

use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Volatile fields, excluded from determinism comparisons.
#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<String>,
}

impl Metadata {
    pub fn current() -> Metadata {
        Metadata {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            generated_at: None,
        }
    }
}

/// One verification report: a named check, its overall verdict, and the
/// structured result body produced by the underlying module.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub kind: String,
    pub pass: bool,
    pub body: Value,
    pub metadata: Metadata,
}

impl Report {
    pub fn new(kind: &str, pass: bool, body: Value) -> Report {
        Report {
            kind: kind.to_string(),
            pass,
            body,
            metadata: Metadata::current(),
        }
    }

    /// Pretty canonical rendering (map keys sorted by serde_json's
    /// preserve-insertion on BTreeMap-backed values; floats round-trip
    /// losslessly).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// The report without its metadata object, for byte-identity
    /// comparisons between runs.
    pub fn comparable_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Value::Object(map) = &mut v {
            map.remove("metadata");
        }
        let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
        s.push('\n');
        s
    }
}

/// Writes via a temporary file in the destination directory followed by
/// an atomic rename, so readers never observe a partial report.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty());
    let mut tmp = match dir {
        Some(d) => {
            std::fs::create_dir_all(d)?;
            tempfile::NamedTempFile::new_in(d)?
        }
        None => tempfile::NamedTempFile::new_in(".")?,
    };
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// A suite summary: every check with its verdict, plus the conjunction.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub pass: bool,
    pub checks: Vec<CheckLine>,
    pub metadata: Metadata,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl SuiteSummary {
    pub fn new(checks: Vec<CheckLine>) -> SuiteSummary {
        SuiteSummary {
            pass: checks.iter().all(|c| c.pass),
            checks,
            metadata: Metadata::current(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("summary serializes");
        s.push('\n');
        s
    }
}

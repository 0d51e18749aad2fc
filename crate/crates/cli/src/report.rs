//! Report types and their JSON and text renderings.

use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Undetermined,
    PaperDiscrepancy,
    /// `d` is outside the range the check is defined on.
    Skipped,
    /// Pages and verdicts are reported but nothing is asserted.
    Informational,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Undetermined => "undetermined",
            Status::PaperDiscrepancy => "paper-discrepancy",
            Status::Skipped => "skipped",
            Status::Informational => "informational",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub d: usize,
    pub status: Status,
    pub computed: Value,
    pub expected: Value,
    pub provenance: String,
    /// `name: statement` for every axiom the result depends on.
    pub axioms: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub undetermined: usize,
    pub discrepancy: usize,
    pub skipped: usize,
    pub informational: usize,
}

impl Summary {
    pub fn tally(results: &[CheckResult]) -> Self {
        let mut s = Summary::default();
        for r in results {
            *match r.status {
                Status::Pass => &mut s.pass,
                Status::Fail => &mut s.fail,
                Status::Undetermined => &mut s.undetermined,
                Status::PaperDiscrepancy => &mut s.discrepancy,
                Status::Skipped => &mut s.skipped,
                Status::Informational => &mut s.informational,
            } += 1;
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub d_min: usize,
    pub d_max: usize,
    pub checks: Vec<String>,
    pub strict_paper: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub version: String,
    pub engine_version: String,
    pub params: Params,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

impl Report {
    pub fn new(params: Params, results: Vec<CheckResult>, timestamp: Option<String>) -> Self {
        let summary = Summary::tally(&results);
        Self {
            version: SCHEMA_VERSION.into(),
            engine_version: env!("CARGO_PKG_VERSION").into(),
            params,
            results,
            summary,
            timestamp,
        }
    }

    /// 0 clean, 1 on any failure, 3 on a discrepancy under `strict`.
    pub fn exit_code(&self, strict: bool) -> u8 {
        if self.summary.fail > 0 {
            1
        } else if strict && self.summary.discrepancy > 0 {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "verify {} (schema {}), d = {}..{}",
            self.engine_version, self.version, self.params.d_min, self.params.d_max
        );
        if let Some(ts) = &self.timestamp {
            let _ = writeln!(out, "generated {ts}");
        }
        for r in &self.results {
            let _ = writeln!(out, "{:<18} {:<18} d={:<3} {}", r.status, r.check, r.d, compact(&r.computed));
            if matches!(r.status, Status::Fail | Status::PaperDiscrepancy | Status::Undetermined) {
                let _ = writeln!(out, "    expected {}", compact(&r.expected));
            }
            for n in &r.notes {
                let _ = writeln!(out, "    note: {n}");
            }
            for a in &r.axioms {
                let _ = writeln!(out, "    axiom: {a}");
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary: {} pass, {} fail, {} undetermined, {} discrepancy, {} skipped, {} informational",
            s.pass, s.fail, s.undetermined, s.discrepancy, s.skipped, s.informational
        );
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::Object(m) if m.is_empty() => "-".into(),
        other => other.to_string(),
    }
}

/// A JSON number when it fits in `u64`, otherwise a decimal string.
pub fn number(v: &BigUint) -> Value {
    match v.to_u64() {
        Some(n) => Value::from(n),
        None => Value::String(v.to_string()),
    }
}

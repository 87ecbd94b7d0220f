//! Verification reports and their serializations.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use crate::error::ReportError;

/// Integers that fit in `i64` become JSON numbers, larger ones decimal strings.
pub fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// An empirical finding that is recorded but never fails a run.
    Reported,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Reported => "REPORTED",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub id: String,
    /// Short mathematical statement of what is checked.
    pub anchor: String,
    pub status: Status,
    pub payload: Value,
}

/// One row of the per-prime modularity table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeRow {
    pub model: String,
    pub p: u64,
    pub n_p: u64,
    pub a_p: i64,
    pub split: String,
    pub pi: String,
    pub b_p: String,
    pub checks: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub claims: Vec<Claim>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub primes: Vec<PrimeRow>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            claims: Vec::new(),
            primes: Vec::new(),
        }
    }

    /// Adds a claim. Panics on a duplicate id.
    pub fn push(&mut self, claim: Claim) {
        assert!(
            self.claims.iter().all(|c| c.id != claim.id),
            "duplicate claim id {}",
            claim.id
        );
        self.claims.push(claim);
    }

    pub fn check(&mut self, id: &str, anchor: &str, ok: bool, payload: Value) {
        self.push(Claim {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: Status::from_bool(ok),
            payload,
        });
    }

    pub fn reported(&mut self, id: &str, anchor: &str, payload: Value) {
        self.push(Claim {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: Status::Reported,
            payload,
        });
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn has_failures(&self) -> bool {
        self.claims.iter().any(|c| c.status == Status::Fail)
    }

    pub fn failures(&self) -> Vec<&Claim> {
        self.claims.iter().filter(|c| c.status == Status::Fail).collect()
    }

    pub fn count(&self, status: Status) -> usize {
        self.claims.iter().filter(|c| c.status == status).count()
    }

    /// Appends all claims and prime rows of `other`.
    pub fn merge(&mut self, other: VerificationReport) {
        for c in other.claims {
            self.push(c);
        }
        self.primes.extend(other.primes);
    }

    /// Claims sorted by id and prime rows sorted by `(model, p)`.
    pub fn normalized(&self) -> VerificationReport {
        let mut out = self.clone();
        out.claims.sort_by(|a, b| a.id.cmp(&b.id));
        out.primes.sort_by(|a, b| (&a.model, a.p).cmp(&(&b.model, b.p)));
        out
    }

    pub fn ids(&self) -> BTreeSet<&str> {
        self.claims.iter().map(|c| c.id.as_str()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
    Csv,
}

impl FromStr for Format {
    type Err = ReportError;
    fn from_str(s: &str) -> Result<Self, ReportError> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "markdown" | "md" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            other => Err(ReportError::UnsupportedFormat(other.to_string(), String::new())),
        }
    }
}

/// Deterministic serialization of a report.
pub fn emit_report(report: &VerificationReport, format: Format) -> Result<Vec<u8>, ReportError> {
    let report = report.normalized();
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(&report)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Markdown => Ok(markdown(&report).into_bytes()),
        Format::Csv => {
            if report.primes.is_empty() {
                return Err(ReportError::UnsupportedFormat("csv".into(), report.suite.clone()));
            }
            Ok(csv(&report).into_bytes())
        }
    }
}

fn markdown(report: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# Suite `{}`\n", report.suite);
    let _ = writeln!(
        s,
        "{} pass, {} fail, {} reported\n",
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::Reported)
    );
    let _ = writeln!(s, "| claim | status | statement |");
    let _ = writeln!(s, "|---|---|---|");
    for c in &report.claims {
        let _ = writeln!(s, "| `{}` | {} | {} |", c.id, c.status.as_str(), c.anchor.replace('|', "\\|"));
    }
    let _ = writeln!(s, "\n## Details\n");
    for c in &report.claims {
        let payload = serde_json::to_string(&c.payload).unwrap_or_default();
        let _ = writeln!(s, "- `{}`: `{}`", c.id, payload);
    }
    s
}

pub const CSV_HEADER: &str = "model,p,N_p,a_p,split,pi,b_p,checks";

fn csv(report: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{CSV_HEADER}");
    for r in &report.primes {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{}",
            r.model, r.p, r.n_p, r.a_p, r.split, r.pi, r.b_p, r.checks
        );
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn empty_report_json_shape() {
        let r = VerificationReport::new("group");
        let bytes = emit_report(&r, Format::Json).unwrap();
        let v: Value = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(v, json!({"suite": "group", "claims": []}));
    }

    #[test]
    fn claims_sorted_and_failures_detected() {
        let mut r = VerificationReport::new("x");
        r.check("b", "second", true, json!(null));
        r.check("a", "first", false, json!(1));
        r.reported("c", "note", json!({"k": 2}));
        assert!(r.has_failures());
        let v: Value = serde_json::from_slice(&emit_report(&r, Format::Json).unwrap()).unwrap();
        let ids: Vec<&str> = v["claims"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
        assert_eq!(ids, vec!["a", "b", "c"]);
        assert_eq!(v["claims"][2]["status"], "REPORTED");
    }

    #[test]
    #[should_panic(expected = "duplicate claim id")]
    fn duplicate_ids_rejected() {
        let mut r = VerificationReport::new("x");
        r.check("a", "", true, Value::Null);
        r.check("a", "", true, Value::Null);
    }

    #[test]
    fn csv_requires_prime_table() {
        let r = VerificationReport::new("group");
        assert!(matches!(emit_report(&r, Format::Csv), Err(ReportError::UnsupportedFormat(..))));
        assert!("yaml".parse::<Format>().is_err());
    }

    #[test]
    fn markdown_lists_statements() {
        let mut r = VerificationReport::new("x");
        r.check("a", "g^7 = 1", true, Value::Null);
        let md = String::from_utf8(emit_report(&r, Format::Markdown).unwrap()).unwrap();
        assert!(md.contains("| `a` | PASS | g^7 = 1 |"));
    }

    #[test]
    fn int_json_large_values_are_strings() {
        assert_eq!(int_json(&BigInt::from(5)), json!(5));
        let big: BigInt = BigInt::from(1) << 80;
        assert_eq!(int_json(&big), json!(big.to_string()));
    }
}

//! Machine-readable verification reports.
//!
//! Every suite produces one [`CheckRecord`] per configured check. Exact
//! values in reports are rendered in the expression grammar (rationals as
//! "p/q" strings), so reports are reproducible byte-for-byte for a fixed
//! configuration and seed, up to the elapsed-time fields.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Reserved for not-derivable-at-(T,D) ideal-membership verdicts.
    Inconclusive,
    Skipped,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub params: String,
    pub status: Status,
    /// Failure witness or informational note.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Reference to a certificate payload, when one was produced.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    pub elapsed_ms: u128,
}

impl CheckRecord {
    pub fn pass(id: impl Into<String>, params: impl Into<String>) -> Self {
        CheckRecord {
            id: id.into(),
            params: params.into(),
            status: Status::Pass,
            witness: None,
            certificate: None,
            elapsed_ms: 0,
        }
    }

    pub fn fail(
        id: impl Into<String>,
        params: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        CheckRecord {
            id: id.into(),
            params: params.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
            certificate: None,
            elapsed_ms: 0,
        }
    }

    pub fn inconclusive(
        id: impl Into<String>,
        params: impl Into<String>,
        note: impl Into<String>,
    ) -> Self {
        CheckRecord {
            id: id.into(),
            params: params.into(),
            status: Status::Inconclusive,
            witness: Some(note.into()),
            certificate: None,
            elapsed_ms: 0,
        }
    }

    pub fn skipped(
        id: impl Into<String>,
        params: impl Into<String>,
        note: impl Into<String>,
    ) -> Self {
        CheckRecord {
            id: id.into(),
            params: params.into(),
            status: Status::Skipped,
            witness: Some(note.into()),
            certificate: None,
            elapsed_ms: 0,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.witness = Some(note.into());
        self
    }

    pub fn with_certificate(mut self, cert: impl Into<String>) -> Self {
        self.certificate = Some(cert.into());
        self
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub artifact_version: String,
    pub config: String,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: impl Into<String>) -> Self {
        Report {
            artifact_version: env!("CARGO_PKG_VERSION").to_string(),
            config: config.into(),
            records: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, rec: CheckRecord) {
        match rec.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Inconclusive => self.summary.inconclusive += 1,
            Status::Skipped => self.summary.skipped += 1,
        }
        self.records.push(rec);
    }

    pub fn extend(&mut self, recs: Vec<CheckRecord>) {
        for r in recs {
            self.push(r);
        }
    }

    pub fn all_passed(&self, strict: bool) -> bool {
        self.summary.fail == 0 && (!strict || self.summary.inconclusive == 0)
    }

    /// Merge deterministically by record id, preserving insertion order of
    /// equal ids.
    pub fn sort_records(&mut self) {
        self.records
            .sort_by(|a, b| a.id.cmp(&b.id).then(a.params.cmp(&b.params)));
    }
}

/// Time a closure, producing the record with its elapsed milliseconds set.
pub fn timed(f: impl FnOnce() -> CheckRecord) -> CheckRecord {
    let start = std::time::Instant::now();
    let mut rec = f();
    rec.elapsed_ms = start.elapsed().as_millis();
    rec
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_counts() {
        let mut r = Report::new("test");
        r.push(CheckRecord::pass("a", ""));
        r.push(CheckRecord::fail("b", "", "w"));
        r.push(CheckRecord::inconclusive("c", "", "n"));
        assert_eq!(r.summary.pass, 1);
        assert_eq!(r.summary.fail, 1);
        assert_eq!(r.summary.inconclusive, 1);
        assert!(!r.all_passed(false));
        let mut ok = Report::new("t");
        ok.push(CheckRecord::pass("a", ""));
        ok.push(CheckRecord::inconclusive("c", "", "n"));
        assert!(ok.all_passed(false));
        assert!(!ok.all_passed(true));
    }
}

//! Suite results and their text, JSON and CSV renderings.

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::Result;
use hopfsuper::analysis::Fingerprint;
use hopfsuper::Report;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl Format {
    pub fn ext(self) -> &'static str {
        match self {
            Format::Text => "txt",
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Verified { how: String },
    Failed { detail: String },
    Unverified { reason: String },
}

impl Verdict {
    pub fn verified(how: impl Into<String>) -> Self {
        Verdict::Verified { how: how.into() }
    }

    pub fn failed(detail: impl Into<String>) -> Self {
        Verdict::Failed { detail: detail.into() }
    }

    pub fn unverified(reason: impl Into<String>) -> Self {
        Verdict::Unverified { reason: reason.into() }
    }

    pub fn from_bool(ok: bool, how: &str, detail: &str) -> Self {
        if ok {
            Self::verified(how)
        } else {
            Self::failed(detail)
        }
    }

    pub fn from_report(r: &Report, how: &str) -> Self {
        if r.passed() {
            Self::verified(how)
        } else {
            Self::failed(r.summary())
        }
    }

    fn tag(&self) -> &'static str {
        match self {
            Verdict::Verified { .. } => "ok",
            Verdict::Failed { .. } => "FAIL",
            Verdict::Unverified { .. } => "open",
        }
    }

    fn note(&self) -> &str {
        match self {
            Verdict::Verified { how } => how,
            Verdict::Failed { detail } => detail,
            Verdict::Unverified { reason } => reason,
        }
    }
}

/// One row of the table a suite reproduces.
#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub object: String,
    pub origin: String,
    /// `even|odd` dimensions.
    pub dim: String,
    pub identified: String,
    pub fingerprint: Option<Fingerprint>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub claim: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub table: Vec<Row>,
    pub checks: Vec<Claim>,
}

impl SuiteResult {
    pub fn new(suite: &str) -> Self {
        SuiteResult { suite: suite.to_string(), table: Vec::new(), checks: Vec::new() }
    }

    pub fn claim(&mut self, claim: impl Into<String>, verdict: Verdict) {
        self.checks.push(Claim { claim: claim.into(), verdict });
    }

    pub fn row(&mut self, row: Row) {
        self.table.push(row);
    }

    pub fn count(&self, tag: &str) -> usize {
        self.checks.iter().filter(|c| c.verdict.tag() == tag).count()
    }

    pub fn render(&self, f: Format) -> Result<String> {
        match f {
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Csv => self.csv(),
            Format::Text => Ok(self.text()),
        }
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite {}", self.suite);
        let _ = writeln!(s);
        let head = ["object", "origin", "dim", "identified"];
        let cells: Vec<[&str; 4]> =
            self.table.iter().map(|r| [r.object.as_str(), r.origin.as_str(), r.dim.as_str(), r.identified.as_str()]).collect();
        let mut w = head.map(|h| h.chars().count());
        for c in &cells {
            for i in 0..4 {
                w[i] = w[i].max(c[i].chars().count());
            }
        }
        let line = |s: &mut String, c: [&str; 4]| {
            let padded: Vec<String> =
                (0..4).map(|i| format!("{}{}", c[i], " ".repeat(w[i] - c[i].chars().count()))).collect();
            let _ = writeln!(s, "  {}", padded.join(" | ").trim_end());
        };
        line(&mut s, head);
        let _ = writeln!(s, "  {}", w.map(|n| "-".repeat(n)).join("-+-"));
        for c in cells {
            line(&mut s, c);
        }
        let _ = writeln!(s);
        for c in &self.checks {
            let _ = writeln!(s, "  [{}] {}: {}", c.verdict.tag(), c.claim, c.verdict.note());
        }
        let _ = writeln!(s);
        let _ = writeln!(
            s,
            "{} verified, {} failed, {} open",
            self.count("ok"),
            self.count("FAIL"),
            self.count("open")
        );
        s
    }

    fn csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["kind", "subject", "origin", "dim", "result", "note"])?;
        for r in &self.table {
            w.write_record(["row", &r.object, &r.origin, &r.dim, &r.identified, ""])?;
        }
        for c in &self.checks {
            w.write_record(["check", &c.claim, "", "", c.verdict.tag(), c.verdict.note()])?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

pub fn report_csv(r: &Report) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["subject", "check", "passed", "detail"])?;
    for c in &r.checks {
        w.write_record([r.subject.as_str(), c.name.as_str(), if c.passed { "true" } else { "false" }, c.detail.as_deref().unwrap_or("")])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// `$HOPFSUPER_GOLDEN_DIR/<suite>.<ext>`, defaulting to the crate's `golden/`.
pub fn golden_path(suite: &str, f: Format) -> PathBuf {
    let dir = std::env::var_os("HOPFSUPER_GOLDEN_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden"));
    dir.join(format!("{suite}.{}", f.ext()))
}

/// First differing line as `(line number, expected, actual)`.
pub fn first_mismatch(golden: &str, actual: &str) -> Option<(usize, String, String)> {
    let mut g = golden.lines();
    let mut a = actual.lines();
    let mut n = 0;
    loop {
        n += 1;
        match (g.next(), a.next()) {
            (None, None) => return None,
            (x, y) if x == y => continue,
            (x, y) => {
                let show = |l: Option<&str>| l.map(str::to_string).unwrap_or_else(|| "<end of file>".into());
                return Some((n, show(x), show(y)));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatch_reports_first_line() {
        assert_eq!(first_mismatch("a\nb\n", "a\nb\n"), None);
        assert_eq!(first_mismatch("a\nb\n", "a\nc\n"), Some((2, "b".into(), "c".into())));
        assert_eq!(first_mismatch("a\n", "a\nb\n"), Some((2, "<end of file>".into(), "b".into())));
    }

    #[test]
    fn text_table_is_aligned() {
        let mut r = SuiteResult::new("t");
        r.row(Row { object: "A".into(), origin: "long origin".into(), dim: "1|1".into(), identified: "B".into(), fingerprint: None });
        r.claim("c", Verdict::verified("witness"));
        let t = r.render(Format::Text).unwrap();
        assert!(t.contains("  object | origin      | dim | identified"));
        assert!(t.contains("  [ok] c: witness"));
        assert!(t.ends_with("1 verified, 0 failed, 0 open\n"));
    }

    #[test]
    fn csv_quotes_commas() {
        let mut r = SuiteResult::new("t");
        r.claim("a, b", Verdict::failed("x"));
        let t = r.render(Format::Csv).unwrap();
        assert!(t.contains("check,\"a, b\",,,FAIL,x"));
    }
}

//! Verification records and their deterministic aggregation.

use std::fmt;

use serde::Serialize;

#[derive(Serialize, Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ConjecturalPass,
    ConjecturalFail,
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn conjectural(ok: bool) -> Self {
        if ok {
            Status::ConjecturalPass
        } else {
            Status::ConjecturalFail
        }
    }

    pub fn is_conjectural(&self) -> bool {
        matches!(self, Status::ConjecturalPass | Status::ConjecturalFail)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ConjecturalPass => "conjectural-pass",
            Status::ConjecturalFail => "conjectural-fail",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parameters identifying a check instance. Field order is the sort order.
#[derive(Serialize, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Params {
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    /// Second module of a pair, as (ℓ, r).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub other: Option<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
}

impl Params {
    pub fn n(n: u32) -> Self {
        Params { n, ..Default::default() }
    }

    pub fn ell(mut self, ell: u32) -> Self {
        self.ell = Some(ell);
        self
    }

    pub fn r(mut self, r: u32) -> Self {
        self.r = Some(r);
        self
    }

    pub fn k(mut self, k: u32) -> Self {
        self.k = Some(k);
        self
    }

    pub fn other(mut self, ell: u32, r: u32) -> Self {
        self.other = Some((ell, r));
        self
    }

    pub fn variant(mut self, v: impl Into<String>) -> Self {
        self.variant = Some(v.into());
        self
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(l) = self.ell {
            write!(f, " l={l}")?;
        }
        if let Some(r) = self.r {
            write!(f, " r={r}")?;
        }
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some((l, r)) = self.other {
            write!(f, " with=({l},{r})")?;
        }
        if let Some(v) = &self.variant {
            write!(f, " [{v}]")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct Record {
    pub check: String,
    pub params: Params,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Record {
    pub fn new(check: impl Into<String>, params: Params, status: Status) -> Self {
        Record {
            check: check.into(),
            params,
            status,
            witness: None,
            detail: None,
        }
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn with_witness(mut self, w: serde_json::Value) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass | Status::ConjecturalPass | Status::Skipped)
    }

    fn sort_key(&self) -> (u32, Option<u32>, Option<u32>, &str, &Params) {
        (self.params.n, self.params.ell, self.params.r, &self.check, &self.params)
    }
}

#[derive(Serialize, Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    /// Sorts by (n, ℓ, r, check, remaining params).
    pub fn sort(&mut self) {
        self.records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    /// True when no asserted check failed; conjectural failures count only if requested.
    pub fn all_pass(&self, include_conjectural: bool) -> bool {
        self.records.iter().all(|r| match r.status {
            Status::Fail => false,
            Status::ConjecturalFail => !include_conjectural,
            _ => true,
        })
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn to_ascii(&self) -> String {
        let width = self.records.iter().map(|r| r.check.len()).max().unwrap_or(0);
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&format!("{:<17} {:<width$}  {}", r.status.as_str(), r.check, r.params));
            if let Some(d) = &r.detail {
                out.push_str(&format!("  ({d})"));
            }
            out.push('\n');
        }
        out
    }
}

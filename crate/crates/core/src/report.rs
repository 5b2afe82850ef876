//! Structured verification reports.

use serde::Serialize;
use serde_json::{Map, Value};

/// Whether a check certifies a theorem or only probes a conjecture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Category {
    #[serde(rename = "THEOREM")]
    Theorem,
    #[serde(rename = "CONJECTURE")]
    Conjecture,
    #[serde(rename = "CONJECTURE-CONSISTENCY")]
    ConjectureConsistency,
}

impl Category {
    pub fn is_conjectural(self) -> bool {
        !matches!(self, Category::Theorem)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Category::Theorem => "THEOREM",
            Category::Conjecture => "CONJECTURE",
            Category::ConjectureConsistency => "CONJECTURE-CONSISTENCY",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "UNKNOWN")]
    Unknown,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Unknown => "UNKNOWN",
        }
    }
}

/// One checked case. `values` carries whatever both sides of the comparison
/// are for this suite; keys serialize in sorted order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub case: String,
    pub status: Status,
    pub values: Map<String, Value>,
}

impl ReportRow {
    pub fn new(case: impl Into<String>, status: Status) -> Self {
        Self {
            case: case.into(),
            status,
            values: Map::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        let value = serde_json::to_value(value).expect("report values are plain data");
        self.values.insert(key.to_owned(), value);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub category: Category,
    pub n: usize,
    pub degree: Option<u32>,
    pub status: Status,
    pub rows: Vec<ReportRow>,
}

impl Report {
    /// Assembles a report; the overall status is FAIL if any row failed,
    /// else UNKNOWN if any row is undecided, else PASS.
    pub fn new(
        suite: &str,
        category: Category,
        n: usize,
        degree: Option<u32>,
        rows: Vec<ReportRow>,
    ) -> Self {
        let status = if rows.iter().any(|r| r.status == Status::Fail) {
            Status::Fail
        } else if rows.iter().any(|r| r.status == Status::Unknown) {
            Status::Unknown
        } else {
            Status::Pass
        };
        Self {
            suite: suite.to_owned(),
            category,
            n,
            degree,
            status,
            rows,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| r.status != Status::Pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_status() {
        let pass = ReportRow::new("a", Status::Pass);
        let fail = ReportRow::new("b", Status::Fail);
        let unknown = ReportRow::new("c", Status::Unknown);
        let r = Report::new("s", Category::Theorem, 2, None, vec![pass.clone()]);
        assert!(r.passed());
        let r = Report::new(
            "s",
            Category::Theorem,
            2,
            None,
            vec![pass.clone(), unknown.clone()],
        );
        assert_eq!(r.status, Status::Unknown);
        let r = Report::new("s", Category::Theorem, 2, None, vec![unknown, fail, pass]);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.failures().count(), 2);
    }

    #[test]
    fn serialized_names() {
        let r = Report::new(
            "celldim",
            Category::Conjecture,
            2,
            Some(9),
            vec![ReportRow::new("alpha=(1)", Status::Pass).with("cells", 4)],
        );
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"suite":"celldim","category":"CONJECTURE","n":2,"degree":9,"status":"PASS","rows":[{"case":"alpha=(1)","status":"PASS","values":{"cells":4}}]}"#
        );
    }
}

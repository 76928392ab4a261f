//! Machine-checked claim reports.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The measurement agrees with the corrected prediction but not with a
    /// value printed elsewhere for the same claim.
    DiscrepancyDocumented,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DiscrepancyDocumented => "discrepancy-documented",
        }
    }
}

/// How the measured value must relate to the predicted one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equal,
    LessThan,
    AtLeast,
}

impl Relation {
    pub fn holds(self, measured: u64, predicted: u64) -> bool {
        match self {
            Relation::Equal => measured == predicted,
            Relation::LessThan => measured < predicted,
            Relation::AtLeast => measured >= predicted,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Equal => "=",
            Relation::LessThan => "<",
            Relation::AtLeast => ">=",
        }
    }
}

/// Parameters of one measurement. Absent fields are omitted from JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub op: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub state: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
}

impl Params {
    pub fn n(n: usize) -> Params {
        Params {
            n: Some(n),
            ..Params::default()
        }
    }

    pub fn mn(m: usize, n: usize) -> Params {
        Params {
            m: Some(m),
            n: Some(n),
            ..Params::default()
        }
    }

    /// Compact `key=value` rendering for text tables.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        if let Some(m) = self.m {
            parts.push(format!("m={m}"));
        }
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(op) = &self.op {
            parts.push(format!("op={op}"));
        }
        if let Some(q) = self.state {
            parts.push(format!("q={q}"));
        }
        if let Some(s) = &self.set {
            let inner: Vec<String> = s.iter().map(|x| x.to_string()).collect();
            parts.push(format!("S={{{}}}", inner.join(",")));
        }
        if let Some(l) = &self.left {
            parts.push(format!("left={l}"));
        }
        if let Some(r) = &self.right {
            parts.push(format!("right={r}"));
        }
        if let Some(v) = &self.variant {
            parts.push(format!("variant={v}"));
        }
        parts.join(" ")
    }
}

/// A competing value for the same quantity, e.g. a formula as printed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Alternative {
    pub label: String,
    pub formula: String,
    pub value: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub params: Params,
    pub formula: String,
    pub predicted: u64,
    pub relation: Relation,
    pub measured: u64,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub alternatives: Vec<Alternative>,
    pub status: Status,
    pub runtime_secs: f64,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    #[serde(skip)]
    discrepancy: bool,
    #[serde(skip)]
    forced_fail: bool,
}

impl ClaimReport {
    pub fn new(
        claim_id: &str,
        params: Params,
        formula: &str,
        predicted: u64,
        relation: Relation,
        measured: u64,
    ) -> ClaimReport {
        let mut r = ClaimReport {
            claim_id: claim_id.to_string(),
            params,
            formula: formula.to_string(),
            predicted,
            relation,
            measured,
            alternatives: Vec::new(),
            status: Status::Pass,
            runtime_secs: 0.0,
            notes: Vec::new(),
            discrepancy: false,
            forced_fail: false,
        };
        r.settle();
        r
    }

    /// Records a competing value. If the measurement disagrees with it and
    /// the main relation holds, the status becomes discrepancy-documented.
    pub fn alternative(mut self, label: &str, formula: &str, value: u64) -> Self {
        self.alternatives.push(Alternative {
            label: label.to_string(),
            formula: formula.to_string(),
            value,
        });
        self.settle();
        self
    }

    /// Marks a documented discrepancy that is not expressed as a value.
    pub fn discrepancy(mut self, note: impl Into<String>) -> Self {
        self.discrepancy = true;
        self.notes.push(note.into());
        self.settle();
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Forces failure regardless of the numbers, e.g. when a certificate
    /// check that backs the claim did not hold.
    pub fn fail(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self.forced_fail = true;
        self.settle();
        self
    }

    pub fn with_runtime(mut self, secs: f64) -> Self {
        self.runtime_secs = secs;
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    fn settle(&mut self) {
        self.status = if self.forced_fail || !self.relation.holds(self.measured, self.predicted) {
            Status::Fail
        } else if self.discrepancy || self.alternatives.iter().any(|a| a.value != self.measured) {
            Status::DiscrepancyDocumented
        } else {
            Status::Pass
        };
    }
}

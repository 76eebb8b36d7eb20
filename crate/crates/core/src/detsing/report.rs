//! Named invariant values with the seeds and checks behind them.

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Exact,
    GenericitySuspect,
    CapExceeded,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Exact => "EXACT",
            Status::GenericitySuspect => "GENERICITY_SUSPECT",
            Status::CapExceeded => "CAP_EXCEEDED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub value: i64,
    pub cite: String,
    pub seeds: Vec<u64>,
    pub log: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub entries: Vec<Entry>,
    pub status: Status,
    pub errors: Vec<String>,
}

impl Default for InvariantReport {
    fn default() -> Self {
        InvariantReport {
            entries: Vec::new(),
            status: Status::Exact,
            errors: Vec::new(),
        }
    }
}

impl InvariantReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: &str, value: i64, cite: &str, seeds: &[u64], log: Vec<String>) {
        self.entries.push(Entry {
            name: name.to_string(),
            value,
            cite: cite.to_string(),
            seeds: seeds.to_vec(),
            log,
        });
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.entries.iter().find(|e| e.name == name).map(|e| e.value)
    }

    /// Records a failed computation; genericity and cap errors lower the status.
    pub fn fail(&mut self, name: &str, err: &Error) {
        let s = match err {
            Error::GenericitySuspect { .. } | Error::GenericityFail { .. } => Status::GenericitySuspect,
            Error::CapExceeded { .. } => Status::CapExceeded,
            _ => Status::Exact,
        };
        self.status = self.status.max(s);
        self.errors.push(format!("{name}: {err}"));
    }
}

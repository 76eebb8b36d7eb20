//! Report files (JSON, schema 1). Field order is fixed and nothing depends on
//! time or hashing order, so equal inputs give byte-identical output.

use detpolar::detsing::{InvariantReport, Status};
use detpolar::family::Verdict;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::job::SCHEMA;

#[derive(Debug, Clone, Serialize)]
pub struct EntryOut {
    pub name: String,
    pub value: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cite: Option<String>,
    pub seeds: Vec<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub log: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictOut {
    pub condition: String,
    pub outcome: String,
    pub special: Option<u64>,
    pub generic: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<String>,
    pub seeds: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroebnerOut {
    pub basis: Vec<String>,
    pub quotient_dim: String,
    pub krull_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub staircase: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub saturation: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colon: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportFile {
    pub schema: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub input_sha256: String,
    pub field: String,
    pub seeds: Vec<u64>,
    pub status: String,
    pub entries: Vec<EntryOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<VerdictOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groebner: Option<GroebnerOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

impl ReportFile {
    pub fn new(command: &str, name: Option<String>, input: &[u8], field: String, seeds: Vec<u64>) -> Self {
        ReportFile {
            schema: SCHEMA,
            command: command.to_string(),
            name,
            input_sha256: sha256_hex(input),
            field,
            seeds,
            status: Status::Exact.as_str().to_string(),
            entries: Vec::new(),
            verdicts: Vec::new(),
            groebner: None,
            errors: Vec::new(),
        }
    }

    pub fn absorb(&mut self, inv: &InvariantReport, cite: bool) {
        self.entries.extend(inv.entries.iter().map(|e| EntryOut {
            name: e.name.clone(),
            value: e.value,
            cite: cite.then(|| e.cite.clone()),
            seeds: e.seeds.clone(),
            log: e.log.clone(),
        }));
        self.errors.extend(inv.errors.iter().cloned());
        let worst = [self.status.as_str(), inv.status.as_str()]
            .into_iter()
            .max_by_key(|s| rank(s))
            .unwrap()
            .to_string();
        self.status = worst;
    }

    pub fn push_verdict(&mut self, v: &Verdict, cite: bool) {
        self.absorb(&v.details, cite);
        let gap = match &v.outcome {
            detpolar::family::Outcome::Undetermined(g) => Some(g.clone()),
            _ => None,
        };
        self.verdicts.push(VerdictOut {
            condition: v.condition.to_string(),
            outcome: v.outcome.to_string(),
            special: v.special,
            generic: v.generic,
            gap,
            seeds: v.seeds.clone(),
        });
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.entries.iter().find(|e| e.name == name).map(|e| e.value)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn rank(status: &str) -> u8 {
    match status {
        "EXACT" => 0,
        "GENERICITY_SUSPECT" => 1,
        _ => 2,
    }
}

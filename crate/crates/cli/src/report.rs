//! Machine-readable command reports.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use homf::linalg::{format_scalar, Vector};
use homf::CheckReport;

pub const TOOL: &str = "homf";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub identity: String,
    /// 1-based basis indices (module indices follow algebra indices).
    pub at: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub passed: bool,
    pub failures: usize,
    pub witnesses: Vec<WitnessRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn strings(v: &Vector) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

impl Verdict {
    pub fn from_report(r: &CheckReport, max_witnesses: usize) -> Self {
        Verdict {
            check: r.name.clone(),
            passed: r.passed,
            failures: r.failures,
            witnesses: r
                .counterexamples
                .iter()
                .take(max_witnesses)
                .map(|w| WitnessRecord {
                    identity: w.identity.clone(),
                    at: w.indices.iter().map(|i| i + 1).collect(),
                    lhs: strings(&w.lhs),
                    rhs: strings(&w.rhs),
                })
                .collect(),
            notes: r.notes.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsRecord {
    pub degree: usize,
    pub cochains: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub tool: String,
    pub version: String,
    pub command: String,
    /// SHA-256 of each input file, in argument order.
    pub input_digests: Vec<String>,
    pub passed: bool,
    pub verdicts: Vec<Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<DimsRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub messages: Vec<String>,
    /// SHA-256 of the structure file written by the command, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_digest: Option<String>,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl ReportFile {
    pub fn new(command: String, input_digests: Vec<String>) -> Self {
        ReportFile {
            tool: TOOL.into(),
            version: VERSION.into(),
            command,
            input_digests,
            passed: true,
            verdicts: Vec::new(),
            cohomology: None,
            messages: Vec::new(),
            output_digest: None,
        }
    }

    pub fn push(&mut self, r: &CheckReport, max_witnesses: usize) {
        self.passed &= r.passed;
        self.verdicts.push(Verdict::from_report(r, max_witnesses));
    }

    pub fn fail_with(&mut self, message: &str) {
        self.passed = false;
        self.messages.push(message.to_string());
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        crate::json::to_text(&serde_json::to_value(self).expect("reports serialize"))
    }

    pub fn to_human(&self) -> String {
        let mut s = String::new();
        for v in &self.verdicts {
            let _ = writeln!(s, "{}: {} ({} failing instances)", v.check, if v.passed { "pass" } else { "FAIL" }, v.failures);
            for w in &v.witnesses {
                let at: Vec<String> = w.at.iter().map(usize::to_string).collect();
                let _ = writeln!(s, "  {} at ({}): ({}) != ({})", w.identity, at.join(","), w.lhs.join(", "), w.rhs.join(", "));
            }
            if v.witnesses.len() < v.failures {
                let _ = writeln!(s, "  ... {} more", v.failures - v.witnesses.len());
            }
            for n in &v.notes {
                let _ = writeln!(s, "  note: {n}");
            }
        }
        if let Some(d) = &self.cohomology {
            let _ = writeln!(
                s,
                "degree {}: C = {}, Z = {}, B = {}, H = {}",
                d.degree, d.cochains, d.cocycles, d.coboundaries, d.cohomology
            );
        }
        for m in &self.messages {
            let _ = writeln!(s, "{m}");
        }
        let _ = writeln!(s, "{}", if self.passed { "result: pass" } else { "result: FAIL" });
        s
    }
}

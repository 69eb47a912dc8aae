//! Uniform verification reports: `{claim, params, verdict, witnesses}`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(&self) -> bool {
        *self == Verdict::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub claim: String,
    pub params: Value,
    pub verdict: Verdict,
    pub witnesses: Value,
}

impl Report {
    pub fn new(claim: impl Into<String>, params: Value, ok: bool, witnesses: Value) -> Self {
        Report {
            claim: claim.into(),
            params,
            verdict: Verdict::from_bool(ok),
            witnesses,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}

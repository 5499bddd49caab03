//! Structured pass/fail certificates.
//!
//! Every verification operation returns a [`VerificationReport`] naming the
//! statement it checked (a stable key such as `"cube-split-exact"`), the
//! parameter point, the degree window if one was used, and a witness on
//! failure. Serialization is byte-stable: parameters are kept in a sorted
//! map and no nondeterministic data enters the report.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub statement: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<i64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl VerificationReport {
    /// Start a passing report; record failures with [`Self::fail`].
    pub fn new(statement: impl Into<String>) -> Self {
        VerificationReport {
            statement: statement.into(),
            parameters: BTreeMap::new(),
            window: None,
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn param(mut self, key: impl Into<String>, value: impl Serialize) -> Self {
        self.parameters.insert(
            key.into(),
            serde_json::to_value(value).expect("parameter must serialize"),
        );
        self
    }

    pub fn window(mut self, w: i64) -> Self {
        self.window = Some(w);
        self
    }

    /// Record a failure with a witness; the first witness is kept.
    pub fn fail(&mut self, witness: impl Into<String>) {
        if self.status == Status::Pass {
            self.status = Status::Fail;
            self.witness = Some(witness.into());
        }
    }

    /// Record `ok`, attaching `witness` if it fails.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.fail(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Validate a JSON value against the report schema: required string
    /// `statement`, object `parameters`, `status` in {"pass","fail"},
    /// optional integer `window` and string `witness`, nothing else.
    pub fn validate_json(v: &serde_json::Value) -> std::result::Result<(), String> {
        let obj = v.as_object().ok_or("report must be an object")?;
        for key in obj.keys() {
            if !matches!(
                key.as_str(),
                "statement" | "parameters" | "window" | "status" | "witness"
            ) {
                return Err(format!("unexpected key {key:?}"));
            }
        }
        match obj.get("statement") {
            Some(serde_json::Value::String(_)) => {}
            _ => return Err("statement must be a string".into()),
        }
        match obj.get("parameters") {
            Some(serde_json::Value::Object(_)) => {}
            _ => return Err("parameters must be an object".into()),
        }
        match obj.get("status").and_then(|s| s.as_str()) {
            Some("pass") | Some("fail") => {}
            _ => return Err("status must be \"pass\" or \"fail\"".into()),
        }
        if let Some(w) = obj.get("window") {
            if !w.is_i64() {
                return Err("window must be an integer".into());
            }
        }
        if let Some(w) = obj.get("witness") {
            if !w.is_string() {
                return Err("witness must be a string".into());
            }
        }
        Ok(())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(
            f,
            "{:<28} [{}] {}",
            self.statement,
            params.join(" "),
            match self.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            }
        )?;
        if let Some(w) = &self.witness {
            write!(f, "  witness: {w}")?;
        }
        Ok(())
    }
}

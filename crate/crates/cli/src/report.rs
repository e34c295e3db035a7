//! The JSON report envelope shared by every subcommand.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Bumped whenever the report layout changes incompatibly; matches the
/// `schema` constant in `schema/report.schema.json`.
pub const SCHEMA_VERSION: &str = "omega-lsa-report/1";

#[derive(Debug, Clone, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(path: &str, bytes: &[u8]) -> Self {
        InputDigest {
            path: path.to_string(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

/// Everything a command prints on standard output.
///
/// All fields except `timing` are a deterministic function of the
/// arguments and input bytes.
#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema: &'static str,
    pub tool: Tool,
    pub command: String,
    pub input: Option<InputDigest>,
    pub verdict: Value,
    pub exit_code: i32,
    pub payload: Value,
    pub diagnostics: Vec<String>,
    pub timing: Timing,
}

impl ReportDocument {
    pub fn new(command: &str) -> Self {
        ReportDocument {
            schema: SCHEMA_VERSION,
            tool: Tool {
                name: "omega-lsa",
                version: env!("CARGO_PKG_VERSION"),
            },
            command: command.to_string(),
            input: None,
            verdict: Value::Null,
            exit_code: 0,
            payload: Value::Null,
            diagnostics: Vec::new(),
            timing: Timing { elapsed_ms: 0.0 },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// The report with the `timing` field removed, for byte comparisons.
pub fn without_timing(json: &str) -> Option<String> {
    let mut v: Value = serde_json::from_str(json).ok()?;
    v.as_object_mut()?.remove("timing");
    serde_json::to_string_pretty(&v).ok()
}

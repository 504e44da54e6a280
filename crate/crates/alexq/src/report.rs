//! The JSON document every subcommand prints.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Failed,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Context {
    Params { n: u64, t: u64 },
    Table { table: String },
    Sweep { n_max: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorInfo {
    /// Stable identifier such as `NotAUnit` or `Usage`.
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub context: Option<Context>,
    pub status: Status,
    pub result: Option<Value>,
    pub error: Option<ErrorInfo>,
}

impl Report {
    pub fn ok(command: &str, context: Option<Context>, result: Value) -> Self {
        Report {
            command: command.to_string(),
            context,
            status: Status::Ok,
            result: Some(result),
            error: None,
        }
    }

    pub fn error(
        command: &str,
        context: Option<Context>,
        kind: &str,
        message: impl Into<String>,
    ) -> Self {
        Report {
            command: command.to_string(),
            context,
            status: Status::Error,
            result: None,
            error: Some(ErrorInfo {
                kind: kind.to_string(),
                message: message.into(),
            }),
        }
    }

    /// Compact single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report values are plain JSON")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

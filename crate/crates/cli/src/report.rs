use std::io::Write;
use std::path::Path;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::CliError;
use crate::problem::Problem;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Timing {
    pub elapsed_ms: f64,
}

/// Envelope shared by every command.
#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report<'a> {
    pub schema_version: u32,
    pub tool: Tool,
    pub command: &'a str,
    /// `sha256:` followed by the hex digest of the raw input bytes.
    pub input_digest: String,
    pub problem: &'a Problem,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl<'a> Report<'a> {
    pub fn new(
        command: &'a str,
        input: &[u8],
        problem: &'a Problem,
        result: Value,
        timing: Option<Duration>,
    ) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool: Tool {
                name: "normality",
                version: env!("CARGO_PKG_VERSION"),
            },
            command,
            input_digest: format!("sha256:{}", hex::encode(Sha256::digest(input))),
            problem,
            result,
            timing: timing.map(|t| Timing {
                elapsed_ms: t.as_secs_f64() * 1e3,
            }),
        }
    }
}

/// Pretty JSON to stdout, or to `path` via a sibling temporary file renamed
/// into place.
pub fn emit(report: &Report<'_>, path: Option<&Path>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    let Some(path) = path else {
        print!("{text}");
        return Ok(());
    };
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(text.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

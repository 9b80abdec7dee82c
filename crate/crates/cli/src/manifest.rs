use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::{json, Value};

use crate::commands::{Fail, Out};

pub const MANIFEST_SCHEMA: &str = "braidwo.manifest/1";

pub fn now_unix() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Record of one invocation. Field order is fixed by declaration.
#[derive(Serialize)]
pub struct RunManifest {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub command: Vec<String>,
    pub started_unix: u64,
    pub finished_unix: u64,
    pub exit_code: u8,
    pub outcome: Value,
    pub environment: Value,
}

impl RunManifest {
    pub fn new(command: Vec<String>, started_unix: u64, result: &Result<Out, Fail>) -> Self {
        let (exit_code, outcome) = match result {
            Ok(o) => (o.code, o.json.clone()),
            Err(f) => (f.code, json!({ "error": f.message })),
        };
        RunManifest {
            schema: MANIFEST_SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            command,
            started_unix,
            finished_unix: now_unix(),
            exit_code,
            outcome,
            environment: json!({
                "os": std::env::consts::OS,
                "arch": std::env::consts::ARCH,
                "cache_dir": braidwo::divisors::cache_dir().display().to_string(),
                "default_budget_bits": braidwo::DEFAULT_BUDGET_BITS,
            }),
        }
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        let text = serde_json::to_string_pretty(self).expect("manifest serializes");
        std::fs::write(path, text + "\n")
    }
}

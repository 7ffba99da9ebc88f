//! Run manifests: what was run, with which parameters, and digests of every
//! file read or written.

use std::path::Path;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const MANIFEST_FORMAT: &str = "hoffgraph-manifest/1";

#[derive(Clone, Debug, Serialize)]
pub struct Artifact {
    /// File path, or `-` for standard output.
    pub path: String,
    /// Versioned format tag, e.g. `graph6` or `hoffgraph-eta3-checkpoint/1`.
    pub format: String,
    pub sha256: String,
    pub bytes: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub format: &'static str,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub parameters: Value,
    pub inputs: Vec<Artifact>,
    pub outputs: Vec<Artifact>,
    pub exit_code: i32,
    pub started_unix: u64,
    pub wall_seconds: f64,
    #[serde(skip)]
    clock: Option<Instant>,
}

impl RunManifest {
    pub fn start(command: Vec<String>) -> Self {
        RunManifest {
            format: MANIFEST_FORMAT,
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command,
            parameters: Value::Null,
            inputs: Vec::new(),
            outputs: Vec::new(),
            exit_code: 0,
            started_unix: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
            wall_seconds: 0.0,
            clock: Some(Instant::now()),
        }
    }

    pub fn input(&mut self, path: &Path, format: &str, bytes: &[u8]) {
        self.inputs.push(artifact(path.display().to_string(), format, bytes));
    }

    pub fn output(&mut self, path: &str, format: &str, bytes: &[u8]) {
        self.outputs.push(artifact(path.to_string(), format, bytes));
    }

    pub fn finish(&mut self, exit_code: i32) -> String {
        self.exit_code = exit_code;
        if let Some(c) = self.clock {
            self.wall_seconds = c.elapsed().as_secs_f64();
        }
        serde_json::to_string_pretty(self).expect("manifest serialization")
    }
}

fn artifact(path: String, format: &str, bytes: &[u8]) -> Artifact {
    Artifact { path, format: format.to_string(), sha256: sha256_hex(bytes), bytes: bytes.len() }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

//! Atomic file output, run manifests and number formatting.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;

use crate::CliError;

/// Digits after the decimal point for every printed or CSV number.
pub const DECIMALS: usize = 9;

/// Display unit for stdout. Files are always written in nats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unit {
    Nats,
    Bits,
}

impl Unit {
    pub fn show(self, nats: f64) -> String {
        match self {
            Unit::Nats => fixed(nats),
            Unit::Bits => fixed(nats / std::f64::consts::LN_2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Unit::Nats => "nats",
            Unit::Bits => "bits",
        }
    }
}

/// Fixed-point with [`DECIMALS`] digits; values that round to zero print
/// without a sign.
pub fn fixed(x: f64) -> String {
    let s = format!("{x:.DECIMALS$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

/// Writes `bytes` to a temporary file next to `path` and renames it into
/// place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(dir, e))?;
    tmp.write_all(bytes).map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut bytes =
        serde_json::to_vec_pretty(value).map_err(|e| CliError::Runtime(e.to_string()))?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// `value` (a JSON object) with a leading `"manifest"` reference.
pub fn with_manifest<T: Serialize>(value: &T, manifest: &Path) -> Result<Value, CliError> {
    let body = serde_json::to_value(value).map_err(|e| CliError::Runtime(e.to_string()))?;
    let mut out = serde_json::Map::new();
    out.insert("manifest".into(), Value::String(file_name(manifest)));
    match body {
        Value::Object(map) => out.extend(map),
        other => {
            out.insert("data".into(), other);
        }
    }
    Ok(Value::Object(out))
}

fn file_name(p: &Path) -> String {
    p.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

/// Manifest path for a single output file: `<file>.manifest.json`.
pub fn manifest_for(output: &Path) -> PathBuf {
    let mut name = output.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    output.with_file_name(name)
}

fn unix_ms() -> u128 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis())
        .unwrap_or(0)
}

/// Provenance record of one command invocation.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub args: Vec<String>,
    pub config: Value,
    pub seed: Option<u64>,
    pub version: &'static str,
    pub started_unix_ms: u128,
    pub finished_unix_ms: u128,
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn start(command: &str, config: Value, seed: Option<u64>) -> Self {
        Self {
            command: command.into(),
            args: std::env::args().collect(),
            config,
            seed,
            version: env!("CARGO_PKG_VERSION"),
            started_unix_ms: unix_ms(),
            finished_unix_ms: 0,
            outputs: Vec::new(),
        }
    }

    pub fn finish(mut self, path: &Path, outputs: &[&Path]) -> Result<(), CliError> {
        self.finished_unix_ms = unix_ms();
        self.outputs = outputs.iter().map(|p| p.display().to_string()).collect();
        write_atomic(path, &to_json(&self)?)
    }
}

/// Comma-separated rows with a header and LF line endings.
pub struct Csv {
    buf: String,
    columns: usize,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        let mut buf = header.join(",");
        buf.push('\n');
        Self {
            buf,
            columns: header.len(),
        }
    }

    pub fn row(&mut self, cells: &[String]) {
        debug_assert_eq!(cells.len(), self.columns);
        self.buf.push_str(&cells.join(","));
        self.buf.push('\n');
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.buf.into_bytes()
    }
}

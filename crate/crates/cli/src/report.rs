use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Digest of the canonical (sorted-key, compact) rendering of `config`.
pub fn config_hash(config: &Value) -> String {
    sha256_hex(config.to_string().as_bytes())
}

/// Hash of the input file, so the config hash changes with the data.
pub fn file_digest(path: &Path) -> Result<String> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(sha256_hex(&bytes))
}

/// Adds `config` and `config_hash` to `body` and prints it. `serde_json`
/// maps are ordered, so keys come out sorted.
pub fn emit(mut body: Map<String, Value>, config: Value, runtime_ms: Option<f64>) -> Result<()> {
    body.insert("config_hash".into(), Value::String(config_hash(&config)));
    body.insert("config".into(), config);
    if let Some(ms) = runtime_ms {
        body.insert("runtime_ms".into(), ms.into());
    }
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, &Value::Object(body))?;
    writeln!(out)?;
    Ok(())
}

pub fn write_curve(path: &Path, column: &str, grid: &[f64], distances: &[f64]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)
        .with_context(|| format!("creating {}", path.display()))?;
    w.write_record([column, "distance"])?;
    for (g, d) in grid.iter().zip(distances) {
        w.write_record([g.to_string(), d.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

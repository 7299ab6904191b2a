use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// How a command ended, mapped onto the exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Decided,
    Unknown,
    Failed,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Decided => 0,
            Status::Unknown => 2,
            Status::Failed => 1,
        }
    }
}

pub struct Outcome {
    pub status: Status,
    /// Human-readable text printed to stdout.
    pub summary: String,
    /// One-line machine outcome stored in the run record.
    pub outcome: String,
    /// File written to `--out`: a certificate or a plain data document.
    pub artifact: Option<Value>,
    /// Extra data kept only in the run record.
    pub details: Option<Value>,
}

impl Outcome {
    pub fn new(status: Status, outcome: impl Into<String>, summary: impl Into<String>) -> Self {
        Outcome { status, summary: summary.into(), outcome: outcome.into(), artifact: None, details: None }
    }

    pub fn artifact(mut self, v: impl Serialize) -> Self {
        self.artifact = Some(serde_json::to_value(v).expect("artifact serialises"));
        self
    }

    pub fn details(mut self, v: impl Serialize) -> Self {
        self.details = Some(serde_json::to_value(v).expect("details serialise"));
        self
    }
}

/// Digests of every input the command consumed, keyed by role.
#[derive(Default)]
pub struct Inputs(BTreeMap<String, String>);

impl Inputs {
    pub fn text(&mut self, role: impl Into<String>, text: &str) {
        self.0.insert(role.into(), hex::encode(Sha256::digest(text.as_bytes())));
    }

    pub fn read(&mut self, role: impl Into<String>, path: &Path) -> anyhow::Result<String> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        self.text(role, &text);
        Ok(text)
    }
}

#[derive(Serialize)]
struct RunRecord<'a> {
    command: &'a str,
    version: &'a str,
    config: &'a Value,
    input_digests: &'a BTreeMap<String, String>,
    status: Status,
    outcome: &'a str,
    certificate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    details: Option<&'a Value>,
    wall_time_secs: f64,
}

pub fn record_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".run.json");
    PathBuf::from(s)
}

/// Refuses to clobber existing outputs unless `force` is set.
pub fn check_writable(out: &Path, force: bool) -> anyhow::Result<()> {
    if force {
        return Ok(());
    }
    for p in [out.to_path_buf(), record_path(out)] {
        if p.exists() {
            bail!("{} exists; pass --force to overwrite", p.display());
        }
    }
    Ok(())
}

pub fn write_outputs(
    out: &Path,
    command: &str,
    config: &Value,
    inputs: &Inputs,
    o: &Outcome,
    wall: f64,
) -> anyhow::Result<()> {
    let certificate = match &o.artifact {
        Some(a) => {
            fs::write(out, serde_json::to_string_pretty(a)? + "\n").with_context(|| format!("writing {}", out.display()))?;
            Some(out.display().to_string())
        }
        None => None,
    };
    let rec = RunRecord {
        command,
        version: env!("CARGO_PKG_VERSION"),
        config,
        input_digests: &inputs.0,
        status: o.status,
        outcome: &o.outcome,
        certificate,
        details: o.details.as_ref(),
        wall_time_secs: wall,
    };
    let path = record_path(out);
    fs::write(&path, serde_json::to_string_pretty(&rec)? + "\n").with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

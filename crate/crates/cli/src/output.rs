//! Output plumbing: schema-versioned JSON, plain CSV, and path resolution.
//!
//! Every JSON artifact carries a top-level `"schema": 1` field. CSV columns
//! are frozen; see the README for the per-command layouts. Relative output
//! paths are resolved against `ISING_OUT_DIR` when that variable is set.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct Versioned<T: Serialize> {
    schema: u32,
    #[serde(flatten)]
    payload: T,
}

/// Serializes a payload with the schema marker, pretty-printed with a
/// trailing newline.
pub fn to_json<T: Serialize>(payload: T) -> String {
    let wrapped = Versioned { schema: SCHEMA_VERSION, payload };
    let mut s = serde_json::to_string_pretty(&wrapped).expect("serializable payload");
    s.push('\n');
    s
}

/// Resolves an output path against `ISING_OUT_DIR` when it is relative.
pub fn resolve_out_path(path: &Path) -> PathBuf {
    if path.is_absolute() {
        return path.to_path_buf();
    }
    match std::env::var_os("ISING_OUT_DIR") {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir).join(path),
        _ => path.to_path_buf(),
    }
}

/// Writes to the resolved path, or to stdout when no path is given.
pub fn emit(path: Option<&Path>, content: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(resolve_out_path(p), content),
        None => io::stdout().write_all(content.as_bytes()),
    }
}

/// Builds a CSV document from a header and preformatted rows.
pub fn csv_document(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

//! Artifact serialization: CSV tables, JSON documents, SVG figures.

pub mod json;
pub mod svg;
pub mod tables;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Format a value with six significant digits: fixed notation in a sane
/// range, scientific outside it, trailing zeros trimmed. Deterministic.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..15).contains(&exp) {
        let s = format!("{:.5e}", x);
        return s;
    }
    let decimals = (5 - exp).max(0) as usize;
    let s = format!("{:.*}", decimals, x);
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        t.to_string()
    } else {
        s
    }
}

/// RFC-4180 quoting: wrap in quotes when the field contains a comma, quote
/// or newline; embedded quotes double.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn write_file(dir: &Path, name: &str, contents: &str) -> std::io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    let mut f = fs::File::create(&path)?;
    f.write_all(contents.as_bytes())?;
    Ok(path)
}

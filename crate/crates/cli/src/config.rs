//! Command-line and config-file parsing.
//!
//! Flags are `--key value` (or `--key=value`); a config file named by
//! `--config` holds the same keys as flat `key=value` lines with `#`
//! comments, and command-line values override file values. All frequencies
//! are quoted as H/2π in MHz and converted to internal rad/ns exactly once,
//! here at the boundary; times are ns.

use std::collections::BTreeMap;
use std::fmt;

/// A usage error: unknown flag, malformed value, missing subcommand.
/// Distinct from validation errors so the shell can exit with status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

/// Parsed invocation: subcommand, positional argument, and key→value flags
/// merged from the config file (low precedence) and the command line.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub subcommand: String,
    pub positional: Vec<String>,
    values: BTreeMap<String, String>,
    known: Vec<&'static str>,
}

/// Flags every subcommand accepts.
pub const COMMON_KEYS: &[&str] = &["out", "formats", "seed", "workers", "config"];

pub fn parse_cli(
    args: &[String],
    allowed: &'static [&'static str],
) -> Result<RunConfig, UsageError> {
    let mut values = BTreeMap::new();
    let mut positional = Vec::new();
    let subcommand = args
        .first()
        .cloned()
        .ok_or_else(|| UsageError("missing subcommand".into()))?;

    let mut i = 1;
    let mut cli_pairs: Vec<(String, String)> = Vec::new();
    while i < args.len() {
        let arg = &args[i];
        if let Some(stripped) = arg.strip_prefix("--") {
            let (key, value) = if let Some((k, v)) = stripped.split_once('=') {
                (k.to_string(), v.to_string())
            } else {
                let v = args.get(i + 1).cloned().ok_or_else(|| {
                    UsageError(format!("flag --{stripped} expects a value"))
                })?;
                i += 1;
                (stripped.to_string(), v)
            };
            cli_pairs.push((key, value));
        } else {
            positional.push(arg.clone());
        }
        i += 1;
    }

    // Config file first so the command line overrides it.
    if let Some((_, path)) = cli_pairs.iter().find(|(k, _)| k == "config") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("cannot read config {path}: {e}")))?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                UsageError(format!("{path}:{}: expected key=value", lineno + 1))
            })?;
            values.insert(k.trim().to_string(), v.trim().to_string());
        }
    }
    for (k, v) in cli_pairs {
        values.insert(k, v);
    }

    let known: Vec<&'static str> = allowed.iter().chain(COMMON_KEYS.iter()).copied().collect();
    for key in values.keys() {
        if !known.contains(&key.as_str()) {
            return Err(UsageError(format!(
                "unknown flag --{key} for `{subcommand}`"
            )));
        }
    }

    Ok(RunConfig {
        subcommand,
        positional,
        values,
        known,
    })
}

impl RunConfig {
    pub fn get(&self, key: &str) -> Option<&str> {
        debug_assert!(self.known.contains(&key), "unregistered key {key}");
        self.values.get(key).map(|s| s.as_str())
    }

    pub fn f64(&self, key: &str) -> Result<Option<f64>, UsageError> {
        self.get(key)
            .map(|s| {
                s.parse::<f64>()
                    .map_err(|_| UsageError(format!("--{key}: expected a number, got {s:?}")))
            })
            .transpose()
    }

    pub fn f64_or(&self, key: &str, default: f64) -> Result<f64, UsageError> {
        Ok(self.f64(key)?.unwrap_or(default))
    }

    pub fn usize_or(&self, key: &str, default: usize) -> Result<usize, UsageError> {
        match self.get(key) {
            None => Ok(default),
            Some(s) => s
                .parse::<usize>()
                .map_err(|_| UsageError(format!("--{key}: expected an integer, got {s:?}"))),
        }
    }

    pub fn u64_or(&self, key: &str, default: u64) -> Result<u64, UsageError> {
        match self.get(key) {
            None => Ok(default),
            Some(s) => s
                .parse::<u64>()
                .map_err(|_| UsageError(format!("--{key}: expected an integer, got {s:?}"))),
        }
    }

    /// Output directory: flag, else the CHERNLAB_OUT environment variable,
    /// else ./out.
    pub fn out_dir(&self) -> String {
        self.get("out")
            .map(str::to_string)
            .or_else(|| std::env::var("CHERNLAB_OUT").ok())
            .unwrap_or_else(|| "out".to_string())
    }

    /// Requested output formats (default: all three).
    pub fn formats(&self) -> Result<Formats, UsageError> {
        match self.get("formats") {
            None => Ok(Formats {
                csv: true,
                json: true,
                svg: true,
            }),
            Some(list) => {
                let mut f = Formats {
                    csv: false,
                    json: false,
                    svg: false,
                };
                for part in list.split(',') {
                    match part.trim() {
                        "csv" => f.csv = true,
                        "json" => f.json = true,
                        "svg" => f.svg = true,
                        other => {
                            return Err(UsageError(format!("unknown format {other:?}")));
                        }
                    }
                }
                Ok(f)
            }
        }
    }

    pub fn seed(&self) -> Result<u64, UsageError> {
        self.u64_or("seed", 0)
    }

    pub fn workers(&self) -> Result<usize, UsageError> {
        let default = std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1);
        self.usize_or("workers", default)
    }

    /// Echo of the effective configuration for provenance stamps:
    /// subcommand plus the sorted key=value map.
    pub fn echo(&self) -> String {
        let mut parts = vec![self.subcommand.clone()];
        parts.extend(self.positional.iter().cloned());
        for (k, v) in &self.values {
            if k != "out" && k != "workers" && k != "config" {
                parts.push(format!("{k}={v}"));
            }
        }
        parts.join(" ")
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Formats {
    pub csv: bool,
    pub json: bool,
    pub svg: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    const KEYS: &[&str] = &["hr", "h0", "tf"];

    #[test]
    fn parses_flags_and_positionals() {
        let cfg = parse_cli(&args(&["chern", "--hr", "10", "--h0=0.5"]), KEYS).unwrap();
        assert_eq!(cfg.subcommand, "chern");
        assert_eq!(cfg.f64("hr").unwrap(), Some(10.0));
        assert_eq!(cfg.f64("h0").unwrap(), Some(0.5));
        assert_eq!(cfg.f64("tf").unwrap(), None);
    }

    #[test]
    fn rejects_unknown_flags() {
        assert!(parse_cli(&args(&["chern", "--bogus", "1"]), KEYS).is_err());
        assert!(parse_cli(&args(&["chern", "--hr"]), KEYS).is_err());
    }

    #[test]
    fn config_file_fills_defaults_and_cli_wins() {
        let dir = std::env::temp_dir().join(format!("chernlab-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cfg.txt");
        std::fs::write(&path, "# comment\nhr = 7\ntf = 400\n").unwrap();
        let cfg = parse_cli(
            &args(&["chern", "--config", path.to_str().unwrap(), "--hr", "10"]),
            KEYS,
        )
        .unwrap();
        assert_eq!(cfg.f64("hr").unwrap(), Some(10.0));
        assert_eq!(cfg.f64("tf").unwrap(), Some(400.0));
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn format_list_parses() {
        let cfg = parse_cli(&args(&["x", "--formats", "csv,svg"]), KEYS).unwrap();
        let f = cfg.formats().unwrap();
        assert!(f.csv && f.svg && !f.json);
        let cfg = parse_cli(&args(&["x", "--formats", "tiff"]), KEYS).unwrap();
        assert!(cfg.formats().is_err());
    }
}

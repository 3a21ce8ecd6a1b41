//! Optional `key = value` configuration file named by `TANCONE_CONFIG`.

use std::collections::BTreeMap;
use std::path::Path;

/// Settings that may come from the file; command-line flags win.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FileConfig {
    pub max_degree: Option<u64>,
    pub max_pairs: Option<usize>,
    pub dmax: Option<usize>,
    pub format: Option<String>,
    pub jobs: Option<usize>,
    pub seed: Option<u64>,
    pub scan_window_factor: Option<u64>,
    pub scan_betti: Option<bool>,
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, String> {
    v.parse()
        .map_err(|_| format!("config: bad value {v:?} for {key}"))
}

pub fn parse(text: &str) -> Result<FileConfig, String> {
    let mut seen = BTreeMap::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("config line {}: expected key = value", no + 1))?;
        seen.insert(k.trim().to_string(), v.trim().to_string());
    }
    let mut c = FileConfig::default();
    for (k, v) in &seen {
        match k.as_str() {
            "max_degree" | "degree_budget" => c.max_degree = Some(parse_num(k, v)?),
            "max_pairs" | "pair_budget" => c.max_pairs = Some(parse_num(k, v)?),
            "dmax" | "dmax_hilbert" => c.dmax = Some(parse_num(k, v)?),
            "format" => c.format = Some(v.clone()),
            "jobs" => c.jobs = Some(parse_num(k, v)?),
            "seed" => c.seed = Some(parse_num(k, v)?),
            "scan_window_factor" => c.scan_window_factor = Some(parse_num(k, v)?),
            "scan_betti" => c.scan_betti = Some(parse_num(k, v)?),
            other => return Err(format!("config: unknown key {other:?}")),
        }
    }
    for (name, bad) in [
        ("max_degree", c.max_degree == Some(0)),
        ("max_pairs", c.max_pairs == Some(0)),
        ("jobs", c.jobs == Some(0)),
    ] {
        if bad {
            return Err(format!("config: {name} must be positive"));
        }
    }
    Ok(c)
}

pub fn load(path: &Path) -> Result<FileConfig, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("config {}: {e}", path.display()))?;
    parse(&text)
}

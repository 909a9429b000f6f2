use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rmary_core::verify::DEFAULT_BUDGET;

/// Environment variable naming the default series cache directory.
pub const CACHE_DIR_ENV: &str = "RMARY_CACHE_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// A comma-separated list of values and inclusive `a..b` ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumList(pub Vec<u32>);

impl FromStr for NumList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim) {
            let num = |t: &str| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| format!("bad number {t:?}: {e}"))
            };
            if let Some((lo, hi)) = part.split_once("..") {
                let (lo, hi) = (num(lo)?, num(hi)?);
                if lo > hi {
                    return Err(format!("empty range {part}"));
                }
                out.extend(lo..=hi);
            } else {
                out.push(num(part)?);
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(NumList(out))
    }
}

impl fmt::Display for NumList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Validated settings for a verification sweep.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub m_values: Vec<u32>,
    pub j_values: Vec<u32>,
    pub n_max: u64,
    pub budget: usize,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            m_values: vec![2],
            j_values: vec![1],
            n_max: 0,
            budget: DEFAULT_BUDGET,
            format: Format::Json,
            cache_dir: None,
            jobs: 1,
        }
    }
}

impl RunConfig {
    pub fn validate(self) -> Result<Self, String> {
        if self.m_values.is_empty() || self.j_values.is_empty() {
            return Err("--m and --j need at least one value".into());
        }
        if let Some(m) = self.m_values.iter().find(|&&m| m < 2) {
            return Err(format!("base m must be >= 2, got {m}"));
        }
        if self.j_values.contains(&0) {
            return Err("level j must be >= 1".into());
        }
        if self.jobs == 0 {
            return Err("--jobs must be >= 1".into());
        }
        Ok(self)
    }
}

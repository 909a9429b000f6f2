//! On-disk cache of generating-function prefixes.
//!
//! Files are named `cm_<m>_<trunc>.json` and hold
//! `{"version", "m", "trunc", "coeffs": [decimal strings], "sha256"}`. A file
//! with a larger truncation satisfies a smaller request by prefix. Files with
//! another format version are ignored; a checksum or shape mismatch is an
//! integrity error.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{restricted_series, TruncatedSeries};
use crate::error::{Error, Result};

pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    m: u32,
    trunc: usize,
    coeffs: Vec<String>,
    sha256: String,
}

fn checksum(coeffs: &[String]) -> String {
    let mut hasher = Sha256::new();
    for c in coeffs {
        hasher.update(c.as_bytes());
        hasher.update(b"\n");
    }
    hex::encode(hasher.finalize())
}

#[derive(Debug, Clone)]
pub struct SeriesCache {
    dir: PathBuf,
}

impl SeriesCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn file_name(m: u32, trunc: usize) -> String {
        format!("cm_{m}_{trunc}.json")
    }

    /// Smallest cached series for `m` covering `trunc`, cut down to `trunc`.
    pub fn get(&self, m: u32, trunc: usize) -> Result<Option<TruncatedSeries>> {
        let mut candidates = self.candidates(m)?;
        candidates.retain(|(t, _)| *t >= trunc);
        candidates.sort();
        for (_, path) in candidates {
            if let Some(series) = self.read(&path, m)? {
                return series.prefix(trunc).map(Some);
            }
        }
        Ok(None)
    }

    pub fn put(&self, m: u32, series: &TruncatedSeries) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let coeffs: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
        let file = CacheFile {
            version: CACHE_FORMAT_VERSION,
            m,
            trunc: series.trunc(),
            sha256: checksum(&coeffs),
            coeffs,
        };
        let path = self.dir.join(Self::file_name(m, series.trunc()));
        let tmp = path.with_extension("json.tmp");
        fs::write(
            &tmp,
            serde_json::to_vec(&file).map_err(std::io::Error::other)?,
        )?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    /// Read-through lookup that computes and stores on a miss.
    pub fn get_or_compute(&self, m: u32, trunc: usize) -> Result<TruncatedSeries> {
        if let Some(series) = self.get(m, trunc)? {
            return Ok(series);
        }
        let series = restricted_series(m, trunc)?;
        self.put(m, &series)?;
        Ok(series)
    }

    fn candidates(&self, m: u32) -> Result<Vec<(usize, PathBuf)>> {
        let entries = match fs::read_dir(&self.dir) {
            Ok(entries) => entries,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let prefix = format!("cm_{m}_");
        let mut found = Vec::new();
        for entry in entries {
            let entry = entry?;
            let name = entry.file_name();
            let Some(name) = name.to_str() else { continue };
            let Some(rest) = name
                .strip_prefix(&prefix)
                .and_then(|r| r.strip_suffix(".json"))
            else {
                continue;
            };
            if let Ok(trunc) = rest.parse::<usize>() {
                found.push((trunc, entry.path()));
            }
        }
        Ok(found)
    }

    fn read(&self, path: &Path, m: u32) -> Result<Option<TruncatedSeries>> {
        let corrupt = |why: String| Error::CacheIntegrity(format!("{}: {why}", path.display()));
        let bytes = fs::read(path)?;
        let value: serde_json::Value =
            serde_json::from_slice(&bytes).map_err(|e| corrupt(e.to_string()))?;
        if value.get("version").and_then(|v| v.as_u64()) != Some(CACHE_FORMAT_VERSION as u64) {
            return Ok(None);
        }
        let file: CacheFile = serde_json::from_value(value).map_err(|e| corrupt(e.to_string()))?;
        if file.m != m || file.coeffs.len() != file.trunc {
            return Err(corrupt("header does not match contents".into()));
        }
        if checksum(&file.coeffs) != file.sha256 {
            return Err(corrupt("checksum mismatch".into()));
        }
        let coeffs = file
            .coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(|e| corrupt(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        TruncatedSeries::from_coeffs(coeffs).map(Some)
    }
}

//! On-disk cache of enumeration reports.
//!
//! One JSON-lines file per configuration: a header line holding the key,
//! then one census member per line. Files are named by the SHA-256 of the
//! key and written through a temporary file and an atomic rename.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::classify::{CensusMember, EnumerationReport};
use crate::numfield::FieldDescriptor;

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache entry is malformed: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cache entry {0} holds a different configuration")]
    KeyMismatch(PathBuf),
}

/// Everything that determines a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub field: FieldDescriptor,
    pub generator: Vec<String>,
    pub n_max: usize,
    pub k_bound: i64,
    pub census: bool,
}

impl CacheKey {
    pub fn of(report: &EnumerationReport) -> Self {
        CacheKey {
            field: report.field.clone(),
            generator: report.generator.clone(),
            n_max: report.n_max,
            k_bound: report.k_bound,
            census: report.irreducible.is_some(),
        }
    }

    pub fn file_name(&self) -> String {
        let json = serde_json::to_string(self).expect("key serializes");
        format!("{}.jsonl", hex::encode(Sha256::digest(json.as_bytes())))
    }
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    pub fn store(&self, report: &EnumerationReport) -> Result<PathBuf, CacheError> {
        fs::create_dir_all(&self.dir)?;
        let key = CacheKey::of(report);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        writeln!(tmp, "{}", serde_json::to_string(&key)?)?;
        for m in &report.quiddities {
            writeln!(tmp, "{}", serde_json::to_string(m)?)?;
        }
        tmp.flush()?;
        let path = self.path(&key);
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(path)
    }

    /// `Ok(None)` when nothing is cached for `key`.
    pub fn load(&self, key: &CacheKey) -> Result<Option<EnumerationReport>, CacheError> {
        let path = self.path(key);
        let file = match fs::File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mut lines = BufReader::new(file).lines();
        let header: CacheKey = match lines.next() {
            Some(line) => serde_json::from_str(&line?)?,
            None => return Err(CacheError::KeyMismatch(path)),
        };
        if &header != key {
            return Err(CacheError::KeyMismatch(path));
        }
        let mut quiddities = Vec::new();
        for line in lines {
            quiddities.push(serde_json::from_str::<CensusMember>(&line?)?);
        }
        Ok(Some(rebuild(key, quiddities)))
    }
}

fn rebuild(key: &CacheKey, quiddities: Vec<CensusMember>) -> EnumerationReport {
    let mut counts_by_size: BTreeMap<usize, usize> = (1..=key.n_max).map(|n| (n, 0)).collect();
    for m in &quiddities {
        *counts_by_size.entry(m.multipliers.len()).or_default() += 1;
    }
    let irreducible = key.census.then(|| {
        quiddities
            .iter()
            .filter(|m| m.irreducible == Some(true))
            .map(|m| m.multipliers.clone())
            .collect()
    });
    EnumerationReport {
        field: key.field.clone(),
        generator: key.generator.clone(),
        n_max: key.n_max,
        k_bound: key.k_bound,
        quiddities,
        counts_by_size,
        irreducible,
        elapsed: Default::default(),
    }
}

/// Default cache directory under the system temp dir.
pub fn default_dir() -> PathBuf {
    std::env::temp_dir().join("quiddity-cache")
}

/// Convenience for callers that only hold a directory path.
pub fn load_or_compute<F>(dir: &Path, key: &CacheKey, compute: F) -> Result<(EnumerationReport, bool), CacheError>
where
    F: FnOnce() -> EnumerationReport,
{
    let cache = Cache::new(dir);
    if let Some(r) = cache.load(key)? {
        return Ok((r, true));
    }
    let r = compute();
    cache.store(&r)?;
    Ok((r, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::census;
    use crate::numfield::NumberField;
    use crate::par::Execution;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let r = census(&NumberField::rationals().one(), 5, 2, Execution::Sequential).unwrap();
        let cache = Cache::new(dir.path());
        let key = CacheKey::of(&r);
        assert!(cache.load(&key).unwrap().is_none());
        cache.store(&r).unwrap();
        assert_eq!(cache.load(&key).unwrap().unwrap(), r);
        let (again, hit) = load_or_compute(dir.path(), &key, || unreachable!()).unwrap();
        assert!(hit);
        assert_eq!(again, r);
    }
}

//! Persistent cache for computed bounds.
//!
//! The cache is a single versioned JSON file mapping normalized query keys
//! `"(q,v,d)"` / `"(q,v,d,k)"` to the computed value, its exactness flag,
//! and the method tag. Values are stored as decimal strings so they
//! round-trip exactly at any magnitude; no floats appear anywhere in the
//! format. Entries carry a unix timestamp for bookkeeping, but lookups
//! never expire — the inputs are mathematical constants.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bound::BoundResult;

/// Current schema version; bump on any incompatible format change.
pub const CACHE_SCHEMA_VERSION: u32 = 1;

/// One cached bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    /// The bound, as an exact decimal string.
    pub value: String,
    /// Whether the value is known to be attained.
    pub exact: bool,
    /// Method tag, e.g. `johnson_mdc`.
    pub method: String,
    /// Unix seconds at insertion time.
    pub timestamp: u64,
}

/// The on-disk cache: schema version plus an ordered key → entry map.
///
/// `BTreeMap` keeps serialization deterministic for a fixed set of entries.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct CacheFile {
    pub schema: u32,
    pub entries: BTreeMap<String, CacheEntry>,
}

/// Errors from loading or saving a cache file.
#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cache schema version {found} (this build reads {expected})")]
    Schema { found: u32, expected: u32 },
    #[error("cache entry for {key} holds a non-decimal value {value:?}")]
    BadValue { key: String, value: String },
}

/// Normalized lookup key for a query.
pub fn cache_key(q: u64, v: u32, d: u32, k: Option<u32>) -> String {
    match k {
        Some(k) => format!("({q},{v},{d},{k})"),
        None => format!("({q},{v},{d})"),
    }
}

/// A parsed cache lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheHit {
    pub value: BigInt,
    pub exact: bool,
    pub method: String,
}

impl CacheFile {
    /// A fresh, empty cache at the current schema version.
    pub fn new() -> Self {
        CacheFile {
            schema: CACHE_SCHEMA_VERSION,
            entries: BTreeMap::new(),
        }
    }

    /// Loads a cache file; a missing file yields a fresh cache, any other
    /// problem (bad JSON, wrong schema) is an error rather than silent loss.
    pub fn load(path: &Path) -> Result<Self, CacheError> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(CacheFile::new()),
            Err(e) => return Err(e.into()),
        };
        let file: CacheFile = serde_json::from_str(&text)?;
        if file.schema != CACHE_SCHEMA_VERSION {
            return Err(CacheError::Schema {
                found: file.schema,
                expected: CACHE_SCHEMA_VERSION,
            });
        }
        Ok(file)
    }

    /// Writes the cache as pretty-printed JSON.
    pub fn save(&self, path: &Path) -> Result<(), CacheError> {
        let text = serde_json::to_string_pretty(self)?;
        fs::write(path, text + "\n")?;
        Ok(())
    }

    /// Looks up a query, parsing the stored decimal back to an integer.
    pub fn get(&self, q: u64, v: u32, d: u32, k: Option<u32>) -> Option<CacheHit> {
        let key = cache_key(q, v, d, k);
        let entry = self.entries.get(&key)?;
        let value: BigInt = entry.value.parse().ok()?;
        Some(CacheHit {
            value,
            exact: entry.exact,
            method: entry.method.clone(),
        })
    }

    /// Inserts (or replaces) the entry for a query.
    pub fn put(&mut self, q: u64, v: u32, d: u32, k: Option<u32>, result: &BoundResult) {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|t| t.as_secs())
            .unwrap_or(0);
        self.entries.insert(
            cache_key(q, v, d, k),
            CacheEntry {
                value: result.value.to_string(),
                exact: result.exact,
                method: result.method.tag().to_string(),
                timestamp,
            },
        );
    }

    /// Validates every stored value parses as a decimal integer.
    pub fn check(&self) -> Result<(), CacheError> {
        for (key, entry) in &self.entries {
            if entry.value.parse::<BigInt>().is_err() {
                return Err(CacheError::BadValue {
                    key: key.clone(),
                    value: entry.value.clone(),
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bound::Method;
    use crate::qarith::big;

    #[test]
    fn keys_normalize_both_query_shapes() {
        assert_eq!(cache_key(2, 10, 5, None), "(2,10,5)");
        assert_eq!(cache_key(2, 9, 6, Some(4)), "(2,9,6,4)");
    }

    #[test]
    fn round_trip_preserves_value_exactness_and_method() {
        let dir = std::env::temp_dir().join(format!("sb-cache-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cache.json");

        let mut cache = CacheFile::new();
        let r = BoundResult::upper(
            big(48_104) * big(1_000_000_000) * big(1_000_000_000),
            Method::JohnsonMdc,
            "",
        );
        cache.put(2, 10, 5, None, &r);
        cache.save(&path).unwrap();

        let back = CacheFile::load(&path).unwrap();
        back.check().unwrap();
        let hit = back.get(2, 10, 5, None).unwrap();
        assert_eq!(hit.value, r.value);
        assert!(!hit.exact);
        assert_eq!(hit.method, "johnson_mdc");
        assert!(back.get(2, 10, 5, Some(3)).is_none());

        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn missing_file_is_a_fresh_cache() {
        let cache = CacheFile::load(Path::new("/nonexistent/definitely/not/here.json")).unwrap();
        assert!(cache.entries.is_empty());
        assert_eq!(cache.schema, CACHE_SCHEMA_VERSION);
    }

    #[test]
    fn wrong_schema_version_is_rejected() {
        let dir = std::env::temp_dir().join(format!("sb-cache-schema-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cache.json");
        std::fs::write(&path, r#"{"schema": 999, "entries": {}}"#).unwrap();
        match CacheFile::load(&path) {
            Err(CacheError::Schema { found: 999, .. }) => {}
            other => panic!("expected schema error, got {other:?}"),
        }
        std::fs::remove_dir_all(&dir).unwrap();
    }
}

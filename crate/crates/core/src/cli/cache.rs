//! On-disk persistence for [`LengthCache`].
//!
//! Format: `{"schema": "v1", "entries": [{"type": "A1", "weight": [2], "p": 2, "value": "2"}, ..]}`
//! with entries sorted by (type, p, weight) and values as decimal strings.

use std::fs;
use std::path::Path;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::jantzen::LengthCache;
use crate::rootsys::{RootSystemSpec, Weight};

pub const SCHEMA: &str = "v1";

/// Environment variable naming the default cache file.
pub const CACHE_ENV: &str = "WEYLBOUND_CACHE";

#[derive(Serialize, Deserialize)]
struct Entry {
    #[serde(rename = "type")]
    spec: String,
    weight: Weight,
    p: u64,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema: String,
    entries: Vec<Entry>,
}

pub fn to_json(cache: &LengthCache) -> String {
    let entries = cache
        .sorted_entries()
        .into_iter()
        .map(|(spec, w, p, v)| Entry { spec: spec.to_string(), weight: w.clone(), p, value: v.to_string() })
        .collect();
    let file = CacheFile { schema: SCHEMA.to_string(), entries };
    serde_json::to_string_pretty(&file).expect("cache serialises")
}

/// Parse a cache document. Any problem (bad JSON, wrong schema tag, bad
/// entry) is reported as an error string and nothing is reused.
pub fn from_json(text: &str) -> Result<LengthCache, String> {
    let file: CacheFile = serde_json::from_str(text).map_err(|e| format!("unreadable cache: {e}"))?;
    if file.schema != SCHEMA {
        return Err(format!("cache schema {:?} does not match {SCHEMA:?}", file.schema));
    }
    let mut cache = LengthCache::new();
    for e in file.entries {
        let spec: RootSystemSpec = e.spec.parse().map_err(|err| format!("bad cache entry: {err}"))?;
        if e.weight.rank() != spec.rank() {
            return Err(format!("bad cache entry: weight {} for {spec}", e.weight));
        }
        let value: BigUint = e.value.parse().map_err(|_| format!("bad cache value {:?}", e.value))?;
        cache.insert(spec, e.weight, e.p, value);
    }
    Ok(cache)
}

/// Load a cache file. A missing file is a silent cold start; a corrupt or
/// mismatched file is a cold start with a warning.
pub fn load(path: &Path) -> (LengthCache, Option<String>) {
    match fs::read_to_string(path) {
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => (LengthCache::new(), None),
        Err(e) => (LengthCache::new(), Some(format!("warning: cannot read cache {}: {e}; starting cold", path.display()))),
        Ok(text) => match from_json(&text) {
            Ok(c) => (c, None),
            Err(msg) => (LengthCache::new(), Some(format!("warning: {msg} in {}; starting cold", path.display()))),
        },
    }
}

pub fn store(path: &Path, cache: &LengthCache) -> std::io::Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, to_json(cache) + "\n")?;
    fs::rename(&tmp, path)
}

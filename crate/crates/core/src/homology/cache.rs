//! On-disk cache for oracle tables.
//!
//! One JSON file per key. Each file carries the code version, the key and a
//! SHA-256 of the serialized payload; entries from another version, with a
//! foreign key or a bad hash are ignored and recomputed.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Bumped whenever cached payloads change meaning.
pub const CACHE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+tables1");

#[derive(Serialize, Deserialize)]
struct Envelope {
    version: String,
    key: String,
    sha256: String,
    payload: serde_json::Value,
}

/// Counters describing what happened during a run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheStats {
    pub hits: usize,
    pub misses: usize,
    /// Entries that existed but failed the version, key or hash check.
    pub rejected: usize,
}

#[derive(Debug, Default)]
struct Counters {
    hits: AtomicUsize,
    misses: AtomicUsize,
    rejected: AtomicUsize,
}

/// Handle to a cache directory; cheap to clone and safe to share.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
    counters: Arc<Counters>,
}

fn hex_digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Self { dir, counters: Arc::default() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", &hex_digest(key.as_bytes())[..32]))
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.counters.hits.load(Ordering::Relaxed),
            misses: self.counters.misses.load(Ordering::Relaxed),
            rejected: self.counters.rejected.load(Ordering::Relaxed),
        }
    }

    /// Reads a valid entry, or `None` when it is absent or fails validation.
    pub fn load<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let path = self.path_for(key);
        let text = fs::read_to_string(&path).ok()?;
        let checked = serde_json::from_str::<Envelope>(&text).ok().and_then(|env| {
            let bytes = serde_json::to_vec(&env.payload).ok()?;
            let valid = env.version == CACHE_VERSION && env.key == key && env.sha256 == hex_digest(&bytes);
            if valid {
                serde_json::from_value(env.payload).ok()
            } else {
                None
            }
        });
        if checked.is_none() {
            self.counters.rejected.fetch_add(1, Ordering::Relaxed);
        }
        checked
    }

    /// Writes atomically: a temporary file in the same directory is renamed
    /// over the destination, so readers never see a partial entry.
    pub fn store<T: Serialize>(&self, key: &str, value: &T) -> Result<()> {
        let payload = serde_json::to_value(value)?;
        let bytes = serde_json::to_vec(&payload)?;
        let env = Envelope { version: CACHE_VERSION.into(), key: key.into(), sha256: hex_digest(&bytes), payload };
        let path = self.path_for(key);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_vec_pretty(&env)?)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    pub fn get_or_compute<T, F>(&self, key: &str, compute: F) -> Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        if let Some(v) = self.load(key) {
            self.counters.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(v);
        }
        self.counters.misses.fetch_add(1, Ordering::Relaxed);
        let v = compute()?;
        self.store(key, &v)?;
        Ok(v)
    }

    /// Cache files with the key they claim (unreadable files report `None`).
    pub fn list(&self) -> Result<Vec<(PathBuf, Option<String>)>> {
        let mut out = Vec::new();
        for entry in fs::read_dir(&self.dir)? {
            let path = entry?.path();
            if path.extension().is_some_and(|e| e == "json") {
                let key = fs::read_to_string(&path)
                    .ok()
                    .and_then(|t| serde_json::from_str::<Envelope>(&t).ok())
                    .map(|e| e.key);
                out.push((path, key));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Removes every cache file; returns how many were deleted.
    pub fn clear(&self) -> Result<usize> {
        let files = self.list()?;
        for (p, _) in &files {
            fs::remove_file(p).map_err(|e| Error::Cache(format!("{}: {e}", p.display())))?;
        }
        Ok(files.len())
    }
}

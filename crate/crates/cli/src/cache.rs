//! On-disk result cache: one JSON file per key, written atomically.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Bump when any algorithm or report layout changes.
pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "COMMSCHEME_CACHE_DIR";

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    schema: u32,
    key: String,
    checksum: String,
    value: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lookup {
    Hit(String),
    Miss,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
    schema: u32,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        Self::with_schema(dir, SCHEMA_VERSION)
    }

    pub fn with_schema(dir: impl Into<PathBuf>, schema: u32) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Self { dir, schema })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// File holding `key`. The schema version is part of the name so
    /// entries of different versions never collide.
    pub fn path_for(&self, key: &str) -> PathBuf {
        let name = sha256_hex(format!("v{}\n{}", self.schema, key).as_bytes());
        self.dir.join(format!("{name}.json"))
    }

    pub fn get(&self, key: &str) -> Lookup {
        let path = self.path_for(key);
        let Ok(bytes) = fs::read(&path) else {
            return Lookup::Miss;
        };
        let entry: Entry = match serde_json::from_slice(&bytes) {
            Ok(e) => e,
            Err(err) => {
                log::warn!("ignoring unreadable cache entry {}: {err}", path.display());
                return Lookup::Miss;
            }
        };
        if entry.schema != self.schema || entry.key != key {
            return Lookup::Miss;
        }
        if sha256_hex(entry.value.as_bytes()) != entry.checksum {
            log::warn!("ignoring cache entry {} with a bad checksum", path.display());
            return Lookup::Miss;
        }
        Lookup::Hit(entry.value)
    }

    /// Write to a temporary file in the cache directory, then rename it
    /// into place.
    pub fn put(&self, key: &str, value: &str) -> std::io::Result<()> {
        let entry = Entry {
            schema: self.schema,
            key: key.to_owned(),
            checksum: sha256_hex(value.as_bytes()),
            value: value.to_owned(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(serde_json::to_string(&entry)?.as_bytes())?;
        tmp.flush()?;
        tmp.persist(self.path_for(key)).map_err(|e| e.error)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn put_then_get_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        assert_eq!(cache.get("k"), Lookup::Miss);
        cache.put("k", "{\"a\":\"1\"}").unwrap();
        assert_eq!(cache.get("k"), Lookup::Hit("{\"a\":\"1\"}".into()));
        assert_eq!(cache.get("other"), Lookup::Miss);
    }

    #[test]
    fn bumped_schema_misses() {
        let dir = tempfile::tempdir().unwrap();
        Cache::open(dir.path()).unwrap().put("k", "v").unwrap();
        let newer = Cache::with_schema(dir.path(), SCHEMA_VERSION + 1).unwrap();
        assert_eq!(newer.get("k"), Lookup::Miss);
    }

    #[test]
    fn stale_schema_inside_file_misses() {
        let dir = tempfile::tempdir().unwrap();
        let old = Cache::with_schema(dir.path(), 7).unwrap();
        old.put("k", "v").unwrap();
        let path = old.path_for("k");
        let cur = Cache::with_schema(dir.path(), 8).unwrap();
        fs::copy(&path, cur.path_for("k")).unwrap();
        assert_eq!(cur.get("k"), Lookup::Miss);
    }

    #[test]
    fn corrupt_entries_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        cache.put("k", "value").unwrap();
        let path = cache.path_for("k");
        let text = fs::read_to_string(&path).unwrap().replace("value", "vaLue");
        fs::write(&path, text).unwrap();
        assert_eq!(cache.get("k"), Lookup::Miss);
        fs::write(&path, "not json").unwrap();
        assert_eq!(cache.get("k"), Lookup::Miss);
    }

    #[test]
    fn concurrent_puts_leave_one_valid_entry() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        std::thread::scope(|s| {
            for t in 0..8 {
                let cache = cache.clone();
                s.spawn(move || {
                    for _ in 0..20 {
                        cache.put("k", &format!("writer {t}")).unwrap();
                    }
                });
            }
        });
        match cache.get("k") {
            Lookup::Hit(v) => assert!(v.starts_with("writer ")),
            Lookup::Miss => panic!("no valid entry"),
        }
        let files = fs::read_dir(dir.path()).unwrap().count();
        assert_eq!(files, 1);
    }
}

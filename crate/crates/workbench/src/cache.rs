//! A content-addressed JSON result cache for the command-line verifier.
//!
//! Entries are keyed by (subcommand, canonical input, engine version); a
//! corrupt entry is recomputed and overwritten with a warning on stderr.

use crate::Result;
use sha2::{Digest, Sha256};
use std::path::PathBuf;

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// The cache rooted at `WORKBENCH_CACHE_DIR`, if set.
    pub fn from_env() -> Option<Cache> {
        let dir = std::env::var_os("WORKBENCH_CACHE_DIR")?;
        let dir = PathBuf::from(dir);
        if std::fs::create_dir_all(&dir).is_err() {
            eprintln!(
                "warning: cache directory {} not writable; caching disabled",
                dir.display()
            );
            return None;
        }
        Some(Cache { dir })
    }

    pub fn at(dir: PathBuf) -> Result<Cache> {
        std::fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    /// The content address of a request.
    pub fn key(subcommand: &str, input: &str) -> String {
        let mut h = Sha256::new();
        h.update(subcommand.as_bytes());
        h.update(b"\x1f");
        h.update(input.as_bytes());
        h.update(b"\x1f");
        h.update(env!("CARGO_PKG_VERSION").as_bytes());
        let digest = h.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<serde_json::Value> {
        let path = self.path(key);
        let raw = std::fs::read_to_string(&path).ok()?;
        match serde_json::from_str(&raw) {
            Ok(v) => Some(v),
            Err(e) => {
                eprintln!(
                    "warning: corrupt cache entry {} ({e}); recomputing",
                    path.display()
                );
                None
            }
        }
    }

    pub fn put(&self, key: &str, value: &serde_json::Value) -> Result<()> {
        let path = self.path(key);
        std::fs::write(&path, serde_json::to_string_pretty(value)?.as_bytes())?;
        Ok(())
    }
}

impl From<serde_json::Error> for crate::Error {
    fn from(e: serde_json::Error) -> Self {
        crate::Error::Io(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_versioned_keys() {
        let dir = std::env::temp_dir().join(format!("workbench-cache-test-{}", std::process::id()));
        let cache = Cache::at(dir.clone()).unwrap();
        let key = Cache::key("verify o-conj", "max=5");
        assert!(cache.get(&key).is_none());
        let value = serde_json::json!({"failures": 0, "outcomes": [1, 2, 3]});
        cache.put(&key, &value).unwrap();
        assert_eq!(cache.get(&key), Some(value));
        // key depends on the input descriptor
        assert_ne!(
            Cache::key("verify o-conj", "max=5"),
            Cache::key("verify o-conj", "max=6")
        );
        // corrupt entries miss with a warning
        std::fs::write(dir.join(format!("{key}.json")), b"{not json").unwrap();
        assert!(cache.get(&key).is_none());
        let _ = std::fs::remove_dir_all(dir);
    }
}

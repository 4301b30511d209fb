//! On-disk cache for mutation classes, one file per canonical quiver key.
//!
//! Entries are versioned JSON envelopes. A corrupt or mismatched entry is
//! ignored with a warning on stderr and treated as a miss; the file name is
//! a stable hash of the key and the full key is stored inside the envelope
//! for verification.

use std::fs;
use std::path::{Path, PathBuf};

use crate::exchange::MutationClass;
use crate::{Error, Result};

const CACHE_VERSION: u64 = 1;

fn fnv64(bytes: &[u8], mut hash: u64) -> u64 {
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

fn entry_path(dir: &Path, key: &[u8]) -> PathBuf {
    let a = fnv64(key, 0xcbf29ce484222325);
    let b = fnv64(key, 0x9e3779b97f4a7c15);
    dir.join(format!("{a:016x}{b:016x}.json"))
}

fn hex(key: &[u8]) -> String {
    key.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn cache_store(dir: &Path, key: &[u8], class: &MutationClass) -> Result<()> {
    fs::create_dir_all(dir).map_err(|source| Error::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let envelope = serde_json::json!({
        "class": class.to_json(),
        "key": hex(key),
        "version": CACHE_VERSION,
    });
    let path = entry_path(dir, key);
    fs::write(&path, serde_json::to_string(&envelope).unwrap()).map_err(|source| Error::Io {
        path,
        source,
    })
}

/// Look up a cached class. Missing entries return `Ok(None)`; corrupt or
/// incompatible entries are reported on stderr and also return `Ok(None)`.
pub fn cache_load(dir: &Path, key: &[u8]) -> Result<Option<MutationClass>> {
    let path = entry_path(dir, key);
    let raw = match fs::read_to_string(&path) {
        Ok(s) => s,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(source) => return Err(Error::Io { path, source }),
    };
    match parse_entry(&raw, key) {
        Ok(class) => Ok(Some(class)),
        Err(e) => {
            eprintln!(
                "warning: ignoring corrupt cache entry {}: {e}",
                path.display()
            );
            Ok(None)
        }
    }
}

fn parse_entry(raw: &str, key: &[u8]) -> Result<MutationClass> {
    let v: serde_json::Value =
        serde_json::from_str(raw).map_err(|e| Error::Parse(e.to_string()))?;
    let version = v
        .get("version")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| Error::Parse("missing version".into()))?;
    if version != CACHE_VERSION {
        return Err(Error::Parse(format!("unsupported cache version {version}")));
    }
    let stored_key = v
        .get("key")
        .and_then(|x| x.as_str())
        .ok_or_else(|| Error::Parse("missing key".into()))?;
    if stored_key != hex(key) {
        return Err(Error::Parse("key mismatch (hash collision?)".into()));
    }
    MutationClass::from_json(
        v.get("class")
            .ok_or_else(|| Error::Parse("missing class".into()))?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exchange::{enumerate_quiver_class, Limits};
    use crate::quiver::Quiver;

    #[test]
    fn store_and_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        let key = q.canonical_key();
        assert!(cache_load(dir.path(), &key).unwrap().is_none());

        let class = enumerate_quiver_class(&q, &Limits::default());
        cache_store(dir.path(), &key, &class).unwrap();
        let loaded = cache_load(dir.path(), &key).unwrap().unwrap();
        assert_eq!(loaded, class);
    }

    #[test]
    fn corrupt_entries_are_misses() {
        let dir = tempfile::tempdir().unwrap();
        let q = Quiver::from_arrows(2, &[(0, 1)]).unwrap();
        let key = q.canonical_key();
        let class = enumerate_quiver_class(&q, &Limits::default());
        cache_store(dir.path(), &key, &class).unwrap();

        let path = entry_path(dir.path(), &key);
        fs::write(&path, "{not json").unwrap();
        assert!(cache_load(dir.path(), &key).unwrap().is_none());

        // wrong version
        fs::write(
            &path,
            serde_json::json!({"version": 99, "key": hex(&key), "class": {}}).to_string(),
        )
        .unwrap();
        assert!(cache_load(dir.path(), &key).unwrap().is_none());
    }

    #[test]
    fn cache_hit_equals_recompute() {
        let dir = tempfile::tempdir().unwrap();
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let key = q.canonical_key();
        let class = enumerate_quiver_class(&q, &Limits::default());
        cache_store(dir.path(), &key, &class).unwrap();
        let loaded = cache_load(dir.path(), &key).unwrap().unwrap();
        let recomputed = enumerate_quiver_class(&q, &Limits::default());
        assert_eq!(loaded, recomputed);
    }
}

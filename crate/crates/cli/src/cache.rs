//! On-disk cache of computed polynomials, one canonical JSON file per key.

use std::fs;
use std::path::{Path, PathBuf};

use schubkit::MultiPolynomial;
use sha2::{Digest, Sha256};

use crate::error::CliResult;

pub const CODE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "/1");

pub struct Cache {
    dir: PathBuf,
    version: String,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self::with_version(dir, CODE_VERSION)
    }

    pub fn with_version(dir: impl Into<PathBuf>, version: &str) -> Self {
        Cache { dir: dir.into(), version: version.to_string() }
    }

    pub fn path_for(&self, kind: &str, input: &str) -> PathBuf {
        let mut h = Sha256::new();
        for part in [kind, input, &self.version] {
            h.update(part.as_bytes());
            h.update([0u8]);
        }
        self.dir.join(format!("{}.json", hex::encode(h.finalize())))
    }

    /// `None` on a miss. A corrupt entry is logged and treated as a miss.
    pub fn get(&self, kind: &str, input: &str) -> Option<MultiPolynomial> {
        let path = self.path_for(kind, input);
        let bytes = fs::read(&path).ok()?;
        match serde_json::from_slice::<MultiPolynomial>(&bytes) {
            Ok(p) if serde_json::to_vec(&p).ok().as_deref() == Some(&bytes[..]) => Some(p),
            _ => {
                log::warn!("corrupt cache entry {}; recomputing", path.display());
                None
            }
        }
    }

    pub fn put(&self, kind: &str, input: &str, p: &MultiPolynomial) -> CliResult<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(kind, input);
        let tmp = tmp_path(&path);
        fs::write(&tmp, serde_json::to_vec(p)?)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    pub fn get_or_compute<F>(&self, kind: &str, input: &str, compute: F) -> CliResult<MultiPolynomial>
    where
        F: FnOnce() -> CliResult<MultiPolynomial>,
    {
        if let Some(p) = self.get(kind, input) {
            return Ok(p);
        }
        let p = compute()?;
        self.put(kind, input, &p)?;
        Ok(p)
    }
}

fn tmp_path(path: &Path) -> PathBuf {
    let mut name = path.file_name().unwrap_or_default().to_os_string();
    name.push(format!(".{}.tmp", std::process::id()));
    path.with_file_name(name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use schubkit::polynomial::grothendieck;

    #[test]
    fn round_trip_and_invalidation() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let p = grothendieck(&"1432".parse().unwrap());
        assert!(cache.get("grothendieck", "1432").is_none());
        cache.put("grothendieck", "1432", &p).unwrap();
        assert_eq!(cache.get("grothendieck", "1432"), Some(p.clone()));
        let bytes = fs::read(cache.path_for("grothendieck", "1432")).unwrap();
        assert_eq!(bytes, serde_json::to_vec(&p).unwrap());

        let bumped = Cache::with_version(dir.path(), "next");
        assert!(bumped.get("grothendieck", "1432").is_none());
    }

    #[test]
    fn corrupt_entry_is_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let path = cache.path_for("schubert", "132");
        fs::write(&path, b"{not json").unwrap();
        assert!(cache.get("schubert", "132").is_none());
        let p = cache
            .get_or_compute("schubert", "132", || Ok(schubkit::polynomial::schubert(&"132".parse().unwrap())))
            .unwrap();
        assert_eq!(cache.get("schubert", "132"), Some(p));
    }
}

//! On-disk resolution store. One file per content key; readers take a
//! shared lock on the directory lock file, writers an exclusive one and
//! publish by rename so a reader never sees a partial file.

use std::fs::{self, File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use cmw_core::resolve::ResolutionStore;

#[derive(Clone, Debug)]
pub struct DiskStore {
    dir: PathBuf,
}

impl DiskStore {
    /// Creates the directory if needed.
    pub fn open(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DiskStore { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn lock_file(&self) -> std::io::Result<File> {
        OpenOptions::new().create(true).truncate(false).write(true).open(self.dir.join(".lock"))
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        // Keys are hex digests; anything else never reaches the filesystem.
        if key.is_empty() || !key.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'-' || b == b'_') {
            return None;
        }
        Some(self.dir.join(format!("{key}.json")))
    }

    fn try_store(&self, path: &Path, bytes: &[u8]) -> std::io::Result<()> {
        let lock = self.lock_file()?;
        lock.lock()?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let res = (|| {
            let mut f = File::create(&tmp)?;
            f.write_all(bytes)?;
            f.sync_all()?;
            fs::rename(&tmp, path)
        })();
        if res.is_err() {
            let _ = fs::remove_file(&tmp);
        }
        res
    }
}

impl ResolutionStore for DiskStore {
    fn load(&self, key: &str) -> Option<Vec<u8>> {
        let path = self.path(key)?;
        let lock = self.lock_file().ok()?;
        lock.lock_shared().ok()?;
        fs::read(path).ok()
    }

    // Best effort: a failed write only costs a recomputation later.
    fn store(&self, key: &str, bytes: &[u8]) {
        if let Some(path) = self.path(key) {
            let _ = self.try_store(&path, bytes);
        }
    }
}

//! Per-unit JSON cache.
//!
//! Files are keyed by unit, seed and a hash of the full randomization policy, and are
//! written through a temporary file in the same directory and renamed into place.
//! Values also stay in memory for the rest of the process, so suites run together
//! share orbit reports.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use kirillov::rng::child_seed;
use kirillov::RandomCfg;
use serde_json::Value;

use crate::{CliError, CliResult};

/// Bumped whenever the stored report layout changes.
pub const CACHE_FORMAT: u64 = 1;

pub fn cfg_hash(cfg: &RandomCfg) -> u64 {
    child_seed(CACHE_FORMAT, &serde_json::to_string(cfg).expect("config serializes"))
}

#[derive(Debug, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
    memo: Mutex<HashMap<String, Value>>,
}

fn file_stem(key: &str) -> String {
    key.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
        .collect()
}

impl Cache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    pub fn on_disk(dir: &Path) -> CliResult<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache {
            dir: Some(dir.to_path_buf()),
            memo: Mutex::default(),
        })
    }

    pub fn path(&self, key: &str, cfg: &RandomCfg) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("{}-s{}-{:016x}.json", file_stem(key), cfg.seed, cfg_hash(cfg))))
    }

    /// Returns the stored value for `(key, cfg)`, computing and storing it on a miss.
    /// An unreadable file is recomputed and overwritten with a warning.
    pub fn get_or_compute<F>(&self, key: &str, cfg: &RandomCfg, compute: F) -> CliResult<Value>
    where
        F: FnOnce() -> kirillov::Result<Value>,
    {
        let memo_key = format!("{key}#{:016x}", cfg_hash(cfg));
        if let Some(v) = self.memo.lock().expect("cache lock").get(&memo_key) {
            return Ok(v.clone());
        }
        let path = self.path(key, cfg);
        if let Some(p) = path.as_ref().filter(|p| p.exists()) {
            match fs::read_to_string(p)
                .map_err(|e| e.to_string())
                .and_then(|s| serde_json::from_str::<Value>(&s).map_err(|e| e.to_string()))
            {
                Ok(v) => {
                    self.memo.lock().expect("cache lock").insert(memo_key, v.clone());
                    return Ok(v);
                }
                Err(e) => eprintln!("warning: corrupt cache entry {}: {e}; recomputing", p.display()),
            }
        }
        let v = compute().map_err(|e| CliError::internal(key, e))?;
        if let Some(p) = path {
            let dir = p.parent().expect("cache files live in a directory");
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(serde_json::to_string(&v).expect("values serialize").as_bytes())?;
            tmp.persist(&p).map_err(|e| CliError::Io(e.error))?;
        }
        self.memo.lock().expect("cache lock").insert(memo_key, v.clone());
        Ok(v)
    }
}

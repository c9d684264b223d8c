//! Persistent store of computed `Δ` values, one JSON record per line.
//!
//! Every witness is re-verified on load; the first bad line aborts the load
//! with its line number. New records are appended; [`CacheStore::compact`]
//! rewrites the file with one record per group via a temporary file.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::bounds::{DeltaSource, KnownDelta};
use crate::error::{Error, Result};
use crate::group::{is_difference_basis, Basis, GroupSpec};

pub const CACHE_ENV: &str = "DIFFBASE_CACHE";
pub const DEFAULT_CACHE_PATH: &str = "./diffbase-cache.jsonl";

/// The cache path: `$DIFFBASE_CACHE` if set, else [`DEFAULT_CACHE_PATH`].
pub fn cache_path_from_env() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map_or_else(|| PathBuf::from(DEFAULT_CACHE_PATH), PathBuf::from)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub group: GroupSpec,
    pub delta: u32,
    pub witness: Vec<u32>,
    pub certified: bool,
    pub provenance: String,
    pub tool_version: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

impl CacheRecord {
    pub fn new(witness: &Basis, certified: bool, provenance: impl Into<String>) -> Self {
        CacheRecord {
            group: witness.group(),
            delta: witness.len() as u32,
            witness: witness.elems().to_vec(),
            certified,
            provenance: provenance.into(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
        }
    }

    /// The witness as a verified basis of size `delta`.
    pub fn verify(&self) -> std::result::Result<Basis, String> {
        let b = Basis::new(self.group, self.witness.clone()).map_err(|e| e.to_string())?;
        if b.len() != self.delta as usize {
            return Err(format!("witness has {} elements, delta is {}", b.len(), self.delta));
        }
        if !is_difference_basis(&b) {
            return Err(format!("witness {b} is not a difference basis of {}", self.group));
        }
        Ok(b)
    }

    /// Prefers certified records, then smaller `delta`.
    fn better_than(&self, other: &CacheRecord) -> bool {
        (self.certified, std::cmp::Reverse(self.delta))
            > (other.certified, std::cmp::Reverse(other.delta))
    }
}

#[derive(Debug)]
pub struct CacheStore {
    path: PathBuf,
    records: BTreeMap<GroupSpec, CacheRecord>,
}

impl CacheStore {
    /// Loads `path`; a missing file is an empty store.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut records = BTreeMap::new();
        let file = match fs::File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                return Ok(CacheStore { path, records })
            }
            Err(e) => return Err(e.into()),
        };
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let corrupt = |reason: String| Error::CorruptCache { line: i + 1, reason };
            let rec: CacheRecord = serde_json::from_str(&line).map_err(|e| corrupt(e.to_string()))?;
            rec.verify().map_err(corrupt)?;
            Self::keep(&mut records, rec);
        }
        Ok(CacheStore { path, records })
    }

    fn keep(records: &mut BTreeMap<GroupSpec, CacheRecord>, rec: CacheRecord) -> bool {
        match records.get(&rec.group) {
            Some(old) if !rec.better_than(old) => false,
            _ => {
                records.insert(rec.group, rec);
                true
            }
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(&self, spec: GroupSpec) -> Option<&CacheRecord> {
        self.records.get(&spec)
    }

    pub fn records(&self) -> impl Iterator<Item = &CacheRecord> {
        self.records.values()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Verifies and appends `rec`. Records no better than the stored one are
    /// dropped; returns whether the record was kept.
    pub fn insert(&mut self, rec: CacheRecord) -> Result<bool> {
        rec.verify().map_err(Error::InvalidInput)?;
        if !Self::keep(&mut self.records, rec.clone()) {
            return Ok(false);
        }
        let mut line = serde_json::to_string(&rec).map_err(|e| Error::InvalidInput(e.to_string()))?;
        line.push('\n');
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        f.write_all(line.as_bytes())?;
        Ok(true)
    }

    /// Rewrites the file with exactly one record per group.
    pub fn compact(&self) -> Result<()> {
        let mut tmp = self.path.clone().into_os_string();
        tmp.push(".tmp");
        let tmp = PathBuf::from(tmp);
        {
            let mut f = fs::File::create(&tmp)?;
            for rec in self.records.values() {
                let line =
                    serde_json::to_string(rec).map_err(|e| Error::InvalidInput(e.to_string()))?;
                writeln!(f, "{line}")?;
            }
            f.sync_all()?;
        }
        fs::rename(&tmp, &self.path)?;
        Ok(())
    }
}

impl DeltaSource for CacheStore {
    fn known(&self, spec: GroupSpec) -> Option<KnownDelta> {
        let rec = self.records.get(&spec)?;
        let witness = Basis::new(rec.group, rec.witness.clone()).ok()?;
        Some(KnownDelta { delta: rec.delta, witness, certified: rec.certified })
    }
}

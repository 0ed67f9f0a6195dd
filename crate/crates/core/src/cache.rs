//! Append-only JSON-lines cache of L-polynomials and Hasse–Witt verdicts.
//!
//! One record per line with sorted keys. A later record for the same key
//! supersedes earlier ones; `compact` rewrites the file with one record per
//! key through a temporary file and a rename.

use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use tempfile::NamedTempFile;

use crate::curve::{LPolynomial, PointCount, SuperellipticCurve};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// A curve over `F_p`: `(p, m, coefficients of f mod p)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    pub p: u64,
    pub m: u32,
    pub f: Vec<u64>,
}

impl CacheKey {
    pub fn of(curve: &SuperellipticCurve) -> Self {
        Self {
            p: curve.p(),
            m: curve.m(),
            f: curve.f().coeffs().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub key: CacheKey,
    pub counts: Vec<PointCount>,
    pub lpoly: Option<Vec<i128>>,
    pub hasse_witt_ordinary: Option<bool>,
    pub p_rank: Option<usize>,
    pub tool_version: String,
}

impl CacheRecord {
    pub fn new(key: CacheKey) -> Self {
        Self {
            key,
            counts: Vec::new(),
            lpoly: None,
            hasse_witt_ordinary: None,
            p_rank: None,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    /// Fields of `newer` win; counts are merged by `k`.
    pub fn merged_with(&self, newer: &CacheRecord) -> CacheRecord {
        let mut counts: BTreeMap<u32, u64> = self.counts.iter().map(|c| (c.k, c.n)).collect();
        counts.extend(newer.counts.iter().map(|c| (c.k, c.n)));
        CacheRecord {
            key: newer.key.clone(),
            counts: counts.into_iter().map(|(k, n)| PointCount { k, n }).collect(),
            lpoly: newer.lpoly.clone().or_else(|| self.lpoly.clone()),
            hasse_witt_ordinary: newer.hasse_witt_ordinary.or(self.hasse_witt_ordinary),
            p_rank: newer.p_rank.or(self.p_rank),
            tool_version: newer.tool_version.clone(),
        }
    }

    fn is_valid(&self) -> bool {
        self.lpoly
            .as_ref()
            .is_none_or(|c| LPolynomial::new(c.clone(), self.key.p).is_ok())
    }

    /// Single line, keys sorted.
    pub fn to_line(&self) -> io::Result<String> {
        let value = serde_json::to_value(self).map_err(io::Error::other)?;
        serde_json::to_string(&value).map_err(io::Error::other)
    }
}

/// Records in first-seen key order after supersession, plus the number of
/// skipped lines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CacheContents {
    pub records: Vec<CacheRecord>,
    pub warnings: usize,
}

impl CacheContents {
    pub fn get(&self, key: &CacheKey) -> Option<&CacheRecord> {
        self.records.iter().find(|r| &r.key == key)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cache {
    path: PathBuf,
}

impl Cache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Self { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// A missing file is an empty cache. Unparsable lines and records whose
    /// L-polynomial fails the functional equation are skipped and counted.
    pub fn load(&self) -> io::Result<CacheContents> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(CacheContents::default()),
            Err(e) => return Err(e),
        };
        let mut order: Vec<CacheKey> = Vec::new();
        let mut latest: BTreeMap<CacheKey, CacheRecord> = BTreeMap::new();
        let mut warnings = 0;
        for line in BufReader::new(file).lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<CacheRecord>(&line) {
                Ok(rec) if rec.is_valid() => {
                    if !latest.contains_key(&rec.key) {
                        order.push(rec.key.clone());
                    }
                    latest.insert(rec.key.clone(), rec);
                }
                _ => warnings += 1,
            }
        }
        let records = order.into_iter().map(|k| latest.remove(&k).unwrap()).collect();
        Ok(CacheContents { records, warnings })
    }

    pub fn append(&self, record: &CacheRecord) -> io::Result<()> {
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let mut line = record.to_line()?;
        line.push('\n');
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        f.write_all(line.as_bytes())
    }

    /// Merge with the current record for the key (if any) and append.
    pub fn update(&self, record: &CacheRecord) -> io::Result<CacheRecord> {
        let contents = self.load()?;
        let merged = match contents.get(&record.key) {
            Some(old) => old.merged_with(record),
            None => record.clone(),
        };
        self.append(&merged)?;
        Ok(merged)
    }

    /// Rewrite with the superseding record per key.
    pub fn compact(&self) -> io::Result<CacheContents> {
        let contents = self.load()?;
        let dir = match self.path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
            _ => PathBuf::from("."),
        };
        fs::create_dir_all(&dir)?;
        let mut tmp = NamedTempFile::new_in(&dir)?;
        for rec in &contents.records {
            writeln!(tmp, "{}", rec.to_line()?)?;
        }
        tmp.as_file().sync_all()?;
        tmp.persist(&self.path).map_err(|e| e.error)?;
        Ok(contents)
    }
}

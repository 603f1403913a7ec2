//! On-disk persistence of [`MultTable`]s, one JSON file per matrix.
//!
//! Files are rewritten atomically after every completed shell. On load the top
//! shell is recomputed from the shells below it; shells that disagree are
//! dropped until a consistent frontier remains.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::MultTable;
use crate::cartan::Gcm;
use crate::error::{Error, Result};
use crate::lattice::RootVector;

pub const CACHE_DIR_ENV: &str = "HYPERROOT_CACHE_DIR";
pub const CACHE_VERSION: u32 = 1;

/// Multiplicities that fit in `u64` are written as JSON numbers, larger ones as strings.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum MultValue {
    Small(u64),
    Big(String),
}

impl From<&BigUint> for MultValue {
    fn from(m: &BigUint) -> Self {
        match u64::try_from(m) {
            Ok(x) => MultValue::Small(x),
            Err(_) => MultValue::Big(m.to_string()),
        }
    }
}

impl MultValue {
    fn value(&self) -> Option<BigUint> {
        match self {
            MultValue::Small(x) => Some(BigUint::from(*x)),
            MultValue::Big(s) => s.parse().ok(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    gcm_hash: String,
    matrix: Vec<Vec<i64>>,
    frontier: i64,
    entries: Vec<(Vec<i64>, MultValue)>,
}

/// What [`TableCache::load`] found on disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoadStatus {
    Missing,
    Loaded { frontier: i64 },
    /// Entries above the last consistent shell were discarded.
    Truncated { from: i64, to: i64 },
    /// The file was unreadable or belonged to another matrix; starting empty.
    Discarded(String),
}

#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    /// Directory from `HYPERROOT_CACHE_DIR`, defaulting to `./cache`.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from("cache"));
        TableCache::new(dir)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, g: &Gcm) -> PathBuf {
        self.dir.join(format!("{}.json", g.content_hash()))
    }

    pub fn load(&self, g: &Gcm) -> Result<(MultTable, LoadStatus)> {
        let path = self.path_for(g);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                return Ok((MultTable::new(g), LoadStatus::Missing));
            }
            Err(e) => return Err(e.into()),
        };
        match parse_file(g, &text) {
            Ok((table, claimed)) => {
                let (table, frontier) = settle(g, table)?;
                let status = if frontier < claimed {
                    LoadStatus::Truncated { from: claimed, to: frontier }
                } else {
                    LoadStatus::Loaded { frontier }
                };
                Ok((table, status))
            }
            Err(reason) => Ok((MultTable::new(g), LoadStatus::Discarded(reason))),
        }
    }

    pub fn save(&self, table: &MultTable) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let file = CacheFile {
            version: CACHE_VERSION,
            gcm_hash: table.gcm_hash.clone(),
            matrix: table.gcm.rows(),
            frontier: table.frontier,
            entries: table
                .entries()
                .into_iter()
                .map(|(k, m)| (k.coords().to_vec(), MultValue::from(m)))
                .collect(),
        };
        let path = self.path_for(&table.gcm);
        let mut tmp = tempfile_in(&self.dir)?;
        serde_json::to_writer(&mut tmp.1, &file)?;
        tmp.1.flush()?;
        drop(tmp.1);
        fs::rename(&tmp.0, &path)?;
        Ok(())
    }
}

fn tempfile_in(dir: &Path) -> Result<(PathBuf, fs::File)> {
    let name = format!(".tmp-{}-{:?}", std::process::id(), std::thread::current().id());
    let path = dir.join(name.replace(['(', ')'], ""));
    let f = fs::File::create(&path)?;
    Ok((path, f))
}

fn parse_file(g: &Gcm, text: &str) -> std::result::Result<(MultTable, i64), String> {
    let file: CacheFile = serde_json::from_str(text).map_err(|e| format!("unreadable cache file: {e}"))?;
    if file.version != CACHE_VERSION {
        return Err(format!("cache version {} (expected {CACHE_VERSION})", file.version));
    }
    if file.gcm_hash != g.content_hash() || file.matrix != g.rows() {
        return Err("cache file belongs to a different matrix".into());
    }
    let claimed = file.frontier.max(0);
    let mut entries = HashMap::new();
    let mut above = false;
    for (coords, m) in file.entries {
        let v = RootVector::new(coords);
        if v.rank() != g.rank() || !v.is_positive() {
            return Err(format!("invalid entry {v}"));
        }
        let m = m.value().ok_or_else(|| format!("invalid multiplicity at {v}"))?;
        if v.height() > claimed {
            above = true;
            continue;
        }
        entries.insert(v, m);
    }
    let table = MultTable::from_entries(g, claimed, entries).map_err(|e| e.to_string())?;
    // entries beyond the recorded frontier mean the writer was interrupted
    Ok((table, if above { claimed + 1 } else { claimed }))
}

/// Lowers the frontier until its top shell agrees with a recomputation from below.
fn settle(g: &Gcm, mut table: MultTable) -> Result<(MultTable, i64)> {
    let d = g.symmetrizer().ok_or(Error::NotSymmetrizable)?.to_vec();
    while table.frontier > 0 {
        let h = table.frontier as usize;
        let stored: HashMap<RootVector, BigUint> = table
            .entries
            .iter()
            .filter(|(k, m)| k.height() == h as i64 && **m != BigUint::default())
            .map(|(k, m)| (k.clone(), m.clone()))
            .collect();
        let below = truncated(g, &table, h as i64 - 1)?;
        let ok = match below.solve_shell(g, &d, h) {
            Ok((_, roots)) => roots.into_iter().collect::<HashMap<_, _>>() == stored,
            Err(_) => false,
        };
        if ok {
            return Ok((table, h as i64));
        }
        table = below;
    }
    Ok((table, 0))
}

fn truncated(g: &Gcm, table: &MultTable, frontier: i64) -> Result<MultTable> {
    let entries = table
        .entries
        .iter()
        .filter(|(k, _)| k.height() <= frontier)
        .map(|(k, m)| (k.clone(), m.clone()))
        .collect();
    MultTable::from_entries(g, frontier, entries)
}

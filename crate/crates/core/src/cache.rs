//! On-disk cache of Schubert multiplication tables, one JSON file per `(n, engine)`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::schubert::{
    cached_table, install_table, table, Engine, MultTable, TableEntry, ENGINE_VERSION,
};
use crate::{Error, Result};

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "PFGR_CACHE_DIR";

const FORMAT: &str = "pfgr-mult-table";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: String,
    engine_version: u32,
    engine: Engine,
    n: u32,
    entries: Vec<TableEntry>,
}

/// What [`TableCache::warm`] had to do.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Warmed {
    /// Already in memory.
    Resident,
    /// Read from disk.
    Loaded,
    /// Computed and written to disk.
    Built,
}

#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_DIR_ENV)
            .filter(|v| !v.is_empty())
            .map(TableCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, n: u32, engine: Engine) -> PathBuf {
        self.dir
            .join(format!("mult-table-n{n}-{}.json", engine.name()))
    }

    /// `Ok(None)` when the file is missing or was written by another engine version.
    pub fn load(&self, n: u32, engine: Engine) -> Result<Option<MultTable>> {
        let path = self.path(n, engine);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
        };
        let file: CacheFile = serde_json::from_str(&text)
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        if file.format != FORMAT {
            return Err(Error::Cache(format!(
                "{}: unexpected format `{}`",
                path.display(),
                file.format
            )));
        }
        if file.engine_version != ENGINE_VERSION {
            return Ok(None);
        }
        if file.n != n || file.engine != engine {
            return Err(Error::Cache(format!(
                "{}: holds n={} {} instead of n={n} {}",
                path.display(),
                file.n,
                file.engine.name(),
                engine.name()
            )));
        }
        MultTable::from_entries(n, engine, &file.entries).map(Some)
    }

    /// Write atomically: a temporary file in the same directory, then a rename.
    pub fn store(&self, t: &MultTable) -> Result<()> {
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", self.dir.display()));
        fs::create_dir_all(&self.dir).map_err(io)?;
        let file = CacheFile {
            format: FORMAT.into(),
            engine_version: ENGINE_VERSION,
            engine: t.engine(),
            n: t.n(),
            entries: t.entries(),
        };
        let text = serde_json::to_string_pretty(&file)
            .map_err(|e| Error::Cache(format!("serializing table: {e}")))?;
        let path = self.path(t.n(), t.engine());
        let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(text.as_bytes()).map_err(io)?;
        f.write_all(b"\n").map_err(io)?;
        drop(f);
        fs::rename(&tmp, &path).map_err(io)
    }

    /// Make the table for `(n, engine)` resident, preferring the disk copy.
    pub fn warm(&self, n: u32, engine: Engine) -> Result<Warmed> {
        if cached_table(n, engine).is_some() {
            return Ok(Warmed::Resident);
        }
        if let Some(t) = self.load(n, engine)? {
            install_table(t);
            return Ok(Warmed::Loaded);
        }
        self.store(&table(n, engine))?;
        Ok(Warmed::Built)
    }
}

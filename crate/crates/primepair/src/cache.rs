//! On-disk cache of pair-count tables.
//!
//! One CSV per table, named after its config hash:
//!
//! ```text
//! # primepair 0.1.0 config=<hash> checkpoints=1000;10000 max_half_gap=2500
//! x,two_r,count
//! 1000,2,35
//! ```
//!
//! A request is served from any cached table whose checkpoints include the
//! requested ones and whose gap range is at least as wide.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use primepair_core::paircount::{PairCountLayout, PairCountTable};
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// First 16 hex digits of the SHA-256 of `text`.
pub fn config_hash(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// The header comment written at the top of every output file.
pub fn header_line(config: &str) -> String {
    format!("# primepair {VERSION} config={}", config_hash(config))
}

fn layout_key(checkpoints: &[u64], max_half_gap: u64) -> String {
    let xs: Vec<String> = checkpoints.iter().map(u64::to_string).collect();
    format!("checkpoints={} max_half_gap={max_half_gap}", xs.join(";"))
}

pub struct PairCache {
    dir: PathBuf,
}

struct Header {
    hash: String,
    checkpoints: Vec<u64>,
    max_half_gap: u64,
}

fn parse_header(line: &str) -> Option<Header> {
    let rest = line.strip_prefix("# primepair ")?;
    let mut hash = None;
    let mut checkpoints = None;
    let mut gap = None;
    for field in rest.split_whitespace() {
        if let Some(v) = field.strip_prefix("config=") {
            hash = Some(v.to_string());
        } else if let Some(v) = field.strip_prefix("checkpoints=") {
            checkpoints = v.split(';').map(|s| s.parse().ok()).collect::<Option<Vec<u64>>>();
        } else if let Some(v) = field.strip_prefix("max_half_gap=") {
            gap = v.parse().ok();
        }
    }
    Some(Header { hash: hash?, checkpoints: checkpoints?, max_half_gap: gap? })
}

impl PairCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, checkpoints: &[u64], max_half_gap: u64) -> PathBuf {
        self.dir.join(format!("pairs-{}.csv", config_hash(&layout_key(checkpoints, max_half_gap))))
    }

    fn cached_files(&self) -> Vec<PathBuf> {
        let Ok(entries) = fs::read_dir(&self.dir) else { return Vec::new() };
        let mut files: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                p.file_name()
                    .and_then(|n| n.to_str())
                    .is_some_and(|n| n.starts_with("pairs-") && n.ends_with(".csv"))
            })
            .collect();
        files.sort();
        files
    }

    /// A table covering the request, restricted to exactly its layout.
    pub fn lookup(&self, checkpoints: &[u64], max_half_gap: u64) -> Result<Option<PairCountTable>> {
        let exact = self.path_for(checkpoints, max_half_gap);
        let mut candidates = self.cached_files();
        // try the exact match first
        candidates.sort_by_key(|p| *p != exact);
        for path in candidates {
            let Some(header) = read_header(&path)? else { continue };
            let covers = header.max_half_gap >= max_half_gap
                && checkpoints.iter().all(|x| header.checkpoints.binary_search(x).is_ok());
            if !covers {
                continue;
            }
            let table = read_table(&path, &header)?;
            log::info!("pair counts served from cache {}", path.display());
            return Ok(Some(table.restrict(checkpoints, max_half_gap)?));
        }
        Ok(None)
    }

    /// Writes `table` and returns its path.
    pub fn store(&self, table: &PairCountTable) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir).map_err(|e| CliError::io(&self.dir, e))?;
        let path = self.path_for(table.checkpoints(), table.max_half_gap());
        let tmp = path.with_extension("csv.tmp");
        write_table(&tmp, table).map_err(|e| CliError::io(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| CliError::io(&path, e))?;
        Ok(path)
    }
}

fn read_header(path: &Path) -> Result<Option<Header>> {
    let file = fs::File::open(path).map_err(|e| CliError::io(path, e))?;
    let mut line = String::new();
    BufReader::new(file).read_line(&mut line).map_err(|e| CliError::io(path, e))?;
    Ok(parse_header(line.trim_end()))
}

fn read_table(path: &Path, header: &Header) -> Result<PairCountTable> {
    let corrupt = |what: String| CliError::Cache(format!("{}: {what}", path.display()));
    let key = layout_key(&header.checkpoints, header.max_half_gap);
    if config_hash(&key) != header.hash {
        return Err(corrupt("header hash does not match its layout".into()));
    }
    let layout = PairCountLayout::new(&header.checkpoints, header.max_half_gap)?;
    let n = header.max_half_gap as usize;
    let mut rows = vec![vec![u64::MAX; header.checkpoints.len()]; n];
    let file = fs::File::open(path).map_err(|e| CliError::io(path, e))?;
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| CliError::io(path, e))?;
        if i == 0 || line.is_empty() || line.starts_with('#') || line == "x,two_r,count" {
            continue;
        }
        let fields: Option<Vec<u64>> = line.split(',').map(|f| f.trim().parse().ok()).collect();
        let Some([x, two_r, count]) = fields.as_deref().and_then(|f| <[u64; 3]>::try_from(f).ok()) else {
            return Err(corrupt(format!("line {}: expected x,two_r,count", i + 1)));
        };
        let j = header.checkpoints.binary_search(&x).map_err(|_| corrupt(format!("line {}: unknown x", i + 1)))?;
        if two_r == 0 || two_r % 2 != 0 || two_r / 2 > header.max_half_gap {
            return Err(corrupt(format!("line {}: gap out of range", i + 1)));
        }
        rows[(two_r / 2 - 1) as usize][j] = count;
    }
    if rows.iter().flatten().any(|&c| c == u64::MAX) {
        return Err(corrupt("missing entries".into()));
    }
    PairCountTable::from_rows(layout, &rows).map_err(|source| CliError::Data { path: path.to_path_buf(), source })
}

fn write_table(path: &Path, table: &PairCountTable) -> std::io::Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    let key = layout_key(table.checkpoints(), table.max_half_gap());
    writeln!(w, "{} {key}", header_line(&key))?;
    writeln!(w, "x,two_r,count")?;
    for (x, two_r, count) in table.entries() {
        writeln!(w, "{x},{two_r},{count}")?;
    }
    w.flush()
}

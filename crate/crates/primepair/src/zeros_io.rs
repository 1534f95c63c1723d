//! Reading and writing zero-ordinate files, gzip-compressed when the name
//! ends in `.gz`.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use flate2::read::GzDecoder;
use flate2::write::GzEncoder;
use flate2::Compression;
use primepair_core::zeros::ZeroTable;

use crate::error::{CliError, Result};

fn is_gzip(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("gz"))
}

/// Loads a table of ordinates, keeping at most `max_count` of them.
pub fn load_zeros(path: &Path, max_count: Option<usize>) -> Result<ZeroTable> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let mut text = String::new();
    let read = if is_gzip(path) {
        GzDecoder::new(file).read_to_string(&mut text)
    } else {
        let mut file = file;
        file.read_to_string(&mut text)
    };
    read.map_err(|e| CliError::io(path, e))?;
    ZeroTable::parse(&text, path.display().to_string(), max_count)
        .map_err(|source| CliError::Data { path: path.to_path_buf(), source })
}

/// One ordinate per line with `decimals` digits after the point.
pub fn format_zeros(table: &ZeroTable, decimals: usize) -> String {
    let mut out = String::with_capacity(table.len() * (decimals + 8));
    for g in table.ordinates() {
        let _ = writeln!(out, "{g:.decimals$}");
    }
    out
}

pub fn write_zeros(path: &Path, table: &ZeroTable, decimals: usize) -> Result<()> {
    let text = format_zeros(table, decimals);
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let result = if is_gzip(path) {
        let mut enc = GzEncoder::new(file, Compression::default());
        enc.write_all(text.as_bytes()).and_then(|_| enc.finish().map(drop))
    } else {
        let mut file = file;
        file.write_all(text.as_bytes())
    };
    result.map_err(|e| CliError::io(path, e))
}

//! On-disk cache of monomial expansions, one file per degree.
//!
//! `htilde_<n>.txt` holds one `<partition>|<SymFunc>` line per partition in
//! decreasing lexicographic order, then `checksum|sha256:<hex>` over all
//! preceding bytes. Files are written to a temporary name and renamed, so a
//! reader sees either the old or the new complete file.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use symfunc_core::{Partition, SymFunc};

use crate::MacError;

pub fn file_name(n: usize) -> String {
    format!("htilde_{n}.txt")
}

fn digest(body: &str) -> String {
    let hash = Sha256::digest(body.as_bytes());
    let mut hex = String::with_capacity(64);
    for b in hash.iter() {
        write!(hex, "{b:02x}").expect("writing to a string");
    }
    hex
}

/// The exact bytes written for one degree.
pub fn render(entries: &[(Partition, SymFunc)]) -> String {
    let mut body = String::new();
    for (mu, f) in entries {
        body.push_str(&format!("{mu}|{}\n", f.serialize()));
    }
    let sum = digest(&body);
    body.push_str(&format!("checksum|sha256:{sum}\n"));
    body
}

fn corrupt(path: &Path, why: &str) -> MacError {
    MacError::Cache(format!("{}: {why}", path.display()))
}

/// Parses a rendered file, rejecting truncation and checksum mismatches.
pub fn parse(path: &Path, text: &str) -> Result<Vec<(Partition, SymFunc)>, MacError> {
    let body_end = text.trim_end_matches('\n').rfind('\n').map(|i| i + 1).unwrap_or(0);
    let (body, last) = text.split_at(body_end);
    let expected =
        last.trim_end().strip_prefix("checksum|sha256:").ok_or_else(|| corrupt(path, "missing checksum line"))?;
    if digest(body) != expected {
        return Err(corrupt(path, "checksum mismatch"));
    }
    body.lines()
        .map(|line| {
            let (mu, f) = line.split_once('|').ok_or_else(|| corrupt(path, "malformed line"))?;
            let mu: Partition = mu.parse().map_err(|_| corrupt(path, "bad partition"))?;
            let f = SymFunc::parse(f).map_err(|_| corrupt(path, "bad expansion"))?;
            Ok((mu, f))
        })
        .collect()
}

/// Reads the file for degree `n`, or `None` if it does not exist.
pub fn load(dir: &Path, n: usize) -> Result<Option<Vec<(Partition, SymFunc)>>, MacError> {
    let path = dir.join(file_name(n));
    match fs::read_to_string(&path) {
        Ok(text) => parse(&path, &text).map(Some),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(corrupt(&path, &e.to_string())),
    }
}

/// Writes the file for degree `n` atomically and returns its path.
pub fn store(dir: &Path, n: usize, entries: &[(Partition, SymFunc)]) -> Result<PathBuf, MacError> {
    let path = dir.join(file_name(n));
    let io = |e: std::io::Error| corrupt(&path, &e.to_string());
    fs::create_dir_all(dir).map_err(io)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(render(entries).as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(&path).map_err(|e| io(e.error))?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_truncation() {
        let dir = tempfile::tempdir().unwrap();
        let entries = vec![
            (Partition::row(2), SymFunc::s(Partition::row(2))),
            (Partition::column(2), SymFunc::s(Partition::column(2))),
        ];
        let path = store(dir.path(), 2, &entries).unwrap();
        assert_eq!(load(dir.path(), 2).unwrap().unwrap(), entries);
        let text = fs::read_to_string(&path).unwrap();
        let cut = &text[..text.len() - 20];
        assert!(matches!(parse(&path, cut), Err(MacError::Cache(_))));
        let dropped = text.lines().skip(1).collect::<Vec<_>>().join("\n");
        assert!(matches!(parse(&path, &dropped), Err(MacError::Cache(_))));
        assert!(load(dir.path(), 3).unwrap().is_none());
    }
}

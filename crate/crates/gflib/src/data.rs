use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use polygf_series::{int, TruncatedSeries, Truncation, VarSet};
use sha2::{Digest, Sha256};

use crate::error::{GfError, Result};

pub const DATA_DIR_ENV: &str = "POLYGF_DATA_DIR";
pub const A2C_FILE: &str = "a2c.txt";
pub const B2C_FILE: &str = "b2c.txt";
pub const CHECKSUM_FILE: &str = "SHA256SUMS";

/// Integer polynomial in x, y read from an "i j coefficient" file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyData {
    pub terms: BTreeMap<(u32, u32), i64>,
}

impl PolyData {
    pub fn parse(text: &str, file: &str) -> Result<PolyData> {
        let err = |line: usize, msg: &str| GfError::Data { file: file.to_string(), msg: format!("line {line}: {msg}") };
        let mut terms = BTreeMap::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 3 {
                return Err(err(k + 1, "expected `i j coefficient`"));
            }
            let i: u32 = f[0].parse().map_err(|_| err(k + 1, "bad exponent"))?;
            let j: u32 = f[1].parse().map_err(|_| err(k + 1, "bad exponent"))?;
            let c: i64 = f[2].parse().map_err(|_| err(k + 1, "bad coefficient"))?;
            if c == 0 {
                return Err(err(k + 1, "zero coefficient"));
            }
            if terms.insert((i, j), c).is_some() {
                return Err(err(k + 1, "repeated exponent pair"));
            }
        }
        Ok(PolyData { terms })
    }

    pub fn degree(&self) -> (u32, u32) {
        let dx = self.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let dy = self.terms.keys().map(|k| k.1).max().unwrap_or(0);
        (dx, dy)
    }

    /// The polynomial as a series over `vars`, whose first two names play x and y.
    pub fn series(&self, vars: &VarSet, t: &Truncation) -> Result<TruncatedSeries> {
        let n = vars.len();
        let terms = self.terms.iter().map(|(&(i, j), &c)| {
            let mut e = vec![0; n];
            e[0] = i;
            e[1] = j;
            (e, int(c))
        });
        Ok(TruncatedSeries::from_terms(vars, t, terms)?)
    }

    /// Value at y = x, as a coefficient list in x.
    pub fn isotropic(&self) -> Vec<i64> {
        let (dx, dy) = self.degree();
        let mut out = vec![0; (dx + dy + 1) as usize];
        for (&(i, j), &c) in &self.terms {
            out[(i + j) as usize] += c;
        }
        out
    }
}

pub fn data_dir() -> PathBuf {
    match std::env::var_os(DATA_DIR_ENV) {
        Some(d) => PathBuf::from(d),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("data"),
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

/// Reads a data file from `dir` and checks it against the checksum list there.
pub fn load_verified(dir: &Path, name: &str) -> Result<PolyData> {
    let io = |e: std::io::Error, f: &str| GfError::Data { file: f.to_string(), msg: e.to_string() };
    let bytes = std::fs::read(dir.join(name)).map_err(|e| io(e, name))?;
    let sums = std::fs::read_to_string(dir.join(CHECKSUM_FILE)).map_err(|e| io(e, CHECKSUM_FILE))?;
    let want = sums
        .lines()
        .filter_map(|l| {
            let mut f = l.split_whitespace();
            Some((f.next()?, f.next()?))
        })
        .find(|(_, f)| f.trim_start_matches('*') == name)
        .map(|(h, _)| h.to_string())
        .ok_or_else(|| GfError::Data { file: name.to_string(), msg: "no recorded checksum".into() })?;
    let got = sha256_hex(&bytes);
    if got != want {
        return Err(GfError::Data { file: name.to_string(), msg: format!("checksum mismatch: recorded {want}, found {got}") });
    }
    let text = String::from_utf8(bytes).map_err(|_| GfError::Data { file: name.to_string(), msg: "not UTF-8".into() })?;
    PolyData::parse(&text, name)
}

/// The two anisotropic numerators from the default (or overridden) data directory.
pub fn c2_numerators() -> Result<(PolyData, PolyData)> {
    let dir = data_dir();
    Ok((load_verified(&dir, A2C_FILE)?, load_verified(&dir, B2C_FILE)?))
}

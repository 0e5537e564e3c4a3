use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::CensusError;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Row {
    pub h: u32,
    pub v: u32,
    pub m: u32,
    pub subclass: String,
}

impl Row {
    pub fn new(h: u32, v: u32, m: u32, subclass: &str) -> Self {
        Row { h, v, m, subclass: subclass.to_string() }
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    h: u32,
    v: u32,
    m: u32,
    subclass: String,
    count: u64,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    max_half: u32,
    runtime_ms: u64,
    rows: Vec<Entry>,
}

/// Counts keyed by (horizontal half-perimeter, vertical half-perimeter,
/// concavity index, subclass).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Wire", from = "Wire")]
pub struct CensusTable {
    pub max_half: u32,
    pub runtime_ms: u64,
    counts: BTreeMap<Row, u64>,
}

impl From<CensusTable> for Wire {
    fn from(t: CensusTable) -> Wire {
        let rows = t.counts.into_iter().map(|(r, count)| Entry { h: r.h, v: r.v, m: r.m, subclass: r.subclass, count }).collect();
        Wire { max_half: t.max_half, runtime_ms: t.runtime_ms, rows }
    }
}

impl From<Wire> for CensusTable {
    fn from(w: Wire) -> CensusTable {
        let counts = w.rows.into_iter().map(|e| (Row { h: e.h, v: e.v, m: e.m, subclass: e.subclass }, e.count)).collect();
        CensusTable { max_half: w.max_half, runtime_ms: w.runtime_ms, counts }
    }
}

impl CensusTable {
    pub fn new(max_half: u32) -> Self {
        CensusTable { max_half, runtime_ms: 0, counts: BTreeMap::new() }
    }

    pub fn add_rows(&mut self, rows: &BTreeMap<Row, u64>) {
        for (r, c) in rows {
            *self.counts.entry(r.clone()).or_insert(0) += c;
        }
    }

    pub fn get(&self, h: u32, v: u32, m: u32, subclass: &str) -> u64 {
        self.counts.get(&Row::new(h, v, m, subclass)).copied().unwrap_or(0)
    }

    pub fn rows(&self) -> impl Iterator<Item = (&Row, u64)> {
        self.counts.iter().map(|(r, &c)| (r, c))
    }

    pub fn subclasses(&self) -> Vec<String> {
        let mut s: Vec<String> = self.counts.keys().map(|r| r.subclass.clone()).collect();
        s.sort();
        s.dedup();
        s
    }

    /// Count with half-perimeter exactly `n`; `m = None` sums over all indices.
    pub fn isotropic(&self, n: u32, m: Option<u32>, subclass: &str) -> u64 {
        self.counts
            .iter()
            .filter(|(r, _)| r.h + r.v == n && r.subclass == subclass && m.is_none_or(|m| r.m == m))
            .map(|(_, &c)| c)
            .sum()
    }

    /// Coefficient list indexed by half-perimeter, 0..=max_half.
    pub fn isotropic_series(&self, m: Option<u32>, subclass: &str) -> Vec<u64> {
        (0..=self.max_half).map(|n| self.isotropic(n, m, subclass)).collect()
    }

    /// Counts keyed by (h, v) for one concavity index and subclass.
    pub fn anisotropic(&self, m: u32, subclass: &str) -> BTreeMap<(u32, u32), u64> {
        let mut out = BTreeMap::new();
        for (r, &c) in &self.counts {
            if r.m == m && r.subclass == subclass {
                *out.entry((r.h, r.v)).or_insert(0) += c;
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("h,v,m,subclass,count\n");
        for (r, c) in &self.counts {
            let _ = writeln!(s, "{},{},{},{},{}", r.h, r.v, r.m, r.subclass, c);
        }
        s
    }

    pub fn from_csv(max_half: u32, text: &str) -> Result<Self, CensusError> {
        let mut t = CensusTable::new(max_half);
        for (k, line) in text.lines().enumerate().skip(1) {
            if line.trim().is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split(',').collect();
            let bad = || CensusError::Snapshot(format!("bad csv line {}", k + 1));
            if f.len() != 5 {
                return Err(bad());
            }
            let num = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
            let row = Row::new(num(f[0])? as u32, num(f[1])? as u32, num(f[2])? as u32, f[3].trim());
            *t.counts.entry(row).or_insert(0) += num(f[4])?;
        }
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CensusError> {
        serde_json::from_str(text).map_err(|e| CensusError::Snapshot(e.to_string()))
    }
}

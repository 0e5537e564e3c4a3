use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::classify;
use crate::error::CensusError;
use crate::polygon::{Polygon, Step};
use crate::table::{CensusTable, Row};

/// Largest half-perimeter accepted unless the caller raises the budget.
pub const DEFAULT_LIMIT: u32 = 14;
const PREFIX_LEN: usize = 10;
const CHUNK: usize = 256;

#[derive(Clone, Debug)]
pub struct CensusConfig {
    pub max_half: u32,
    /// Worker threads; `None` uses the available parallelism.
    pub threads: Option<usize>,
    pub limit: u32,
    /// Progress file written after every chunk of work and read back on start.
    pub snapshot: Option<PathBuf>,
}

impl CensusConfig {
    pub fn new(max_half: u32) -> Self {
        CensusConfig { max_half, threads: None, limit: DEFAULT_LIMIT, snapshot: None }
    }

    pub fn threads(mut self, n: usize) -> Self {
        self.threads = Some(n);
        self
    }
}

struct Walker {
    len: usize,
    side: i32,
    grid: Vec<bool>,
    steps: Vec<Step>,
}

impl Walker {
    fn new(max_half: u32) -> Self {
        let len = 2 * max_half as usize;
        let side = 2 * len as i32 + 1;
        let mut w = Walker { len, side, grid: vec![false; (side * (len as i32 + 1)) as usize], steps: Vec::new() };
        w.mark(0, 0, true);
        w
    }

    fn cell(&self, x: i32, y: i32) -> usize {
        (y * self.side + x + self.len as i32) as usize
    }

    fn mark(&mut self, x: i32, y: i32, on: bool) {
        let c = self.cell(x, y);
        self.grid[c] = on;
    }

    /// Extends the walk from `(x, y)`; closed polygons go to `found`, walks
    /// reaching `stop` steps go to `cut`.
    fn dfs(&mut self, x: i32, y: i32, stop: usize, found: &mut dyn FnMut(&[Step]), cut: &mut dyn FnMut(&[Step])) {
        let n = self.steps.len();
        if n == stop {
            cut(&self.steps);
            return;
        }
        for s in Step::ALL {
            let (dx, dy) = s.delta();
            let (nx, ny) = (x + dx, y + dy);
            if nx == 0 && ny == 0 {
                if n + 1 >= 4 {
                    self.steps.push(s);
                    found(&self.steps);
                    self.steps.pop();
                }
                continue;
            }
            if ny < 0 || (ny == 0 && nx < 0) {
                continue;
            }
            let rem = self.len as i32 - (n as i32 + 1);
            if nx.abs() + ny > rem || self.grid[self.cell(nx, ny)] {
                continue;
            }
            self.mark(nx, ny, true);
            self.steps.push(s);
            self.dfs(nx, ny, stop, found, cut);
            self.steps.pop();
            self.mark(nx, ny, false);
        }
    }

    fn replay(&mut self, prefix: &[Step]) -> (i32, i32) {
        let (mut x, mut y) = (0, 0);
        for &s in prefix {
            let (dx, dy) = s.delta();
            x += dx;
            y += dy;
            self.mark(x, y, true);
            self.steps.push(s);
        }
        (x, y)
    }
}

/// Calls `f` on every polygon with half-perimeter ≤ `max_half`, sequentially.
pub fn for_each_polygon(max_half: u32, mut f: impl FnMut(&Polygon)) {
    let mut w = Walker::new(max_half);
    w.mark(1, 0, true);
    w.steps.push(Step::E);
    let mut found = |s: &[Step]| f(&Polygon::from_steps_unchecked(s.to_vec()));
    w.dfs(1, 0, usize::MAX, &mut found, &mut |_| {});
}

pub fn polygons(max_half: u32) -> Vec<Polygon> {
    let mut out = Vec::new();
    for_each_polygon(max_half, |p| out.push(p.clone()));
    out
}

fn record(rows: &mut std::collections::BTreeMap<Row, u64>, steps: &[Step]) {
    // only low concavity indices need the full classification
    let (mut x, mut y, mut x0, mut x1, mut y1, mut h) = (0i32, 0i32, 0i32, 0i32, 0i32, 0u32);
    for &s in steps {
        let (dx, dy) = s.delta();
        x += dx;
        y += dy;
        x0 = x0.min(x);
        x1 = x1.max(x);
        y1 = y1.max(y);
        h += (s == Step::E) as u32;
    }
    let v = steps.len() as u32 / 2 - h;
    let m = h + v - (x1 - x0) as u32 - y1 as u32;
    if m > 2 {
        *rows.entry(Row::new(h, v, m, "all")).or_insert(0) += 1;
        return;
    }
    let p = Polygon::from_steps_unchecked(steps.to_vec());
    let c = classify(&p);
    *rows.entry(Row::new(c.h, c.v, c.m, "all")).or_insert(0) += 1;
    for t in c.tags() {
        *rows.entry(Row::new(c.h, c.v, c.m, &t)).or_insert(0) += 1;
    }
}

#[derive(Serialize, Deserialize)]
struct Snapshot {
    max_half: u32,
    prefixes: usize,
    done: usize,
    table: CensusTable,
}

/// Exhaustive census up to the half-perimeter cap, classified.
pub fn enumerate(max_half: u32) -> Result<CensusTable, CensusError> {
    enumerate_with(&CensusConfig::new(max_half))
}

pub fn enumerate_with(cfg: &CensusConfig) -> Result<CensusTable, CensusError> {
    if cfg.max_half < 2 {
        return Err(CensusError::CapTooSmall(cfg.max_half));
    }
    if cfg.max_half > cfg.limit {
        return Err(CensusError::Resource { cap: cfg.max_half, limit: cfg.limit });
    }
    let started = Instant::now();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cfg.threads {
        pool = pool.num_threads(n);
    }
    let pool = pool.build().map_err(|e| CensusError::Pool(e.to_string()))?;

    // split the search tree at a fixed depth; the short polygons are found on the way
    let mut base = std::collections::BTreeMap::new();
    let mut prefixes: Vec<Vec<Step>> = Vec::new();
    {
        let mut w = Walker::new(cfg.max_half);
        w.mark(1, 0, true);
        w.steps.push(Step::E);
        let mut found = |s: &[Step]| record(&mut base, s);
        let mut cut = |s: &[Step]| prefixes.push(s.to_vec());
        w.dfs(1, 0, PREFIX_LEN, &mut found, &mut cut);
    }

    let mut table = CensusTable::new(cfg.max_half);
    table.add_rows(&base);
    let mut start = 0;
    if let Some(path) = &cfg.snapshot {
        if path.exists() {
            let snap: Snapshot = serde_json::from_str(&std::fs::read_to_string(path)?).map_err(|e| CensusError::Snapshot(e.to_string()))?;
            if snap.max_half != cfg.max_half || snap.prefixes != prefixes.len() {
                return Err(CensusError::Snapshot("snapshot belongs to a different run".into()));
            }
            table = snap.table;
            start = snap.done;
        }
    }

    let max_half = cfg.max_half;
    for chunk_start in (start..prefixes.len()).step_by(CHUNK) {
        let chunk = &prefixes[chunk_start..(chunk_start + CHUNK).min(prefixes.len())];
        let parts: Vec<std::collections::BTreeMap<Row, u64>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|prefix| {
                    let mut local = std::collections::BTreeMap::new();
                    let mut w = Walker::new(max_half);
                    let (x, y) = w.replay(prefix);
                    let mut found = |s: &[Step]| record(&mut local, s);
                    w.dfs(x, y, usize::MAX, &mut found, &mut |_| {});
                    local
                })
                .collect()
        });
        for part in &parts {
            table.add_rows(part);
        }
        if let Some(path) = &cfg.snapshot {
            let snap = Snapshot { max_half, prefixes: prefixes.len(), done: chunk_start + chunk.len(), table: table.clone() };
            let tmp = path.with_extension("tmp");
            std::fs::write(&tmp, serde_json::to_string(&snap).map_err(|e| CensusError::Snapshot(e.to_string()))?)?;
            std::fs::rename(&tmp, path)?;
        }
    }
    table.runtime_ms = started.elapsed().as_millis() as u64;
    Ok(table)
}

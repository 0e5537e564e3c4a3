use thiserror::Error;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("invalid polygon: {0}")]
    BadPolygon(String),
    #[error("half-perimeter cap {0} is below the minimum of 2")]
    CapTooSmall(u32),
    #[error("half-perimeter cap {cap} exceeds the configured budget of {limit}")]
    Resource { cap: u32, limit: u32 },
    #[error("snapshot: {0}")]
    Snapshot(String),
    #[error("thread pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

//! Exhaustive census of self-avoiding polygons on the square lattice, with
//! each polygon classified by concavity index and indent structure.

mod classify;
mod enumerate;
mod error;
mod polygon;
mod table;

pub use classify::{classify, concavity_index, Arc, Classification, Corners, Direction, Indent, Side};
pub use enumerate::{enumerate, enumerate_with, for_each_polygon, polygons, CensusConfig, DEFAULT_LIMIT};
pub use error::CensusError;
pub use polygon::{Polygon, Step};
pub use table::{CensusTable, Row};

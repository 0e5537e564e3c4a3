//! Named generating functions for convex and almost-convex lattice polygons,
//! each expandable to an exact truncated series on a caller-chosen region.

mod basic;
mod catalogue;
mod closed;
mod ctx;
mod data;
mod error;

pub use basic::{
    delta, festoon_z, folded_walk_gfs, indent_gf, indent_gf_alt, indent_gf_mirror, prop1_census_form, prop1_gf, prop2_census_form, prop2_gf, pyramid_gf, stack_gf, unimodal_fold_correction,
    staircase_s, staircase_top_base, uv_series, Kind,
};
pub use catalogue::{catalogue, check_integer, expand, lookup, NamedGf};
pub use closed::{
    ansatz_series, c1_iso, c1_top_arc, c2_aniso, c2_iso, c2_iso_printed, f2_b, f2_denominator, f2_forced_b_factor, f2_iso, poly_mul, poly_pow, C1_A, C1_B,
    C2_A, C2_B, F2_A, F2_B_COFACTOR,
};
pub use ctx::xy;
pub use data::{c2_numerators, data_dir, load_verified, sha256_hex, PolyData, A2C_FILE, B2C_FILE, CHECKSUM_FILE, DATA_DIR_ENV};
pub use error::{GfError, Result};

use crate::error::{DslError, Result};
use crate::program::Program;

const PROGRAMS: &[(&str, &str)] = &[
    ("one_convex_top_arc", include_str!("../programs/one_convex_top_arc.gf")),
    ("one_convex_top_arc_display", include_str!("../programs/one_convex_top_arc_display.gf")),
    ("case2_same_side", include_str!("../programs/case2_same_side.gf")),
];

/// Names and sources of the bundled programs.
pub fn shipped_programs() -> Vec<(&'static str, &'static str)> {
    PROGRAMS.to_vec()
}

pub fn shipped_program(name: &str) -> Result<Program> {
    let (_, src) = PROGRAMS.iter().find(|(n, _)| *n == name).ok_or_else(|| DslError::Unbound(name.to_string()))?;
    Ok(Program::parse(src)?)
}

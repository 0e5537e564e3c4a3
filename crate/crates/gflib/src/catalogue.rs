use std::collections::BTreeMap;

use polygf_series::{format_rat, Rat, TruncatedSeries, Truncation, VarSet};

use crate::basic::{self, Kind};
use crate::closed;
use crate::data;
use crate::error::{GfError, Result};

/// A catalogue entry: its variables and a builder for any region over them.
#[derive(Clone, Copy)]
pub struct NamedGf {
    pub name: &'static str,
    pub vars: &'static [&'static str],
    pub about: &'static str,
    build: fn(&Truncation) -> Result<TruncatedSeries>,
}

impl NamedGf {
    pub fn varset(&self) -> VarSet {
        VarSet::new(self.vars).unwrap()
    }

    /// Expands on the region and rejects non-integer isotropic coefficients.
    pub fn expand(&self, t: &Truncation) -> Result<TruncatedSeries> {
        if t.nvars() != self.vars.len() {
            return Err(GfError::BadArg(format!("`{}` takes {} variables, region has {}", self.name, self.vars.len(), t.nvars())));
        }
        let s = (self.build)(t)?;
        check_integer(self.name, &s)?;
        Ok(s)
    }
}

/// Fails when the isotropic specialisation has a non-integer coefficient.
pub fn check_integer(name: &str, s: &TruncatedSeries) -> Result<()> {
    let mut by_degree: BTreeMap<u32, Rat> = BTreeMap::new();
    for (e, c) in s.terms() {
        *by_degree.entry(e.iter().sum()).or_default() += c;
    }
    for (d, c) in by_degree {
        if !polygf_series::is_integer(&c) {
            return Err(GfError::NonInteger { name: name.to_string(), exp: vec![d], coeff: format_rat(&c) });
        }
    }
    Ok(())
}

const XY: &[&str] = &["x", "y"];
const X: &[&str] = &["x"];

fn cap0(t: &Truncation) -> Result<u32> {
    u32::try_from(t.reach(0)).map_err(|_| GfError::BadArg("empty region".into()))
}

macro_rules! entry {
    ($name:expr, $vars:expr, $about:expr, $f:expr) => {
        NamedGf { name: $name, vars: $vars, about: $about, build: $f }
    };
}

pub fn catalogue() -> Vec<NamedGf> {
    vec![
        entry!("delta", XY, "1 - 2x - 2y - 2xy + x^2 + y^2", basic::delta),
        entry!("festoon_z", XY, "staircase festoons, 1/sqrt(delta)", basic::festoon_z),
        entry!("staircase_s", XY, "staircase polygons", basic::staircase_s),
        entry!("u", XY, "x + S", |t| Ok(basic::uv_series(t)?.0)),
        entry!("v", XY, "y + S", |t| Ok(basic::uv_series(t)?.1)),
        entry!("indent1", XY, "one-deep indent factor u^2/(1-u)^2", |t| basic::indent_gf(1, t)),
        entry!("indent1_mirror", XY, "one-deep indent factor with x and y swapped", |t| basic::indent_gf_mirror(1, t)),
        entry!("indent2", XY, "two-deep indent factor u^2/(1-u)^4", |t| basic::indent_gf(2, t)),
        entry!("indent3", XY, "three-deep indent factor u^2/(1-u)^6", |t| basic::indent_gf(3, t)),
        entry!("prop1_staircase", XY, "I (y Q' - Q) with Q = S/y", |t| basic::prop1_gf(1, Kind::Staircase, t)),
        entry!("prop1_unimodal", XY, "I (y Q' - Q) with Q = xZ", |t| basic::prop1_gf(1, Kind::Unimodal, t)),
        entry!("rooted_staircase_indent", XY, "I y^3 Q' with Q = S/y", |t| basic::prop1_census_form(1, Kind::Staircase, t)),
        entry!("rooted_unimodal_indent", XY, "I y^3 Q' with Q = xZ", |t| basic::prop1_census_form(1, Kind::Unimodal, t)),
        entry!("prop2_staircase", XY, "y^3 d/dy(I^2 d/dy(Q/y))/2 with Q = S/y", |t| basic::prop2_gf(Kind::Staircase, t)),
        entry!("prop2_unimodal", XY, "y^3 d/dy(I^2 d/dy(Q/y))/2 with Q = xZ", |t| basic::prop2_gf(Kind::Unimodal, t)),
        entry!("rooted_staircase_indent_pair", XY, "y^3 d/dy(I^2 y^2 Q')/2 with Q = S/y", |t| basic::prop2_census_form(Kind::Staircase, t)),
        entry!("rooted_unimodal_indent_pair", XY, "y^3 d/dy(I^2 y^2 Q')/2 with Q = xZ", |t| basic::prop2_census_form(Kind::Unimodal, t)),
        entry!("dw", XY, "directed walks", |t| basic::folded_walk_gfs("dw", t)),
        entry!("folded_dw", XY, "directed walks folded once", |t| basic::folded_walk_gfs("folded_dw", t)),
        entry!("saw_fold", XY, "folded self-avoiding walks", |t| basic::folded_walk_gfs("saw_fold", t)),
        entry!("unimodal_fold", XY, "possibly intersecting unimodal polygons", |t| basic::folded_walk_gfs("unimodal_fold", t)),
        entry!("unimodal_fold_correction", XY, "folded unimodal walks whose halves touch", basic::unimodal_fold_correction),
        entry!("convex_fold", XY, "possibly intersecting convex polygons", |t| basic::folded_walk_gfs("convex_fold", t)),
        entry!("stack", XY, "stack polygons", basic::stack_gf),
        entry!("pyramid", XY, "pyramid polygons", basic::pyramid_gf),
        entry!("sbar", &["x", "y", "s", "t"], "staircase polygons, s marks the top edge and t the base", |t| {
            basic::staircase_top_base(&VarSet::new(&["x", "y", "s", "t"]).unwrap(), t, "s", "t")
        }),
        entry!("c1_iso", X, "1-convex polygons", |t| closed::c1_iso(cap0(t)?)),
        entry!("c1_top_arc", X, "1-convex polygons with the indent on the top arc", |t| closed::c1_top_arc(cap0(t)?)),
        entry!("f2_iso", X, "convex polygons with one two-deep indent on the top arc", |t| closed::f2_iso(cap0(t)?)),
        entry!("c2_iso", X, "2-convex polygons", |t| closed::c2_iso(cap0(t)?)),
        entry!("c2_iso_printed", X, "the two-term 2-convex sum with both signs positive", |t| closed::c2_iso_printed(cap0(t)?)),
        entry!("c2_aniso", XY, "2-convex polygons, anisotropic", |t| {
            let (a, b) = data::c2_numerators()?;
            closed::c2_aniso(t, &a, &b)
        }),
    ]
}

pub fn lookup(name: &str) -> Result<NamedGf> {
    catalogue().into_iter().find(|g| g.name == name).ok_or_else(|| GfError::UnknownName(name.to_string()))
}

/// Expands a catalogue entry on its default variables.
pub fn expand(name: &str, t: &Truncation) -> Result<TruncatedSeries> {
    lookup(name)?.expand(t)
}

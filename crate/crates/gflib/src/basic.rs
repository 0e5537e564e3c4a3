use std::collections::HashMap;

use polygf_series::{int, ratio, TruncatedSeries, Truncation, VarSet};

use crate::ctx::Ctx;
use crate::error::{GfError, Result};

/// Which rooted factor a proposition-style formula builds on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Staircase,
    Unimodal,
}

impl Kind {
    pub fn parse(s: &str) -> Result<Kind> {
        match s {
            "staircase" => Ok(Kind::Staircase),
            "unimodal" => Ok(Kind::Unimodal),
            _ => Err(GfError::BadArg(format!("kind must be staircase or unimodal, got `{s}`"))),
        }
    }
}

/// Region `t` enlarged by `dx`, `dy` in x and y.
pub(crate) fn grow(t: &Truncation, dx: i64, dy: i64) -> Truncation {
    t.shifted(&[-dx, -dy])
}

pub fn delta(t: &Truncation) -> Result<TruncatedSeries> {
    let c = Ctx::xy(t);
    let (x, y) = (c.v("x")?, c.v("y")?);
    Ok(c.c(1) - x.scale(&int(2)) - y.scale(&int(2)) - (&x * &y).scale(&int(2)) + &x * &x + &y * &y)
}

pub fn festoon_z(t: &Truncation) -> Result<TruncatedSeries> {
    Ok(delta(t)?.sqrt()?.inv()?)
}

pub fn staircase_s(t: &Truncation) -> Result<TruncatedSeries> {
    let c = Ctx::xy(t);
    let root = delta(t)?.sqrt()?;
    Ok((c.c(1) - c.v("x")? - c.v("y")? - root).scale(&ratio(1, 2)))
}

/// `u = x + S` and `v = y + S`.
pub fn uv_series(t: &Truncation) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let c = Ctx::xy(t);
    let s = staircase_s(t)?;
    Ok((c.v("x")? + &s, c.v("y")? + &s))
}

fn swap_xy(f: &TruncatedSeries) -> Result<TruncatedSeries> {
    let terms = f.terms().map(|(e, c)| (vec![e[1], e[0]], c.clone()));
    Ok(TruncatedSeries::from_terms(&crate::ctx::xy(), &swap_region(f.truncation()), terms)?)
}

fn swap_region(t: &Truncation) -> Truncation {
    let cons = t
        .constraints()
        .into_iter()
        .map(|mut b| {
            b.weights.swap(0, 1);
            b
        })
        .collect();
    Truncation::from_constraints(2, cons)
}

/// `Iₘ = u²/(1−u)^{2m}`.
pub fn indent_gf(m: u32, t: &Truncation) -> Result<TruncatedSeries> {
    if m < 1 {
        return Err(GfError::BadArg("indent depth must be at least 1".into()));
    }
    let c = Ctx::xy(t);
    let (u, _) = uv_series(t)?;
    Ok((&u * &u).checked_mul(&(c.c(1) - &u).pow(-2 * m as i64)?)?)
}

/// `Īₘ = Iₘ(y, x)`.
pub fn indent_gf_mirror(m: u32, t: &Truncation) -> Result<TruncatedSeries> {
    swap_xy(&indent_gf(m, &swap_region(t))?)
}

/// The right-hand form `v² S^{2m−2} / y^{2m}` of the m-deep indent identity.
pub fn indent_gf_alt(m: u32, t: &Truncation) -> Result<TruncatedSeries> {
    let big = grow(t, 0, 2 * m as i64);
    let (_, v) = uv_series(&big)?;
    let s = staircase_s(&big)?;
    let num = (&v * &v).checked_mul(&s.pow(2 * m as i64 - 2)?)?;
    Ok(num.shift_var("y", -2 * m as i64)?.truncate(t))
}

/// `Q = S/y` for staircases, `xZ` for unimodal factors, on a region one wider in y.
fn q_factor(kind: Kind, t: &Truncation) -> Result<TruncatedSeries> {
    match kind {
        Kind::Staircase => Ok(staircase_s(&grow(t, 0, 1))?.shift_var("y", -1)?.truncate(t)),
        Kind::Unimodal => {
            let c = Ctx::xy(t);
            Ok(c.v("x")? * festoon_z(t)?)
        }
    }
}

/// `Iₘ · y² · d/dy (Q/y)`, computed as `Iₘ (yQ′ − Q)`.
pub fn prop1_gf(m: u32, kind: Kind, t: &Truncation) -> Result<TruncatedSeries> {
    let big = grow(t, 0, 1);
    let c = Ctx::xy(&big);
    let q = q_factor(kind, &big)?;
    let r = c.v("y")? * q.diff("y")? - q.truncate(t);
    Ok(indent_gf(m, t)?.checked_mul(&r)?.truncate(t))
}

/// `Iₘ · y³ · dQ/dy`: rooted polygons with one indent on the top arc.
pub fn prop1_census_form(m: u32, kind: Kind, t: &Truncation) -> Result<TruncatedSeries> {
    let q = q_factor(kind, &grow(t, 0, 1))?;
    let f = indent_gf(m, t)?.checked_mul(&q.diff("y")?.shift_var("y", 3)?)?;
    Ok(f.truncate(t))
}

/// `y³ d/dy (I² d/dy (Q/y)) / 2`, computed as `(yT′ − 2T)/2` with `T = I²(yQ′ − Q)`.
pub fn prop2_gf(kind: Kind, t: &Truncation) -> Result<TruncatedSeries> {
    let big = grow(t, 0, 2);
    let c = Ctx::xy(&big);
    let q = q_factor(kind, &big)?;
    let r = c.v("y")? * q.diff("y")? - &q;
    let i = indent_gf(1, &big)?;
    let tt = (&i * &i).checked_mul(&r)?;
    let out = c.v("y")? * tt.diff("y")? - tt.scale(&int(2));
    Ok(out.scale(&ratio(1, 2)).truncate(t))
}

/// `y³ d/dy (I² y² dQ/dy) / 2`: rooted polygons with two distinct 1-deep
/// indents on the top arc.
pub fn prop2_census_form(kind: Kind, t: &Truncation) -> Result<TruncatedSeries> {
    let big = grow(t, 0, 2);
    let q = q_factor(kind, &big)?;
    let i = indent_gf(1, &big)?;
    let inner = (&i * &i).checked_mul(&q.diff("y")?.shift_var("y", 2)?)?;
    let f = inner.diff("y")?.shift_var("y", 3)?.scale(&ratio(1, 2));
    Ok(f.truncate(t))
}

/// `E_v` of a series built on the doubled region.
fn fold(t: &Truncation, vars: &[&str], build: impl Fn(&Truncation) -> Result<TruncatedSeries>) -> Result<TruncatedSeries> {
    let xy = crate::ctx::xy();
    let mut inner = t.clone();
    for v in vars {
        inner = inner.doubled(xy.require(v)?);
    }
    let mut f = build(&inner)?;
    for v in vars {
        f = f.half_perimeter(v)?;
    }
    Ok(f.truncate(t))
}

/// Directed and folded walk series, by name.
pub fn folded_walk_gfs(name: &str, t: &Truncation) -> Result<TruncatedSeries> {
    let dw = |t: &Truncation| -> Result<TruncatedSeries> {
        let c = Ctx::xy(t);
        Ok((c.c(1) - c.v("x")? - c.v("y")?).inv()?)
    };
    match name {
        "dw" => dw(t),
        "folded_dw" => fold(t, &["x"], dw),
        "saw_fold" => fold(t, &["x"], |t| {
            let c = Ctx::xy(t);
            Ok((c.c(1) - c.v("x")?) * dw(t)?)
        }),
        "unimodal_fold" => fold(t, &["x", "y"], |t| {
            let c = Ctx::xy(t);
            let (x, y) = (c.v("x")?, c.v("y")?);
            Ok(&x * &y * (c.c(1) - &x) * (c.c(1) - &y) * dw(t)?)
        }),
        "convex_fold" => fold(t, &["x", "y"], |t| {
            let c = Ctx::xy(t);
            let (x, y) = (c.v("x")?, c.v("y")?);
            let a = (c.c(1) - &x) * (c.c(1) - &y);
            let d = dw(t)?;
            Ok(&x * &y * &a * &a * &d * &d)
        }),
        _ => Err(GfError::UnknownName(name.to_string())),
    }
}

/// Folded unimodal walks whose two halves touch: `2xyS/Δ`. Removing them
/// from `unimodal_fold` leaves `xyZ`.
pub fn unimodal_fold_correction(t: &Truncation) -> Result<TruncatedSeries> {
    let c = Ctx::xy(t);
    let z = festoon_z(t)?;
    Ok((c.c(2) * c.v("x")? * c.v("y")? * staircase_s(t)? * &z * &z).truncate(t))
}

/// Stack polygons (flat left side): a width-one column added to the folded
/// self-avoiding walk.
pub fn stack_gf(t: &Truncation) -> Result<TruncatedSeries> {
    let big = grow(t, 1, 0);
    let c = Ctx::xy(&big);
    let f = folded_walk_gfs("saw_fold", &big)? - c.c(1);
    Ok((c.v("x")? * f).truncate(t))
}

/// Pyramid polygons (flat base), the stack turned on its side.
pub fn pyramid_gf(t: &Truncation) -> Result<TruncatedSeries> {
    swap_xy(&stack_gf(&swap_region(t))?)
}

/// Staircase polygons over `vars` (which must contain x and y) with `top`
/// marking the length of the top edge and `base` the length of the bottom
/// edge. Built column by column.
pub fn staircase_top_base(vars: &VarSet, t: &Truncation, top: &str, base: &str) -> Result<TruncatedSeries> {
    let (ix, iy, is, ib) = (vars.require("x")?, vars.require("y")?, vars.require(top)?, vars.require(base)?);
    let n = vars.len();
    let at = |h: u32, v: u32, s: u32, b: u32| {
        let mut e = vec![0u32; n];
        e[ix] = h;
        e[iy] = v;
        e[is] += s;
        e[ib] += b;
        e
    };
    // state: (bottom, top, base run still open, base length, top run)
    type State = (u32, u32, bool, u32, u32);
    let mut terms = Vec::new();
    let mut layer: HashMap<State, u64> = HashMap::new();
    let mut top0 = 1;
    while t.contains(&at(1, top0, 0, 0)) {
        layer.insert((0, top0, true, 1, 1), 1);
        top0 += 1;
    }
    let mut h = 1;
    while !layer.is_empty() {
        let mut next: HashMap<State, u64> = HashMap::new();
        for (&(b, tp, open, bl, run), &cnt) in &layer {
            terms.push((at(h, tp, run, bl), int(cnt as i64)));
            for nb in b..tp {
                let (nopen, nbl) = if open && nb == 0 { (true, bl + 1) } else { (false, bl) };
                let mut nt = tp;
                while t.contains(&at(h + 1, nt, 0, 0)) {
                    let nrun = if nt == tp { run + 1 } else { 1 };
                    *next.entry((nb, nt, nopen, nbl, nrun)).or_insert(0) += cnt;
                    nt += 1;
                }
            }
        }
        layer = next;
        h += 1;
    }
    Ok(TruncatedSeries::from_terms(vars, t, terms)?)
}

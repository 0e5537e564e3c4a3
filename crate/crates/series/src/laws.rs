//! Checks of the Hadamard-product laws on concrete series. Used by the
//! verification suites; each returns whether the law holds exactly.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::rat::{int, Rat};
use crate::series::TruncatedSeries;
use crate::trunc::Truncation;
use crate::vars::VarSet;

/// `f ⊙_t (g + h) = f ⊙_t g + f ⊙_t h`, both for the product and the join.
pub fn distributive(f: &TruncatedSeries, g: &TruncatedSeries, h: &TruncatedSeries, t: &str) -> Result<bool> {
    let gh = g.checked_add(h)?;
    let lhs = f.hadamard(&gh, t)?;
    let rhs = f.hadamard(g, t)?.checked_add(&f.hadamard(h, t)?)?;
    let jl = f.hadamard_join(&gh, t)?.series;
    let jr = f.hadamard_join(g, t)?.series.checked_add(&f.hadamard_join(h, t)?.series)?;
    Ok(lhs.eq_on_common(&rhs)? && jl.eq_on_common(&jr)?)
}

/// `d/ds (f ⊙_t g) = (d/ds f) ⊙_t g + f ⊙_t (d/ds g)` for `s ≠ t`.
pub fn product_rule(f: &TruncatedSeries, g: &TruncatedSeries, s: &str, t: &str) -> Result<bool> {
    let lhs = f.hadamard_join(g, t)?.series.diff(s)?;
    let a = f.diff(s)?.hadamard_join(g, t)?.series;
    let b = f.hadamard_join(&g.diff(s)?, t)?.series;
    let rhs = a.checked_add(&b)?;
    let plain_l = f.hadamard(g, t)?.diff(s)?;
    let plain_r = f.diff(s)?.hadamard(g, t)?.checked_add(&f.hadamard(&g.diff(s)?, t)?)?;
    Ok(lhs.eq_on_common(&rhs)? && plain_l.eq_on_common(&plain_r)?)
}

/// Horner evaluation of a univariate polynomial given by its coefficients.
pub fn eval_at(coeffs: &[Rat], a: &Rat) -> Rat {
    coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * a + c)
}

/// `f(t) ⊙_t t^k k!/(1−αt)^{k+1} |_{t=1} = f^{(k)}(α)` for a polynomial `f`
/// given by its coefficients; `k = 0` is the plain pole law.
pub fn pole_law(f: &[Rat], alpha: &Rat, k: u32) -> Result<bool> {
    let n = f.len().max(1) as u32 - 1;
    let vs = VarSet::new(&["t"])?;
    let tr = Truncation::caps(&[n + k + 1]);
    let fs = TruncatedSeries::from_terms(&vs, &tr, f.iter().enumerate().map(|(i, c)| (vec![i as u32], c.clone())))?;
    let one = TruncatedSeries::one(&vs, &tr);
    let t = TruncatedSeries::var(&vs, &tr, "t")?;
    let kfact: Rat = (1..=k as i64).map(int).fold(Rat::one(), |a, b| a * b);
    let den = one.checked_sub(&t.scale(alpha))?.pow(k as i64 + 1)?;
    let kernel = t.pow(k as i64)?.scale(&kfact).checked_div(&den)?;
    let joined = fs.hadamard_join(&kernel, "t")?;
    let mut d: Vec<Rat> = f.to_vec();
    for _ in 0..k {
        d = d.iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect();
    }
    Ok(joined.series.constant_term() == eval_at(&d, alpha))
}

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Result, SeriesError};
use crate::rat::Rat;
use crate::series::{Exp, TruncatedSeries};
use crate::trunc::{Bound, Truncation};
use crate::vars::VarSet;

/// Outcome of a restricted Hadamard join.
#[derive(Clone, Debug)]
pub struct JoinResult {
    pub series: TruncatedSeries,
    /// Set when some contributing term sat on the truncation edge of the
    /// joined variable, so later (unrepresented) terms might have contributed.
    pub truncated: bool,
}

impl TruncatedSeries {
    /// `E_v`: keeps even powers of `v` and halves them.
    pub fn half_perimeter(&self, v: &str) -> Result<TruncatedSeries> {
        let i = self.vars.require(v)?;
        let t = self.trunc.halved(i);
        let mut out = TruncatedSeries::zero(&self.vars, &t);
        for (e, c) in &self.coeffs {
            if e[i] % 2 == 0 {
                let mut f = e.clone();
                f[i] /= 2;
                out.set(f, c.clone());
            }
        }
        Ok(out)
    }

    /// Coefficientwise product in `v`; other variables multiply as usual.
    pub fn hadamard(&self, other: &TruncatedSeries, v: &str) -> Result<TruncatedSeries> {
        self.check_vars(other)?;
        let i = self.vars.require(v)?;
        let t = self.trunc.intersect(&other.trunc);
        let mut by_n: HashMap<u32, Vec<(&Exp, &Rat)>> = HashMap::new();
        for (e, c) in &other.coeffs {
            by_n.entry(e[i]).or_default().push((e, c));
        }
        let mut acc: HashMap<Exp, Rat> = HashMap::new();
        for (ea, ca) in &self.coeffs {
            let Some(bs) = by_n.get(&ea[i]) else { continue };
            for (eb, cb) in bs {
                let mut e: Exp = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                e[i] = ea[i];
                if t.contains(&e) {
                    *acc.entry(e).or_insert_with(Rat::zero) += ca * *cb;
                }
            }
        }
        let coeffs: BTreeMap<Exp, Rat> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(TruncatedSeries::from_parts(self.vars.clone(), t, coeffs))
    }

    /// Restricted Hadamard join `Σ_n [vⁿ]a · [vⁿ]b`, eliminating `v`.
    pub fn hadamard_join(&self, other: &TruncatedSeries, v: &str) -> Result<JoinResult> {
        self.check_vars(other)?;
        let i = self.vars.require(v)?;
        let full = self.trunc.intersect(&other.trunc);
        let rest = full.without_var(i);
        let vars = self.vars.without(v)?;
        let mut by_n: HashMap<u32, Vec<(&Exp, &Rat)>> = HashMap::new();
        for (e, c) in &other.coeffs {
            by_n.entry(e[i]).or_default().push((e, c));
        }
        let mut acc: HashMap<Exp, Rat> = HashMap::new();
        let mut truncated = false;
        for (ea, ca) in &self.coeffs {
            let Some(bs) = by_n.get(&ea[i]) else { continue };
            let mut ea_next = ea.clone();
            ea_next[i] += 1;
            let a_edge = !self.trunc.contains(&ea_next);
            for (eb, cb) in bs {
                let mut e: Exp = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                e.remove(i);
                if !rest.contains(&e) {
                    continue;
                }
                let mut eb_next = (*eb).clone();
                eb_next[i] += 1;
                if a_edge || !other.trunc.contains(&eb_next) {
                    truncated = true;
                }
                *acc.entry(e).or_insert_with(Rat::zero) += ca * *cb;
            }
        }
        let coeffs: BTreeMap<Exp, Rat> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(JoinResult { series: TruncatedSeries::from_parts(vars, rest, coeffs), truncated })
    }

    /// Composition `a|_{v → g}`. `g` lives over the same variables, does not
    /// involve `v` and has zero constant term. `v` is removed from the result.
    pub fn substitute(&self, v: &str, g: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_vars(g)?;
        let i = self.vars.require(v)?;
        if !g.constant_term().is_zero() {
            return Err(SeriesError::NonZeroConstant(v.to_string()));
        }
        if g.coeffs.keys().any(|e| e[i] > 0) {
            return Err(SeriesError::SelfReference(v.to_string()));
        }
        let n = self.vars.len();
        let gvars: Vec<bool> = g.active();
        let mut cons: Vec<Bound> = Vec::new();
        for b in self.trunc.constraints() {
            let wv = b.weights[i] as i64;
            let mut w = b.weights.clone();
            w[i] = 0;
            if wv == 0 || g.is_zero() {
                cons.push(Bound { weights: w, max: b.max });
                continue;
            }
            let val = |wt: &[u32], e: &Exp| -> i64 { wt.iter().zip(e).map(|(&a, &x)| a as i64 * x as i64).sum() };
            let c = g.coeffs.keys().map(|e| val(&w, e)).min().unwrap();
            if c >= wv {
                cons.push(Bound { weights: w, max: b.max });
                continue;
            }
            // boost the weight of a variable dividing every term of g, or of all of g's variables
            let divisor = (0..n)
                .filter(|&u| u != i)
                .map(|u| (u, g.coeffs.keys().map(|e| e[u]).min().unwrap()))
                .filter(|&(_, nu)| nu >= 1)
                .max_by_key(|&(u, nu)| (nu, std::cmp::Reverse(u)));
            let (nu, boosted): (i64, Vec<bool>) = match divisor {
                Some((u, nu)) => (nu as i64, (0..n).map(|j| j == u).collect()),
                None => {
                    let nu = g.coeffs.keys().map(|e| e.iter().map(|&x| x as i64).sum::<i64>()).min().unwrap();
                    (nu, gvars.clone())
                }
            };
            let weights = (0..n)
                .map(|j| {
                    let base = nu * w[j] as i64;
                    let extra = if boosted[j] { wv - c } else { 0 };
                    (base + extra) as u32
                })
                .collect();
            cons.push(Bound { weights, max: nu * b.max + nu - 1 });
        }
        for b in g.trunc.constraints() {
            let mut w = b.weights.clone();
            w[i] = 0;
            cons.push(Bound { weights: w, max: b.max });
        }
        let mut vcap = vec![0u32; n];
        vcap[i] = 1;
        cons.push(Bound { weights: vcap, max: 0 });
        let t = Truncation::from_constraints(n, cons);

        // slices f_k of a by the power of v
        let mut slices: BTreeMap<u32, TruncatedSeries> = BTreeMap::new();
        for (e, c) in &self.coeffs {
            let k = e[i];
            let mut f = e.clone();
            f[i] = 0;
            slices.entry(k).or_insert_with(|| TruncatedSeries::zero(&self.vars, &t)).set(f, c.clone());
        }
        let gt = g.truncate(&t);
        let out = if gt.nnz() <= 1 {
            // monomial (or zero) substitution maps terms directly
            let mut out = TruncatedSeries::zero(&self.vars, &t);
            let (gm, gc) = match gt.coeffs.iter().next() {
                Some((e, c)) => (e.clone(), c.clone()),
                None => (vec![0; n], Rat::zero()),
            };
            for (k, s) in &slices {
                let ck = if *k == 0 { Rat::one() } else { num_traits::pow::pow(gc.clone(), *k as usize) };
                if ck.is_zero() {
                    continue;
                }
                for (e, c) in &s.coeffs {
                    let f: Exp = e.iter().zip(&gm).map(|(a, b)| a + k * b).collect();
                    out.add_at(f, &(c * &ck));
                }
            }
            out
        } else {
            let kmax = slices.keys().next_back().copied().unwrap_or(0);
            let mut acc = TruncatedSeries::zero(&self.vars, &t);
            for k in (0..=kmax).rev() {
                acc = acc.checked_mul(&gt)?;
                if let Some(s) = slices.get(&k) {
                    acc = acc.checked_add(s)?;
                }
            }
            acc
        };
        out.drop_var(v)
    }

    /// Replaces `v` by `c·v·x^m` where `m` may have negative entries on other
    /// variables; fails if a term would receive a negative exponent.
    pub fn rescale(&self, v: &str, c: &Rat, m: &[i64]) -> Result<TruncatedSeries> {
        let i = self.vars.require(v)?;
        let n = self.vars.len();
        if m.len() != n {
            return Err(SeriesError::Arity { got: m.len(), want: n });
        }
        let cons = self
            .trunc
            .constraints()
            .into_iter()
            .map(|b| {
                let dot: i64 = (0..n).filter(|&j| j != i).map(|j| b.weights[j] as i64 * m[j]).sum();
                let mut w = b.weights.clone();
                w[i] = (b.weights[i] as i64 - dot).max(0) as u32;
                Bound { weights: w, max: b.max }
            })
            .collect();
        let t = Truncation::from_constraints(n, cons);
        let mut out = TruncatedSeries::zero(&self.vars, &t);
        for (e, a) in &self.coeffs {
            let k = e[i] as i64;
            let mut f = Vec::with_capacity(n);
            for j in 0..n {
                let y = if j == i { e[j] as i64 } else { e[j] as i64 + k * m[j] };
                if y < 0 {
                    return Err(SeriesError::NotDivisible);
                }
                f.push(y as u32);
            }
            out.add_at(f, &(a * num_traits::pow::pow(c.clone(), k as usize)));
        }
        Ok(out)
    }

    /// Renames `from` to the existing variable `to` (e.g. `y → x`), removing `from`.
    pub fn rename(&self, from: &str, to: &str) -> Result<TruncatedSeries> {
        let g = TruncatedSeries::var(&self.vars, &self.trunc, to)?;
        self.substitute(from, &g)
    }

    /// Sets every variable to `to`, returning a univariate series.
    pub fn isotropic(&self, to: &str) -> Result<TruncatedSeries> {
        self.vars.require(to)?;
        let mut s = self.clone();
        for name in self.vars.names() {
            if name != to {
                s = s.rename(name, to)?;
            }
        }
        Ok(s)
    }

    /// Removes a variable that occurs in no term.
    pub fn drop_var(&self, v: &str) -> Result<TruncatedSeries> {
        let i = self.vars.require(v)?;
        if self.coeffs.keys().any(|e| e[i] > 0) {
            return Err(SeriesError::Parse(format!("`{v}` still occurs")));
        }
        let vars = self.vars.without(v)?;
        let t = self.trunc.without_var(i);
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                let mut f = e.clone();
                f.remove(i);
                (f, c.clone())
            })
            .collect();
        Ok(TruncatedSeries::from_parts(vars, t, coeffs))
    }

    /// Re-expresses the series over a larger variable set. New variables get
    /// the given caps; the series does not depend on them.
    pub fn embed(&self, target: &VarSet, new_caps: &dyn Fn(&str) -> i64) -> Result<TruncatedSeries> {
        let map: Vec<usize> = self.vars.names().iter().map(|n| target.require(n)).collect::<Result<_>>()?;
        let n = target.len();
        let mut cons: Vec<Bound> = self
            .trunc
            .constraints()
            .into_iter()
            .map(|b| {
                let mut w = vec![0u32; n];
                for (k, &j) in map.iter().enumerate() {
                    w[j] = b.weights[k];
                }
                Bound { weights: w, max: b.max }
            })
            .collect();
        for (j, name) in target.names().iter().enumerate() {
            if !map.contains(&j) {
                let mut w = vec![0u32; n];
                w[j] = 1;
                cons.push(Bound { weights: w, max: new_caps(name) });
            }
        }
        let t = Truncation::from_constraints(n, cons);
        let mut out = TruncatedSeries::zero(target, &t);
        for (e, c) in &self.coeffs {
            let mut f = vec![0u32; n];
            for (k, &j) in map.iter().enumerate() {
                f[j] = e[k];
            }
            out.set(f, c.clone());
        }
        Ok(out)
    }
}

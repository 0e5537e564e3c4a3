use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Result, SeriesError};
use crate::rat::{rat_sqrt, Rat};
use crate::series::{Exp, TruncatedSeries};

fn le(f: &[u32], e: &[u32]) -> bool {
    f.iter().zip(e).all(|(a, b)| a <= b)
}

fn minus(e: &[u32], f: &[u32]) -> Exp {
    e.iter().zip(f).map(|(a, b)| a - b).collect()
}

fn plus(e: &[u32], f: &[u32]) -> Exp {
    e.iter().zip(f).map(|(a, b)| a + b).collect()
}

impl TruncatedSeries {
    pub fn checked_add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_vars(other)?;
        let t = self.trunc.intersect(&other.trunc);
        let mut out = TruncatedSeries::zero(&self.vars, &t);
        for (e, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.add_at(e.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.checked_add(&other.neg_series())
    }

    pub fn neg_series(&self) -> TruncatedSeries {
        let coeffs = self.coeffs.iter().map(|(e, c)| (e.clone(), -c)).collect();
        TruncatedSeries::from_parts(self.vars.clone(), self.trunc.clone(), coeffs)
    }

    pub fn scale(&self, k: &Rat) -> TruncatedSeries {
        if k.is_zero() {
            return TruncatedSeries::zero(&self.vars, &self.trunc);
        }
        let coeffs = self.coeffs.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        TruncatedSeries::from_parts(self.vars.clone(), self.trunc.clone(), coeffs)
    }

    pub fn add_constant(&self, k: &Rat) -> TruncatedSeries {
        let mut out = self.clone();
        out.add_at(vec![0; self.vars.len()], k);
        out
    }

    /// Cauchy product truncated to the common region.
    pub fn checked_mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_vars(other)?;
        let t = self.trunc.intersect(&other.trunc);
        let a: Vec<(&Exp, &Rat)> = self.coeffs.iter().filter(|(e, _)| t.contains(e)).collect();
        let b: Vec<(&Exp, &Rat)> = other.coeffs.iter().filter(|(e, _)| t.contains(e)).collect();
        let mut acc: HashMap<Exp, Rat> = HashMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e = plus(ea, eb);
                if t.contains(&e) {
                    let p = *ca * *cb;
                    match acc.get_mut(&e) {
                        Some(slot) => *slot += p,
                        None => {
                            acc.insert(e, p);
                        }
                    }
                }
            }
        }
        let coeffs: BTreeMap<Exp, Rat> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(TruncatedSeries::from_parts(self.vars.clone(), t, coeffs))
    }

    /// Quotient by a series with nonzero constant term, by coefficient recursion
    /// in lexicographic order of exponents.
    pub fn checked_div(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_vars(other)?;
        let b0 = other.constant_term();
        if b0.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let t = self.trunc.intersect(&other.trunc);
        let active: Vec<bool> = self.active().iter().zip(other.active()).map(|(&p, q)| p || q).collect();
        let zero = vec![0u32; self.vars.len()];
        let bt: Vec<(&Exp, &Rat)> = other.coeffs.iter().filter(|(e, _)| **e != zero && t.contains(e)).collect();
        let inv0 = Rat::one() / &b0;
        let mut q: HashMap<Exp, Rat> = HashMap::new();
        for e in t.points(&active) {
            let mut s = self.coeffs.get(&e).cloned().unwrap_or_else(Rat::zero);
            for (f, bf) in &bt {
                if le(f, &e) {
                    if let Some(qv) = q.get(&minus(&e, f)) {
                        s -= *bf * qv;
                    }
                }
            }
            if !s.is_zero() {
                q.insert(e, s * &inv0);
            }
        }
        Ok(TruncatedSeries::from_parts(self.vars.clone(), t, q.into_iter().collect()))
    }

    pub fn inv(&self) -> Result<TruncatedSeries> {
        TruncatedSeries::one(&self.vars, &self.trunc).checked_div(self)
    }

    /// Square root whose constant term is the positive rational root of ours.
    pub fn sqrt(&self) -> Result<TruncatedSeries> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let r0 = rat_sqrt(&a0).ok_or_else(|| SeriesError::NotASquare(crate::rat::format_rat(&a0)))?;
        let t = self.trunc.clone();
        let active = self.active();
        let zero = vec![0u32; self.vars.len()];
        let inv2r0 = Rat::one() / (&r0 + &r0);
        let mut r: HashMap<Exp, Rat> = HashMap::new();
        let mut order: Vec<Exp> = Vec::new();
        for e in t.points(&active) {
            if e == zero {
                continue;
            }
            let mut s = self.coeffs.get(&e).cloned().unwrap_or_else(Rat::zero);
            for f in &order {
                if le(f, &e) {
                    let g = minus(&e, f);
                    if g != zero {
                        if let Some(rg) = r.get(&g) {
                            s -= &r[f] * rg;
                        }
                    }
                }
            }
            if !s.is_zero() {
                r.insert(e.clone(), s * &inv2r0);
                order.push(e);
            }
        }
        r.insert(zero, r0);
        Ok(TruncatedSeries::from_parts(self.vars.clone(), t, r.into_iter().collect()))
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, n: i64) -> Result<TruncatedSeries> {
        if n < 0 {
            return self.inv()?.pow(-n);
        }
        let mut base = self.clone();
        let mut acc = TruncatedSeries::one(&self.vars, &self.trunc);
        let mut k = n as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Formal partial derivative; the cap in `v` drops by one.
    pub fn diff(&self, v: &str) -> Result<TruncatedSeries> {
        let i = self.vars.require(v)?;
        let mut shift = vec![0i64; self.vars.len()];
        shift[i] = 1;
        let t = self.trunc.shifted(&shift);
        let mut out = TruncatedSeries::zero(&self.vars, &t);
        for (e, c) in &self.coeffs {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                out.set(f, c * Rat::from_integer(e[i].into()));
            }
        }
        Ok(out)
    }

    /// Multiplies by the Laurent monomial with exponents `m`; fails if a
    /// term would receive a negative exponent.
    pub fn mul_monomial(&self, m: &[i64]) -> Result<TruncatedSeries> {
        if m.len() != self.vars.len() {
            return Err(SeriesError::Arity { got: m.len(), want: self.vars.len() });
        }
        let down: Vec<i64> = m.iter().map(|&x| (-x).max(0)).collect();
        let t = self.trunc.shifted(&down);
        let mut out = TruncatedSeries::zero(&self.vars, &t);
        for (e, c) in &self.coeffs {
            let mut f = Vec::with_capacity(e.len());
            for (&x, &d) in e.iter().zip(m) {
                let y = x as i64 + d;
                if y < 0 {
                    return Err(SeriesError::NotDivisible);
                }
                f.push(y as u32);
            }
            out.set(f, c.clone());
        }
        Ok(out)
    }

    /// Multiplies by `name^k`, dividing when `k < 0`.
    pub fn shift_var(&self, name: &str, k: i64) -> Result<TruncatedSeries> {
        let i = self.vars.require(name)?;
        let mut m = vec![0i64; self.vars.len()];
        m[i] = k;
        self.mul_monomial(&m)
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $m:ident) => {
        impl $tr<&TruncatedSeries> for &TruncatedSeries {
            type Output = TruncatedSeries;
            fn $f(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                self.$m(rhs).expect("series operands must share a variable set")
            }
        }
        impl $tr<TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $f(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$m(&rhs).expect("series operands must share a variable set")
            }
        }
        impl $tr<&TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $f(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                (&self).$m(rhs).expect("series operands must share a variable set")
            }
        }
        impl $tr<TruncatedSeries> for &TruncatedSeries {
            type Output = TruncatedSeries;
            fn $f(self, rhs: TruncatedSeries) -> TruncatedSeries {
                self.$m(&rhs).expect("series operands must share a variable set")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.neg_series()
    }
}

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.neg_series()
    }
}

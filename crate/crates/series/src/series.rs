use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Result, SeriesError};
use crate::rat::{format_rat, Rat};
use crate::trunc::Truncation;
use crate::vars::VarSet;

pub type Exp = Vec<u32>;

/// Multivariate power series with exact rational coefficients, known on a
/// down-set of exponent tuples (its truncation region).
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    pub(crate) vars: VarSet,
    pub(crate) trunc: Truncation,
    pub(crate) coeffs: BTreeMap<Exp, Rat>,
}

impl TruncatedSeries {
    pub fn zero(vars: &VarSet, trunc: &Truncation) -> Self {
        assert_eq!(vars.len(), trunc.nvars(), "truncation arity");
        TruncatedSeries { vars: vars.clone(), trunc: trunc.clone(), coeffs: BTreeMap::new() }
    }

    pub fn constant(vars: &VarSet, trunc: &Truncation, c: Rat) -> Self {
        let mut s = Self::zero(vars, trunc);
        s.set(vec![0; vars.len()], c);
        s
    }

    pub fn one(vars: &VarSet, trunc: &Truncation) -> Self {
        Self::constant(vars, trunc, Rat::one())
    }

    pub fn var(vars: &VarSet, trunc: &Truncation, name: &str) -> Result<Self> {
        let i = vars.require(name)?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Ok(Self::monomial(vars, trunc, e, Rat::one()))
    }

    pub fn monomial(vars: &VarSet, trunc: &Truncation, e: Exp, c: Rat) -> Self {
        let mut s = Self::zero(vars, trunc);
        s.set(e, c);
        s
    }

    /// Builds a series from terms, dropping those outside the region.
    pub fn from_terms<I: IntoIterator<Item = (Exp, Rat)>>(vars: &VarSet, trunc: &Truncation, terms: I) -> Result<Self> {
        let mut s = Self::zero(vars, trunc);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(SeriesError::Arity { got: e.len(), want: vars.len() });
            }
            s.add_at(e, &c);
        }
        Ok(s)
    }

    /// Univariate series from a coefficient list.
    pub fn univariate(name: &str, cap: u32, coeffs: &[Rat]) -> Self {
        let vars = VarSet::new(&[name]).unwrap();
        let trunc = Truncation::caps(&[cap]);
        let mut s = Self::zero(&vars, &trunc);
        for (k, c) in coeffs.iter().enumerate() {
            s.set(vec![k as u32], c.clone());
        }
        s
    }

    pub(crate) fn from_parts(vars: VarSet, trunc: Truncation, coeffs: BTreeMap<Exp, Rat>) -> Self {
        TruncatedSeries { vars, trunc, coeffs }
    }

    /// Stores `c` at `e` when `e` lies in the region.
    pub(crate) fn set(&mut self, e: Exp, c: Rat) {
        if c.is_zero() || !self.trunc.contains(&e) {
            return;
        }
        self.coeffs.insert(e, c);
    }

    pub(crate) fn add_at(&mut self, e: Exp, c: &Rat) {
        if c.is_zero() || !self.trunc.contains(&e) {
            return;
        }
        let slot = self.coeffs.entry(e.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn truncation(&self) -> &Truncation {
        &self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Rat)> {
        self.coeffs.iter()
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant_term(&self) -> Rat {
        self.coeffs.get(&vec![0; self.vars.len()]).cloned().unwrap_or_else(Rat::zero)
    }

    /// Exact coefficient; an exponent outside the region is an error, not zero.
    pub fn coefficient(&self, e: &[u32]) -> Result<Rat> {
        if e.len() != self.vars.len() {
            return Err(SeriesError::Arity { got: e.len(), want: self.vars.len() });
        }
        if !self.trunc.contains(e) {
            return Err(SeriesError::OutOfTruncation(e.to_vec()));
        }
        Ok(self.coeffs.get(e).cloned().unwrap_or_else(Rat::zero))
    }

    /// Coefficient of `x^n` for a univariate series.
    pub fn coeff1(&self, n: u32) -> Result<Rat> {
        self.coefficient(&[n])
    }

    /// Which variables occur with a positive exponent somewhere.
    pub fn active(&self) -> Vec<bool> {
        let mut a = vec![false; self.vars.len()];
        for e in self.coeffs.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    a[i] = true;
                }
            }
        }
        a
    }

    /// Same coefficients restricted to a smaller region.
    pub fn truncate(&self, trunc: &Truncation) -> TruncatedSeries {
        let t = self.trunc.intersect(trunc);
        let coeffs = self.coeffs.iter().filter(|(e, _)| t.contains(e)).map(|(e, c)| (e.clone(), c.clone())).collect();
        TruncatedSeries { vars: self.vars.clone(), trunc: t, coeffs }
    }

    /// Compares two series on the intersection of their regions.
    pub fn eq_on_common(&self, other: &TruncatedSeries) -> Result<bool> {
        self.check_vars(other)?;
        let t = self.trunc.intersect(&other.trunc);
        let a = self.truncate(&t);
        let b = other.truncate(&t);
        Ok(a.coeffs == b.coeffs)
    }

    /// First exponent (lexicographic) where the two series differ on their common region.
    pub fn first_difference(&self, other: &TruncatedSeries) -> Result<Option<Exp>> {
        self.check_vars(other)?;
        let t = self.trunc.intersect(&other.trunc);
        let a = self.truncate(&t);
        let b = other.truncate(&t);
        let keys: std::collections::BTreeSet<&Exp> = a.coeffs.keys().chain(b.coeffs.keys()).collect();
        let first = keys.into_iter().find(|e| a.coeffs.get(*e) != b.coeffs.get(*e)).cloned();
        Ok(first)
    }

    pub(crate) fn check_vars(&self, other: &TruncatedSeries) -> Result<()> {
        if self.vars != other.vars {
            return Err(SeriesError::VarMismatch(self.vars.names().to_vec(), other.vars.names().to_vec()));
        }
        Ok(())
    }

    /// Coefficients as a dense list for a univariate series, up to its cap.
    pub fn dense(&self) -> Vec<Rat> {
        assert_eq!(self.vars.len(), 1, "dense() needs a univariate series");
        let n = self.trunc.reach(0);
        (0..=n.max(-1)).map(|k| self.coeffs.get(&vec![k as u32]).cloned().unwrap_or_else(Rat::zero)).collect()
    }

    pub fn all_integer(&self) -> bool {
        self.coeffs.values().all(|c| c.denom().is_one())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        }
        for (k, (e, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", format_rat(c))?;
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "*{}", self.vars.names()[i])?,
                    _ => write!(f, "*{}^{}", self.vars.names()[i], x)?,
                }
            }
        }
        write!(f, " + O{:?}", self.trunc.cap_list())
    }
}

use polygf_series::{int, TruncatedSeries, Truncation, VarSet};

use crate::error::Result;

/// Shorthand for building series over a fixed variable set and region.
#[derive(Clone)]
pub(crate) struct Ctx {
    pub vars: VarSet,
    pub t: Truncation,
}

impl Ctx {
    pub fn new(vars: &VarSet, t: &Truncation) -> Self {
        Ctx { vars: vars.clone(), t: t.clone() }
    }

    pub fn xy(t: &Truncation) -> Self {
        Ctx { vars: xy(), t: t.clone() }
    }

    pub fn c(&self, k: i64) -> TruncatedSeries {
        TruncatedSeries::constant(&self.vars, &self.t, int(k))
    }

    pub fn v(&self, name: &str) -> Result<TruncatedSeries> {
        Ok(TruncatedSeries::var(&self.vars, &self.t, name)?)
    }

    /// Polynomial in one variable from its coefficient list.
    pub fn poly(&self, name: &str, coeffs: &[i64]) -> Result<TruncatedSeries> {
        let i = self.vars.require(name)?;
        let n = self.vars.len();
        let terms = coeffs.iter().enumerate().map(|(k, &c)| {
            let mut e = vec![0; n];
            e[i] = k as u32;
            (e, int(c))
        });
        Ok(TruncatedSeries::from_terms(&self.vars, &self.t, terms)?)
    }
}

pub fn xy() -> VarSet {
    VarSet::new(&["x", "y"]).unwrap()
}

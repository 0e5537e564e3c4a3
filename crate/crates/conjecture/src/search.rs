use rayon::prelude::*;

use polygf_series::Rat;

use crate::ansatz::{format_denominator, Ansatz, Factor};
use crate::error::{ConjectureError, Result};
use crate::fit::{fit_coeffs, validate, FitResult};
use crate::poly;

#[derive(Clone, Debug)]
pub struct Candidate {
    pub fit: FitResult,
    /// deg D + deg A + deg B of the fitted representative.
    pub total_degree: usize,
}

impl Candidate {
    pub fn denominator(&self) -> String {
        format_denominator(&self.fit.ansatz.denominator)
    }
}

/// Number of trailing coefficients held out for validation.
pub fn holdout(len: usize) -> usize {
    len / 4
}

fn tuples(max: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &m in max {
        out = out.into_iter().flat_map(|t| (0..=m).map(move |k| [t.clone(), vec![k]].concat())).collect();
    }
    out.sort_by_key(|t| (t.iter().sum::<u32>(), t.clone()));
    out
}

/// Tries every denominator `∏ basis[i]^e_i` with `e_i ≤ max_exponents[i]`,
/// fitting `A`, `B` within `budget = (deg_a, deg_b)` on the leading
/// coefficients and validating on the held-out tail. Successes are ranked by
/// total degree.
pub fn search_denominator(coeffs: &[Rat], basis: &[Factor], max_exponents: &[u32], budget: (u32, u32)) -> Result<Vec<Candidate>> {
    if basis.len() != max_exponents.len() {
        return Err(ConjectureError::BadAnsatz(format!("{} basis factors but {} exponent bounds", basis.len(), max_exponents.len())));
    }
    let keep = coeffs.len() - holdout(coeffs.len());
    let (train, test) = coeffs.split_at(keep);
    let extra: Vec<(usize, Rat)> = test.iter().enumerate().map(|(k, c)| (keep + k, c.clone())).collect();
    let all = tuples(max_exponents);
    let mut found: Vec<(Vec<u32>, Candidate)> = all
        .par_iter()
        .filter_map(|t| {
            let den: Vec<(Factor, u32)> = basis.iter().zip(t).filter(|(_, &k)| k > 0).map(|(f, &k)| (*f, k)).collect();
            let ansatz = Ansatz::new(den, budget.0, Some(budget.1));
            let fit = fit_coeffs(train, &ansatz).ok()?;
            if !validate(&fit, &extra).ok()?.ok {
                return None;
            }
            let deg = |p: &[num_bigint::BigInt]| poly::degree(p).unwrap_or(0);
            let total = deg(&fit.denominator) + deg(&fit.a) + deg(&fit.b);
            Some((t.clone(), Candidate { fit, total_degree: total }))
        })
        .collect();
    found.sort_by(|(ta, a), (tb, b)| (a.total_degree, ta).cmp(&(b.total_degree, tb)));
    Ok(found.into_iter().map(|(_, c)| c).collect())
}

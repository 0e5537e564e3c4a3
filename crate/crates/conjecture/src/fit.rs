use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use polygf_series::{Rat, TruncatedSeries};

use crate::ansatz::Ansatz;
use crate::error::{ConjectureError, Result};
use crate::linalg::{Echelon, RowOutcome};
use crate::poly::{self, Poly};

/// A solved ansatz: the series equals `[A + B√(1−4x)] / (scale·D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitResult {
    pub ansatz: Ansatz,
    pub a: Poly,
    pub b: Poly,
    pub scale: BigInt,
    pub denominator: Poly,
    /// Dimension of the solution space; zero when the fit is unique.
    pub dimension: usize,
    /// Fewest leading coefficients that already determine the solution.
    pub pinned_at: Option<usize>,
    /// Number of coefficients the system was built from.
    pub used: usize,
    /// First order where the re-expansion disagrees with the input.
    pub residual: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    pub ok: bool,
    pub first_mismatch: Option<usize>,
    pub checked: usize,
}

/// Coefficients of `√(1−4x)` through order `n`.
pub fn sqrt_one_minus_4x(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut catalan = BigInt::one();
    for k in 1..=n {
        out.push(-BigInt::from(2) * &catalan);
        catalan = catalan * BigInt::from(2 * (2 * k as u64 - 1)) / BigInt::from(k as u64 + 1);
    }
    out.truncate(n + 1);
    out
}

/// Dense coefficient list of a univariate series, orders `0..=reach`.
pub fn coefficients(series: &TruncatedSeries) -> Result<Vec<Rat>> {
    if series.vars().len() != 1 {
        return Err(ConjectureError::NotUnivariate(series.vars().len()));
    }
    let top = series.truncation().reach(0);
    (0..=top.max(-1)).map(|k| Ok(series.coeff1(k as u32)?)).collect()
}

pub fn fit(series: &TruncatedSeries, ansatz: &Ansatz) -> Result<FitResult> {
    fit_coeffs(&coefficients(series)?, ansatz)
}

struct Layout {
    /// (degree of the monomial it multiplies, is_b, index)
    cols: Vec<(usize, bool, usize)>,
    forced: Poly,
    n_a: usize,
    n_b: usize,
}

fn layout(ansatz: &Ansatz) -> Result<Layout> {
    let forced = ansatz.forced_b.clone().map(poly::trim).unwrap_or_else(|| vec![BigInt::one()]);
    let n_a = ansatz.deg_a as usize + 1;
    let n_b = match (ansatz.deg_b, poly::degree(&forced)) {
        (None, _) | (_, None) => 0,
        (Some(db), Some(df)) if df > db as usize => {
            return Err(ConjectureError::BadAnsatz(format!("forced B factor has degree {df}, above the B bound {db}")));
        }
        (Some(db), Some(df)) => db as usize - df + 1,
    };
    let shift = poly::degree(&forced).unwrap_or(0);
    let mut cols: Vec<(usize, bool, usize)> = (0..n_a).map(|i| (i, false, i)).chain((0..n_b).map(|k| (k + shift, true, k))).collect();
    cols.sort();
    Ok(Layout { cols, forced, n_a, n_b })
}

/// Fits `coeffs` (orders 0, 1, …) exactly: solves `A + B√(1−4x) = series·D`
/// order by order. With fewer equations than unknowns the lowest-degree
/// solution is returned and `dimension` counts the free directions.
pub fn fit_coeffs(coeffs: &[Rat], ansatz: &Ansatz) -> Result<FitResult> {
    let lay = layout(ansatz)?;
    let unknowns = lay.cols.len();
    let n = coeffs.len();
    let d = ansatz.denominator_poly();
    let low = d.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if n <= low {
        return Err(ConjectureError::InsufficientData { need: low + 1, have: n });
    }
    let root = sqrt_one_minus_4x(n);
    let fr = poly::mul(&lay.forced, &root);
    let mut ech = Echelon::new(unknowns);
    let mut pinned_at = None;
    for order in 0..n {
        let mut rhs = Rat::zero();
        for (j, dj) in d.iter().enumerate().take(order + 1) {
            if !dj.is_zero() {
                rhs += &coeffs[order - j] * Rat::from_integer(dj.clone());
            }
        }
        let mut row: Vec<BigInt> = lay
            .cols
            .iter()
            .map(|&(_, is_b, k)| match is_b {
                false if k == order => BigInt::one(),
                false => BigInt::zero(),
                true if k <= order => fr.get(order - k).cloned().unwrap_or_default(),
                true => BigInt::zero(),
            })
            .collect();
        let den = rhs.denom().clone();
        if !den.is_one() {
            for c in row.iter_mut() {
                *c *= &den;
            }
        }
        row.push(rhs.numer().clone());
        match ech.push(row) {
            RowOutcome::Inconsistent => return Err(ConjectureError::Inconsistent { order }),
            RowOutcome::Independent if ech.rank() == unknowns && pinned_at.is_none() => pinned_at = Some(order + 1),
            _ => {}
        }
    }
    let (x, mut scale, dimension) = ech.solve();
    let mut a = vec![BigInt::zero(); lay.n_a];
    let mut cof = vec![BigInt::zero(); lay.n_b.max(1)];
    for (value, &(_, is_b, k)) in x.into_iter().zip(&lay.cols) {
        if is_b {
            cof[k] = value;
        } else {
            a[k] = value;
        }
    }
    let mut b = if lay.n_b == 0 { vec![BigInt::zero()] } else { poly::mul(&lay.forced, &cof) };
    let g = a.iter().chain(&b).fold(scale.clone(), |g, c| g.gcd(c));
    if !g.is_one() && !g.is_zero() {
        for c in a.iter_mut().chain(b.iter_mut()) {
            *c /= &g;
        }
        scale /= &g;
    }
    let mut out = FitResult {
        ansatz: ansatz.clone(),
        a: poly::trim(a),
        b: poly::trim(b),
        scale,
        denominator: d,
        dimension,
        pinned_at,
        used: n,
        residual: None,
    };
    let back = expand(&out, n - 1)?;
    out.residual = back.iter().zip(coeffs).position(|(p, q)| p != q);
    assert!(out.residual.is_none(), "fit does not reproduce its input at order {:?}", out.residual);
    Ok(out)
}

/// Re-expands a fit through order `n`.
pub fn expand(fit: &FitResult, n: usize) -> Result<Vec<Rat>> {
    let d = &fit.denominator;
    let k = d.iter().position(|c| !c.is_zero()).ok_or_else(|| ConjectureError::BadAnsatz("zero denominator".into()))?;
    let top = n + k;
    let root = sqrt_one_minus_4x(top);
    let br = poly::mul(&fit.b, &root);
    let num: Vec<BigInt> = (0..=top).map(|i| fit.a.get(i).cloned().unwrap_or_default() + br.get(i).cloned().unwrap_or_default()).collect();
    if num[..k].iter().any(|c| !c.is_zero()) {
        return Err(ConjectureError::BadAnsatz("numerator is not divisible by the monomial part of D".into()));
    }
    let dd: Vec<Rat> = d[k..].iter().map(|c| Rat::from_integer(c * &fit.scale)).collect();
    let mut q: Vec<Rat> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = Rat::from_integer(num[i + k].clone());
        for j in 1..dd.len().min(i + 1) {
            acc -= &dd[j] * &q[i - j];
        }
        q.push(acc / &dd[0]);
    }
    Ok(q)
}

/// Compares a fit against coefficients it was not built from.
pub fn validate(fit: &FitResult, extra: &[(usize, Rat)]) -> Result<Validation> {
    let Some(top) = extra.iter().map(|(k, _)| *k).max() else {
        return Ok(Validation { ok: true, first_mismatch: None, checked: 0 });
    };
    let got = expand(fit, top)?;
    let mut sorted: Vec<&(usize, Rat)> = extra.iter().collect();
    sorted.sort_by_key(|(k, _)| *k);
    let first_mismatch = sorted.iter().find(|(k, c)| &got[*k] != c).map(|(k, _)| *k);
    Ok(Validation { ok: first_mismatch.is_none(), first_mismatch, checked: extra.len() })
}

impl FitResult {
    pub fn is_unique(&self) -> bool {
        self.dimension == 0
    }

    /// `A` and `B` as the polynomials over the unscaled denominator.
    pub fn display(&self) -> String {
        let scale = if self.scale.is_one() { String::new() } else { format!("{}*", self.scale) };
        format!("[({}) + ({})*sqrt(1-4x)] / ({scale}{})", poly::format_poly(&self.a), poly::format_poly(&self.b), self.ansatz.denominator_string())
    }
}

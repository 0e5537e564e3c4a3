use polygf_series::{parse_rat, Rat, TruncatedSeries};

use crate::error::{ConjectureError, Result};
use crate::fit::coefficients;

/// Reads coefficients given one per line as `n value`, or as series JSON.
/// Orders must run 0, 1, 2, … without gaps; `#` starts a comment.
pub fn read_coefficients(text: &str) -> Result<Vec<Rat>> {
    if text.trim_start().starts_with('{') {
        let s = TruncatedSeries::from_json(text)?;
        return coefficients(&s);
    }
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |m: &str| ConjectureError::BadInput(format!("line {}: {m}", lineno + 1));
        let mut parts = line.split_whitespace();
        let (Some(n), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad("expected `n value`"));
        };
        let n: usize = n.parse().map_err(|_| bad("order is not a nonnegative integer"))?;
        if n != out.len() {
            return Err(bad(&format!("expected order {}, found {n}", out.len())));
        }
        out.push(parse_rat(v).map_err(|e| bad(&e.to_string()))?);
    }
    Ok(out)
}
